#pragma once

#include <stdexcept>
#include <string>

namespace rrbleib {

struct NotASubspace : std::runtime_error {
    explicit NotASubspace(const std::string& m) : std::runtime_error(m) {}
};
struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct DegreeOutOfRange : std::runtime_error {
    explicit DegreeOutOfRange(const std::string& m) : std::runtime_error(m) {}
};
struct NotMaurerCartan : std::runtime_error {
    explicit NotMaurerCartan(const std::string& m) : std::runtime_error(m) {}
};
struct NotACocycle : std::runtime_error {
    explicit NotACocycle(const std::string& m) : std::runtime_error(m) {}
};
struct NotADeformation : std::runtime_error {
    explicit NotADeformation(const std::string& m) : std::runtime_error(m) {}
};
struct NotASection : std::runtime_error {
    explicit NotASection(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& m) : std::runtime_error(m) {}
};
struct MissingInput : std::runtime_error {
    explicit MissingInput(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace rrbleib
