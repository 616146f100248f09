#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rrbleib {

enum class Sort : std::uint8_t { G, V };

using SortWord = std::vector<Sort>;

/// The two-sorted ambient space g (+) V: dim_g basis vectors e_1..e_d
/// followed by dim_v basis vectors f_1..f_e.
struct SpaceSpec {
    int dim_g = 0;
    int dim_v = 0;

    int total() const { return dim_g + dim_v; }
    int dim_of(Sort s) const { return s == Sort::G ? dim_g : dim_v; }
    Sort sort_of(int global_index) const { return global_index < dim_g ? Sort::G : Sort::V; }
    /// Global basis index of local index i inside the given sort.
    int global_index(Sort s, int i) const { return s == Sort::G ? i : dim_g + i; }
    int local_index(int global) const { return global < dim_g ? global : global - dim_g; }

    std::string basis_name(int global) const {
        if (global < dim_g) return "e" + std::to_string(global + 1);
        return "f" + std::to_string(global - dim_g + 1);
    }

    friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
        return a.dim_g == b.dim_g && a.dim_v == b.dim_v;
    }
};

/// Odometer step over mixed-radix digits; returns false after the last tuple.
inline bool next_tuple(std::vector<int>& t, const std::vector<int>& dims) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < dims[i]) return true;
        t[i] = 0;
    }
    return false;
}

inline std::size_t tuple_count(const std::vector<int>& dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
}

inline std::string word_str(const SortWord& w) {
    std::string s;
    for (Sort x : w) s.push_back(x == Sort::G ? 'G' : 'V');
    return s;
}

inline int count_sort(const SortWord& w, Sort s) {
    int n = 0;
    for (Sort x : w)
        if (x == s) ++n;
    return n;
}

}  // namespace rrbleib
