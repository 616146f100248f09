#pragma once

#include <optional>
#include <vector>

#include "rrbleib/rational.hpp"

namespace rrbleib {

using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);

/// Dense row-major matrix of exact rationals.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;  // rows*cols entries, row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Matrix identity(int n);
    static Matrix zero(int r, int c) { return Matrix(r, c); }
    /// Columns vectors (all of equal length) side by side.
    static Matrix from_columns(const std::vector<Vec>& cols, int nrows);

    bool is_zero() const;
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

Matrix mat_mul(const Matrix& x, const Matrix& y);
Vec mat_vec(const Matrix& m, const Vec& v);
Matrix mat_add(const Matrix& x, const Matrix& y);
Matrix mat_sub(const Matrix& x, const Matrix& y);
Matrix mat_scale(const Rational& c, const Matrix& m);
Matrix transpose(const Matrix& m);

struct RrefResult {
    Matrix r;
    std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

/// Reduced row echelon form with deterministic pivoting (first nonzero
/// entry in column order). rank = pivots.size().
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Basis of { v : m v = 0 }; vectors are independent and the count is
/// cols - rank. Free variables are set to 1 in ascending column order.
std::vector<Vec> kernel_basis(const Matrix& m);

/// The pivot columns of m (a basis of the column span).
std::vector<Vec> image_basis(const Matrix& m);

/// True when v lies in the span of the given vectors.
bool span_contains(const std::vector<Vec>& basis, const Vec& v, int dim);

/// rank(big) - rank(small); throws NotASubspace when span(small) is not
/// contained in span(big).
int quotient_dim(const std::vector<Vec>& sub_small, const std::vector<Vec>& sub_big, int dim);

/// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Vectors of `candidates` that enlarge the span of `given`, in order.
/// Used to pick cohomology representatives: candidates spanning Z^n are
/// filtered against a basis of B^n.
std::vector<Vec> extend_basis(const std::vector<Vec>& given, const std::vector<Vec>& candidates,
                              int dim);

}  // namespace rrbleib
