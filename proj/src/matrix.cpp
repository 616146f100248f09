#include "rrbleib/matrix.hpp"

#include <cassert>

#include "rrbleib/errors.hpp"

namespace rrbleib {

Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int nrows) {
    Matrix m(nrows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        assert(static_cast<int>(cols[j].size()) == nrows);
        for (int i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    assert(x.cols == y.rows);
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
    assert(static_cast<int>(v.size()) == m.cols);
    Vec r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
    return r;
}

Matrix mat_add(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

Matrix mat_sub(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

Matrix mat_scale(const Rational& c, const Matrix& m) {
    Matrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = c * m.a[i];
    return r;
}

Matrix transpose(const Matrix& m) {
    Matrix r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, {}};
    Matrix& r = res.r;
    int row = 0;
    for (int col = 0; col < r.cols && row < r.rows; ++col) {
        int piv = -1;
        for (int i = row; i < r.rows; ++i)
            if (!r.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
        Rational inv = Rational(1) / r.at(row, col);
        for (int j = col; j < r.cols; ++j) r.at(row, j) *= inv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            Rational f = r.at(i, col);
            for (int j = col; j < r.cols; ++j) r.at(i, j) -= f * r.at(row, j);
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols);
        v[free] = Rational(1);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k)
            v[rr.pivots[k]] = -rr.r.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> image_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<Vec> basis;
    for (int p : rr.pivots) {
        Vec v(m.rows);
        for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, p);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool span_contains(const std::vector<Vec>& basis, const Vec& v, int dim) {
    if (vec_is_zero(v)) return true;
    Matrix a = Matrix::from_columns(basis, dim);
    Matrix b = a;
    b.cols += 1;
    b.a.clear();
    b.a.resize(static_cast<std::size_t>(dim) * (a.cols + 1));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < a.cols; ++j) b.at(i, j) = a.at(i, j);
        b.at(i, a.cols) = v[i];
    }
    return rank(b) == rank(a);
}

int quotient_dim(const std::vector<Vec>& sub_small, const std::vector<Vec>& sub_big, int dim) {
    for (const Vec& v : sub_small)
        if (!span_contains(sub_big, v, dim))
            throw NotASubspace("quotient_dim: a vector of the small family lies outside the big span");
    int r_small = sub_small.empty() ? 0 : rank(Matrix::from_columns(sub_small, dim));
    int r_big = sub_big.empty() ? 0 : rank(Matrix::from_columns(sub_big, dim));
    return r_big - r_small;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    Matrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    RrefResult rr = rref(aug);
    for (int p : rr.pivots)
        if (p == m.cols) return std::nullopt;  // row [0 ... 0 | 1]
    Vec x(m.cols);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        x[rr.pivots[k]] = rr.r.at(static_cast<int>(k), m.cols);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    int n = m.rows;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    RrefResult rr = rref(aug);
    if (static_cast<int>(rr.pivots.size()) != n || rr.pivots.back() != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
    return inv;
}

std::vector<Vec> extend_basis(const std::vector<Vec>& given, const std::vector<Vec>& candidates,
                              int dim) {
    std::vector<Vec> pool = given;
    int r = pool.empty() ? 0 : rank(Matrix::from_columns(pool, dim));
    std::vector<Vec> picked;
    for (const Vec& c : candidates) {
        pool.push_back(c);
        int r2 = rank(Matrix::from_columns(pool, dim));
        if (r2 > r) {
            picked.push_back(c);
            r = r2;
        } else {
            pool.pop_back();
        }
    }
    return picked;
}

}  // namespace rrbleib
