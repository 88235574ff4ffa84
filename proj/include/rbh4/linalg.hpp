#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rbh4 {

template <typename S>
using Vec = std::vector<S>;

// Square matrix over an exact field; column j is the image of basis vector j.
template <typename S>
class Matrix {
  public:
    Matrix() : dim_(0) {}
    Matrix(size_t dim, const S& zero) : dim_(dim), a_(dim * dim, zero) {}

    size_t dim() const { return dim_; }
    S& at(size_t r, size_t c) { return a_[r * dim_ + c]; }
    const S& at(size_t r, size_t c) const { return a_[r * dim_ + c]; }

    Vec<S> column(size_t c) const {
        Vec<S> v;
        v.reserve(dim_);
        for (size_t r = 0; r < dim_; ++r) v.push_back(at(r, c));
        return v;
    }

    Vec<S> apply(const Vec<S>& x) const {
        if (x.size() != dim_) throw std::invalid_argument("Matrix: dimension mismatch");
        Vec<S> y(dim_, a_.empty() ? S() : zero_like());
        for (size_t r = 0; r < dim_; ++r) {
            S acc = zero_like();
            for (size_t c = 0; c < dim_; ++c) acc = acc + at(r, c) * x[c];
            y[r] = acc;
        }
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix r(a.dim_, a.zero_like());
        for (size_t i = 0; i < a.dim_; ++i)
            for (size_t j = 0; j < a.dim_; ++j) {
                S acc = a.zero_like();
                for (size_t k = 0; k < a.dim_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
        return r;
    }

    Matrix scaled(const S& c) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * c;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix inverted() const {
        bool any_nonzero = false;
        for (const auto& x : a_)
            if (!x.is_zero()) any_nonzero = true;
        if (!any_nonzero) throw std::domain_error("Matrix: singular, cannot invert");
        Matrix self = *this;
        Matrix inv = identity_like();
        size_t n = dim_;
        for (size_t col = 0, row = 0; col < n && row < n; ++col) {
            size_t piv = row;
            while (piv < n && self.at(piv, col).is_zero()) ++piv;
            if (piv == n) throw std::domain_error("Matrix: singular, cannot invert");
            self.swap_rows(row, piv);
            inv.swap_rows(row, piv);
            S d = self.at(row, col).inverse();
            self.scale_row(row, d);
            inv.scale_row(row, d);
            for (size_t r = 0; r < n; ++r) {
                if (r == row || self.at(r, col).is_zero()) continue;
                S f = self.at(r, col);
                self.subtract_scaled_row(r, row, f);
                inv.subtract_scaled_row(r, row, f);
            }
            ++row;
        }
        return inv;
    }

    static Matrix identity(size_t dim, const S& zero, const S& one) {
        Matrix m(dim, zero);
        for (size_t i = 0; i < dim; ++i) m.at(i, i) = one;
        return m;
    }

  private:
    size_t dim_;
    std::vector<S> a_;

    S zero_like() const { return a_.empty() ? S() : a_[0] - a_[0]; }
    Matrix identity_like() const {
        Matrix m(dim_, zero_like());
        for (size_t i = 0; i < dim_; ++i) m.at(i, i) = a_[0] - a_[0] + one_of();
        return m;
    }
    S one_of() const {
        // 1 = x * x^-1 for any nonzero x; fall back to default ctor semantics
        for (const auto& x : a_)
            if (!x.is_zero()) return x * x.inverse();
        throw std::domain_error("Matrix: cannot synthesize one from zero matrix");
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < dim_; ++c) std::swap(at(i, c), at(j, c));
    }
    void scale_row(size_t i, const S& f) {
        for (size_t c = 0; c < dim_; ++c) at(i, c) = at(i, c) * f;
    }
    void subtract_scaled_row(size_t i, size_t j, const S& f) {
        for (size_t c = 0; c < dim_; ++c) at(i, c) = at(i, c) - f * at(j, c);
    }
};

// Reduced row echelon form of a list of row vectors; drops zero rows.
template <typename S>
std::vector<Vec<S>> row_reduce(std::vector<Vec<S>> rows) {
    if (rows.empty()) return rows;
    size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        S inv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x = x * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            S f = rows[r][col];
            for (size_t c = 0; c < ncols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

// A subspace of the ambient coordinate space, stored as a reduced echelon
// basis so that equal subspaces have identical representations.
template <typename S>
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    Subspace(size_t ambient_dim, std::vector<Vec<S>> spanning)
        : ambient_(ambient_dim), rows_(row_reduce(std::move(spanning))) {}

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    const std::vector<Vec<S>>& basis() const { return rows_; }

    bool contains(Vec<S> v) const {
        for (const auto& row : rows_) {
            size_t lead = leading_index(row);
            if (v[lead].is_zero()) continue;
            S f = v[lead];
            for (size_t c = 0; c < ambient_; ++c) v[c] = v[c] - f * row[c];
        }
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    static size_t leading_index(const Vec<S>& row) {
        for (size_t i = 0; i < row.size(); ++i)
            if (!row[i].is_zero()) return i;
        throw std::logic_error("Subspace: zero row in echelon basis");
    }

  private:
    size_t ambient_;
    std::vector<Vec<S>> rows_;
};

// Null space of M (solutions of Mx = 0) as a canonical subspace.
template <typename S>
Subspace<S> kernel_basis(const Matrix<S>& m, const S& zero, const S& one) {
    size_t n = m.dim();
    std::vector<Vec<S>> rows;
    for (size_t r = 0; r < n; ++r) {
        Vec<S> row;
        for (size_t c = 0; c < n; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    rows = row_reduce(std::move(rows));
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (const auto& row : rows) {
        size_t lead = Subspace<S>::leading_index(row);
        pivot_col.push_back(lead);
        is_pivot[lead] = true;
    }
    std::vector<Vec<S>> kernel;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec<S> v(n, zero);
        v[free] = one;
        for (size_t r = 0; r < rows.size(); ++r) v[pivot_col[r]] = zero - rows[r][free];
        kernel.push_back(v);
    }
    return Subspace<S>(n, kernel);
}

// Column space of M as a canonical subspace of the ambient space.
template <typename S>
Subspace<S> image_basis(const Matrix<S>& m) {
    size_t n = m.dim();
    std::vector<Vec<S>> cols;
    for (size_t c = 0; c < n; ++c) cols.push_back(m.column(c));
    return Subspace<S>(n, cols);
}

}  // namespace rbh4
