#pragma once

// Dense exact linear algebra over a Field.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cidual/error.hpp"
#include "cidual/field.hpp"

namespace cidual {

template <Field F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Builds from small integers, row-major.
    static Matrix from_ints(const F& field, std::size_t rows, std::size_t cols, std::initializer_list<long long> values) {
        if (values.size() != rows * cols) throw PreconditionError("Matrix::from_ints: wrong entry count");
        Matrix m(field, rows, cols);
        std::size_t k = 0;
        for (long long v : values) m.data_[k++] = field.from_int(v);
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<value_type> column(std::size_t c) const {
        std::vector<value_type> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void set_column(std::size_t c, std::span<const value_type> v) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& b) const {
        if (cols_ != b.rows_) throw PreconditionError("Matrix product: dimension mismatch");
        Matrix out(field_, rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& a = (*this)(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) = field_.add(out(i, j), field_.mul(a, b(k, j)));
            }
        return out;
    }

    std::vector<value_type> apply(std::span<const value_type> x) const {
        if (x.size() != cols_) throw PreconditionError("Matrix::apply: dimension mismatch");
        std::vector<value_type> y(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& a = (*this)(i, k);
                if (!field_.is_zero(a)) y[i] = field_.add(y[i], field_.mul(a, x[k]));
            }
        return y;
    }

    Matrix operator+(const Matrix& b) const {
        check_same_shape(b);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], b.data_[k]);
        return out;
    }
    Matrix operator-(const Matrix& b) const {
        check_same_shape(b);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], b.data_[k]);
        return out;
    }
    Matrix scaled(const value_type& s) const {
        Matrix out = *this;
        for (auto& x : out.data_) x = field_.mul(x, s);
        return out;
    }

    bool operator==(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!field_.equal(data_[k], b.data_[k])) return false;
        return true;
    }

    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix out(field_, nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
        return out;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            s += "[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) s += " ";
                s += field_.to_string((*this)(r, c));
            }
            s += "]\n";
        }
        return s;
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw PreconditionError("Matrix: shape mismatch");
    }

    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

template <Field F>
struct EchelonForm {
    Matrix<F> reduced;                 ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination; `reduced` has leading ones and zeros above and below.
template <Field F>
EchelonForm<F> rref(Matrix<F> a) {
    const F& k = a.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && k.is_zero(a(piv, c))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        auto inv = k.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = k.mul(a(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || k.is_zero(a(i, c))) continue;
            auto f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!k.is_zero(a(r, j))) a(i, j) = k.sub(a(i, j), k.mul(f, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    // eliminate on the smaller orientation
    if (a.rows() > a.cols()) return rref(a.transpose()).pivots.size();
    return rref(a).pivots.size();
}

/// Columns form a basis of the right kernel {x : A x = 0}.
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
    const F& k = a.field();
    auto [red, pivots] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t nullity = a.cols() - pivots.size();
    Matrix<F> basis(k, a.cols(), nullity);
    std::size_t col = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, col) = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], col) = k.neg(red(i, free));
        ++col;
    }
    return basis;
}

/// Some x with A x = b, or nothing when b is outside the column space.
template <Field F>
std::optional<std::vector<typename F::value_type>> solve(const Matrix<F>& a,
                                                         std::span<const typename F::value_type> b) {
    if (b.size() != a.rows()) throw PreconditionError("solve: right-hand side length does not match rows");
    const F& k = a.field();
    Matrix<F> aug(k, a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
    auto [red, pivots] = rref(std::move(aug));
    std::vector<typename F::value_type> x(a.cols(), k.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols()) return std::nullopt;
        x[pivots[i]] = red(i, a.cols());
    }
    return x;
}

/// Horizontal concatenation.
template <Field F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw PreconditionError("hstack: row mismatch");
    Matrix<F> out(a.field(), a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

template <Field F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) throw PreconditionError("vstack: column mismatch");
    Matrix<F> out(a.field(), a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

/// Indices of the columns of `candidates` that extend a basis of span(`base`),
/// scanning left to right; the selected columns are independent modulo span(base).
template <Field F>
std::vector<std::size_t> independent_modulo(const Matrix<F>& base, const Matrix<F>& candidates) {
    const F& k = candidates.field();
    const std::size_t n = candidates.rows();
    // incremental row-reduced basis of the growing span, stored as rows
    std::vector<std::vector<typename F::value_type>> rows;
    std::vector<std::size_t> pivot_of;
    auto reduce = [&](std::vector<typename F::value_type> v) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto c = v[pivot_of[i]];
            if (k.is_zero(c)) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!k.is_zero(rows[i][j])) v[j] = k.sub(v[j], k.mul(c, rows[i][j]));
        }
        return v;
    };
    auto insert = [&](std::vector<typename F::value_type> v) -> bool {
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < n && k.is_zero(v[p])) ++p;
        if (p == n) return false;
        auto inv = k.inv(v[p]);
        for (auto& x : v) x = k.mul(x, inv);
        // keep the stored rows fully reduced against the new pivot
        for (auto& r : rows) {
            auto c = r[p];
            if (k.is_zero(c)) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!k.is_zero(v[j])) r[j] = k.sub(r[j], k.mul(c, v[j]));
        }
        rows.push_back(std::move(v));
        pivot_of.push_back(p);
        return true;
    };
    if (base.cols() > 0 && base.rows() != n) throw PreconditionError("independent_modulo: row mismatch");
    for (std::size_t c = 0; c < base.cols(); ++c) insert(base.column(c));
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < candidates.cols(); ++c)
        if (insert(candidates.column(c))) chosen.push_back(c);
    return chosen;
}

/// Columns of `a` selected by index.
template <Field F>
Matrix<F> select_columns(const Matrix<F>& a, std::span<const std::size_t> idx) {
    Matrix<F> out(a.field(), a.rows(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t r = 0; r < a.rows(); ++r) out(r, j) = a(r, idx[j]);
    return out;
}

/// A column basis of the image of `a`, taken from its own columns.
template <Field F>
Matrix<F> image_basis(const Matrix<F>& a) {
    auto [red, pivots] = rref(a);
    return select_columns(a, std::span<const std::size_t>(pivots));
}

}  // namespace cidual
