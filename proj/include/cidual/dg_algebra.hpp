#pragma once

// Finite-dimensional graded DG algebras given by structure constants, and the
// exterior algebra with its Hopf structure.
//
// Conventions: homological (lower) grading, differential of degree -1.
// A matrix acting on a graded space has column j equal to the image of basis
// vector j.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cidual/error.hpp"
#include "cidual/field.hpp"
#include "cidual/matrix.hpp"

namespace cidual {

/// Outcome of an exhaustive identity check; `identity` and `witness` name the
/// first failure.
struct ValidationReport {
    bool ok = true;
    std::string identity;
    std::string witness;

    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::string what, std::string where) { return {false, std::move(what), std::move(where)}; }
    explicit operator bool() const { return ok; }
    std::string describe() const { return ok ? "ok" : identity + " fails at " + witness; }
};

template <Field F>
struct HopfData {
    Matrix<F> comultiplication;  ///< (N*N) x N; tensor basis (i,j) has index i*N + j
    Matrix<F> antipode;          ///< N x N
    std::vector<typename F::value_type> counit;
};

template <Field F>
class FiniteDGAlgebra {
public:
    using value_type = typename F::value_type;

    FiniteDGAlgebra() = default;

    /// `left_mult[a]` is the matrix of b -> a*b. The unit must be basis vector
    /// `unit`, and the augmentation is the coordinate functional of the unit, so
    /// the remaining basis vectors span the augmentation ideal.
    FiniteDGAlgebra(F field, std::vector<int> degrees, std::vector<std::string> labels,
                    std::vector<Matrix<F>> left_mult, Matrix<F> differential, std::size_t unit = 0,
                    std::optional<HopfData<F>> hopf = std::nullopt, std::vector<std::size_t> generators = {})
        : field_(std::move(field)),
          degrees_(std::move(degrees)),
          labels_(std::move(labels)),
          left_mult_(std::move(left_mult)),
          differential_(std::move(differential)),
          unit_(unit),
          hopf_(std::move(hopf)),
          generators_(std::move(generators)) {
        const std::size_t n = degrees_.size();
        if (labels_.size() != n || left_mult_.size() != n || differential_.rows() != n || differential_.cols() != n ||
            unit_ >= n)
            throw PreconditionError("FiniteDGAlgebra: inconsistent structure sizes");
        for (const auto& m : left_mult_)
            if (m.rows() != n || m.cols() != n) throw PreconditionError("FiniteDGAlgebra: bad multiplication matrix");
        if (degrees_[unit_] != 0) throw PreconditionError("FiniteDGAlgebra: unit must have degree 0");
        auto report = validate_structure();
        if (!report) throw PreconditionError("FiniteDGAlgebra: " + report.describe());
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return degrees_.size(); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Matrix<F>& left_mult(std::size_t a) const { return left_mult_[a]; }
    const Matrix<F>& differential() const { return differential_; }
    std::size_t unit() const { return unit_; }
    const std::optional<HopfData<F>>& hopf() const { return hopf_; }
    const std::vector<std::size_t>& generators() const { return generators_; }

    int max_degree() const { return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end()); }
    bool has_zero_differential() const { return differential_.is_zero(); }
    bool concentrated_in_degree_zero() const {
        return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 0; });
    }

    /// Coordinates of a*b.
    std::vector<value_type> product(std::size_t a, std::size_t b) const { return left_mult_[a].column(b); }

    /// Left multiplication by an arbitrary element.
    Matrix<F> left_mult(std::span<const value_type> a) const {
        Matrix<F> m(field_, dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!field_.is_zero(a[i])) m = m + left_mult_[i].scaled(a[i]);
        return m;
    }

    /// Basis indices of degree d.
    std::vector<std::size_t> basis_in_degree(int d) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (degrees_[i] == d) out.push_back(i);
        return out;
    }

    /// Multiplication, unit, Leibniz, associativity and graded commutativity on
    /// all basis pairs and triples.
    ValidationReport validate_structure() const;
    /// Hopf axioms when Hopf data is present; ok otherwise.
    ValidationReport validate_hopf() const;
    ValidationReport validate() const {
        auto r = validate_structure();
        return r ? validate_hopf() : r;
    }

private:
    F field_{};
    std::vector<int> degrees_;
    std::vector<std::string> labels_;
    std::vector<Matrix<F>> left_mult_;
    Matrix<F> differential_;
    std::size_t unit_ = 0;
    std::optional<HopfData<F>> hopf_;
    std::vector<std::size_t> generators_;
};

namespace detail {

template <Field F>
bool vectors_equal(const F& k, std::span<const typename F::value_type> a, std::span<const typename F::value_type> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!k.equal(a[i], b[i])) return false;
    return true;
}

template <Field F>
bool supported_in_degree(const std::vector<int>& degrees, std::span<const typename F::value_type> v, int d,
                         const F& k) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!k.is_zero(v[i]) && degrees[i] != d) return false;
    return true;
}

}  // namespace detail

template <Field F>
ValidationReport FiniteDGAlgebra<F>::validate_structure() const {
    const F& k = field_;
    const std::size_t n = dim();
    auto name = [&](std::size_t i) { return labels_[i]; };
    for (std::size_t a = 0; a < n; ++a) {
        auto da = differential_.column(a);
        if (!detail::supported_in_degree(degrees_, std::span<const value_type>(da), degrees_[a] - 1, k))
            return ValidationReport::fail("deg(d a) = deg(a) - 1", name(a));
        for (std::size_t b = 0; b < n; ++b) {
            auto ab = product(a, b);
            if (!detail::supported_in_degree(degrees_, std::span<const value_type>(ab), degrees_[a] + degrees_[b], k))
                return ValidationReport::fail("deg(ab) = deg(a) + deg(b)", name(a) + "*" + name(b));
        }
    }
    auto one = Matrix<F>::identity(k, n);
    if (!(left_mult_[unit_] == one)) return ValidationReport::fail("1*b = b", "unit");
    for (std::size_t b = 0; b < n; ++b) {
        auto v = product(b, unit_);
        auto e = one.column(b);
        if (!detail::vectors_equal(k, std::span<const value_type>(v), std::span<const value_type>(e)))
            return ValidationReport::fail("b*1 = b", name(b));
    }
    if (!(differential_ * differential_).is_zero()) return ValidationReport::fail("d^2 = 0", "differential");
    for (std::size_t a = 0; a < n; ++a) {
        // Leibniz: d L_a = L_{da} + (-1)^|a| L_a d
        auto da = differential_.column(a);
        Matrix<F> lhs = differential_ * left_mult_[a];
        Matrix<F> rhs = left_mult(std::span<const value_type>(da)) + (left_mult_[a] * differential_).scaled(sign(k, degrees_[a]));
        if (!(lhs == rhs)) return ValidationReport::fail("d(ab) = d(a)b + (-1)^|a| a d(b)", name(a));
        for (std::size_t b = 0; b < n; ++b) {
            // associativity: L_{ab} = L_a L_b
            auto ab = product(a, b);
            if (!(left_mult(std::span<const value_type>(ab)) == left_mult_[a] * left_mult_[b]))
                return ValidationReport::fail("(ab)c = a(bc)", name(a) + "," + name(b));
            auto ba = product(b, a);
            auto s = sign(k, static_cast<long long>(degrees_[a]) * degrees_[b]);
            for (std::size_t i = 0; i < n; ++i)
                if (!k.equal(ab[i], k.mul(s, ba[i])))
                    return ValidationReport::fail("ab = (-1)^{|a||b|} ba", name(a) + "," + name(b));
        }
    }
    return ValidationReport::pass();
}

namespace detail {

/// Product in A (x) A: (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
template <Field F>
std::vector<typename F::value_type> tensor_square_product(const FiniteDGAlgebra<F>& alg,
                                                          std::span<const typename F::value_type> x,
                                                          std::span<const typename F::value_type> y) {
    const F& k = alg.field();
    const std::size_t n = alg.dim();
    std::vector<typename F::value_type> out(n * n, k.zero());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& xab = x[a * n + b];
            if (k.is_zero(xab)) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const auto& ycd = y[c * n + d];
                    if (k.is_zero(ycd)) continue;
                    auto coeff = k.mul(k.mul(xab, ycd), sign(k, static_cast<long long>(alg.degree(b)) * alg.degree(c)));
                    auto ac = alg.product(a, c);
                    auto bd = alg.product(b, d);
                    for (std::size_t i = 0; i < n; ++i) {
                        if (k.is_zero(ac[i])) continue;
                        for (std::size_t j = 0; j < n; ++j)
                            if (!k.is_zero(bd[j])) out[i * n + j] = k.add(out[i * n + j], k.mul(coeff, k.mul(ac[i], bd[j])));
                    }
                }
        }
    return out;
}

}  // namespace detail

template <Field F>
ValidationReport FiniteDGAlgebra<F>::validate_hopf() const {
    if (!hopf_) return ValidationReport::pass();
    const F& k = field_;
    const std::size_t n = dim();
    const auto& h = *hopf_;
    auto name = [&](std::size_t i) { return labels_[i]; };
    if (h.comultiplication.rows() != n * n || h.comultiplication.cols() != n || h.antipode.rows() != n ||
        h.antipode.cols() != n || h.counit.size() != n)
        return ValidationReport::fail("Hopf data shape", "structure");

    auto delta = [&](std::size_t a) { return h.comultiplication.column(a); };
    auto delta_of = [&](std::span<const value_type> v) { return h.comultiplication.apply(v); };

    for (std::size_t g : generators_) {
        auto d = delta(g);
        std::vector<value_type> expect(n * n, k.zero());
        expect[g * n + unit_] = k.add(expect[g * n + unit_], k.one());
        expect[unit_ * n + g] = k.add(expect[unit_ * n + g], k.one());
        if (!detail::vectors_equal(k, std::span<const value_type>(d), std::span<const value_type>(expect)))
            return ValidationReport::fail("Delta(e) = e(x)1 + 1(x)e", name(g));
    }
    for (std::size_t a = 0; a < n; ++a) {
        auto s = h.antipode.column(a);
        for (std::size_t i = 0; i < n; ++i) {
            auto expect = i == a ? sign(k, degrees_[a]) : k.zero();
            if (!k.equal(s[i], expect)) return ValidationReport::fail("sigma(a) = (-1)^|a| a", name(a));
        }
    }
    if (!(h.antipode * h.antipode == Matrix<F>::identity(k, n))) return ValidationReport::fail("sigma^2 = id", "antipode");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto ab = product(a, b);
            auto lhs = delta_of(std::span<const value_type>(ab));
            auto da = delta(a), db = delta(b);
            auto rhs = detail::tensor_square_product(*this, std::span<const value_type>(da), std::span<const value_type>(db));
            if (!detail::vectors_equal(k, std::span<const value_type>(lhs), std::span<const value_type>(rhs)))
                return ValidationReport::fail("Delta(ab) = Delta(a)Delta(b)", name(a) + "," + name(b));
            auto sab = h.antipode.apply(std::span<const value_type>(ab));
            auto sa = h.antipode.column(a), sb = h.antipode.column(b);
            auto prod = left_mult(std::span<const value_type>(sa)).apply(std::span<const value_type>(sb));
            if (!detail::vectors_equal(k, std::span<const value_type>(sab), std::span<const value_type>(prod)))
                return ValidationReport::fail("sigma(ab) = sigma(a)sigma(b)", name(a) + "," + name(b));
        }
    for (std::size_t a = 0; a < n; ++a) {
        auto d = delta(a);
        // coassociativity and counit, coordinatewise on A (x) A (x) A
        std::vector<value_type> left(n * n * n, k.zero()), right(n * n * n, k.zero());
        std::vector<value_type> eps_left(n, k.zero()), eps_right(n, k.zero());
        std::vector<value_type> antipode_left(n, k.zero()), antipode_right(n, k.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto& c = d[i * n + j];
                if (k.is_zero(c)) continue;
                auto di = delta(i), dj = delta(j);
                for (std::size_t p = 0; p < n * n; ++p) {
                    if (!k.is_zero(di[p])) left[p * n + j] = k.add(left[p * n + j], k.mul(c, di[p]));
                    if (!k.is_zero(dj[p])) right[i * n * n + p] = k.add(right[i * n * n + p], k.mul(c, dj[p]));
                }
                eps_left[j] = k.add(eps_left[j], k.mul(c, h.counit[i]));
                eps_right[i] = k.add(eps_right[i], k.mul(c, h.counit[j]));
                // m(sigma (x) 1) and m(1 (x) sigma)
                auto si = h.antipode.column(i), sj = h.antipode.column(j);
                auto l = left_mult(std::span<const value_type>(si)).column(j);
                auto r = left_mult_[i].apply(std::span<const value_type>(sj));
                for (std::size_t q = 0; q < n; ++q) {
                    antipode_left[q] = k.add(antipode_left[q], k.mul(c, l[q]));
                    antipode_right[q] = k.add(antipode_right[q], k.mul(c, r[q]));
                }
            }
        if (!detail::vectors_equal(k, std::span<const value_type>(left), std::span<const value_type>(right)))
            return ValidationReport::fail("(Delta(x)1)Delta = (1(x)Delta)Delta", name(a));
        std::vector<value_type> ea(n, k.zero());
        ea[a] = k.one();
        if (!detail::vectors_equal(k, std::span<const value_type>(eps_left), std::span<const value_type>(ea)) ||
            !detail::vectors_equal(k, std::span<const value_type>(eps_right), std::span<const value_type>(ea)))
            return ValidationReport::fail("counit laws", name(a));
        std::vector<value_type> unit_eps(n, k.zero());
        unit_eps[unit_] = h.counit[a];
        if (!detail::vectors_equal(k, std::span<const value_type>(antipode_left), std::span<const value_type>(unit_eps)) ||
            !detail::vectors_equal(k, std::span<const value_type>(antipode_right), std::span<const value_type>(unit_eps)))
            return ValidationReport::fail("m(sigma(x)1)Delta = unit*counit", name(a));
    }
    return ValidationReport::pass();
}

/// Position of the bitmask subsets of {0..c-1}, ordered by size then value.
inline std::vector<std::uint32_t> exterior_masks(std::size_t c) {
    std::vector<std::uint32_t> masks(std::size_t{1} << c);
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    return masks;
}

/// e_S e_T = exterior_sign(S,T) e_{S+T} for disjoint S, T.
inline int exterior_sign(std::uint32_t s, std::uint32_t t) {
    int inversions = 0;
    for (std::uint32_t i = 0; i < 32; ++i)
        if (s & (1u << i)) inversions += std::popcount(t & ((1u << i) - 1));
    return sign_int(inversions);
}

inline std::string exterior_label(std::uint32_t mask, const char* letter = "e") {
    if (mask == 0) return "1";
    std::string s;
    for (std::uint32_t i = 0; i < 32; ++i)
        if (mask & (1u << i)) s += letter + std::to_string(i + 1);
    return s;
}

/// Exterior algebra on c generators of degree 1 with zero differential and
/// Delta(e_i) = e_i(x)1 + 1(x)e_i, sigma(a) = (-1)^|a| a.
template <Field F>
FiniteDGAlgebra<F> exterior_algebra(std::size_t c, const F& field) {
    if (field.characteristic() == 2) throw PreconditionError("exterior_algebra: characteristic 2 is not supported");
    if (c > 10) throw PreconditionError("exterior_algebra: too many generators");
    auto masks = exterior_masks(c);
    const std::size_t n = masks.size();
    std::vector<std::size_t> index_of(n);
    for (std::size_t i = 0; i < n; ++i) index_of[masks[i]] = i;

    std::vector<int> degrees(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        degrees[i] = std::popcount(masks[i]);
        labels[i] = exterior_label(masks[i]);
    }
    std::vector<Matrix<F>> mult(n, Matrix<F>(field, n, n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (masks[a] & masks[b]) continue;
            mult[a](index_of[masks[a] | masks[b]], b) = field.from_int(exterior_sign(masks[a], masks[b]));
        }

    HopfData<F> hopf{Matrix<F>(field, n * n, n), Matrix<F>(field, n, n), std::vector<typename F::value_type>(n, field.zero())};
    for (std::size_t a = 0; a < n; ++a) {
        const std::uint32_t s = masks[a];
        // sum over sub-masks T of S
        for (std::uint32_t t = s;; t = (t - 1) & s) {
            const std::uint32_t rest = s & ~t;
            hopf.comultiplication(index_of[t] * n + index_of[rest], a) = field.from_int(exterior_sign(t, rest));
            if (t == 0) break;
        }
        hopf.antipode(a, a) = sign(field, degrees[a]);
    }
    hopf.counit[0] = field.one();
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < c; ++i) gens.push_back(index_of[1u << i]);
    FiniteDGAlgebra<F> alg(field, std::move(degrees), std::move(labels), std::move(mult), Matrix<F>(field, n, n), 0,
                           std::move(hopf), std::move(gens));
    return alg;
}

/// Number of exterior generators when `alg` was built by exterior_algebra.
template <Field F>
std::size_t exterior_rank(const FiniteDGAlgebra<F>& alg) {
    return alg.generators().size();
}

}  // namespace cidual
