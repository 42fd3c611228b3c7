#pragma once

// Finite-dimensional left DG modules over a FiniteDGAlgebra, chain maps, and
// the basic sign-bearing constructions (suspension, negated differential,
// direct sums, subquotients, restriction of scalars).

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cidual/dg_algebra.hpp"

namespace cidual {

template <Field F>
using AlgebraPtr = std::shared_ptr<const FiniteDGAlgebra<F>>;

template <Field F>
class FiniteDGModule {
public:
    using value_type = typename F::value_type;

    FiniteDGModule() = default;

    /// `action[a]` is the matrix of m -> b_a * m for algebra basis vector b_a.
    FiniteDGModule(AlgebraPtr<F> algebra, std::vector<int> degrees, Matrix<F> differential, std::vector<Matrix<F>> action)
        : algebra_(std::move(algebra)),
          degrees_(std::move(degrees)),
          differential_(std::move(differential)),
          action_(std::move(action)) {
        const std::size_t n = degrees_.size();
        if (!algebra_) throw PreconditionError("FiniteDGModule: missing algebra");
        if (differential_.rows() != n || differential_.cols() != n || action_.size() != algebra_->dim())
            throw PreconditionError("FiniteDGModule: inconsistent sizes");
        for (const auto& m : action_)
            if (m.rows() != n || m.cols() != n) throw PreconditionError("FiniteDGModule: bad action matrix");
    }

    /// Zero module over `algebra`.
    static FiniteDGModule zero(AlgebraPtr<F> algebra) {
        const F& k = algebra->field();
        return FiniteDGModule(algebra, {}, Matrix<F>(k, 0, 0), std::vector<Matrix<F>>(algebra->dim(), Matrix<F>(k, 0, 0)));
    }

    /// Residue field k in degree `deg`, with the augmentation ideal acting by zero.
    static FiniteDGModule residue_field(AlgebraPtr<F> algebra, int deg = 0) {
        const F& k = algebra->field();
        std::vector<Matrix<F>> act(algebra->dim(), Matrix<F>(k, 1, 1));
        act[algebra->unit()](0, 0) = k.one();
        return FiniteDGModule(algebra, {deg}, Matrix<F>(k, 1, 1), std::move(act));
    }

    /// The algebra as a left module over itself.
    static FiniteDGModule free_rank_one(AlgebraPtr<F> algebra) {
        std::vector<Matrix<F>> act;
        for (std::size_t a = 0; a < algebra->dim(); ++a) act.push_back(algebra->left_mult(a));
        return FiniteDGModule(algebra, algebra->degrees(), algebra->differential(), std::move(act));
    }

    /// Builds all actions from the generators' actions, for algebras generated
    /// by `algebra->generators()` with basis vectors equal to ordered products
    /// of generators (exterior algebras).
    static FiniteDGModule from_generator_actions(AlgebraPtr<F> algebra, std::vector<int> degrees, Matrix<F> differential,
                                                 const std::vector<Matrix<F>>& generator_action) {
        const F& k = algebra->field();
        const auto& gens = algebra->generators();
        if (generator_action.size() != gens.size())
            throw PreconditionError("FiniteDGModule: one action matrix per algebra generator required");
        const std::size_t n = degrees.size();
        std::vector<Matrix<F>> act(algebra->dim());
        std::vector<bool> known(algebra->dim(), false);
        act[algebra->unit()] = Matrix<F>::identity(k, n);
        known[algebra->unit()] = true;
        // breadth-first over products g * b, solving for the new basis vector
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t b = 0; b < algebra->dim(); ++b) {
                if (!known[b]) continue;
                for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                    auto prod = algebra->product(gens[gi], b);
                    std::size_t target = prod.size(), nonzero = 0;
                    for (std::size_t i = 0; i < prod.size(); ++i)
                        if (!k.is_zero(prod[i])) { target = i; ++nonzero; }
                    if (nonzero != 1 || known[target]) continue;
                    act[target] = (generator_action[gi] * act[b]).scaled(k.inv(prod[target]));
                    known[target] = true;
                    progress = true;
                }
            }
        }
        for (std::size_t a = 0; a < algebra->dim(); ++a)
            if (!known[a]) throw PreconditionError("FiniteDGModule: algebra basis not reachable from generators");
        return FiniteDGModule(algebra, std::move(degrees), std::move(differential), std::move(act));
    }

    const AlgebraPtr<F>& algebra() const { return algebra_; }
    const F& field() const { return algebra_->field(); }
    std::size_t dim() const { return degrees_.size(); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(std::size_t i) const { return degrees_[i]; }
    const Matrix<F>& differential() const { return differential_; }
    const Matrix<F>& action(std::size_t a) const { return action_[a]; }
    const std::vector<Matrix<F>>& actions() const { return action_; }

    /// Action of an arbitrary algebra element.
    Matrix<F> action_of(std::span<const value_type> a) const {
        const F& k = field();
        Matrix<F> m(k, dim(), dim());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!k.is_zero(a[i])) m = m + action_[i].scaled(a[i]);
        return m;
    }

    std::vector<std::size_t> basis_in_degree(int d) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (degrees_[i] == d) out.push_back(i);
        return out;
    }
    int min_degree() const { return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end()); }
    int max_degree() const { return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end()); }

    /// Homology dimension in degree d.
    std::size_t homology_dim(int d) const {
        auto here = basis_in_degree(d), below = basis_in_degree(d - 1), above = basis_in_degree(d + 1);
        Matrix<F> out = submatrix(differential_, below, here);
        Matrix<F> in = submatrix(differential_, here, above);
        return here.size() - rank(out) - rank(in);
    }

    ValidationReport validate() const;

    bool operator==(const FiniteDGModule& o) const {
        return algebra_ == o.algebra_ && degrees_ == o.degrees_ && differential_ == o.differential_ && action_ == o.action_;
    }

    static Matrix<F> submatrix(const Matrix<F>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        Matrix<F> out(m.field(), rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
        return out;
    }

private:
    AlgebraPtr<F> algebra_;
    std::vector<int> degrees_;
    Matrix<F> differential_;
    std::vector<Matrix<F>> action_;
};

namespace detail {

template <Field F>
ValidationReport check_homogeneous(const Matrix<F>& m, const std::vector<int>& src, const std::vector<int>& dst, int shift,
                                   const std::string& what) {
    const F& k = m.field();
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!k.is_zero(m(r, c)) && dst[r] != src[c] + shift)
                return ValidationReport::fail(what + " is homogeneous", "basis " + std::to_string(c) + " -> " + std::to_string(r));
    return ValidationReport::pass();
}

template <Field F>
std::string first_difference(const Matrix<F>& a, const Matrix<F>& b) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a.field().equal(a(r, c), b(r, c))) return "basis " + std::to_string(c) + ", coordinate " + std::to_string(r);
    return "?";
}

}  // namespace detail

template <Field F>
ValidationReport FiniteDGModule<F>::validate() const {
    const F& k = field();
    const auto& alg = *algebra_;
    const std::size_t n = dim();
    if (auto r = detail::check_homogeneous(differential_, degrees_, degrees_, -1, "differential"); !r) return r;
    for (std::size_t a = 0; a < alg.dim(); ++a)
        if (auto r = detail::check_homogeneous(action_[a], degrees_, degrees_, alg.degree(a), "action of " + alg.labels()[a]); !r)
            return r;
    if (!(action_[alg.unit()] == Matrix<F>::identity(k, n))) return ValidationReport::fail("1 m = m", "unit action");
    auto dd = differential_ * differential_;
    if (!dd.is_zero()) return ValidationReport::fail("d^2 = 0", detail::first_difference(dd, Matrix<F>(k, n, n)));
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        auto da = alg.differential().column(a);
        Matrix<F> lhs = differential_ * action_[a];
        Matrix<F> rhs = action_of(std::span<const value_type>(da)) + (action_[a] * differential_).scaled(sign(k, alg.degree(a)));
        if (!(lhs == rhs))
            return ValidationReport::fail("d(am) = d(a)m + (-1)^|a| a d(m)", alg.labels()[a] + ", " + detail::first_difference(lhs, rhs));
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            auto ab = alg.product(a, b);
            Matrix<F> l = action_of(std::span<const value_type>(ab));
            Matrix<F> r = action_[a] * action_[b];
            if (!(l == r))
                return ValidationReport::fail("(ab)m = a(bm)", alg.labels()[a] + "," + alg.labels()[b] + ", " + detail::first_difference(l, r));
        }
    }
    return ValidationReport::pass();
}

/// Homogeneous k-linear map between DG modules over the same algebra.
template <Field F>
struct ChainMap {
    FiniteDGModule<F> source;
    FiniteDGModule<F> target;
    int degree = 0;
    Matrix<F> matrix;  ///< target.dim() x source.dim()

    /// Homogeneity, d f = (-1)^|f| f d, and f(am) = (-1)^{|a||f|} a f(m).
    ValidationReport validate() const {
        const F& k = source.field();
        if (source.algebra() != target.algebra()) return ValidationReport::fail("same algebra", "source/target");
        if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return ValidationReport::fail("map shape", "matrix");
        if (auto r = detail::check_homogeneous(matrix, source.degrees(), target.degrees(), degree, "map"); !r) return r;
        Matrix<F> lhs = target.differential() * matrix;
        Matrix<F> rhs = (matrix * source.differential()).scaled(sign(k, degree));
        if (!(lhs == rhs)) return ValidationReport::fail("d f = (-1)^|f| f d", detail::first_difference(lhs, rhs));
        const auto& alg = *source.algebra();
        for (std::size_t a = 0; a < alg.dim(); ++a) {
            Matrix<F> l = matrix * source.action(a);
            Matrix<F> r = (target.action(a) * matrix).scaled(sign(k, static_cast<long long>(alg.degree(a)) * degree));
            if (!(l == r)) return ValidationReport::fail("f(am) = (-1)^{|a||f|} a f(m)", alg.labels()[a] + ", " + detail::first_difference(l, r));
        }
        return ValidationReport::pass();
    }
    bool is_bijective() const { return matrix.rows() == matrix.cols() && rank(matrix) == matrix.rows(); }
    /// Validated and bijective.
    ValidationReport validate_isomorphism() const {
        auto r = validate();
        if (!r) return r;
        if (!is_bijective()) return ValidationReport::fail("bijective", "rank " + std::to_string(rank(matrix)));
        return r;
    }
};

/// j-fold suspension: degrees shift by j, d becomes (-1)^j d, and
/// a . s^j m = (-1)^{j|a|} s^j (a m).
template <Field F>
FiniteDGModule<F> suspension(const FiniteDGModule<F>& m, int j) {
    const F& k = m.field();
    std::vector<int> deg = m.degrees();
    for (auto& d : deg) d += j;
    std::vector<Matrix<F>> act;
    for (std::size_t a = 0; a < m.algebra()->dim(); ++a)
        act.push_back(m.action(a).scaled(sign(k, static_cast<long long>(j) * m.algebra()->degree(a))));
    return FiniteDGModule<F>(m.algebra(), std::move(deg), m.differential().scaled(sign(k, j)), std::move(act));
}

/// Same graded module and action, differential negated.
template <Field F>
FiniteDGModule<F> negate_differential(const FiniteDGModule<F>& m) {
    return FiniteDGModule<F>(m.algebra(), m.degrees(), m.differential().scaled(m.field().neg(m.field().one())), m.actions());
}

template <Field F>
FiniteDGModule<F> direct_sum(const FiniteDGModule<F>& a, const FiniteDGModule<F>& b) {
    if (a.algebra() != b.algebra()) throw PreconditionError("direct_sum: modules over different algebras");
    const F& k = a.field();
    std::vector<int> deg = a.degrees();
    deg.insert(deg.end(), b.degrees().begin(), b.degrees().end());
    auto blockdiag = [&](const Matrix<F>& x, const Matrix<F>& y) {
        Matrix<F> out(k, x.rows() + y.rows(), x.cols() + y.cols());
        out.set_block(0, 0, x);
        out.set_block(x.rows(), x.cols(), y);
        return out;
    };
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < a.algebra()->dim(); ++i) act.push_back(blockdiag(a.action(i), b.action(i)));
    return FiniteDGModule<F>(a.algebra(), std::move(deg), blockdiag(a.differential(), b.differential()), std::move(act));
}

namespace detail {

/// Homogeneous basis (columns) of the smallest subspace containing `gens`
/// and stable under the differential and all actions.
template <Field F>
Matrix<F> stable_closure(const FiniteDGModule<F>& m, const Matrix<F>& gens) {
    const F& k = m.field();
    const std::size_t n = m.dim();
    std::vector<Matrix<F>> ops;
    ops.push_back(m.differential());
    for (std::size_t a = 0; a < m.algebra()->dim(); ++a)
        if (a != m.algebra()->unit()) ops.push_back(m.action(a));
    // split generators into homogeneous components
    Matrix<F> basis(k, n, 0);
    std::vector<std::vector<typename F::value_type>> queue;
    for (std::size_t c = 0; c < gens.cols(); ++c) {
        auto v = gens.column(c);
        for (int d = m.min_degree(); d <= m.max_degree(); ++d) {
            std::vector<typename F::value_type> part(n, k.zero());
            bool nz = false;
            for (std::size_t i = 0; i < n; ++i)
                if (m.degree(i) == d && !k.is_zero(v[i])) { part[i] = v[i]; nz = true; }
            if (nz) queue.push_back(std::move(part));
        }
    }
    while (!queue.empty()) {
        auto v = std::move(queue.back());
        queue.pop_back();
        Matrix<F> cand(k, n, 1);
        cand.set_column(0, std::span<const typename F::value_type>(v));
        if (independent_modulo(basis, cand).empty()) continue;
        basis = hstack(basis, cand);
        for (const auto& op : ops) {
            auto w = op.apply(std::span<const typename F::value_type>(v));
            if (std::any_of(w.begin(), w.end(), [&](const auto& x) { return !k.is_zero(x); })) queue.push_back(std::move(w));
        }
    }
    return basis;
}

}  // namespace detail

/// Result of restricting to / dividing by a DG submodule: the module plus the
/// inclusion or projection as a coordinate matrix.
template <Field F>
struct Subquotient {
    FiniteDGModule<F> module;
    Matrix<F> map;  ///< inclusion (ambient x sub) or projection (quotient x ambient)
};

/// DG submodule generated by the columns of `gens`.
template <Field F>
Subquotient<F> submodule(const FiniteDGModule<F>& m, const Matrix<F>& gens) {
    const F& k = m.field();
    Matrix<F> basis = detail::stable_closure(m, gens);
    const std::size_t s = basis.cols();
    std::vector<int> deg(s);
    for (std::size_t j = 0; j < s; ++j) {
        auto v = basis.column(j);
        for (std::size_t i = 0; i < m.dim(); ++i)
            if (!k.is_zero(v[i])) { deg[j] = m.degree(i); break; }
    }
    // order by degree for readability
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
    basis = select_columns(basis, std::span<const std::size_t>(perm));
    std::vector<int> sorted_deg(s);
    for (std::size_t j = 0; j < s; ++j) sorted_deg[j] = deg[perm[j]];
    auto coords = [&](const Matrix<F>& op) {
        Matrix<F> img = op * basis;
        Matrix<F> out(k, s, s);
        for (std::size_t j = 0; j < s; ++j) {
            auto x = solve(basis, std::span<const typename F::value_type>(img.column(j)));
            if (!x) throw Error("submodule: closure is not stable");
            out.set_column(j, std::span<const typename F::value_type>(*x));
        }
        return out;
    };
    std::vector<Matrix<F>> act;
    for (std::size_t a = 0; a < m.algebra()->dim(); ++a) act.push_back(coords(m.action(a)));
    return {FiniteDGModule<F>(m.algebra(), std::move(sorted_deg), coords(m.differential()), std::move(act)), basis};
}

/// m divided by the DG submodule generated by the columns of `gens`.
template <Field F>
Subquotient<F> quotient(const FiniteDGModule<F>& m, const Matrix<F>& gens) {
    const F& k = m.field();
    const std::size_t n = m.dim();
    Matrix<F> sub = detail::stable_closure(m, gens);
    // complement spanned by standard basis vectors, chosen left to right
    auto chosen = independent_modulo(sub, Matrix<F>::identity(k, n));
    const std::size_t q = chosen.size();
    Matrix<F> full = hstack(sub, select_columns(Matrix<F>::identity(k, n), std::span<const std::size_t>(chosen)));
    // projection: coordinates in `full`, keep the complement part
    Matrix<F> proj(k, q, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<typename F::value_type> e(n, k.zero());
        e[i] = k.one();
        auto x = solve(full, std::span<const typename F::value_type>(e));
        for (std::size_t j = 0; j < q; ++j) proj(j, i) = (*x)[sub.cols() + j];
    }
    std::vector<int> deg(q);
    for (std::size_t j = 0; j < q; ++j) deg[j] = m.degree(chosen[j]);
    Matrix<F> lift = select_columns(Matrix<F>::identity(k, n), std::span<const std::size_t>(chosen));
    std::vector<Matrix<F>> act;
    for (std::size_t a = 0; a < m.algebra()->dim(); ++a) act.push_back(proj * m.action(a) * lift);
    return {FiniteDGModule<F>(m.algebra(), std::move(deg), proj * m.differential() * lift, std::move(act)), proj};
}

/// Restriction of scalars along an algebra map A -> B given by `images`
/// (column a = image of A's basis vector a in B's basis).
template <Field F>
FiniteDGModule<F> restrict_scalars(const FiniteDGModule<F>& m, AlgebraPtr<F> smaller, const Matrix<F>& images) {
    std::vector<Matrix<F>> act;
    for (std::size_t a = 0; a < smaller->dim(); ++a) act.push_back(m.action_of(std::span<const typename F::value_type>(images.column(a))));
    return FiniteDGModule<F>(smaller, m.degrees(), m.differential(), std::move(act));
}

}  // namespace cidual
