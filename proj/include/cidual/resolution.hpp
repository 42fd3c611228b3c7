#pragma once

// Minimal semifree resolutions over non-negatively graded finite-dimensional
// DG algebras, and the Ext / Tor tables and ring duals computed from them.
//
// The resolution F -> M is built one internal degree at a time. In degree d
// the cycles of the mapping cone of F -> M,
//     Z_d = {(f, x) in F_{d-1} (+) M_d : d f = 0, d x = eps f},
// are compared with the boundaries already present plus m_0 Z_d (m_0 the
// augmentation ideal of A_0); a basis of the quotient becomes the new
// generators v with d v = f and eps v = x. Choosing modulo m_0 Z_d keeps the
// resolution minimal by construction.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cidual/dg_module.hpp"

namespace cidual {

inline constexpr std::size_t kDefaultResolutionBudget = 40000;
inline constexpr int kDefaultNMax = 24;

namespace detail {

/// Generators of the augmentation ideal of A_0.
template <Field F>
std::vector<std::size_t> degree_zero_ideal_generators(const FiniteDGAlgebra<F>& alg) {
    std::vector<std::size_t> m0;
    for (std::size_t g : alg.generators())
        if (alg.degree(g) == 0 && g != alg.unit()) m0.push_back(g);
    if (m0.empty())
        for (std::size_t a : alg.basis_in_degree(0))
            if (a != alg.unit()) m0.push_back(a);
    return m0;
}

}  // namespace detail

template <Field F>
class SemifreeResolution {
public:
    using value_type = typename F::value_type;

    struct Entry {
        std::size_t alg;  ///< algebra basis element
        std::size_t gen;  ///< generator
        value_type coeff;
    };
    struct Generator {
        int degree = 0;
        int stage = 0;
        std::vector<Entry> boundary;          ///< d v as a combination of a w
        std::vector<value_type> augmentation;  ///< eps(v) in the target module
    };

    SemifreeResolution(AlgebraPtr<F> algebra, FiniteDGModule<F> target)
        : algebra_(std::move(algebra)), target_(std::move(target)) {}

    const AlgebraPtr<F>& algebra() const { return algebra_; }
    const FiniteDGModule<F>& target() const { return target_; }
    const std::vector<Generator>& generators() const { return gens_; }
    /// All generators of internal degree <= complete_through() are present.
    int complete_through() const { return complete_through_; }
    bool budget_exceeded() const { return budget_exceeded_; }
    std::size_t total_dim() const { return gens_.size() * algebra_->dim(); }

    /// Basis (algebra element, generator) of F_d.
    const std::vector<std::pair<std::size_t, std::size_t>>& basis(int d) const { return graded_piece(d).basis; }
    std::size_t position(int d, std::size_t a, std::size_t g) const {
        const auto& where = graded_piece(d).where;
        auto it = where.find({a, g});
        if (it == where.end()) throw Error("SemifreeResolution: basis element out of range");
        return it->second;
    }

    /// d: F_d -> F_{d-1}, with d(a v) = d(a) v + (-1)^{|a|} a d(v).
    Matrix<F> differential(int d) const {
        const F& k = algebra_->field();
        const auto& src = basis(d);
        const auto& dst = basis(d - 1);
        Matrix<F> m(k, dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            auto [a, g] = src[col];
            auto da = algebra_->differential().column(a);
            for (std::size_t b = 0; b < da.size(); ++b)
                if (!k.is_zero(da[b])) m(position(d - 1, b, g), col) = k.add(m(position(d - 1, b, g), col), da[b]);
            auto s = sign(k, algebra_->degree(a));
            for (const auto& e : gens_[g].boundary) {
                auto prod = algebra_->product(a, e.alg);
                for (std::size_t c = 0; c < prod.size(); ++c) {
                    if (k.is_zero(prod[c])) continue;
                    auto r = position(d - 1, c, e.gen);
                    m(r, col) = k.add(m(r, col), k.mul(s, k.mul(e.coeff, prod[c])));
                }
            }
        }
        return m;
    }
    /// eps: F_d -> M_d in the basis of M restricted to degree d.
    Matrix<F> augmentation(int d) const {
        const F& k = algebra_->field();
        const auto& src = basis(d);
        auto dst = target_.basis_in_degree(d);
        Matrix<F> m(k, dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            auto [a, g] = src[col];
            auto image = target_.action(a).apply(std::span<const value_type>(gens_[g].augmentation));
            for (std::size_t r = 0; r < dst.size(); ++r) m(r, col) = image[dst[r]];
        }
        return m;
    }
    /// Left multiplication by algebra basis element r on F_d -> F_{d+|r|}.
    Matrix<F> multiplication(std::size_t r, int d) const {
        const F& k = algebra_->field();
        const auto& src = basis(d);
        const int e = d + algebra_->degree(r);
        const auto& dst = basis(e);
        Matrix<F> m(k, dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            auto [a, g] = src[col];
            auto prod = algebra_->product(r, a);
            for (std::size_t c = 0; c < prod.size(); ++c)
                if (!k.is_zero(prod[c])) m(position(e, c, g), col) = prod[c];
        }
        return m;
    }

    /// Number of generators at each stage of the semifree filtration.
    std::vector<std::size_t> betti_by_stage() const {
        std::vector<std::size_t> out;
        for (const auto& g : gens_) {
            if (static_cast<std::size_t>(g.stage) >= out.size()) out.resize(g.stage + 1, 0);
            ++out[g.stage];
        }
        return out;
    }
    /// Number of generators in each internal degree lo..hi.
    std::vector<std::size_t> betti_by_degree(int lo, int hi) const {
        std::vector<std::size_t> out(hi >= lo ? hi - lo + 1 : 0, 0);
        for (const auto& g : gens_)
            if (g.degree >= lo && g.degree <= hi) ++out[g.degree - lo];
        return out;
    }

    /// The mapping cone of F -> M is exact in degrees below complete_through(),
    /// i.e. H_i(F) -> H_i(M) is bijective for i < complete_through().
    ValidationReport check_exactness() const {
        for (int d = target_.min_degree(); d <= complete_through_; ++d) {
            auto [zdim, bdim] = cone_cycles_and_boundaries(d);
            if (zdim != bdim) return ValidationReport::fail("cone of F -> M is exact", "degree " + std::to_string(d));
        }
        for (int d = target_.min_degree(); d <= complete_through_; ++d) {
            Matrix<F> lhs = augmentation(d - 1) * differential(d);
            auto src = target_.basis_in_degree(d), dst = target_.basis_in_degree(d - 1);
            Matrix<F> rhs = FiniteDGModule<F>::submatrix(target_.differential(), dst, src) * augmentation(d);
            if (!(lhs == rhs)) return ValidationReport::fail("eps d = d eps", "degree " + std::to_string(d));
        }
        return ValidationReport::pass();
    }
    /// No generator's boundary involves another generator with a unit
    /// coefficient.
    ValidationReport check_minimality() const {
        const F& k = algebra_->field();
        for (std::size_t g = 0; g < gens_.size(); ++g)
            for (const auto& e : gens_[g].boundary)
                if (e.alg == algebra_->unit() && !k.is_zero(e.coeff))
                    return ValidationReport::fail("d v lies in m F", "generator " + std::to_string(g));
        return ValidationReport::pass();
    }

    /// Extends the resolution through internal degree `d_max`.
    void extend(int d_max, std::size_t budget = kDefaultResolutionBudget);

private:
    struct Piece {
        std::vector<std::pair<std::size_t, std::size_t>> basis;
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
    };
    const Piece& graded_piece(int d) const {
        auto it = basis_cache_.find(d);
        if (it != basis_cache_.end()) return it->second;
        Piece p;
        for (std::size_t g = 0; g < gens_.size(); ++g)
            for (std::size_t a : algebra_->basis_in_degree(d - gens_[g].degree)) {
                p.where[{a, g}] = p.basis.size();
                p.basis.emplace_back(a, g);
            }
        return basis_cache_.emplace(d, std::move(p)).first->second;
    }

    /// dim Z_d and dim B_d of the mapping cone in degree d (F_{d-1} (+) M_d).
    std::pair<std::size_t, std::size_t> cone_cycles_and_boundaries(int d) const {
        Matrix<F> c = cone_differential(d);
        Matrix<F> c_next = cone_differential(d + 1);
        return {c.cols() - rank(c), rank(c_next)};
    }
    /// Cone differential (F_{d-1} (+) M_d) -> (F_{d-2} (+) M_{d-1}):
    /// (f, x) -> (d f, d x - eps f).
    Matrix<F> cone_differential(int d) const {
        const F& k = algebra_->field();
        auto mi = target_.basis_in_degree(d), mprev = target_.basis_in_degree(d - 1);
        const std::size_t f1 = basis(d - 1).size(), f2 = basis(d - 2).size();
        Matrix<F> c(k, f2 + mprev.size(), f1 + mi.size());
        c.set_block(0, 0, differential(d - 1));
        c.set_block(f2, 0, augmentation(d - 1).scaled(k.neg(k.one())));
        c.set_block(f2, f1, FiniteDGModule<F>::submatrix(target_.differential(), mprev, mi));
        return c;
    }

    AlgebraPtr<F> algebra_;
    FiniteDGModule<F> target_;
    std::vector<Generator> gens_;
    int complete_through_ = std::numeric_limits<int>::min() / 2;
    bool budget_exceeded_ = false;
    mutable std::map<int, Piece> basis_cache_;
};

template <Field F>
void SemifreeResolution<F>::extend(int d_max, std::size_t budget) {
    const F& k = algebra_->field();
    for (int dg : algebra_->degrees())
        if (dg < 0) throw PreconditionError("semifree_resolution: algebra must be non-negatively graded");
    if (target_.algebra() != algebra_) throw PreconditionError("semifree_resolution: module over a different algebra");
    if (target_.dim() == 0) {
        complete_through_ = std::max(complete_through_, d_max);
        return;
    }
    const auto m0 = detail::degree_zero_ideal_generators(*algebra_);

    int start = std::max(complete_through_ + 1, target_.min_degree());
    for (int d = start; d <= d_max; ++d) {
        if (budget_exceeded_) return;
        Matrix<F> cone = cone_differential(d);
        Matrix<F> z = kernel_basis(cone);
        if (z.cols() == 0) {
            complete_through_ = d;
            continue;
        }
        auto mi = target_.basis_in_degree(d), mnext = target_.basis_in_degree(d + 1);
        const std::size_t f1 = basis(d - 1).size();
        // boundaries from F_d (existing generators only) and M_{d+1}
        const std::size_t fd = basis(d).size();
        Matrix<F> b(k, f1 + mi.size(), fd + mnext.size());
        b.set_block(0, 0, differential(d));
        b.set_block(f1, 0, augmentation(d));
        b.set_block(f1, fd, FiniteDGModule<F>::submatrix(target_.differential(), mi, mnext));
        // m_0 Z
        Matrix<F> spanned = b;
        for (std::size_t r : m0) {
            Matrix<F> act(k, f1 + mi.size(), f1 + mi.size());
            act.set_block(0, 0, multiplication(r, d - 1));
            act.set_block(f1, f1, FiniteDGModule<F>::submatrix(target_.action(r), mi, mi));
            spanned = hstack(spanned, act * z);
        }
        auto chosen = independent_modulo(spanned, z);
        const auto& prev = basis(d - 1);
        for (std::size_t idx : chosen) {
            if (total_dim() + algebra_->dim() > budget) {
                budget_exceeded_ = true;
                complete_through_ = d - 1;
                return;
            }
            Generator g;
            g.degree = d;
            g.augmentation.assign(target_.dim(), k.zero());
            for (std::size_t i = 0; i < f1; ++i)
                if (!k.is_zero(z(i, idx))) {
                    g.boundary.push_back({prev[i].first, prev[i].second, z(i, idx)});
                    g.stage = std::max(g.stage, gens_[prev[i].second].stage + 1);
                }
            for (std::size_t i = 0; i < mi.size(); ++i) g.augmentation[mi[i]] = z(f1 + i, idx);
            gens_.push_back(std::move(g));
        }
        basis_cache_.clear();
        complete_through_ = d;
    }
}

/// Minimal semifree resolution of `m` through internal degree `d_max`.
template <Field F>
SemifreeResolution<F> semifree_resolution(const FiniteDGModule<F>& m, int d_max, std::size_t budget = kDefaultResolutionBudget) {
    SemifreeResolution<F> res(m.algebra(), m);
    res.extend(d_max, budget);
    return res;
}

struct ExtTable {
    std::vector<std::size_t> dims;        ///< dim_k Ext^n, n = 0..n_max
    std::vector<std::size_t> generators;  ///< dim_k (Ext^n (x)_{A_0} k)
    bool budget_exceeded = false;
};

namespace detail {

/// Hom_A(F, N) in degree p: pairs (generator g, basis vector j of N) with |n_j| = |g| + p.
template <Field F>
std::vector<std::pair<std::size_t, std::size_t>> hom_basis(const SemifreeResolution<F>& res, const FiniteDGModule<F>& n, int p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto& gens = res.generators();
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t j : n.basis_in_degree(gens[g].degree + p)) out.emplace_back(g, j);
    return out;
}

/// (d phi)(v) = d_N phi(v) - (-1)^p phi(d v), with phi(a w) = (-1)^{|a|p} a phi(w).
template <Field F>
Matrix<F> hom_differential(const SemifreeResolution<F>& res, const FiniteDGModule<F>& n, int p) {
    const F& k = n.field();
    const auto& alg = *res.algebra();
    auto src = hom_basis(res, n, p), dst = hom_basis(res, n, p - 1);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
    for (std::size_t i = 0; i < dst.size(); ++i) where[dst[i]] = i;
    Matrix<F> m(k, dst.size(), src.size());
    const auto& gens = res.generators();
    for (std::size_t col = 0; col < src.size(); ++col) {
        auto [g0, j0] = src[col];
        for (std::size_t j = 0; j < n.dim(); ++j) {
            const auto& v = n.differential()(j, j0);
            if (!k.is_zero(v)) m(where.at({g0, j}), col) = k.add(m(where.at({g0, j}), col), v);
        }
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (const auto& e : gens[g].boundary) {
                if (e.gen != g0) continue;
                auto s = k.neg(k.mul(e.coeff, sign(k, p + static_cast<long long>(alg.degree(e.alg)) * p)));
                const Matrix<F>& act = n.action(e.alg);
                for (std::size_t j = 0; j < n.dim(); ++j)
                    if (!k.is_zero(act(j, j0))) m(where.at({g, j}), col) = k.add(m(where.at({g, j}), col), k.mul(s, act(j, j0)));
            }
    }
    return m;
}

/// r phi for r in A_0, acting through N.
template <Field F>
Matrix<F> hom_scalar_action(const SemifreeResolution<F>& res, const FiniteDGModule<F>& n, int p, std::size_t r) {
    const F& k = n.field();
    auto basis = hom_basis(res, n, p);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
    for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
    Matrix<F> m(k, basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        auto [g, j0] = basis[col];
        for (std::size_t j = 0; j < n.dim(); ++j)
            if (!k.is_zero(n.action(r)(j, j0))) m(where.at({g, j}), col) = n.action(r)(j, j0);
    }
    return m;
}

/// dim H, and dim H / m_0 H, of a complex C_{p+1} -> C_p -> C_{p-1}.
template <Field F>
std::pair<std::size_t, std::size_t> homology_with_generators(const Matrix<F>& in, const Matrix<F>& out,
                                                             const std::vector<Matrix<F>>& scalars) {
    Matrix<F> z = kernel_basis(out);
    const std::size_t rin = in.cols() ? rank(in) : 0;
    const std::size_t h = z.cols() - rin;
    if (h == 0 || scalars.empty()) return {h, h};
    Matrix<F> spanned = in.cols() ? image_basis(in) : Matrix<F>(out.field(), z.rows(), 0);
    for (const auto& s : scalars) spanned = hstack(spanned, s * z);
    const std::size_t r = rank(spanned);
    return {h, z.cols() - std::min(z.cols(), r)};
}

}  // namespace detail

/// Internal degree through which `res` must be complete to give Ext^n(M, N)
/// for n <= n_max.
template <Field F>
int ext_degree_bound(const FiniteDGModule<F>& n, int n_max) {
    return (n.dim() ? n.max_degree() : 0) + n_max + 1;
}

/// Ext^n_A(M, N) = H_{-n} Hom_A(F, N) for n = 0..n_max.
template <Field F>
ExtTable ext_table(const SemifreeResolution<F>& res, const FiniteDGModule<F>& n, int n_max) {
    if (res.algebra() != n.algebra()) throw PreconditionError("ext_table: modules over different algebras");
    ExtTable t;
    t.budget_exceeded = res.complete_through() < ext_degree_bound(n, n_max);
    if (t.budget_exceeded) throw BudgetExceeded("ext_table: resolution incomplete (budget exceeded)");
    const auto& alg = *res.algebra();
    const auto m0 = detail::degree_zero_ideal_generators(alg);
    for (int e = 0; e <= n_max; ++e) {
        const int p = -e;
        Matrix<F> in = detail::hom_differential(res, n, p + 1);
        Matrix<F> out = detail::hom_differential(res, n, p);
        std::vector<Matrix<F>> scalars;
        for (std::size_t r : m0) scalars.push_back(detail::hom_scalar_action(res, n, p, r));
        auto [h, g] = detail::homology_with_generators(in, out, scalars);
        t.dims.push_back(h);
        t.generators.push_back(g);
    }
    return t;
}

template <Field F>
ExtTable ext_table(const FiniteDGModule<F>& m, const FiniteDGModule<F>& n, int n_max, std::size_t budget = kDefaultResolutionBudget) {
    auto res = semifree_resolution(m, ext_degree_bound(n, n_max), budget);
    if (res.budget_exceeded()) throw BudgetExceeded("ext_table: resolution exceeded its dimension budget");
    return ext_table(res, n, n_max);
}

/// dim_k Tor_i^A(M, N), i = 0..n_max, from F (x)_A N.
template <Field F>
std::vector<std::size_t> tor_table(const SemifreeResolution<F>& res, const FiniteDGModule<F>& n, int n_max) {
    const F& k = n.field();
    const auto& alg = *res.algebra();
    const auto& gens = res.generators();
    const int nmin = n.dim() ? n.min_degree() : 0;
    if (res.complete_through() < n_max + 1 - nmin) throw BudgetExceeded("tor_table: resolution incomplete");
    auto basis = [&](int d) {
        std::vector<std::pair<std::size_t, std::size_t>> b;
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::size_t j : n.basis_in_degree(d - gens[g].degree)) b.emplace_back(g, j);
        return b;
    };
    // d(v (x) n) = sum c (-1)^{|a||w|} w (x) a n + (-1)^{|v|} v (x) d n
    auto diff = [&](int d) {
        auto src = basis(d), dst = basis(d - 1);
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
        for (std::size_t i = 0; i < dst.size(); ++i) where[dst[i]] = i;
        Matrix<F> m(k, dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            auto [g, j0] = src[col];
            for (const auto& e : gens[g].boundary) {
                auto s = k.mul(e.coeff, sign(k, static_cast<long long>(alg.degree(e.alg)) * gens[e.gen].degree));
                const Matrix<F>& act = n.action(e.alg);
                for (std::size_t j = 0; j < n.dim(); ++j)
                    if (!k.is_zero(act(j, j0))) m(where.at({e.gen, j}), col) = k.add(m(where.at({e.gen, j}), col), k.mul(s, act(j, j0)));
            }
            auto s = sign(k, gens[g].degree);
            for (std::size_t j = 0; j < n.dim(); ++j)
                if (!k.is_zero(n.differential()(j, j0)))
                    m(where.at({g, j}), col) = k.add(m(where.at({g, j}), col), k.mul(s, n.differential()(j, j0)));
        }
        return m;
    };
    std::vector<std::size_t> out;
    for (int i = 0; i <= n_max; ++i) {
        Matrix<F> o = diff(i), in = diff(i + 1);
        out.push_back(o.cols() - rank(o) - rank(in));
    }
    return out;
}

template <Field F>
std::vector<std::size_t> tor_table(const FiniteDGModule<F>& m, const FiniteDGModule<F>& n, int n_max, std::size_t budget = kDefaultResolutionBudget) {
    auto res = semifree_resolution(m, n_max + 1 - (n.dim() ? n.min_degree() : 0), budget);
    if (res.budget_exceeded()) throw BudgetExceeded("tor_table: resolution exceeded its dimension budget");
    return tor_table(res, n, n_max);
}

/// M^v = Hom_A(F, A) for a minimal resolution F -> M over an algebra
/// concentrated in degree 0. `reliable` is false when some Ext^i(M, A) with
/// 1 <= i <= check_window is nonzero, in which case `module` holds H_0 only.
template <Field F>
struct RingDual {
    FiniteDGModule<F> module;
    std::vector<std::size_t> higher_ext;  ///< dim Ext^i(M, A), i = 1..check_window
    bool reliable = true;
};

template <Field F>
RingDual<F> ring_dual(const FiniteDGModule<F>& m, int check_window = 4, std::size_t budget = kDefaultResolutionBudget) {
    const auto& alg = m.algebra();
    const F& k = m.field();
    if (!alg->concentrated_in_degree_zero()) throw PreconditionError("ring_dual: the algebra must sit in degree 0");
    auto ring = FiniteDGModule<F>::free_rank_one(alg);
    auto res = semifree_resolution(m, ext_degree_bound(ring, check_window), budget);
    if (res.budget_exceeded()) throw BudgetExceeded("ring_dual: resolution exceeded its dimension budget");
    RingDual<F> out;
    auto table = ext_table(res, ring, check_window);
    for (int i = 1; i <= check_window; ++i) out.higher_ext.push_back(table.dims[i]);
    out.reliable = std::all_of(out.higher_ext.begin(), out.higher_ext.end(), [](std::size_t d) { return d == 0; });
    // degree 0 of the Hom complex, as a module: phi -> r phi acts through A
    auto degs = [&](int p) { return detail::hom_basis(res, ring, p); };
    auto basis0 = degs(0);
    const std::size_t n0 = basis0.size();
    std::vector<Matrix<F>> act;
    for (std::size_t r = 0; r < alg->dim(); ++r) act.push_back(detail::hom_scalar_action(res, ring, 0, r));
    FiniteDGModule<F> hom0(alg, std::vector<int>(n0, 0), Matrix<F>(k, n0, n0), std::move(act));
    Matrix<F> z = kernel_basis(detail::hom_differential(res, ring, 0));
    auto sub = submodule(hom0, z);
    Matrix<F> in = detail::hom_differential(res, ring, 1);
    if (in.cols() == 0 || in.is_zero()) {
        out.module = sub.module;
        return out;
    }
    // express boundaries in the submodule's basis, then divide
    Matrix<F> coords(k, sub.module.dim(), in.cols());
    for (std::size_t j = 0; j < in.cols(); ++j) {
        auto x = solve(sub.map, std::span<const typename F::value_type>(in.column(j)));
        coords.set_column(j, std::span<const typename F::value_type>(*x));
    }
    out.module = quotient(sub.module, coords).module;
    return out;
}

}  // namespace cidual
