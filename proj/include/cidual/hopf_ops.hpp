#pragma once

// Constructions on DG modules over a graded-commutative Hopf algebra (the
// exterior algebra): k-duals with the action twisted by id or the antipode,
// the twist M_tau, diagonal tensor products and Hom, the comparison map phi,
// and the retraction M -> M (x) M*(sigma) (x) M -> M.

#include <string>
#include <utility>
#include <vector>

#include "cidual/dg_module.hpp"

namespace cidual {

enum class DualTwist { identity, antipode };

namespace detail {

template <Field F>
const HopfData<F>& hopf_of(const FiniteDGModule<F>& m, const char* who) {
    if (!m.algebra()->hopf()) throw PreconditionError(std::string(who) + ": algebra carries no Hopf data");
    return *m.algebra()->hopf();
}

}  // namespace detail

/// M*(rho): basis f_b dual to b in degree -|b|, d f = -(-1)^{|f|} f d and
/// (a f)(m) = (-1)^{|a||f|} f(rho(a) m).
template <Field F>
FiniteDGModule<F> dual(const FiniteDGModule<F>& m, DualTwist rho) {
    const F& k = m.field();
    const auto& alg = *m.algebra();
    const std::size_t n = m.dim();
    if (rho == DualTwist::antipode) detail::hopf_of(m, "dual");
    std::vector<int> deg(n);
    for (std::size_t b = 0; b < n; ++b) deg[b] = -m.degree(b);
    Matrix<F> d(k, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!k.is_zero(m.differential()(b, a))) d(a, b) = k.neg(k.mul(sign(k, deg[b]), m.differential()(b, a)));
    std::vector<Matrix<F>> act;
    for (std::size_t x = 0; x < alg.dim(); ++x) {
        Matrix<F> ax = m.action(x);
        if (rho == DualTwist::antipode) {
            auto sx = alg.hopf()->antipode.column(x);
            ax = m.action_of(std::span<const typename F::value_type>(sx));
        }
        Matrix<F> out(k, n, n);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t j = 0; j < n; ++j)
                if (!k.is_zero(ax(b, j)))
                    out(j, b) = k.mul(sign(k, static_cast<long long>(alg.degree(x)) * m.degree(b)), ax(b, j));
        act.push_back(std::move(out));
    }
    return FiniteDGModule<F>(m.algebra(), std::move(deg), std::move(d), std::move(act));
}

/// M_tau: d negated and a.m = (-1)^{|a|} am.
template <Field F>
FiniteDGModule<F> twist_module(const FiniteDGModule<F>& m) {
    const F& k = m.field();
    if (!m.algebra()->has_zero_differential()) throw PreconditionError("twist: the algebra must have zero differential");
    std::vector<Matrix<F>> act;
    for (std::size_t a = 0; a < m.algebra()->dim(); ++a) act.push_back(m.action(a).scaled(sign(k, m.algebra()->degree(a))));
    return FiniteDGModule<F>(m.algebra(), m.degrees(), m.differential().scaled(k.neg(k.one())), std::move(act));
}

/// m -> (-1)^{|m|} m from `source` to `target` (same underlying basis).
template <Field F>
ChainMap<F> parity_sign_map(const FiniteDGModule<F>& source, const FiniteDGModule<F>& target) {
    const F& k = source.field();
    Matrix<F> w(k, source.dim(), source.dim());
    for (std::size_t i = 0; i < source.dim(); ++i) w(i, i) = sign(k, source.degree(i));
    return {source, target, 0, std::move(w)};
}

/// M_tau together with the isomorphism M -> M_tau, m -> (-1)^{|m|} m.
template <Field F>
std::pair<FiniteDGModule<F>, ChainMap<F>> twist(const FiniteDGModule<F>& m) {
    auto t = twist_module(m);
    auto w = parity_sign_map(m, t);
    return {std::move(t), std::move(w)};
}

/// M -> (M*(rho))*(rho), m -> (-1)^{|m|} g_m, where g_m is dual to f_m.
/// Dualizing twice negates the differential and multiplies the action of a by
/// (-1)^{|a|}, so the witness is the twist isomorphism.
template <Field F>
ChainMap<F> double_dual_witness(const FiniteDGModule<F>& m, DualTwist rho) {
    return parity_sign_map(m, dual(dual(m, rho), rho));
}

/// Sigma^{-c} Lambda -> Lambda*(id), Sigma^{-c} e_S -> (-1)^{c|S|} e_S f_top.
template <Field F>
ChainMap<F> exterior_dual_witness(const AlgebraPtr<F>& lambda) {
    const F& k = lambda->field();
    const std::size_t c = lambda->generators().size();
    auto free = FiniteDGModule<F>::free_rank_one(lambda);
    auto source = suspension(free, -static_cast<int>(c));
    auto target = dual(free, DualTwist::identity);
    const std::size_t n = lambda->dim();
    auto top = lambda->basis_in_degree(static_cast<int>(c));
    if (top.size() != 1) throw PreconditionError("exterior_dual_witness: algebra is not an exterior algebra");
    Matrix<F> w(k, n, n);
    for (std::size_t s = 0; s < n; ++s) {
        auto col = target.action(s).column(top[0]);
        auto sg = sign(k, static_cast<long long>(c) * lambda->degree(s));
        for (std::size_t i = 0; i < n; ++i) w(i, s) = k.mul(sg, col[i]);
    }
    return {std::move(source), std::move(target), 0, std::move(w)};
}

/// M (x)_k N with Lambda acting through Delta: basis (m, n) at m * dim N + n,
/// a (m (x) n) = sum (-1)^{|a''||m|} a'm (x) a''n.
template <Field F>
FiniteDGModule<F> tensor_diagonal(const FiniteDGModule<F>& m, const FiniteDGModule<F>& nmod) {
    if (m.algebra() != nmod.algebra()) throw PreconditionError("tensor_diagonal: modules over different algebras");
    const auto& hopf = detail::hopf_of(m, "tensor_diagonal");
    const F& k = m.field();
    const auto& alg = *m.algebra();
    const std::size_t dm = m.dim(), dn = nmod.dim(), na = alg.dim();
    std::vector<int> deg(dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) deg[i * dn + j] = m.degree(i) + nmod.degree(j);
    Matrix<F> d(k, dm * dn, dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            const std::size_t col = i * dn + j;
            for (std::size_t i2 = 0; i2 < dm; ++i2)
                if (!k.is_zero(m.differential()(i2, i))) d(i2 * dn + j, col) = k.add(d(i2 * dn + j, col), m.differential()(i2, i));
            auto s = sign(k, m.degree(i));
            for (std::size_t j2 = 0; j2 < dn; ++j2)
                if (!k.is_zero(nmod.differential()(j2, j)))
                    d(i * dn + j2, col) = k.add(d(i * dn + j2, col), k.mul(s, nmod.differential()(j2, j)));
        }
    std::vector<Matrix<F>> act;
    for (std::size_t a = 0; a < na; ++a) {
        Matrix<F> out(k, dm * dn, dm * dn);
        for (std::size_t p = 0; p < na; ++p)
            for (std::size_t q = 0; q < na; ++q) {
                const auto& c = hopf.comultiplication(p * na + q, a);
                if (k.is_zero(c)) continue;
                const Matrix<F>& ap = m.action(p);
                const Matrix<F>& aq = nmod.action(q);
                for (std::size_t i = 0; i < dm; ++i) {
                    auto cs = k.mul(c, sign(k, static_cast<long long>(alg.degree(q)) * m.degree(i)));
                    for (std::size_t i2 = 0; i2 < dm; ++i2) {
                        if (k.is_zero(ap(i2, i))) continue;
                        auto ci = k.mul(cs, ap(i2, i));
                        for (std::size_t j = 0; j < dn; ++j)
                            for (std::size_t j2 = 0; j2 < dn; ++j2)
                                if (!k.is_zero(aq(j2, j)))
                                    out(i2 * dn + j2, i * dn + j) = k.add(out(i2 * dn + j2, i * dn + j), k.mul(ci, aq(j2, j)));
                    }
                }
            }
        act.push_back(std::move(out));
    }
    return FiniteDGModule<F>(m.algebra(), std::move(deg), std::move(d), std::move(act));
}

/// Hom_k(M, N): basis E_{n,m} (the map m -> n) at n * dim M + m in degree
/// |n| - |m|; d f = d_N f - (-1)^{|f|} f d_M and
/// a f = sum (-1)^{|a''||f|} a' f(sigma(a'') -).
template <Field F>
FiniteDGModule<F> hom_diagonal(const FiniteDGModule<F>& m, const FiniteDGModule<F>& nmod) {
    if (m.algebra() != nmod.algebra()) throw PreconditionError("hom_diagonal: modules over different algebras");
    const auto& hopf = detail::hopf_of(m, "hom_diagonal");
    const F& k = m.field();
    const auto& alg = *m.algebra();
    const std::size_t dm = m.dim(), dn = nmod.dim(), na = alg.dim();
    const std::size_t n = dm * dn;
    std::vector<int> deg(n);
    for (std::size_t j = 0; j < dn; ++j)
        for (std::size_t i = 0; i < dm; ++i) deg[j * dm + i] = nmod.degree(j) - m.degree(i);
    // f as a dn x dm matrix; column index j * dm + i of the Hom space
    auto to_vector = [&](const Matrix<F>& f) {
        std::vector<typename F::value_type> v(n);
        for (std::size_t j = 0; j < dn; ++j)
            for (std::size_t i = 0; i < dm; ++i) v[j * dm + i] = f(j, i);
        return v;
    };
    auto basis_map = [&](std::size_t idx) {
        Matrix<F> f(k, dn, dm);
        f(idx / dm, idx % dm) = k.one();
        return f;
    };
    Matrix<F> d(k, n, n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        Matrix<F> f = basis_map(idx);
        Matrix<F> df = nmod.differential() * f - (f * m.differential()).scaled(sign(k, deg[idx]));
        auto v = to_vector(df);
        d.set_column(idx, std::span<const typename F::value_type>(v));
    }
    std::vector<Matrix<F>> sigma_action(na);
    for (std::size_t q = 0; q < na; ++q) {
        auto sq = hopf.antipode.column(q);
        sigma_action[q] = m.action_of(std::span<const typename F::value_type>(sq));
    }
    std::vector<Matrix<F>> act;
    for (std::size_t a = 0; a < na; ++a) {
        Matrix<F> out(k, n, n);
        for (std::size_t p = 0; p < na; ++p)
            for (std::size_t q = 0; q < na; ++q) {
                const auto& c = hopf.comultiplication(p * na + q, a);
                if (k.is_zero(c)) continue;
                for (std::size_t idx = 0; idx < n; ++idx) {
                    Matrix<F> g = nmod.action(p) * basis_map(idx) * sigma_action[q];
                    auto cs = k.mul(c, sign(k, static_cast<long long>(alg.degree(q)) * deg[idx]));
                    auto v = to_vector(g);
                    for (std::size_t r = 0; r < n; ++r)
                        if (!k.is_zero(v[r])) out(r, idx) = k.add(out(r, idx), k.mul(cs, v[r]));
                }
            }
        act.push_back(std::move(out));
    }
    return FiniteDGModule<F>(m.algebra(), std::move(deg), std::move(d), std::move(act));
}

/// Sign placed inside the evaluation formula of phi.
enum class PhiSign {
    none,       ///< n (x) f -> (m -> n f(m)); the convention that is Lambda-linear and a chain map
    koszul_fm,  ///< n (x) f -> (m -> (-1)^{|f||m|} n f(m)); kept for comparison
};

/// phi_{M,N}: N (x) M*(sigma) -> Hom_k(M, N).
template <Field F>
ChainMap<F> phi(const FiniteDGModule<F>& m, const FiniteDGModule<F>& nmod, PhiSign convention = PhiSign::none) {
    const F& k = m.field();
    auto source = tensor_diagonal(nmod, dual(m, DualTwist::antipode));
    auto target = hom_diagonal(m, nmod);
    const std::size_t dm = m.dim(), dn = nmod.dim();
    // n (x) f_b sits at index n * dm + b in the source and maps to E_{n,b},
    // which has the same index in the target
    Matrix<F> w(k, dm * dn, dm * dn);
    for (std::size_t j = 0; j < dn; ++j)
        for (std::size_t b = 0; b < dm; ++b) {
            auto s = convention == PhiSign::none ? k.one() : sign(k, static_cast<long long>(m.degree(b)) * m.degree(b));
            w(j * dm + b, j * dm + b) = s;
        }
    return {std::move(source), std::move(target), 0, std::move(w)};
}

template <Field F>
struct SplittingMaps {
    ChainMap<F> iota;  ///< M -> M (x) M*(sigma) (x) M
    ChainMap<F> pi;    ///< M (x) M*(sigma) (x) M -> M
};

/// iota(m) = sum_b b (x) f_b (x) m, the image of id_M (x) m under phi^{-1};
/// pi(u (x) f (x) m) = f(m) u.
template <Field F>
SplittingMaps<F> splitting_maps(const FiniteDGModule<F>& m) {
    const F& k = m.field();
    const std::size_t n = m.dim();
    auto middle = tensor_diagonal(tensor_diagonal(m, dual(m, DualTwist::antipode)), m);
    // index of u (x) f_b (x) v is (u * n + b) * n + v
    Matrix<F> iota(k, n * n * n, n);
    Matrix<F> pi(k, n, n * n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t b = 0; b < n; ++b) iota((b * n + b) * n + v, v) = k.one();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t b = 0; b < n; ++b) pi(u, (u * n + b) * n + b) = k.one();
    return {ChainMap<F>{m, middle, 0, std::move(iota)}, ChainMap<F>{middle, m, 0, std::move(pi)}};
}

}  // namespace cidual
