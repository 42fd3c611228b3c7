#pragma once

// Seeded random instances: small DG modules over an exterior algebra and
// finitely presented modules over a quotient ring. Every output has passed
// validate(); invalid draws are rejected and redrawn.

#include <cstdint>
#include <random>
#include <vector>

#include "cidual/dg_module.hpp"
#include "cidual/ring.hpp"

namespace cidual {

struct RandomModuleSpec {
    std::uint64_t seed = 1;
    std::size_t max_dim = 6;
    int min_degree = -1;
    int max_degree = 1;
    double density = 0.6;  ///< probability that a coefficient is nonzero
};

namespace detail {

template <Field F>
typename F::value_type random_scalar(const F& k, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution nonzero(density);
    if (!nonzero(rng)) return k.zero();
    std::uniform_int_distribution<int> v(1, 9);
    std::bernoulli_distribution neg(0.5);
    int x = v(rng);
    return k.from_int(neg(rng) ? -x : x);
}

/// Semifree module Lambda (x) W on generators g with prescribed degrees and
/// boundaries. Basis index: generator * dim(Lambda) + algebra basis element.
template <Field F>
FiniteDGModule<F> semifree_two_level(const AlgebraPtr<F>& alg, const std::vector<int>& gen_degrees,
                                     const std::vector<std::vector<typename F::value_type>>& boundaries) {
    const F& k = alg->field();
    const std::size_t na = alg->dim(), ng = gen_degrees.size(), n = na * ng;
    std::vector<int> deg(n);
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t a = 0; a < na; ++a) deg[g * na + a] = gen_degrees[g] + alg->degree(a);
    std::vector<Matrix<F>> act(na, Matrix<F>(k, n, n));
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t g = 0; g < ng; ++g)
            act[x].set_block(g * na, g * na, alg->left_mult(x));
    Matrix<F> d(k, n, n);
    for (std::size_t g = 0; g < ng; ++g) {
        const auto& bd = boundaries[g];  // coordinates of d(g) in the module basis
        for (std::size_t a = 0; a < na; ++a) {
            // d(a g) = (-1)^{|a|} a d(g)
            auto image = act[a].apply(std::span<const typename F::value_type>(bd));
            auto s = sign(k, alg->degree(a));
            for (std::size_t i = 0; i < n; ++i) d(i, g * na + a) = k.mul(s, image[i]);
        }
    }
    return FiniteDGModule<F>(alg, std::move(deg), std::move(d), std::move(act));
}

}  // namespace detail

/// A nonzero DG module of dimension <= spec.max_dim over `alg` (an exterior
/// algebra): a quotient of a semifree module on at most three generators
/// whose upper generators bound Lambda-combinations of the lower ones.
template <Field F>
FiniteDGModule<F> random_dg_module(const AlgebraPtr<F>& alg, const RandomModuleSpec& spec) {
    using V = typename F::value_type;
    const F& k = alg->field();
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> deg_dist(spec.min_degree, spec.max_degree);
    const std::size_t na = alg->dim();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::uniform_int_distribution<int> nb_dist(1, 2), nt_dist(0, 1);
        const int nb = nb_dist(rng), nt = nt_dist(rng);
        std::vector<int> gdeg;
        for (int i = 0; i < nb; ++i) gdeg.push_back(deg_dist(rng));
        std::vector<std::vector<V>> bds(nb, std::vector<V>(na * (nb + nt), k.zero()));
        for (int j = 0; j < nt; ++j) {
            int d = deg_dist(rng) + 1;
            gdeg.push_back(d);
            std::vector<V> bd(na * (nb + nt), k.zero());
            for (int g = 0; g < nb; ++g)
                for (std::size_t a = 0; a < na; ++a)
                    if (gdeg[g] + alg->degree(a) == d - 1) bd[g * na + a] = detail::random_scalar(k, rng, spec.density);
            bds.push_back(std::move(bd));
        }
        FiniteDGModule<F> m = detail::semifree_two_level(alg, gdeg, bds);
        // divide by DG submodules generated by random homogeneous elements
        int guard = 0;
        while (m.dim() > spec.max_dim && guard++ < 20) {
            std::uniform_int_distribution<std::size_t> pick(0, m.dim() - 1);
            int d = m.degree(pick(rng));
            std::vector<V> u(m.dim(), k.zero());
            for (std::size_t i = 0; i < m.dim(); ++i)
                if (m.degree(i) == d) u[i] = detail::random_scalar(k, rng, spec.density);
            Matrix<F> gens(k, m.dim(), 1);
            gens.set_column(0, std::span<const V>(u));
            if (gens.is_zero()) continue;
            m = quotient(m, gens).module;
        }
        if (m.dim() == 0 || m.dim() > spec.max_dim) continue;
        if (!m.validate()) continue;
        return m;
    }
    throw Error("random_dg_module: no valid module drawn");
}

/// A nonzero module coker(R^b -> R^a) with a in {1,2}, b in {1,2} and
/// entries drawn from the maximal ideal.
template <Field F>
FiniteDGModule<F> random_ring_module(const QuotientRing<F>& r, std::uint64_t seed, ModulePresentation<F>* presentation = nullptr) {
    const F& k = r.field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 2);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ModulePresentation<F> p;
        p.rows = static_cast<std::size_t>(size(rng));
        const std::size_t cols = static_cast<std::size_t>(size(rng));
        p.entries.assign(p.rows, std::vector<Poly<F>>(cols, Poly<F>(k)));
        for (auto& row : p.entries)
            for (auto& e : row)
                for (std::size_t b = 1; b < r.dim(); ++b)
                    e = e + Poly<F>::term(k, r.basis()[b], detail::random_scalar(k, rng, 0.4));
        auto m = cokernel(r, p);
        if (m.dim() == 0 || !m.validate()) continue;
        if (presentation) *presentation = p;
        return m;
    }
    throw Error("random_ring_module: no valid module drawn");
}

}  // namespace cidual
