#include <gtest/gtest.h>

#include <memory>

#include "cidual/complexity.hpp"
#include "cidual/koszul.hpp"
#include "cidual/random.hpp"
#include "cidual/resolution.hpp"

using namespace cidual;
using Fp = PrimeField;
using Mod = FiniteDGModule<Fp>;
using Seq = std::vector<std::size_t>;

namespace {

AlgebraPtr<Fp> lambda(std::size_t c) { return std::make_shared<const FiniteDGAlgebra<Fp>>(exterior_algebra(c, Fp{})); }

QuotientRing<Fp> ring(std::vector<std::string> vars, std::vector<std::string> rels) {
    return QuotientRing<Fp>(RingSpec<Fp>::parse(Fp{}, std::move(vars), rels));
}

// Coefficients of (1+t)^nu / (1-t^2)^c by long division of power series.
Seq poincare_oracle(int nu, int c, int n) {
    std::vector<long long> num(n + 1, 0), den(n + 1, 0), q(n + 1, 0);
    num[0] = 1;
    for (int i = 0; i < nu; ++i)
        for (int j = n; j >= 1; --j) num[j] += num[j - 1];
    den[0] = 1;
    for (int i = 0; i < c; ++i)
        for (int j = n; j >= 2; --j) den[j] -= den[j - 2];
    for (int j = 0; j <= n; ++j) {
        long long s = num[j];
        for (int i = 1; i <= j; ++i) s -= den[i] * q[j - i];
        q[j] = s;
    }
    return Seq(q.begin(), q.end());
}

std::size_t choose(std::size_t n, std::size_t k) {
    std::size_t b = 1;
    for (std::size_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

struct Case {
    std::string name;
    QuotientRing<Fp> r;
};

std::vector<Case> rings() {
    return {{"x2", ring({"x"}, {"x^2"})},
            {"x3", ring({"x"}, {"x^3"})},
            {"x2y2", ring({"x", "y"}, {"x^2", "y^2"})},
            {"x2y3", ring({"x", "y"}, {"x^2", "y^3"})},
            {"xy,x2+y2", ring({"x", "y"}, {"x*y", "x^2 + y^2"})}};
}

std::vector<Mod> ring_modules(const QuotientRing<Fp>& r, int randoms) {
    std::vector<Mod> out{Mod::residue_field(r.algebra()), free_module(r, 1), maximal_ideal(r)};
    for (int s = 1; s <= randoms; ++s) out.push_back(random_ring_module(r, static_cast<std::uint64_t>(s)));
    return out;
}

}  // namespace

TEST(PoincareOracle, SelfCheck) {
    EXPECT_EQ(poincare_oracle(1, 1, 5), (Seq{1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(poincare_oracle(2, 2, 4), (Seq{1, 2, 3, 4, 5}));
    EXPECT_EQ(poincare_oracle(2, 0, 4), (Seq{1, 2, 1, 0, 0}));
}

TEST(Resolution, BettiOfResidueFieldMatchPoincareSeries) {
    const int n = 12;
    for (auto& c : rings()) {
        auto kk = Mod::residue_field(c.r.algebra());
        auto res = semifree_resolution(kk, n);
        ASSERT_FALSE(res.budget_exceeded());
        EXPECT_EQ(res.betti_by_degree(0, n),
                  poincare_oracle(static_cast<int>(c.r.embedding_dimension()), static_cast<int>(c.r.codimension()), n))
            << c.name;
        EXPECT_TRUE(res.check_exactness()) << c.name;
        EXPECT_TRUE(res.check_minimality()) << c.name;
    }
}

TEST(Resolution, ExteriorCartanBinomials) {
    // Ext_Lambda(k, k) is polynomial on c classes of internal degree -2, so
    // H_{-2j} has dimension binom(j+c-1, c-1) and odd degrees vanish
    for (std::size_t c = 1; c <= 3; ++c) {
        auto kk = Mod::residue_field(lambda(c));
        const int n = c == 3 ? 10 : 14;
        auto t = ext_table(kk, kk, n);
        for (int j = 0; j <= n; ++j)
            EXPECT_EQ(t.dims[j], j % 2 ? 0 : choose(j / 2 + c - 1, c - 1)) << "c = " << c << ", n = " << j;
    }
}

TEST(Resolution, FreeModulesAreTheirOwnResolution) {
    auto a = lambda(2);
    auto free = Mod::free_rank_one(a);
    auto res = semifree_resolution(free, 6);
    EXPECT_EQ(res.generators().size(), 1u);
    auto kk = Mod::residue_field(a);
    auto t = ext_table(free, kk, 6);
    EXPECT_EQ(t.dims, (Seq{1, 0, 0, 0, 0, 0, 0}));
    auto r = ring({"x", "y"}, {"x^2", "y^3"});
    for (const auto& nmod : ring_modules(r, 2)) {
        auto e = ext_table(free_module(r, 2), nmod, 6);
        EXPECT_EQ(e.dims[0], 2 * nmod.dim());
        for (int j = 1; j <= 6; ++j) EXPECT_EQ(e.dims[j], 0u);
    }
}

TEST(Resolution, ExtOfResidueFieldOverRings) {
    for (auto& c : rings()) {
        auto kk = Mod::residue_field(c.r.algebra());
        auto t = ext_table(kk, kk, 10);
        EXPECT_EQ(t.dims, poincare_oracle(static_cast<int>(c.r.embedding_dimension()), static_cast<int>(c.r.codimension()), 10))
            << c.name;
    }
}

TEST(Tor, ExamplesOverTwoVariables) {
    auto r = ring({"x", "y"}, {"x^2", "y^2"});
    auto x = variable(r.poly_ring(), 0), y = variable(r.poly_ring(), 1);
    auto rx = cyclic_quotient(r, {x}), ry = cyclic_quotient(r, {y});
    EXPECT_EQ(tor_table(rx, ry, 6), (Seq{1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(tor_table(rx, rx, 6), (Seq{2, 2, 2, 2, 2, 2, 2}));
    auto kk = Mod::residue_field(r.algebra());
    EXPECT_EQ(tor_table(kk, kk, 6), poincare_oracle(2, 2, 6));
}

TEST(Resolution, RandomModulesExactMinimalAndExtToKIsBetti) {
    for (auto& c : rings()) {
        auto kk = Mod::residue_field(c.r.algebra());
        for (const auto& m : ring_modules(c.r, 4)) {
            auto res = semifree_resolution(m, 9);
            ASSERT_FALSE(res.budget_exceeded());
            EXPECT_TRUE(res.check_exactness()) << c.name;
            EXPECT_TRUE(res.check_minimality()) << c.name;
            EXPECT_EQ(ext_table(res, kk, 8).dims, res.betti_by_degree(0, 8)) << c.name;
        }
    }
    for (std::size_t c = 1; c <= 2; ++c) {
        auto a = lambda(c);
        auto kk = Mod::residue_field(a);
        for (std::uint64_t s = 1; s <= 8; ++s) {
            auto m = random_dg_module(a, RandomModuleSpec{s, 4});
            if (m.dim() == 0) continue;
            auto res = semifree_resolution(m, m.max_degree() + 8);
            EXPECT_TRUE(res.check_exactness());
            EXPECT_TRUE(res.check_minimality());
        }
    }
}

TEST(Complexity, ResidueFieldComplexityIsCodimension) {
    for (auto& c : rings()) {
        auto kk = Mod::residue_field(c.r.algebra());
        auto t = ext_table(kk, kk, 20);
        EXPECT_EQ(complexity_fit(t.generators).complexity, static_cast<int>(c.r.codimension())) << c.name;
    }
}

TEST(Complexity, FitExamplesAndErrors) {
    EXPECT_EQ(complexity_fit(Seq(14, 3)).complexity, 1);
    Seq lin, quad, alt;
    for (std::size_t n = 0; n < 16; ++n) {
        lin.push_back(n + 1);
        quad.push_back((n + 1) * (n + 2) / 2);
        alt.push_back(n % 2 ? 5 : n + 1);
    }
    EXPECT_EQ(complexity_fit(lin).complexity, 2);
    EXPECT_EQ(complexity_fit(quad).complexity, 3);
    EXPECT_EQ(complexity_fit(alt).complexity, 2);
    EXPECT_EQ(complexity_fit(Seq(14, 0)).complexity, 0);
    Seq early{4, 2, 1};
    early.resize(20, 0);
    EXPECT_TRUE(eventually_vanishes(early));
    EXPECT_FALSE(eventually_vanishes(Seq(14, 1)));
    EXPECT_THROW(complexity_fit(Seq(5, 1)), PreconditionError);
    Seq wild;
    for (std::size_t n = 0; n < 14; ++n) wild.push_back(std::size_t{1} << n);
    EXPECT_THROW(complexity_fit(wild), UnstableFit);
}

TEST(RingDual, ExamplesAndDoubleDual) {
    for (auto& c : rings()) {
        auto kk = Mod::residue_field(c.r.algebra());
        auto dk = ring_dual(kk);
        EXPECT_TRUE(dk.reliable);
        EXPECT_EQ(dk.module.dim(), 1u);
        auto df = ring_dual(free_module(c.r, 1));
        EXPECT_EQ(df.module.dim(), c.r.dim());
        for (const auto& m : ring_modules(c.r, 3)) {
            auto d = ring_dual(m);
            ASSERT_TRUE(d.reliable) << c.name;
            // Gorenstein artinian: Hom_R(M, R) has the length of M
            EXPECT_EQ(d.module.dim(), m.dim()) << c.name;
            auto dd = ring_dual(d.module);
            EXPECT_EQ(semifree_resolution(dd.module, 8).betti_by_degree(0, 8), semifree_resolution(m, 8).betti_by_degree(0, 8)) << c.name;
        }
    }
}

TEST(RingDual, ExtDimensionsAgreeAcrossDuality) {
    auto r = ring({"x", "y"}, {"x^2", "y^3"});
    auto ms = ring_modules(r, 2);
    std::vector<Mod> duals;
    for (const auto& m : ms) duals.push_back(ring_dual(m).module);
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
            EXPECT_EQ(ext_table(ms[i], ms[j], 6).dims, ext_table(duals[j], duals[i], 6).dims) << i << "," << j;
}

TEST(Koszul, ExtIntoKoszulTensorIsBinomialSum) {
    // t(M) = M (x) Lambda(nu) as a complex of R-modules, so
    // dim Ext^n(k, tM) = sum_i binom(nu, i) dim Ext^{n+i}(k, M)
    const int n = 6;
    for (auto& c : rings()) {
        const std::size_t nu = c.r.embedding_dimension();
        auto kos = koszul_algebra(c.r);
        auto kk = Mod::residue_field(c.r.algebra());
        auto res = semifree_resolution(kk, 2 * static_cast<int>(nu) + n + 2);
        for (const auto& m : ring_modules(c.r, 2)) {
            auto base = ext_table(res, m, n + static_cast<int>(nu)).dims;
            auto lhs = ext_table(res, tensor_koszul_over_ring(kos, m), n).dims;
            for (int j = 0; j <= n; ++j) {
                std::size_t s = 0;
                for (std::size_t i = 0; i <= nu; ++i) s += choose(nu, i) * base[j + i];
                EXPECT_EQ(lhs[j], s) << c.name << ", n = " << j;
            }
        }
    }
}

TEST(Resolution, BudgetIsReported) {
    auto r = ring({"x", "y"}, {"x^2", "y^2"});
    auto kk = Mod::residue_field(r.algebra());
    auto res = semifree_resolution(kk, 30, 20);
    EXPECT_TRUE(res.budget_exceeded());
    EXPECT_LT(res.complete_through(), 30);
    EXPECT_THROW(ext_table(res, kk, 20), BudgetExceeded);
    EXPECT_THROW(ext_table(kk, kk, 20, 20), BudgetExceeded);
}
