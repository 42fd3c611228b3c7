#include <gtest/gtest.h>

#include <memory>

#include "cidual/hopf_ops.hpp"
#include "cidual/koszul.hpp"
#include "cidual/random.hpp"

using namespace cidual;
using Fp = PrimeField;
using Mod = FiniteDGModule<Fp>;

namespace {

AlgebraPtr<Fp> lambda(std::size_t c) { return std::make_shared<const FiniteDGAlgebra<Fp>>(exterior_algebra(c, Fp{})); }

QuotientRing<Fp> ring(std::vector<std::string> vars, std::vector<std::string> rels) {
    return QuotientRing<Fp>(RingSpec<Fp>::parse(Fp{}, std::move(vars), rels));
}

bool same_structure(const Mod& a, const Mod& b) {
    return a.degrees() == b.degrees() && a.differential() == b.differential() && a.actions() == b.actions();
}

std::vector<Mod> sample_modules(const AlgebraPtr<Fp>& alg, int count, std::uint64_t seed0) {
    std::vector<Mod> out{Mod::residue_field(alg), Mod::free_rank_one(alg)};
    for (int i = 0; i < count; ++i) out.push_back(random_dg_module(alg, RandomModuleSpec{seed0 + static_cast<std::uint64_t>(i), 4}));
    return out;
}

}  // namespace

TEST(ExteriorAlgebra, ValidatesForSmallCodimension) {
    for (std::size_t c = 1; c <= 3; ++c) {
        auto a = lambda(c);
        EXPECT_EQ(a->dim(), std::size_t{1} << c);
        EXPECT_TRUE(a->validate()) << a->validate().describe();
        EXPECT_EQ(a->generators().size(), c);
        EXPECT_EQ(a->max_degree(), static_cast<int>(c));
    }
    EXPECT_THROW(exterior_algebra(1, Fp(2)), PreconditionError);
}

TEST(ExteriorAlgebra, CoproductAndAntipodeOfTopClass) {
    Fp k;
    auto a = lambda(2);
    ASSERT_EQ(a->labels(), (std::vector<std::string>{"1", "e1", "e2", "e1e2"}));
    const auto& h = *a->hopf();
    // Delta(e1e2) = e1e2(x)1 + e1(x)e2 - e2(x)e1 + 1(x)e1e2
    auto col = h.comultiplication.column(3);
    std::vector<Fp::value_type> expect(16, 0);
    expect[3 * 4 + 0] = 1;
    expect[1 * 4 + 2] = 1;
    expect[2 * 4 + 1] = k.neg(1);
    expect[0 * 4 + 3] = 1;
    EXPECT_EQ(col, expect);
    EXPECT_EQ(h.antipode.column(3), (std::vector<Fp::value_type>{0, 0, 0, 1}));
    EXPECT_EQ(h.antipode.column(1), (std::vector<Fp::value_type>{0, k.neg(1), 0, 0}));
}

TEST(DGModule, ValidateReportsSquareNonzero) {
    Fp k;
    auto a = lambda(1);
    auto d = Matrix<Fp>::from_ints(k, 3, 3, {0, 0, 0, 1, 0, 0, 0, 1, 0});
    Mod m(a, {2, 1, 0}, d, {Matrix<Fp>::identity(k, 3), Matrix<Fp>(k, 3, 3)});
    auto r = m.validate();
    EXPECT_FALSE(r);
    EXPECT_EQ(r.identity, "d^2 = 0");
    EXPECT_FALSE(r.witness.empty());
    Mod bad_degree(a, {0, 0, 0}, Matrix<Fp>::from_ints(k, 3, 3, {0, 0, 0, 1, 0, 0, 0, 0, 0}),
                   {Matrix<Fp>::identity(k, 3), Matrix<Fp>(k, 3, 3)});
    EXPECT_FALSE(bad_degree.validate());
}

TEST(DGModule, RandomModulesValidate) {
    for (std::size_t c = 1; c <= 3; ++c)
        for (const auto& m : sample_modules(lambda(c), 15, 100 * c)) EXPECT_TRUE(m.validate()) << m.validate().describe();
}

TEST(DGModule, SuspensionAndNegation) {
    for (const auto& m : sample_modules(lambda(2), 10, 7)) {
        auto s = suspension(m, 3);
        EXPECT_TRUE(s.validate());
        EXPECT_EQ(s.min_degree(), m.min_degree() + 3);
        EXPECT_TRUE(same_structure(suspension(s, -3), m));
        auto n = negate_differential(m);
        EXPECT_TRUE(n.validate());
        EXPECT_TRUE(same_structure(negate_differential(n), m));
        for (int d = m.min_degree(); d <= m.max_degree(); ++d) {
            EXPECT_EQ(n.homology_dim(d), m.homology_dim(d));
            EXPECT_EQ(s.homology_dim(d + 3), m.homology_dim(d));
        }
    }
}

TEST(DGModule, DirectSumHomologyAdds) {
    auto a = lambda(2);
    auto ms = sample_modules(a, 6, 40);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
        auto s = direct_sum(ms[i], ms[i + 1]);
        EXPECT_TRUE(s.validate());
        for (int d = -4; d <= 4; ++d) EXPECT_EQ(s.homology_dim(d), ms[i].homology_dim(d) + ms[i + 1].homology_dim(d));
    }
}

TEST(Koszul, SingleElementOverDualNumbers) {
    auto r = ring({"x"}, {"x^2"});
    auto kos = koszul_complex(r, {variable(r.poly_ring(), 0)});
    EXPECT_TRUE(kos.algebra()->validate());
    auto k = Mod::free_rank_one(kos.algebra());
    EXPECT_EQ(k.dim(), 4u);
    EXPECT_EQ(k.homology_dim(0), 1u);
    EXPECT_EQ(k.homology_dim(1), 1u);
    auto r3 = ring({"x"}, {"x^3"});
    auto k3 = Mod::free_rank_one(koszul_complex(r3, {variable(r3.poly_ring(), 0)}).algebra());
    EXPECT_EQ(k3.homology_dim(0), 1u);
    EXPECT_EQ(k3.homology_dim(1), 1u);
    EXPECT_THROW(koszul_complex(r, {Poly<Fp>::constant(Fp{}, 1)}), PreconditionError);
}

TEST(Koszul, OnDefiningRelationsHasZeroDifferential) {
    // the relations vanish in R, so K = R (x) Lambda(2) with d = 0
    auto r = ring({"x", "y"}, {"x^2", "y^2"});
    auto kos = koszul_complex(r, r.spec().relations);
    auto k = Mod::free_rank_one(kos.algebra());
    EXPECT_EQ(k.dim(), 16u);
    EXPECT_TRUE(k.differential().is_zero());
    EXPECT_EQ(k.homology_dim(0), 4u);
    EXPECT_EQ(k.homology_dim(1), 8u);
    EXPECT_EQ(k.homology_dim(2), 4u);
}

TEST(Koszul, EmptyListGivesTheRing) {
    auto r = ring({"x"}, {"x^3"});
    auto kos = koszul_complex(r, {});
    EXPECT_EQ(kos.algebra()->dim(), r.dim());
}

TEST(Koszul, TensorDimensions) {
    auto r = ring({"x"}, {"x^2"});
    auto kos = koszul_algebra(r);
    auto tR = tensor_koszul(kos, free_module(r, 1));
    EXPECT_TRUE(tR.validate());
    EXPECT_EQ(tR.dim(), kos.algebra()->dim());
    auto tk = tensor_koszul(kos, cyclic_quotient(r, {variable(r.poly_ring(), 0)}));
    EXPECT_TRUE(tk.validate());
    EXPECT_EQ(tk.dim(), 2u);
    // t(k) = k (x) Lambda(1) has zero differential
    EXPECT_EQ(tk.homology_dim(0), 1u);
    EXPECT_EQ(tk.homology_dim(1), 1u);
    auto over_r = tensor_koszul_over_ring(kos, free_module(r, 1));
    EXPECT_TRUE(over_r.validate());
    EXPECT_EQ(over_r.dim(), 4u);
}

TEST(Koszul, RandomRingModulesTensorToValidModules) {
    auto r = ring({"x", "y"}, {"x^2", "y^3"});
    auto kos = koszul_algebra(r);
    for (std::uint64_t s = 1; s <= 6; ++s) {
        auto m = random_ring_module(r, s);
        ASSERT_TRUE(m.validate());
        auto t = tensor_koszul(kos, m);
        EXPECT_TRUE(t.validate()) << t.validate().describe();
        EXPECT_EQ(t.dim(), 4 * m.dim());
    }
}

TEST(Duals, ResidueFieldAndExteriorAlgebra) {
    Fp k;
    for (std::size_t c = 1; c <= 3; ++c) {
        auto a = lambda(c);
        auto kk = Mod::residue_field(a);
        ChainMap<Fp> id{kk, dual(kk, DualTwist::identity), 0, Matrix<Fp>::identity(k, 1)};
        EXPECT_TRUE(id.validate_isomorphism());
        auto w = exterior_dual_witness(a);
        EXPECT_TRUE(w.validate_isomorphism()) << w.validate_isomorphism().describe();
        EXPECT_EQ(w.source.min_degree(), -static_cast<int>(c));
    }
}

TEST(Duals, DualsAreModulesAndDoubleDualIsNatural) {
    for (std::size_t c = 1; c <= 3; ++c)
        for (const auto& m : sample_modules(lambda(c), 8, 300 + c))
            for (auto rho : {DualTwist::identity, DualTwist::antipode}) {
                auto d = dual(m, rho);
                EXPECT_TRUE(d.validate()) << d.validate().describe();
                for (int j = -4; j <= 4; ++j) EXPECT_EQ(d.homology_dim(-j), m.homology_dim(j));
                auto w = double_dual_witness(m, rho);
                EXPECT_TRUE(w.validate_isomorphism()) << w.validate_isomorphism().describe();
            }
}

TEST(Twist, WitnessIsIsomorphism) {
    for (std::size_t c = 1; c <= 3; ++c)
        for (const auto& m : sample_modules(lambda(c), 8, 500 + c)) {
            auto [t, w] = twist(m);
            EXPECT_TRUE(t.validate());
            EXPECT_TRUE(w.validate_isomorphism()) << w.validate_isomorphism().describe();
            EXPECT_TRUE(same_structure(twist_module(t), m));
        }
}

TEST(Diagonals, TensorOfFreeRankOne) {
    Fp k;
    auto a = lambda(1);
    auto l = Mod::free_rank_one(a);
    auto t = tensor_diagonal(l, l);
    ASSERT_TRUE(t.validate());
    EXPECT_EQ(t.dim(), 4u);
    // e(1 (x) 1) = e (x) 1 + 1 (x) e; index of (i, j) is 2 i + j
    EXPECT_EQ(t.action(1).column(0), (std::vector<Fp::value_type>{0, 1, 1, 0}));
    // e(e (x) 1) = -e (x) e, e(1 (x) e) = e (x) e
    EXPECT_EQ(t.action(1).column(2), (std::vector<Fp::value_type>{0, 0, 0, k.neg(1)}));
    EXPECT_EQ(t.action(1).column(1), (std::vector<Fp::value_type>{0, 0, 0, 1}));
}

TEST(Diagonals, DimensionsMultiplyAndModulesValidate) {
    auto a = lambda(2);
    auto ms = sample_modules(a, 5, 900);
    for (const auto& m : ms)
        for (const auto& n : ms) {
            auto t = tensor_diagonal(m, n);
            auto h = hom_diagonal(m, n);
            EXPECT_EQ(t.dim(), m.dim() * n.dim());
            EXPECT_EQ(h.dim(), m.dim() * n.dim());
            EXPECT_TRUE(t.validate()) << t.validate().describe();
            EXPECT_TRUE(h.validate()) << h.validate().describe();
        }
}

TEST(Diagonals, HomOutOfResidueField) {
    Fp k;
    auto a = lambda(2);
    auto kk = Mod::residue_field(a);
    for (const auto& n : sample_modules(a, 5, 77)) {
        auto h = hom_diagonal(kk, n);
        ChainMap<Fp> f{n, h, 0, Matrix<Fp>::identity(k, n.dim())};
        EXPECT_TRUE(f.validate_isomorphism()) << f.validate_isomorphism().describe();
    }
}

TEST(Phi, IsIsomorphismOnExamplesAndRandomPairs) {
    auto a1 = lambda(1);
    auto l = Mod::free_rank_one(a1);
    auto p = phi(l, l);
    EXPECT_EQ(p.matrix.rows(), 4u);
    EXPECT_TRUE(p.validate_isomorphism());
    for (std::size_t c = 1; c <= 3; ++c) {
        auto ms = sample_modules(lambda(c), 4, 1200 + 10 * c);
        for (const auto& m : ms)
            for (const auto& n : ms) EXPECT_TRUE(phi(m, n).validate_isomorphism()) << phi(m, n).validate_isomorphism().describe();
    }
}

TEST(Phi, KoszulSignedVariantIsNotLinear) {
    // with the extra (-1)^{|f||m|} the map stops commuting with the action
    auto l = Mod::free_rank_one(lambda(1));
    EXPECT_FALSE(phi(l, l, PhiSign::koszul_fm).validate());
    auto k = Mod::residue_field(lambda(1));
    EXPECT_TRUE(phi(k, k, PhiSign::koszul_fm).validate());
}

TEST(Splitting, RetractsOntoModule) {
    Fp k;
    for (std::size_t c = 1; c <= 2; ++c)
        for (const auto& m : sample_modules(lambda(c), 5, 2000 + c)) {
            auto s = splitting_maps(m);
            EXPECT_TRUE(s.iota.validate()) << s.iota.validate().describe();
            EXPECT_TRUE(s.pi.validate()) << s.pi.validate().describe();
            EXPECT_EQ(s.pi.matrix * s.iota.matrix, Matrix<Fp>::identity(k, m.dim()));
        }
}
