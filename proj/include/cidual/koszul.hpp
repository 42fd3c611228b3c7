#pragma once

// Koszul complexes over an artinian ring R as DG algebras, and the functor
// M -> M (x)_R K^R into DG modules over K^R.

#include <bit>
#include <memory>
#include <string>
#include <vector>

#include "cidual/ring.hpp"

namespace cidual {

/// Koszul DG algebra R<e_1..e_m | d e_j = y_j>, basis r e_S with index
/// position(S) * dim R + r, so basis vectors come sorted by degree.
template <Field F>
class KoszulAlgebra {
public:
    using value_type = typename F::value_type;

    KoszulAlgebra(const QuotientRing<F>& ring, std::vector<Poly<F>> elements) : ring_(ring), elements_(std::move(elements)) {
        const F& k = ring.field();
        const std::size_t m = elements_.size();
        const std::size_t r = ring.dim();
        for (std::size_t j = 0; j < m; ++j) {
            auto c = ring.coordinates(elements_[j]);
            if (!k.is_zero(c[0])) throw PreconditionError("koszul_complex: element " + std::to_string(j + 1) + " is not in the maximal ideal");
            coords_.push_back(std::move(c));
        }
        masks_ = exterior_masks(m);
        mask_pos_.assign(masks_.size(), 0);
        for (std::size_t i = 0; i < masks_.size(); ++i) mask_pos_[masks_[i]] = i;
        const std::size_t n = r * masks_.size();
        std::vector<int> degrees(n);
        std::vector<std::string> labels(n);
        for (std::size_t s = 0; s < masks_.size(); ++s)
            for (std::size_t a = 0; a < r; ++a) {
                degrees[s * r + a] = std::popcount(masks_[s]);
                std::string lr = ring.algebra()->labels()[a];
                labels[s * r + a] = masks_[s] == 0 ? lr : (lr == "1" ? "" : lr + "*") + exterior_label(masks_[s]);
            }
        const auto& R = *ring.algebra();
        std::vector<Matrix<F>> mult(n, Matrix<F>(k, n, n));
        for (std::size_t s = 0; s < masks_.size(); ++s)
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t t = 0; t < masks_.size(); ++t) {
                    if (masks_[s] & masks_[t]) continue;
                    auto sg = k.from_int(exterior_sign(masks_[s], masks_[t]));
                    std::size_t u = mask_pos_[masks_[s] | masks_[t]];
                    for (std::size_t b = 0; b < r; ++b) {
                        auto ab = R.product(a, b);
                        for (std::size_t c = 0; c < r; ++c)
                            if (!k.is_zero(ab[c])) mult[s * r + a](u * r + c, t * r + b) = k.mul(sg, ab[c]);
                    }
                }
        Matrix<F> d(k, n, n);
        for (std::size_t s = 0; s < masks_.size(); ++s) {
            int pos = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (!(masks_[s] & (1u << j))) continue;
                auto sg = sign(k, pos++);
                std::size_t u = mask_pos_[masks_[s] & ~(1u << j)];
                Matrix<F> yj = R.left_mult(std::span<const value_type>(coords_[j]));
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t c = 0; c < r; ++c)
                        if (!k.is_zero(yj(c, a))) d(u * r + c, s * r + a) = k.add(d(u * r + c, s * r + a), k.mul(sg, yj(c, a)));
            }
        }
        std::vector<std::size_t> gens;
        for (std::size_t v : R.generators()) gens.push_back(v);
        for (std::size_t j = 0; j < m; ++j) gens.push_back(mask_pos_[1u << j] * r);
        algebra_ = std::make_shared<const FiniteDGAlgebra<F>>(k, std::move(degrees), std::move(labels), std::move(mult), std::move(d), 0,
                                                             std::nullopt, std::move(gens));
        // R -> K: r maps to r e_{}
        inclusion_ = Matrix<F>(k, n, r);
        for (std::size_t a = 0; a < r; ++a) inclusion_(a, a) = k.one();
    }

    const AlgebraPtr<F>& algebra() const { return algebra_; }
    const QuotientRing<F>& ring() const { return ring_; }
    std::size_t rank() const { return elements_.size(); }
    const std::vector<std::uint32_t>& masks() const { return masks_; }
    std::size_t mask_position(std::uint32_t mask) const { return mask_pos_[mask]; }
    /// Matrix of the algebra map R -> K.
    const Matrix<F>& inclusion() const { return inclusion_; }
    const std::vector<value_type>& element_coordinates(std::size_t j) const { return coords_[j]; }

private:
    QuotientRing<F> ring_;
    std::vector<Poly<F>> elements_;
    std::vector<std::vector<value_type>> coords_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::size_t> mask_pos_;
    AlgebraPtr<F> algebra_;
    Matrix<F> inclusion_;
};

template <Field F>
KoszulAlgebra<F> koszul_complex(const QuotientRing<F>& ring, std::vector<Poly<F>> elements) {
    return KoszulAlgebra<F>(ring, std::move(elements));
}

/// K^R: the Koszul complex on the variables, a minimal generating set of m.
template <Field F>
KoszulAlgebra<F> koszul_algebra(const QuotientRing<F>& ring) {
    std::vector<Poly<F>> vars;
    for (std::size_t v = 0; v < ring.embedding_dimension(); ++v) vars.push_back(variable(ring.poly_ring(), v));
    return KoszulAlgebra<F>(ring, std::move(vars));
}

/// t(M) = M (x)_R K with basis m (x) e_S at index position(S) * dim M + m;
/// (r e_T)(m (x) e_S) = (-1)^{|T||m|} rm (x) e_T e_S and
/// d(m (x) e_S) = dm (x) e_S + (-1)^{|m|} sum_j (-1)^{j-1} y_{s_j} m (x) e_{S - s_j}.
template <Field F>
FiniteDGModule<F> tensor_koszul(const KoszulAlgebra<F>& kos, const FiniteDGModule<F>& m) {
    using V = typename F::value_type;
    const F& k = m.field();
    if (m.algebra() != kos.ring().algebra()) throw PreconditionError("tensor_koszul: module is not over the Koszul complex's ring");
    const auto& masks = kos.masks();
    const std::size_t dm = m.dim(), r = kos.ring().dim(), ns = masks.size();
    const std::size_t n = dm * ns;
    std::vector<int> degrees(n);
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t i = 0; i < dm; ++i) degrees[s * dm + i] = m.degree(i) + std::popcount(masks[s]);
    const auto& K = *kos.algebra();
    std::vector<Matrix<F>> act(K.dim(), Matrix<F>(k, n, n));
    for (std::size_t t = 0; t < ns; ++t)
        for (std::size_t a = 0; a < r; ++a) {
            Matrix<F>& out = act[t * r + a];
            const Matrix<F>& ra = m.action(a);
            for (std::size_t s = 0; s < ns; ++s) {
                if (masks[t] & masks[s]) continue;
                std::size_t u = kos.mask_position(masks[t] | masks[s]);
                const int es = exterior_sign(masks[t], masks[s]);
                for (std::size_t i = 0; i < dm; ++i) {
                    V sg = k.from_int(es * sign_int(static_cast<long long>(std::popcount(masks[t])) * m.degree(i)));
                    for (std::size_t j = 0; j < dm; ++j)
                        if (!k.is_zero(ra(j, i))) out(u * dm + j, s * dm + i) = k.mul(sg, ra(j, i));
                }
            }
        }
    Matrix<F> d(k, n, n);
    for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dm; ++j) d(s * dm + j, s * dm + i) = m.differential()(j, i);
        int pos = 0;
        for (std::size_t jv = 0; jv < kos.rank(); ++jv) {
            if (!(masks[s] & (1u << jv))) continue;
            std::size_t u = kos.mask_position(masks[s] & ~(1u << jv));
            Matrix<F> y = m.action_of(std::span<const V>(kos.element_coordinates(jv)));
            for (std::size_t i = 0; i < dm; ++i) {
                V sg = sign(k, pos + m.degree(i));
                for (std::size_t j = 0; j < dm; ++j)
                    if (!k.is_zero(y(j, i))) d(u * dm + j, s * dm + i) = k.add(d(u * dm + j, s * dm + i), k.mul(sg, y(j, i)));
            }
            ++pos;
        }
    }
    return FiniteDGModule<F>(kos.algebra(), std::move(degrees), std::move(d), std::move(act));
}

/// t(M) viewed as a complex of R-modules.
template <Field F>
FiniteDGModule<F> tensor_koszul_over_ring(const KoszulAlgebra<F>& kos, const FiniteDGModule<F>& m) {
    return restrict_scalars(tensor_koszul(kos, m), kos.ring().algebra(), kos.inclusion());
}

}  // namespace cidual
