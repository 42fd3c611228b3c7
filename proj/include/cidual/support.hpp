#pragma once

// Cohomological supports over the exterior algebra via the BGG complex.
//
// For a DG module X over Lambda = Lambda(e_1..e_c), the complex S (x)_k X with
// S = k[chi_1..chi_c] (chi_i in degree -2) and differential
//     delta = sum_i chi_i (x) (e_i .) + 1 (x) d_X
// is a complex of free S-modules whose homology is Ext_Lambda(k, X), with
// H_{-n} matching Ext^n. Supports are represented by annihilator ideals of
// this homology, compared up to radical.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cidual/complexity.hpp"
#include "cidual/groebner.hpp"
#include "cidual/resolution.hpp"

namespace cidual {

/// k[chi_1..chi_c] with every variable in degree -2.
template <Field F>
PolyRing<F> cohomology_ring(const F& field, std::size_t c) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < c; ++i) names.push_back("chi" + std::to_string(i + 1));
    return PolyRing<F>::standard(field, std::move(names), -2);
}

namespace detail {

/// Exponent vectors of total degree `deg` in `c` variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t c, int deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    if (c == 0) {
        if (deg == 0) out.push_back(Monomial::one());
        return out;
    }
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == c) {
            m.exp[i] = static_cast<std::uint16_t>(left);
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.exp[i] = static_cast<std::uint16_t>(e);
            rec(i + 1, left - e);
        }
    };
    rec(0, deg);
    return out;
}

}  // namespace detail

template <Field F>
class BGGComplex {
public:
    using value_type = typename F::value_type;

    explicit BGGComplex(FiniteDGModule<F> x) : x_(std::move(x)) {
        const auto& alg = *x_.algebra();
        const F& k = x_.field();
        c_ = alg.generators().size();
        if (alg.dim() != (std::size_t{1} << c_) || !alg.hopf())
            throw PreconditionError("bgg: module must be over an exterior algebra");
        ring_ = cohomology_ring(k, c_);
        for (std::size_t j = 0; j < x_.dim(); ++j) {
            std::vector<Term<F>> terms;
            for (std::size_t r = 0; r < x_.dim(); ++r) {
                if (!k.is_zero(x_.differential()(r, j))) terms.push_back({Monomial::one(), static_cast<std::uint32_t>(r), x_.differential()(r, j)});
                for (std::size_t i = 0; i < c_; ++i) {
                    const auto& v = x_.action(alg.generators()[i])(r, j);
                    if (!k.is_zero(v)) terms.push_back({Monomial::variable(i), static_cast<std::uint32_t>(r), v});
                }
            }
            columns_.push_back(Poly<F>::from_terms(k, std::move(terms)));
        }
        auto r = check_square_zero();
        if (!r) throw Error("bgg: " + r.describe());
    }

    const FiniteDGModule<F>& module() const { return x_; }
    const PolyRing<F>& ring() const { return ring_; }
    std::size_t codim() const { return c_; }
    std::size_t rank() const { return x_.dim(); }
    /// delta(1 (x) x_j) as an element of S^{rank}.
    const std::vector<Poly<F>>& columns() const { return columns_; }

    /// delta of an arbitrary element of S^{rank}.
    Poly<F> apply(const Poly<F>& v) const {
        Poly<F> out(x_.field());
        for (const auto& t : v.terms()) out = out + columns_[t.comp].mul_term(t.mono, t.coeff);
        return out;
    }
    /// delta^2 = 0 on every basis vector.
    ValidationReport check_square_zero() const {
        for (std::size_t j = 0; j < columns_.size(); ++j)
            if (!apply(columns_[j]).is_zero()) return ValidationReport::fail("delta^2 = 0", "basis vector " + std::to_string(j));
        return ValidationReport::pass();
    }

    /// Homological degree of chi^a (x) x_j.
    int degree_of(const Monomial& a, std::size_t j) const { return x_.degree(j) - 2 * a.total_degree(); }

    /// Basis (monomial, j) of (S (x) X)_n.
    std::vector<std::pair<Monomial, std::size_t>> piece(int n) const {
        std::vector<std::pair<Monomial, std::size_t>> out;
        for (std::size_t j = 0; j < x_.dim(); ++j) {
            int gap = x_.degree(j) - n;
            if (gap < 0 || gap % 2) continue;
            for (const auto& a : detail::monomials_of_degree(c_, gap / 2)) out.emplace_back(a, j);
        }
        return out;
    }
    /// delta_n : (S (x) X)_n -> (S (x) X)_{n-1}.
    Matrix<F> differential(int n) const {
        const F& k = x_.field();
        auto src = piece(n), dst = piece(n - 1);
        Matrix<F> m(k, dst.size(), src.size());
        auto find = [&](const Monomial& a, std::size_t j) {
            for (std::size_t i = 0; i < dst.size(); ++i)
                if (dst[i].second == j && dst[i].first == a) return i;
            throw Error("bgg: degree bookkeeping");
        };
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& [a, j] = src[col];
            for (const auto& t : columns_[j].terms()) {
                auto row = find(a * t.mono, t.comp);
                m(row, col) = k.add(m(row, col), t.coeff);
            }
        }
        return m;
    }
    /// dim H_n by rank-nullity.
    std::size_t homology_dim(int n) const {
        Matrix<F> out = differential(n), in = differential(n + 1);
        return out.cols() - cidual::rank(out) - cidual::rank(in);
    }

private:
    FiniteDGModule<F> x_;
    std::size_t c_ = 0;
    PolyRing<F> ring_;
    std::vector<Poly<F>> columns_;
};

template <Field F>
BGGComplex<F> bgg(const FiniteDGModule<F>& x) {
    return BGGComplex<F>(x);
}

/// Ext_Lambda(k, X) = ker delta / im delta as a graded S-module: generators
/// (kernel generators of delta) and relations (syzygies of the generators
/// modulo the image).
template <Field F>
struct SModulePresentation {
    PolyRing<F> ring;
    std::size_t ambient_rank = 0;          ///< rank of S (x) X
    std::vector<Poly<F>> kernel;           ///< generators of ker delta in S^{ambient}
    std::vector<Poly<F>> image;            ///< columns of delta
    std::vector<int> generator_degrees;    ///< homological degree of each kernel generator
    GroebnerBasis<F> relations;            ///< in S^{kernel.size()}

    /// dim_k of the presented module in homological degree n, counted as
    /// standard monomials of the relation module.
    std::size_t hilbert(int n) const {
        std::size_t count = 0;
        for (std::size_t i = 0; i < generator_degrees.size(); ++i) {
            int gap = generator_degrees[i] - n;
            if (gap < 0 || gap % 2) continue;
            for (const auto& a : detail::monomials_of_degree(ring.nvars(), gap / 2)) {
                bool standard = std::none_of(relations.elements.begin(), relations.elements.end(), [&](const Poly<F>& g) {
                    return g.lead().comp == i && g.lead().mono.divides(a);
                });
                if (standard) ++count;
            }
        }
        return count;
    }
};

template <Field F>
SModulePresentation<F> ext_k_presentation(const BGGComplex<F>& b) {
    const F& k = b.module().field();
    SModulePresentation<F> p{b.ring(), b.rank(), {}, {}, {}, {}};
    const auto rank = static_cast<std::uint32_t>(b.rank());
    for (const auto& c : b.columns())
        if (!c.is_zero()) p.image.push_back(c);
    for (const auto& s : module_syzygies(k, b.columns(), rank))
        if (!s.is_zero()) p.kernel.push_back(s);
    if (b.columns().empty()) return p;
    for (const auto& g : p.kernel) {
        const auto& t = g.lead();
        p.generator_degrees.push_back(b.degree_of(t.mono, t.comp));
    }
    // relations: {s : sum s_i K_i in im delta}
    std::vector<Poly<F>> cols = p.kernel;
    cols.insert(cols.end(), p.image.begin(), p.image.end());
    std::vector<Poly<F>> rel;
    const auto r = static_cast<std::uint32_t>(p.kernel.size());
    for (const auto& s : module_syzygies(k, cols, rank)) {
        auto head = s.component_range(0, r);
        if (!head.is_zero()) rel.push_back(std::move(head));
    }
    p.relations = buchberger(rel);
    return p;
}

template <Field F>
SModulePresentation<F> ext_k_presentation(const FiniteDGModule<F>& x) {
    return ext_k_presentation(bgg(x));
}

/// V_Lambda(X) encoded by ann_S H(BGG(X)).
template <Field F>
struct SupportDescriptor {
    PolyRing<F> ring;
    std::vector<Poly<F>> annihilator;  ///< reduced Groebner basis

    bool is_empty() const { return annihilator.size() == 1 && annihilator[0].is_unit(); }
    bool is_everything() const { return annihilator.empty(); }
    std::string describe() const {
        if (is_everything()) return "(0)";
        std::string s = "(";
        for (std::size_t i = 0; i < annihilator.size(); ++i) s += (i ? ", " : "") + to_string(ring, annihilator[i]);
        return s + ")";
    }
};

template <Field F>
SupportDescriptor<F> support_annihilator(const BGGComplex<F>& b) {
    const F& k = b.module().field();
    SupportDescriptor<F> d{b.ring(), {}};
    if (b.rank() == 0) {
        d.annihilator = {Poly<F>::constant(k, k.one())};
        return d;
    }
    std::vector<Poly<F>> image;
    for (const auto& c : b.columns())
        if (!c.is_zero()) image.push_back(c);
    auto kernel = module_syzygies(k, b.columns(), static_cast<std::uint32_t>(b.rank()));
    if (kernel.empty()) {
        d.annihilator = {Poly<F>::constant(k, k.one())};
        return d;
    }
    d.annihilator = colon_annihilator(k, image, kernel, static_cast<std::uint32_t>(b.rank()));
    return d;
}

template <Field F>
SupportDescriptor<F> support_annihilator(const FiniteDGModule<F>& x) {
    return support_annihilator(bgg(x));
}

/// V(ann X) inside V(ann Y), i.e. ann Y inside sqrt(ann X).
template <Field F>
bool support_contained(const SupportDescriptor<F>& x, const SupportDescriptor<F>& y) {
    return std::all_of(y.annihilator.begin(), y.annihilator.end(),
                       [&](const Poly<F>& g) { return radical_membership(x.ring, g, x.annihilator); });
}

template <Field F>
bool support_contained(const FiniteDGModule<F>& x, const FiniteDGModule<F>& y) {
    return support_contained(support_annihilator(x), support_annihilator(y));
}

template <Field F>
bool support_equal(const SupportDescriptor<F>& x, const SupportDescriptor<F>& y) {
    return support_contained(x, y) && support_contained(y, x);
}

template <Field F>
bool support_equal(const FiniteDGModule<F>& x, const FiniteDGModule<F>& y) {
    return support_equal(support_annihilator(x), support_annihilator(y));
}

/// X lies in the thick subcategory generated by Y. Over the exterior algebra
/// this is decided by support containment, which is what is computed.
template <Field F>
bool thick_membership(const FiniteDGModule<F>& x, const FiniteDGModule<F>& y) {
    return support_contained(x, y);
}

/// dim_k Ext^n_Lambda(k, X) = dim H_{-n}(BGG(X)), n = 0..n_max.
template <Field F>
std::vector<std::size_t> bgg_ext_dims(const BGGComplex<F>& b, int n_max) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(b.homology_dim(-n));
    return out;
}

template <Field F>
ComplexityEstimate lambda_complexity(const FiniteDGModule<F>& x, int n_max = kDefaultNMax) {
    return complexity_fit(bgg_ext_dims(bgg(x), n_max));
}

/// Growth of the Betti numbers of X over Lambda, by internal degree of the
/// generators; an independent route to lambda_complexity.
template <Field F>
ComplexityEstimate lambda_betti_complexity(const FiniteDGModule<F>& x, int n_max = kDefaultNMax) {
    if (x.dim() == 0) return complexity_fit(std::vector<std::size_t>(n_max + 1, 0));
    const int lo = x.min_degree();
    auto res = semifree_resolution(x, lo + n_max);
    if (res.budget_exceeded()) throw BudgetExceeded("lambda_betti_complexity: resolution budget exceeded");
    return complexity_fit(res.betti_by_degree(lo, lo + n_max));
}

/// cx_Lambda(X, Y) from dim Ext^n_Lambda(X, Y).
template <Field F>
ComplexityEstimate lambda_pair_complexity(const FiniteDGModule<F>& x, const FiniteDGModule<F>& y, int n_max = kDefaultNMax) {
    return complexity_fit(ext_table(x, y, n_max).dims);
}

}  // namespace cidual
