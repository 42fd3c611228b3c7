#pragma once

// Buchberger's algorithm for ideals and submodules of free modules, with the
// derived operations the support computations need: syzygies, colon ideals,
// annihilators of subquotients, and radical membership.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cidual/matrix.hpp"
#include "cidual/polynomial.hpp"

namespace cidual {

template <Field F>
struct GroebnerBasis {
    std::vector<Poly<F>> elements;  ///< reduced, monic, sorted by decreasing leading term
    static constexpr const char* order = "degrevlex, position over term";

    bool is_unit_ideal() const {
        return std::any_of(elements.begin(), elements.end(), [](const Poly<F>& g) { return g.is_unit(); });
    }
    bool is_zero() const { return elements.empty(); }
};

/// Remainder of f on division by G; zero iff f lies in the submodule G generates
/// when G is a Groebner basis.
template <Field F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& basis) {
    const F& k = f.field();
    Poly<F> p = f;
    std::vector<Term<F>> remainder;
    while (!p.is_zero()) {
        const Term<F> lt = p.lead();
        const Poly<F>* divisor = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const auto& gl = g.lead();
            if (gl.comp == lt.comp && gl.mono.divides(lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            const auto& gl = divisor->lead();
            auto c = k.div(lt.coeff, gl.coeff);
            p = p - divisor->mul_term(gl.mono.quotient_of(lt.mono), c);
        } else {
            remainder.push_back(lt);
            p = p - Poly<F>::term(k, lt.mono, lt.coeff, lt.comp);
        }
    }
    return Poly<F>::from_terms(k, std::move(remainder));
}

template <Field F>
Poly<F> normal_form(const Poly<F>& f, const GroebnerBasis<F>& g) {
    return normal_form(f, g.elements);
}

namespace detail {

template <Field F>
Poly<F> s_polynomial(const Poly<F>& f, const Poly<F>& g) {
    const auto& a = f.lead();
    const auto& b = g.lead();
    Monomial l = a.mono.lcm(b.mono);
    const F& k = f.field();
    return f.mul_term(a.mono.quotient_of(l), k.inv(a.coeff)) - g.mul_term(b.mono.quotient_of(l), k.inv(b.coeff));
}

}  // namespace detail

/// Reduced Groebner basis of the submodule generated by `gens`.
template <Field F>
GroebnerBasis<F> buchberger(const std::vector<Poly<F>>& gens) {
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::uint32_t comp;
    };
    std::vector<Poly<F>> basis;
    std::vector<Pair> pairs;

    auto add = [&](Poly<F> h) {
        h = h.monic();
        const auto& hl = h.lead();
        // Gebauer-Moeller B criterion: drop (i,j) when lm(h) strictly covers their lcm
        std::erase_if(pairs, [&](const Pair& p) {
            if (p.comp != hl.comp || !hl.mono.divides(p.lcm)) return false;
            Monomial li = basis[p.i].lead().mono.lcm(hl.mono);
            Monomial lj = basis[p.j].lead().mono.lcm(hl.mono);
            return !(li == p.lcm) && !(lj == p.lcm);
        });
        const std::size_t n = basis.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& gl = basis[i].lead();
            if (gl.comp != hl.comp) continue;
            // product criterion, valid for ring elements only
            if (basis[i].is_scalar() && h.is_scalar() && gl.mono.coprime(hl.mono)) continue;
            pairs.push_back({i, n, gl.mono.lcm(hl.mono), hl.comp});
        }
        basis.push_back(std::move(h));
    };

    for (const auto& g : gens) {
        auto r = normal_form(g, basis);
        if (!r.is_zero()) add(std::move(r));
    }
    while (!pairs.empty()) {
        // normal selection strategy: smallest lcm first
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.comp != b.comp) return a.comp > b.comp;
            return compare_degrevlex(a.lcm, b.lcm) < 0;
        });
        Pair p = *it;
        pairs.erase(it);
        auto r = normal_form(detail::s_polynomial(basis[p.i], basis[p.j]), basis);
        if (!r.is_zero()) add(std::move(r));
    }

    // minimalize, then interreduce
    std::vector<Poly<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& li = basis[i].lead();
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& lj = basis[j].lead();
            if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
            // equal leading monomials: keep the lower index only
            redundant = !(lj.mono == li.mono) || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    GroebnerBasis<F> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const auto& lt = minimal[i].lead();
        Poly<F> tail = minimal[i] - Poly<F>::term(minimal[i].field(), lt.mono, lt.coeff, lt.comp);
        out.elements.push_back((Poly<F>::term(minimal[i].field(), lt.mono, lt.coeff, lt.comp) +
                                normal_form(tail, others))
                                   .monic());
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [](const Poly<F>& a, const Poly<F>& b) { return compare_terms(a.lead(), b.lead()) > 0; });
    return out;
}

template <Field F>
bool in_submodule(const Poly<F>& f, const GroebnerBasis<F>& g) {
    return normal_form(f, g).is_zero();
}

/// Generators of {s in S^m : sum_j s_j gens_j = 0} for gens in a free module of
/// rank `rank`; computed by eliminating the first `rank` components from
/// the graph submodule generated by (gens_j, e_j).
template <Field F>
std::vector<Poly<F>> module_syzygies(const F& field, const std::vector<Poly<F>>& gens, std::uint32_t rank) {
    std::vector<Poly<F>> graph;
    graph.reserve(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!gens[j].is_zero() && gens[j].max_component() >= rank)
            throw PreconditionError("module_syzygies: generator outside the declared free module");
        graph.push_back(gens[j] + Poly<F>::basis_vector(field, rank + static_cast<std::uint32_t>(j)));
    }
    auto gb = buchberger(graph);
    std::vector<Poly<F>> syz;
    for (const auto& g : gb.elements)
        if (g.lead().comp >= rank) syz.push_back(g.component_range(rank, rank + static_cast<std::uint32_t>(gens.size())));
    return syz;
}

/// (image : g) = {s : s g in image}.
template <Field F>
std::vector<Poly<F>> colon(const F& field, const std::vector<Poly<F>>& image, const Poly<F>& g, std::uint32_t rank) {
    std::vector<Poly<F>> cols;
    cols.push_back(g);
    cols.insert(cols.end(), image.begin(), image.end());
    std::vector<Poly<F>> out;
    for (const auto& s : module_syzygies(field, cols, rank)) {
        auto c = s.component(0);
        if (!c.is_zero()) out.push_back(std::move(c));
    }
    return buchberger(out).elements;
}

template <Field F>
std::vector<Poly<F>> intersect_ideals(const F& field, const std::vector<Poly<F>>& a, const std::vector<Poly<F>>& b) {
    std::vector<Poly<F>> cols;
    cols.push_back(Poly<F>::basis_vector(field, 0) + Poly<F>::basis_vector(field, 1));
    for (const auto& f : a) cols.push_back(f);
    for (const auto& f : b) cols.push_back(f.shift_components(1));
    std::vector<Poly<F>> out;
    for (const auto& s : module_syzygies(field, cols, 2)) {
        auto c = s.component(0);
        if (!c.is_zero()) out.push_back(std::move(c));
    }
    return buchberger(out).elements;
}

/// ann_S(ker/im) for submodules im <= ker of a free module of rank `rank`,
/// intersecting the colon ideals (im : g) over the generators g of ker.
template <Field F>
std::vector<Poly<F>> colon_annihilator(const F& field, const std::vector<Poly<F>>& image,
                                       const std::vector<Poly<F>>& kernel_gens, std::uint32_t rank) {
    auto kgb = buchberger(kernel_gens);
    for (const auto& f : image)
        if (!in_submodule(f, kgb))
            throw PreconditionError("colon_annihilator: image is not contained in the kernel submodule");
    std::vector<Poly<F>> ann{Poly<F>::constant(field, field.one())};
    for (const auto& g : kernel_gens) {
        if (g.is_zero()) continue;
        auto c = colon(field, image, g, rank);
        ann = intersect_ideals(field, ann, c);
        if (ann.empty()) break;
    }
    return buchberger(ann).elements;
}

/// g in sqrt(I), decided by 1 in I S[t] + (1 - t g).
template <Field F>
bool radical_membership(const PolyRing<F>& ring, const Poly<F>& g, const std::vector<Poly<F>>& ideal) {
    if (g.is_zero()) return true;
    if (ring.nvars() + 1 > kMaxVariables) throw PreconditionError("radical_membership: no room for the auxiliary variable");
    const F& k = ring.field;
    std::vector<Poly<F>> gens = ideal;
    Poly<F> t = Poly<F>::term(k, Monomial::variable(ring.nvars()), k.one());
    gens.push_back(Poly<F>::constant(k, k.one()) - t * g);
    return buchberger(gens).is_unit_ideal();
}

namespace detail {

/// Monomials of weighted degree `target`; every variable degree must have the
/// sign of `target` (or target = 0).
template <Field F>
std::vector<Monomial> monomials_with_degree(const PolyRing<F>& ring, int target) {
    std::vector<Monomial> out;
    const std::size_t n = ring.nvars();
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            if (left == 0) out.push_back(m);
            return;
        }
        const int d = ring.degrees[i];
        for (int e = 0; (left - e * d) * d >= 0; ++e) {
            m.exp[i] = static_cast<std::uint16_t>(e);
            rec(i + 1, left - e * d);
            if (left - e * d == 0) break;
        }
        m.exp[i] = 0;
    };
    rec(0, target);
    return out;
}

/// dim_k of the degree-d part of the submodule generated by `gens` inside the
/// graded free module with basis degrees `basis_degrees`.
template <Field F>
std::size_t graded_span_dim(const PolyRing<F>& ring, const std::vector<int>& basis_degrees, const std::vector<Poly<F>>& gens, int d) {
    const F& k = ring.field;
    std::vector<std::pair<Monomial, std::uint32_t>> basis;
    for (std::uint32_t i = 0; i < basis_degrees.size(); ++i)
        for (const auto& mu : monomials_with_degree(ring, d - basis_degrees[i])) basis.emplace_back(mu, i);
    if (basis.empty()) return 0;
    std::vector<std::vector<typename F::value_type>> cols;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const int gd = basis_degrees.at(g.lead().comp) + ring.degree(g.lead().mono);
        for (const auto& t : g.terms())
            if (basis_degrees.at(t.comp) + ring.degree(t.mono) != gd)
                throw PreconditionError("hilbert_function: generators must be homogeneous");
        for (const auto& mu : monomials_with_degree(ring, d - gd)) {
            std::vector<typename F::value_type> v(basis.size(), k.zero());
            for (const auto& t : g.terms()) {
                auto key = std::make_pair(mu * t.mono, t.comp);
                auto it = std::find(basis.begin(), basis.end(), key);
                v[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
            }
            cols.push_back(std::move(v));
        }
    }
    Matrix<F> m(k, basis.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, std::span<const typename F::value_type>(cols[j]));
    return cols.empty() ? 0 : rank(m);
}

}  // namespace detail

/// dim_k H_d for H = ker/im, both given by homogeneous generators inside a
/// graded free module over `ring`, for each d in `degrees`; exact rank-nullity
/// degree by degree.
template <Field F>
std::vector<std::size_t> hilbert_function(const PolyRing<F>& ring, const std::vector<int>& basis_degrees,
                                          const std::vector<Poly<F>>& kernel_gens, const std::vector<Poly<F>>& image,
                                          const std::vector<int>& degrees) {
    for (int d : ring.degrees)
        if (d * ring.degrees.front() < 0) throw PreconditionError("hilbert_function: variable degrees must share a sign");
    std::vector<std::size_t> out;
    for (int d : degrees) {
        std::size_t z = detail::graded_span_dim(ring, basis_degrees, kernel_gens, d);
        std::size_t b = detail::graded_span_dim(ring, basis_degrees, image, d);
        if (b > z) throw PreconditionError("hilbert_function: image is larger than the kernel");
        out.push_back(z - b);
    }
    return out;
}

}  // namespace cidual
