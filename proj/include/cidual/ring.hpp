#pragma once

// Artinian graded complete intersections R = k[x_1..x_n]/(f_1..f_n) realized
// as finite-dimensional algebras concentrated in homological degree 0, and
// finitely generated R-modules built from presentations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cidual/dg_module.hpp"
#include "cidual/groebner.hpp"

namespace cidual {

template <Field F>
struct RingSpec {
    PolyRing<F> ring;
    std::vector<Poly<F>> relations;

    static RingSpec parse(const F& field, std::vector<std::string> variables, const std::vector<std::string>& relations) {
        RingSpec s{PolyRing<F>::standard(field, std::move(variables)), {}};
        for (const auto& r : relations) s.relations.push_back(parse_poly(s.ring, r));
        return s;
    }
    std::vector<std::string> relation_strings() const {
        std::vector<std::string> out;
        for (const auto& r : relations) out.push_back(to_string(ring, r));
        return out;
    }
    bool operator==(const RingSpec& o) const {
        return ring.field == o.ring.field && ring.names == o.ring.names && ring.degrees == o.ring.degrees && relations == o.relations;
    }
};

template <Field F>
class QuotientRing {
public:
    using value_type = typename F::value_type;

    /// Validates the complete-intersection hypotheses and builds the
    /// multiplication table on the standard monomials.
    explicit QuotientRing(RingSpec<F> spec) : spec_(std::move(spec)) {
        const auto& ring = spec_.ring;
        const F& k = ring.field;
        if (spec_.relations.size() != ring.nvars())
            throw PreconditionError("RingSpec: a complete intersection of this kind needs as many relations as variables (c = n)");
        for (std::size_t i = 0; i < spec_.relations.size(); ++i) {
            const auto& f = spec_.relations[i];
            const std::string where = "relation " + std::to_string(i + 1);
            if (f.is_zero()) throw PreconditionError("RingSpec: " + where + " is zero");
            if (!f.is_scalar()) throw PreconditionError("RingSpec: " + where + " is not a ring element");
            if (!f.is_homogeneous(ring)) throw PreconditionError("RingSpec: " + where + " is not homogeneous");
            if (ring.degree(f.lead().mono) < 2) throw PreconditionError("RingSpec: " + where + " has a linear or constant part");
        }
        gb_ = buchberger(spec_.relations);
        std::vector<std::uint16_t> bound(ring.nvars(), 0);
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
            for (const auto& g : gb_.elements) {
                const auto& m = g.lead().mono;
                if (m.exp[v] > 0 && m.total_degree() == m.exp[v] && (bound[v] == 0 || m.exp[v] < bound[v])) bound[v] = m.exp[v];
            }
            if (bound[v] == 0)
                throw PreconditionError("RingSpec: quotient is not artinian (no pure power of " + ring.names[v] + " among leading terms)");
        }
        // standard monomials inside the box cut out by the pure powers
        Monomial m;
        while (true) {
            if (is_standard(m)) basis_.push_back(m);
            std::size_t v = 0;
            while (v < ring.nvars() && ++m.exp[v] == bound[v]) m.exp[v++] = 0;
            if (v == ring.nvars()) break;
        }
        std::stable_sort(basis_.begin(), basis_.end(), [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) < 0; });
        const std::size_t n = basis_.size();
        std::vector<Matrix<F>> mult(n, Matrix<F>(k, n, n));
        std::vector<std::string> labels;
        for (std::size_t a = 0; a < n; ++a) {
            labels.push_back(monomial_to_string(ring, basis_[a]));
            for (std::size_t b = 0; b < n; ++b) {
                auto c = coordinates(Poly<F>::term(k, basis_[a] * basis_[b], k.one()));
                mult[a].set_column(b, std::span<const value_type>(c));
            }
        }
        std::vector<std::size_t> gens;
        for (std::size_t v = 0; v < ring.nvars(); ++v) gens.push_back(index_of(Monomial::variable(v)));
        algebra_ = std::make_shared<const FiniteDGAlgebra<F>>(k, std::vector<int>(n, 0), std::move(labels), std::move(mult),
                                                             Matrix<F>(k, n, n), 0, std::nullopt, std::move(gens));
    }

    const RingSpec<F>& spec() const { return spec_; }
    const PolyRing<F>& poly_ring() const { return spec_.ring; }
    const F& field() const { return spec_.ring.field; }
    const AlgebraPtr<F>& algebra() const { return algebra_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const GroebnerBasis<F>& groebner() const { return gb_; }
    std::size_t embedding_dimension() const { return spec_.ring.nvars(); }
    std::size_t codimension() const { return spec_.relations.size(); }
    /// Top internal degree (the socle degree of the Gorenstein ring).
    int socle_degree() const { return spec_.ring.degree(basis_.back()); }

    std::size_t index_of(const Monomial& m) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == m) return i;
        throw PreconditionError("QuotientRing: monomial is not standard");
    }
    /// Coordinates of the residue class of p.
    std::vector<value_type> coordinates(const Poly<F>& p) const {
        const F& k = field();
        std::vector<value_type> out(dim(), k.zero());
        const Poly<F> r = normal_form(p, gb_);
        for (const auto& t : r.terms()) out[index_of(t.mono)] = k.add(out[index_of(t.mono)], t.coeff);
        return out;
    }
    Poly<F> element(std::span<const value_type> c) const {
        Poly<F> p(field());
        for (std::size_t i = 0; i < dim(); ++i) p = p + Poly<F>::term(field(), basis_[i], c[i]);
        return p;
    }
    std::vector<value_type> variable_coordinates(std::size_t v) const {
        return coordinates(variable(spec_.ring, v));
    }

private:
    bool is_standard(const Monomial& m) const {
        return std::none_of(gb_.elements.begin(), gb_.elements.end(), [&](const Poly<F>& g) { return g.lead().mono.divides(m); });
    }

    RingSpec<F> spec_;
    GroebnerBasis<F> gb_;
    std::vector<Monomial> basis_;
    AlgebraPtr<F> algebra_;
};

/// A finitely generated R-module given as the cokernel of a presentation
/// matrix (rows x cols, entries in R).
template <Field F>
struct ModulePresentation {
    std::size_t rows = 0;
    std::vector<std::vector<Poly<F>>> entries;  ///< row-major

    std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
};

/// R^{rank} in homological degree `deg`.
template <Field F>
FiniteDGModule<F> free_module(const QuotientRing<F>& r, std::size_t rank, int deg = 0) {
    auto one = FiniteDGModule<F>::free_rank_one(r.algebra());
    FiniteDGModule<F> out = FiniteDGModule<F>::zero(r.algebra());
    for (std::size_t i = 0; i < rank; ++i) out = direct_sum(out, one);
    return deg == 0 ? out : suspension(out, deg);
}

/// coker(R^cols -> R^rows).
template <Field F>
FiniteDGModule<F> cokernel(const QuotientRing<F>& r, const ModulePresentation<F>& p) {
    const F& k = r.field();
    const std::size_t n = r.dim();
    for (const auto& row : p.entries)
        if (row.size() != p.cols()) throw PreconditionError("cokernel: ragged presentation matrix");
    if (p.entries.size() != p.rows) throw PreconditionError("cokernel: row count mismatch");
    FiniteDGModule<F> free = free_module(r, p.rows);
    Matrix<F> gens(k, n * p.rows, p.cols());
    for (std::size_t j = 0; j < p.cols(); ++j)
        for (std::size_t i = 0; i < p.rows; ++i) {
            auto c = r.coordinates(p.entries[i][j]);
            for (std::size_t b = 0; b < n; ++b) gens(i * n + b, j) = c[b];
        }
    return quotient(free, gens).module;
}

template <Field F>
FiniteDGModule<F> cyclic_quotient(const QuotientRing<F>& r, const std::vector<Poly<F>>& ideal) {
    ModulePresentation<F> p{1, {ideal}};
    if (ideal.empty()) p.entries[0].push_back(Poly<F>(r.field()));
    return cokernel(r, p);
}

/// The ideal generated by `gens`, as a submodule of R.
template <Field F>
FiniteDGModule<F> ideal_module(const QuotientRing<F>& r, const std::vector<Poly<F>>& gens) {
    const F& k = r.field();
    Matrix<F> g(k, r.dim(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        auto c = r.coordinates(gens[j]);
        g.set_column(j, std::span<const typename F::value_type>(c));
    }
    return submodule(FiniteDGModule<F>::free_rank_one(r.algebra()), g).module;
}

template <Field F>
FiniteDGModule<F> maximal_ideal(const QuotientRing<F>& r) {
    std::vector<Poly<F>> vars;
    for (std::size_t v = 0; v < r.embedding_dimension(); ++v) vars.push_back(variable(r.poly_ring(), v));
    return ideal_module(r, vars);
}

}  // namespace cidual
