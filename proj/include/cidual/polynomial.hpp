#pragma once

// Sparse polynomials and elements of graded free modules over k[x_1..x_n].
//
// A Poly is a sum of terms c * x^a * e_j. Ring elements live entirely in
// component 0. Terms are kept sorted by the position-over-term order with
// degrevlex on monomials: lower component index first, then larger monomial.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cidual/error.hpp"
#include "cidual/field.hpp"

namespace cidual {

inline constexpr std::size_t kMaxVariables = 8;

struct Monomial {
    std::array<std::uint16_t, kMaxVariables> exp{};

    static Monomial one() { return {}; }
    static Monomial variable(std::size_t i, std::uint16_t power = 1) {
        Monomial m;
        m.exp[i] = power;
        return m;
    }

    int total_degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool is_one() const { return total_degree() == 0; }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exp[i] > other.exp[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = exp[i] + o.exp[i];
        return m;
    }
    /// Requires divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = o.exp[i] - exp[i];
        return m;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = std::max(exp[i], o.exp[i]);
        return m;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exp[i] && o.exp[i]) return false;
        return true;
    }
    bool operator==(const Monomial&) const = default;
};

/// Graded reverse lexicographic comparison: negative, zero or positive.
inline int compare_degrevlex(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = kMaxVariables; i-- > 0;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    }
    return 0;
}

/// Variables, their degrees, and the coefficient field.
template <Field F>
struct PolyRing {
    F field{};
    std::vector<std::string> names;
    std::vector<int> degrees;

    PolyRing() = default;
    PolyRing(F k, std::vector<std::string> vars, std::vector<int> degs)
        : field(std::move(k)), names(std::move(vars)), degrees(std::move(degs)) {
        if (names.size() > kMaxVariables) throw PreconditionError("PolyRing: too many variables");
        if (degrees.size() != names.size()) throw PreconditionError("PolyRing: one degree per variable required");
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) throw PreconditionError("PolyRing: empty variable name");
            if (degrees[i] == 0) throw PreconditionError("PolyRing: variable degrees must be nonzero");
            for (std::size_t j = 0; j < i; ++j)
                if (names[i] == names[j]) throw PreconditionError("PolyRing: duplicate variable " + names[i]);
        }
    }
    /// Standard graded ring, every variable of degree `deg`.
    static PolyRing standard(F k, std::vector<std::string> vars, int deg = 1) {
        std::vector<int> degs(vars.size(), deg);
        return PolyRing(std::move(k), std::move(vars), std::move(degs));
    }

    std::size_t nvars() const { return names.size(); }
    int degree(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < names.size(); ++i) d += degrees[i] * m.exp[i];
        return d;
    }
    /// Same ring with one extra variable appended.
    PolyRing with_variable(std::string name, int deg) const {
        auto vars = names;
        auto degs = degrees;
        vars.push_back(std::move(name));
        degs.push_back(deg);
        return PolyRing(field, std::move(vars), std::move(degs));
    }
};

template <Field F>
struct Term {
    Monomial mono;
    std::uint32_t comp = 0;
    typename F::value_type coeff;
};

/// Position-over-term order; positive when a is larger.
template <Field F>
int compare_terms(const Term<F>& a, const Term<F>& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return compare_degrevlex(a.mono, b.mono);
}

template <Field F>
class Poly {
public:
    using value_type = typename F::value_type;

    Poly() = default;
    explicit Poly(F field) : field_(std::move(field)) {}

    static Poly constant(const F& field, const value_type& c, std::uint32_t comp = 0) {
        return term(field, Monomial::one(), c, comp);
    }
    static Poly term(const F& field, const Monomial& m, const value_type& c, std::uint32_t comp = 0) {
        Poly p(field);
        if (!field.is_zero(c)) p.terms_.push_back({m, comp, c});
        return p;
    }
    static Poly basis_vector(const F& field, std::uint32_t comp) {
        return term(field, Monomial::one(), field.one(), comp);
    }
    /// From unsorted terms; merges duplicates and drops zeros.
    static Poly from_terms(const F& field, std::vector<Term<F>> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term<F>& a, const Term<F>& b) { return compare_terms(a, b) > 0; });
        Poly p(field);
        for (auto& t : ts) {
            if (!p.terms_.empty() && compare_terms(p.terms_.back(), t) == 0) {
                p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
                if (field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            } else if (!field.is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const F& field() const { return field_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Term<F>& lead() const { return terms_.front(); }

    /// Nonzero constant in component 0.
    bool is_unit() const { return terms_.size() == 1 && terms_[0].comp == 0 && terms_[0].mono.is_one(); }

    Poly operator+(const Poly& o) const { return combine(o, false); }
    Poly operator-(const Poly& o) const { return combine(o, true); }
    Poly operator-() const {
        Poly p = *this;
        for (auto& t : p.terms_) t.coeff = field_.neg(t.coeff);
        return p;
    }
    Poly scaled(const value_type& c) const {
        if (field_.is_zero(c)) return Poly(field_);
        Poly p = *this;
        for (auto& t : p.terms_) t.coeff = field_.mul(t.coeff, c);
        return p;
    }
    /// Multiply by c * x^m, shifting components by `comp_shift`.
    Poly mul_term(const Monomial& m, const value_type& c, std::uint32_t comp_shift = 0) const {
        if (field_.is_zero(c)) return Poly(field_);
        Poly p(field_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.comp + comp_shift, field_.mul(t.coeff, c)});
        return p;  // multiplication by a monomial preserves the order
    }
    /// Ring element (component 0) times module element.
    Poly operator*(const Poly& o) const {
        const Poly* scalar = this;
        const Poly* vec = &o;
        if (!is_scalar()) {
            if (!o.is_scalar()) throw PreconditionError("Poly: product of two module elements");
            std::swap(scalar, vec);
        }
        Poly out(field_);
        for (const auto& t : scalar->terms_) out = out + vec->mul_term(t.mono, t.coeff);
        return out;
    }
    Poly pow(unsigned e) const {
        Poly r = constant(field_, field_.one());
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }
    bool is_scalar() const {
        for (const auto& t : terms_)
            if (t.comp != 0) return false;
        return true;
    }

    std::uint32_t max_component() const {
        std::uint32_t c = 0;
        for (const auto& t : terms_) c = std::max(c, t.comp);
        return c;
    }

    /// Component j as a ring element in component 0.
    Poly component(std::uint32_t j) const {
        Poly p(field_);
        for (const auto& t : terms_)
            if (t.comp == j) p.terms_.push_back({t.mono, 0, t.coeff});
        return p;
    }
    /// Keep components in [lo, hi), renumbered to start at 0.
    Poly component_range(std::uint32_t lo, std::uint32_t hi) const {
        Poly p(field_);
        for (const auto& t : terms_)
            if (t.comp >= lo && t.comp < hi) p.terms_.push_back({t.mono, t.comp - lo, t.coeff});
        return p;
    }
    Poly shift_components(std::uint32_t shift) const { return mul_term(Monomial::one(), field_.one(), shift); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(lead().coeff));
    }

    /// Degree of each term, given variable degrees and basis-vector degrees.
    template <class Ring>
    bool is_homogeneous(const Ring& ring, const std::vector<int>& comp_degrees = {}) const {
        if (terms_.empty()) return true;
        auto deg = [&](const Term<F>& t) {
            int shift = t.comp < comp_degrees.size() ? comp_degrees[t.comp] : 0;
            return ring.degree(t.mono) + shift;
        };
        int d0 = deg(terms_[0]);
        for (const auto& t : terms_)
            if (deg(t) != d0) return false;
        return true;
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].comp != o.terms_[i].comp || !(terms_[i].mono == o.terms_[i].mono) ||
                !field_.equal(terms_[i].coeff, o.terms_[i].coeff))
                return false;
        }
        return true;
    }

private:
    Poly combine(const Poly& o, bool subtract) const {
        Poly p(field_);
        p.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int c;
            if (i == terms_.size()) c = -1;
            else if (j == o.terms_.size()) c = 1;
            else c = compare_terms(terms_[i], o.terms_[j]);
            if (c > 0) {
                p.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                auto t = o.terms_[j++];
                if (subtract) t.coeff = field_.neg(t.coeff);
                p.terms_.push_back(std::move(t));
            } else {
                auto v = subtract ? field_.sub(terms_[i].coeff, o.terms_[j].coeff)
                                  : field_.add(terms_[i].coeff, o.terms_[j].coeff);
                if (!field_.is_zero(v)) p.terms_.push_back({terms_[i].mono, terms_[i].comp, v});
                ++i;
                ++j;
            }
        }
        return p;
    }

    F field_{};
    std::vector<Term<F>> terms_;
};

template <Field F>
Poly<F> variable(const PolyRing<F>& ring, std::size_t i) {
    return Poly<F>::term(ring.field, Monomial::variable(i), ring.field.one());
}

template <Field F>
std::string monomial_to_string(const PolyRing<F>& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (!m.exp[i]) continue;
        if (!s.empty()) s += "*";
        s += ring.names[i];
        if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s.empty() ? "1" : s;
}

/// Ring elements print as "x^2 - 2*x*y"; module elements as "[c0, c1, ...]".
template <Field F>
std::string to_string(const PolyRing<F>& ring, const Poly<F>& p, std::uint32_t rank = 0) {
    auto scalar_string = [&](const Poly<F>& q) {
        if (q.is_zero()) return std::string("0");
        std::string s;
        for (const auto& t : q.terms()) {
            std::string c = ring.field.to_string(t.coeff);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c.erase(0, 1);
            if (s.empty()) s += negative ? "-" : "";
            else s += negative ? " - " : " + ";
            if (t.mono.is_one()) s += c;
            else if (c == "1") s += monomial_to_string(ring, t.mono);
            else s += c + "*" + monomial_to_string(ring, t.mono);
        }
        return s;
    };
    if (rank == 0 && p.is_scalar()) return scalar_string(p);
    std::uint32_t r = std::max<std::uint32_t>(rank, p.is_zero() ? 1 : p.max_component() + 1);
    std::string s = "[";
    for (std::uint32_t j = 0; j < r; ++j) {
        if (j) s += ", ";
        s += scalar_string(p.component(j));
    }
    return s + "]";
}

namespace detail {

template <Field F>
class PolyParser {
public:
    PolyParser(const PolyRing<F>& ring, std::string_view text) : ring_(ring), text_(text) {}

    Poly<F> parse() {
        auto p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " in polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_));
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    Poly<F> expr() {
        Poly<F> acc(ring_.field);
        bool negate = false;
        if (peek('-')) { ++pos_; negate = true; }
        else if (peek('+')) ++pos_;
        acc = product();
        if (negate) acc = -acc;
        while (true) {
            if (peek('+')) { ++pos_; acc = acc + product(); }
            else if (peek('-')) { ++pos_; acc = acc - product(); }
            else break;
        }
        return acc;
    }
    bool starts_factor() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    Poly<F> product() {
        Poly<F> acc = power();
        while (true) {
            if (peek('*')) { ++pos_; acc = acc * power(); }
            else if (starts_factor()) acc = acc * power();
            else break;
        }
        return acc;
    }
    Poly<F> power() {
        Poly<F> base = atom();
        if (peek('^')) {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }
    Poly<F> atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
            return Poly<F>::constant(ring_.field, ring_.field.parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            // longest variable name matching here
            std::size_t best = 0, best_len = 0;
            for (std::size_t i = 0; i < ring_.nvars(); ++i) {
                const auto& n = ring_.names[i];
                if (text_.substr(pos_, n.size()) == n && n.size() > best_len) {
                    best = i;
                    best_len = n.size();
                }
            }
            if (best_len == 0) fail("unknown variable");
            pos_ += best_len;
            return variable(ring_, best);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const PolyRing<F>& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <Field F>
Poly<F> parse_poly(const PolyRing<F>& ring, std::string_view text) {
    return detail::PolyParser<F>(ring, text).parse();
}

}  // namespace cidual
