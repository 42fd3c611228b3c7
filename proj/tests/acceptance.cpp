// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every comparison is exact; the only tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cidual/harness.hpp"

using namespace cidual;
using Fp = PrimeField;
using Mod = FiniteDGModule<Fp>;
using Seq = std::vector<std::size_t>;

namespace {

constexpr double kPoincareSeconds = 10;
constexpr double kCodimSeconds = 30;
constexpr double kSupportSeconds = 300;
constexpr double kSymmetrySeconds = 600;
constexpr double kDefaultSeconds = 600;

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s < limit;
    bool ok = o.ok && in_time;
    if (!ok) ++failures;
    std::printf("[%s] %2d %-28s %7.2f s (limit %.0f s)  %s%s\n", ok ? "PASS" : "FAIL", id, name, s, limit, o.detail.c_str(),
                in_time ? "" : " [over time]");
    std::fflush(stdout);
}

QuotientRing<Fp> ring(std::vector<std::string> vars, std::vector<std::string> rels) {
    return QuotientRing<Fp>(RingSpec<Fp>::parse(Fp{}, std::move(vars), rels));
}

HarnessOptions full() { return HarnessOptions{}; }

Outcome scenario(const std::string& name, Verdict want = Verdict::pass, HarnessOptions o = full()) {
    auto r = run_scenario(name, Fp{}, o);
    std::string d = name + "=" + to_string(r.verdict);
    if (r.evidence.contains("passed")) d += " (" + r.evidence["passed"].dump() + "/" + r.evidence["total"].dump() + ")";
    if (r.verdict != want) d += " " + r.evidence.dump().substr(0, 300);
    return {r.verdict == want, d};
}

Outcome both(Outcome a, Outcome b) { return {a.ok && b.ok, a.detail + "; " + b.detail}; }

std::string seq_text(const Seq& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

// Kernel soundness pieces, each with its own oracle.

bool rank_nullity(std::size_t trials) {
    Fp k;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> dim(0, 10);
    std::uniform_int_distribution<int> v(-5, 5);
    for (std::size_t t = 0; t < trials; ++t) {
        Matrix<Fp> a(k, dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = k.from_int(v(rng) * (v(rng) > 0));
        auto z = kernel_basis(a);
        if (rank(a) + z.cols() != a.cols()) return false;
        if (a.rows() && z.cols() && !(a * z).is_zero()) return false;
        if (rank(z) != z.cols()) return false;
    }
    return true;
}

using P = Poly<Fp>;

P random_poly(const Fp& k, std::mt19937_64& rng, int max_exp, int terms) {
    std::uniform_int_distribution<int> ex(0, max_exp), coef(1, 100);
    P f(k);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 0; v < 3; ++v) m.exp[v] = static_cast<std::uint16_t>(ex(rng));
        f = f + P::term(k, m, k.from_int(coef(rng)));
    }
    return f;
}

bool buchberger_round_trips(std::size_t trials) {
    Fp k;
    std::mt19937_64 rng(777);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<P> gens;
        for (int g = 0; g < 3; ++g) {
            auto f = random_poly(k, rng, 2, 2);
            if (!f.is_zero()) gens.push_back(f);
        }
        auto gb = buchberger(gens);
        P combo(k);
        for (const auto& g : gens) combo = combo + random_poly(k, rng, 1, 2) * g;
        for (const auto& g : gens)
            if (!normal_form(g, gb).is_zero()) return false;
        if (!normal_form(combo, gb).is_zero()) return false;
        // normal forms are canonical: f and f + combo reduce alike
        auto f = random_poly(k, rng, 3, 3);
        if (!(normal_form(f, gb) == normal_form(f + combo, gb))) return false;
    }
    return true;
}

std::pair<bool, std::string> radical_vs_power_search(std::size_t ideals) {
    Fp k;
    auto ring3 = PolyRing<Fp>::standard(k, {"x", "y", "z"});
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> ex(0, 2), coef(1, 5), ngen(1, 3), var(0, 2);
    std::size_t agree = 0, total = 0;
    for (std::size_t trial = 0; trial < ideals; ++trial) {
        const bool binomial = trial % 2;
        std::vector<P> ideal;
        for (int g = ngen(rng); g > 0; --g) {
            Monomial a;
            for (int v = 0; v < 3; ++v) a.exp[v] = static_cast<std::uint16_t>(ex(rng));
            if (a.is_one()) a.exp[var(rng)] = 2;
            P f = P::term(k, a, k.one());
            if (binomial) {
                Monomial b;
                for (int v = 0; v < 3; ++v) b.exp[v] = static_cast<std::uint16_t>(ex(rng));
                if (!(b == a)) f = f - P::term(k, b, k.from_int(coef(rng)));
            }
            ideal.push_back(f);
        }
        auto gb = buchberger(ideal);
        for (int probe = 0; probe < 4; ++probe) {
            Monomial m;
            m.exp[var(rng)] = 1;
            if (probe % 2) m.exp[var(rng)] += 1;
            P g = P::term(k, m, k.one());
            if (probe >= 2) {
                Monomial n;
                n.exp[var(rng)] = 1;
                g = g + P::term(k, n, k.from_int(coef(rng)));
            }
            bool oracle = false;
            P power = P::constant(k, k.one());
            for (int e = 1; e <= 8 && !oracle; ++e) {
                power = power * g;
                oracle = normal_form(power, gb).is_zero();
            }
            ++total;
            agree += radical_membership(ring3, g, ideal) == oracle;
        }
    }
    return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " radical probes"};
}

std::pair<bool, std::string> bgg_square_zero() {
    std::size_t ok = 0, total = 0;
    auto opts = full();
    auto check = [&](const Mod& m) {
        ++total;
        try {
            ok += static_cast<bool>(bgg(m).check_square_zero());
        } catch (const Error&) {
        }
    };
    for (std::size_t c : opts.codims) {
        auto a = lambda_algebra(Fp{}, c);
        check(Mod::residue_field(a));
        check(Mod::free_rank_one(a));
    }
    for (const auto& x : lambda_instances(Fp{}, opts)) check(x.module);
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " BGG complexes with delta^2 = 0"};
}

}  // namespace

int main() {
    criterion(1, "poincare series", kPoincareSeconds, [] {
        auto a = ring({"x", "y"}, {"x^2", "y^2"});
        auto b = ring({"x"}, {"x^3"});
        auto ba = semifree_resolution(Mod::residue_field(a.algebra()), 12).betti_by_degree(0, 12);
        auto bb = semifree_resolution(Mod::residue_field(b.algebra()), 12).betti_by_degree(0, 12);
        Seq want_a;
        for (std::size_t i = 0; i <= 12; ++i) want_a.push_back(i + 1);
        return Outcome{ba == want_a && bb == Seq(13, 1), "x2y2: " + seq_text(ba) + " | x3: " + seq_text(bb)};
    });

    criterion(2, "codimension = complexity", kCodimSeconds, [] {
        std::vector<int> got;
        for (const auto& r : ring_suite()) {
            auto q = make_ring(Fp{}, r);
            auto kk = Mod::residue_field(q.algebra());
            got.push_back(complexity_fit(ext_table(kk, kk, kDefaultNMax).generators).complexity);
        }
        std::string d = "cx =";
        for (int v : got) d += " " + std::to_string(v);
        return Outcome{got == std::vector<int>{1, 1, 2, 2}, d};
    });

    criterion(3, "Ext_Lambda(k,k) = S", kDefaultSeconds, [] {
        auto a = lambda_algebra(Fp{}, 2);
        auto kk = Mod::residue_field(a);
        auto dims = ext_table(kk, kk, 16).dims;
        bool ok = true;
        for (int n = 0; n <= 16; ++n) ok = ok && dims[n] == (n % 2 ? 0u : static_cast<std::size_t>(n / 2 + 1));
        auto stages = semifree_resolution(kk, 2 * 12 + 1).betti_by_stage();
        bool betti = stages.size() >= 13;
        for (std::size_t n = 0; betti && n <= 12; ++n) betti = stages[n] == n + 1;
        return Outcome{ok && betti, "Ext dims " + seq_text(dims) + " | betti " + seq_text(Seq(stages.begin(), stages.begin() + std::min<std::size_t>(13, stages.size())))};
    });

    criterion(4, "support duality", kSupportSeconds, [] { return scenario("support-duality"); });
    criterion(5, "negation", kDefaultSeconds, [] { return scenario("negation"); });
    criterion(6, "splitting", kDefaultSeconds, [] { return scenario("splitting"); });
    criterion(7, "phi and dual-vs-twist", kDefaultSeconds, [] { return both(scenario("phi-iso"), scenario("dual-vs-twist")); });
    criterion(8, "koszul ext identity", kDefaultSeconds, [] { return scenario("koszul-ext"); });
    criterion(9, "cx symmetry and reduction", kSymmetrySeconds,
              [] { return both(scenario("cx-symmetry"), scenario("cx-koszul-reduction")); });
    criterion(10, "vanishing equivalence", kDefaultSeconds, [] { return scenario("vanishing-equivalence", Verdict::heuristic_pass); });
    criterion(11, "gorenstein duality shadows", kDefaultSeconds,
              [] { return both(scenario("gorenstein-dual-dims"), scenario("dual-complexity")); });

    criterion(12, "kernel soundness", kDefaultSeconds, [] {
        bool rn = rank_nullity(300), gb = buchberger_round_trips(60);
        auto [rad, rad_d] = radical_vs_power_search(100);
        auto [sq, sq_d] = bgg_square_zero();
        std::string d = std::string("rank-nullity ") + (rn ? "ok" : "FAIL") + "; membership " + (gb ? "ok" : "FAIL") + "; " + rad_d + "; " + sq_d;
        return Outcome{rn && gb && rad && sq, d};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
