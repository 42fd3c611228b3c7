#pragma once

// Session files: a JSON description of a field, named rings, modules over
// them, DG modules over exterior algebras, and a task list. Parsing is in two
// steps. parse_session checks shape and types and keeps every matrix entry
// and polynomial as text, so emit_session(parse_session(s)) re-parses to the
// same SessionFile. resolve_session then builds the objects over a concrete
// field and reports unresolvable names or inconsistent dimensions with a
// field path such as "modules.M.matrix[0][1]".

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cidual/harness.hpp"

namespace cidual {

struct RingDecl {
    std::vector<std::string> variables;
    std::vector<std::string> relations;
    bool operator==(const RingDecl&) const = default;
};

/// kind: "residue", "free", "maximal-ideal", "quotient" (by `ideal`), or
/// "presentation" (cokernel of `matrix`, rows = rank of the target).
struct ModuleDecl {
    std::string ring;
    std::string kind;
    std::size_t rank = 1;
    std::vector<std::string> ideal;
    std::vector<std::vector<std::string>> matrix;
    bool operator==(const ModuleDecl&) const = default;
};

/// kind: "residue", "free", "random" (from `seed`), or "explicit" with a
/// degree per basis vector, the differential and one action matrix per
/// generator e_i, all row-major.
struct DGModuleDecl {
    std::size_t c = 1;
    std::string kind;
    std::uint64_t seed = 1;
    std::vector<int> degrees;
    std::vector<std::vector<std::string>> differential;
    std::vector<std::vector<std::vector<std::string>>> actions;
    bool operator==(const DGModuleDecl&) const = default;
};

/// command: resolve, ext, tor, complexity, support, thick, verify.
struct TaskDecl {
    std::string name;
    std::string command;
    std::string ring;
    std::vector<std::string> modules;
    std::vector<std::string> scenarios;
    std::optional<int> n_max;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> budget;
    bool operator==(const TaskDecl&) const = default;
};

struct SessionFile {
    std::string field = "101";
    std::map<std::string, RingDecl> rings;
    std::map<std::string, ModuleDecl> modules;
    std::map<std::string, DGModuleDecl> dg_modules;
    std::vector<TaskDecl> tasks;
    bool operator==(const SessionFile&) const = default;
};

inline const std::vector<std::string>& session_commands() {
    static const std::vector<std::string> c{"resolve", "ext", "tor", "complexity", "support", "thick", "verify"};
    return c;
}

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Reader {
public:
    Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const Json& json() const { return j_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, path_); }

    Reader at(const std::string& key) const {
        if (!j_.is_object()) fail("expected an object");
        if (!j_.contains(key)) throw ParseError("missing field", child_path(key));
        return Reader(j_.at(key), child_path(key));
    }
    bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }
    Reader index(std::size_t i) const { return Reader(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }

    void only_keys(std::initializer_list<std::string_view> keys) const {
        if (!j_.is_object()) fail("expected an object");
        for (const auto& [k, v] : j_.items())
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw ParseError("unknown field", child_path(k));
    }
    std::string str() const {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }
    /// Scalars may be written as strings or JSON integers.
    std::string scalar() const {
        if (j_.is_string()) return j_.get<std::string>();
        if (j_.is_number_integer()) return std::to_string(j_.get<long long>());
        fail("expected a scalar as a string");
    }
    long long integer() const {
        if (!j_.is_number_integer()) fail("expected an integer");
        return j_.get<long long>();
    }
    std::size_t size() const {
        if (!j_.is_array()) fail("expected an array");
        return j_.size();
    }
    std::vector<std::string> strings() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back(index(i).str());
        return out;
    }
    std::vector<std::vector<std::string>> matrix() const {
        std::vector<std::vector<std::string>> out;
        for (std::size_t i = 0; i < size(); ++i) {
            Reader row = index(i);
            std::vector<std::string> r;
            for (std::size_t j = 0; j < row.size(); ++j) r.push_back(row.index(j).scalar());
            out.push_back(std::move(r));
        }
        return out;
    }
    std::string child_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

private:
    const Json& j_;
    std::string path_;
};

}  // namespace detail

inline SessionFile parse_session(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON", detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    detail::Reader root(j, "");
    root.only_keys({"field", "rings", "modules", "dg_modules", "tasks"});
    SessionFile s;
    if (root.has("field")) s.field = root.at("field").scalar();
    if (root.has("rings")) {
        auto rs = root.at("rings");
        if (!rs.json().is_object()) rs.fail("expected an object");
        for (const auto& [name, v] : rs.json().items()) {
            auto r = rs.at(name);
            r.only_keys({"variables", "relations"});
            s.rings[name] = RingDecl{r.at("variables").strings(), r.at("relations").strings()};
        }
    }
    if (root.has("modules")) {
        auto ms = root.at("modules");
        if (!ms.json().is_object()) ms.fail("expected an object");
        for (const auto& [name, v] : ms.json().items()) {
            auto m = ms.at(name);
            m.only_keys({"ring", "kind", "rank", "ideal", "matrix"});
            ModuleDecl d;
            d.ring = m.at("ring").str();
            d.kind = m.at("kind").str();
            if (m.has("rank")) {
                auto r = m.at("rank").integer();
                if (r < 0) m.at("rank").fail("rank must be non-negative");
                d.rank = static_cast<std::size_t>(r);
            }
            if (m.has("ideal")) d.ideal = m.at("ideal").strings();
            if (m.has("matrix")) d.matrix = m.at("matrix").matrix();
            static const std::vector<std::string> kinds{"residue", "free", "maximal-ideal", "quotient", "presentation"};
            if (std::find(kinds.begin(), kinds.end(), d.kind) == kinds.end()) m.at("kind").fail("unknown module kind '" + d.kind + "'");
            if (d.kind == "quotient" && !m.has("ideal")) throw ParseError("missing field", m.child_path("ideal"));
            if (d.kind == "presentation" && !m.has("matrix")) throw ParseError("missing field", m.child_path("matrix"));
            s.modules[name] = std::move(d);
        }
    }
    if (root.has("dg_modules")) {
        auto ms = root.at("dg_modules");
        if (!ms.json().is_object()) ms.fail("expected an object");
        for (const auto& [name, v] : ms.json().items()) {
            auto m = ms.at(name);
            m.only_keys({"c", "kind", "seed", "degrees", "differential", "actions"});
            DGModuleDecl d;
            auto c = m.at("c").integer();
            if (c < 0 || c > 6) m.at("c").fail("codimension must lie in 0..6");
            d.c = static_cast<std::size_t>(c);
            d.kind = m.at("kind").str();
            if (m.has("seed")) d.seed = static_cast<std::uint64_t>(m.at("seed").integer());
            if (d.kind == "explicit") {
                auto degs = m.at("degrees");
                for (std::size_t i = 0; i < degs.size(); ++i) d.degrees.push_back(static_cast<int>(degs.index(i).integer()));
                d.differential = m.at("differential").matrix();
                auto acts = m.at("actions");
                for (std::size_t i = 0; i < acts.size(); ++i) d.actions.push_back(acts.index(i).matrix());
            } else if (d.kind != "residue" && d.kind != "free" && d.kind != "random") {
                m.at("kind").fail("unknown DG module kind '" + d.kind + "'");
            }
            s.dg_modules[name] = std::move(d);
        }
    }
    if (root.has("tasks")) {
        auto ts = root.at("tasks");
        for (std::size_t i = 0; i < ts.size(); ++i) {
            auto t = ts.index(i);
            t.only_keys({"name", "command", "ring", "modules", "scenarios", "n_max", "seed", "budget"});
            TaskDecl d;
            d.name = t.at("name").str();
            d.command = t.at("command").str();
            const auto& cmds = session_commands();
            if (std::find(cmds.begin(), cmds.end(), d.command) == cmds.end()) t.at("command").fail("unknown command '" + d.command + "'");
            if (t.has("ring")) d.ring = t.at("ring").str();
            if (t.has("modules")) d.modules = t.at("modules").strings();
            if (t.has("scenarios")) d.scenarios = t.at("scenarios").strings();
            if (t.has("n_max")) d.n_max = static_cast<int>(t.at("n_max").integer());
            if (t.has("seed")) d.seed = static_cast<std::uint64_t>(t.at("seed").integer());
            if (t.has("budget")) d.budget = static_cast<std::size_t>(t.at("budget").integer());
            for (const auto& other : s.tasks)
                if (other.name == d.name) t.at("name").fail("duplicate task name '" + d.name + "'");
            s.tasks.push_back(std::move(d));
        }
    }
    return s;
}

inline Json session_json(const SessionFile& s) {
    Json j;
    j["field"] = s.field;
    j["rings"] = Json::object();
    for (const auto& [name, r] : s.rings) j["rings"][name] = Json{{"variables", r.variables}, {"relations", r.relations}};
    j["modules"] = Json::object();
    for (const auto& [name, m] : s.modules) {
        Json e{{"ring", m.ring}, {"kind", m.kind}};
        if (m.kind == "free") e["rank"] = m.rank;
        if (!m.ideal.empty() || m.kind == "quotient") e["ideal"] = m.ideal;
        if (!m.matrix.empty() || m.kind == "presentation") e["matrix"] = m.matrix;
        j["modules"][name] = e;
    }
    j["dg_modules"] = Json::object();
    for (const auto& [name, m] : s.dg_modules) {
        Json e{{"c", m.c}, {"kind", m.kind}};
        if (m.kind == "random") e["seed"] = m.seed;
        if (m.kind == "explicit") {
            e["degrees"] = m.degrees;
            e["differential"] = m.differential;
            e["actions"] = m.actions;
        }
        j["dg_modules"][name] = e;
    }
    j["tasks"] = Json::array();
    for (const auto& t : s.tasks) {
        Json e{{"name", t.name}, {"command", t.command}};
        if (!t.ring.empty()) e["ring"] = t.ring;
        if (!t.modules.empty()) e["modules"] = t.modules;
        if (!t.scenarios.empty()) e["scenarios"] = t.scenarios;
        if (t.n_max) e["n_max"] = *t.n_max;
        if (t.seed) e["seed"] = *t.seed;
        if (t.budget) e["budget"] = *t.budget;
        j["tasks"].push_back(e);
    }
    return j;
}

inline std::string emit_session(const SessionFile& s) { return session_json(s).dump(2) + "\n"; }

// ------------------------------------------------------------ resolution

template <Field F>
struct ResolvedSession {
    F field;
    std::map<std::string, QuotientRing<F>> rings;
    std::map<std::string, FiniteDGModule<F>> modules;     ///< over rings
    std::map<std::string, FiniteDGModule<F>> dg_modules;  ///< over exterior algebras
    std::map<std::size_t, AlgebraPtr<F>> exterior;        ///< shared Lambda(c)

    const AlgebraPtr<F>& lambda(std::size_t c) {
        auto it = exterior.find(c);
        if (it == exterior.end()) it = exterior.emplace(c, lambda_algebra(field, c)).first;
        return it->second;
    }
};

namespace detail {

template <Field F>
Matrix<F> parse_matrix(const F& k, const std::vector<std::vector<std::string>>& rows, std::size_t n_rows, std::size_t n_cols,
                       const std::string& path) {
    if (rows.size() != n_rows)
        throw ParseError("expected " + std::to_string(n_rows) + " rows, got " + std::to_string(rows.size()), path);
    Matrix<F> m(k, n_rows, n_cols);
    for (std::size_t i = 0; i < n_rows; ++i) {
        if (rows[i].size() != n_cols)
            throw ParseError("expected " + std::to_string(n_cols) + " entries, got " + std::to_string(rows[i].size()),
                             path + "[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j < n_cols; ++j) {
            try {
                m(i, j) = k.parse(rows[i][j]);
            } catch (const Error& e) {
                throw ParseError(e.what(), path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            }
        }
    }
    return m;
}

template <Field F>
Poly<F> parse_poly_at(const PolyRing<F>& ring, const std::string& text, const std::string& path) {
    try {
        return parse_poly(ring, text);
    } catch (const Error& e) {
        throw ParseError(e.what(), path);
    }
}

}  // namespace detail

template <Field F>
ResolvedSession<F> resolve_session(const SessionFile& s, const F& k) {
    ResolvedSession<F> out{k, {}, {}, {}, {}};
    for (const auto& [name, r] : s.rings) {
        const std::string path = "rings." + name;
        const PolyRing<F> probe = [&] {
            try {
                return PolyRing<F>::standard(k, r.variables);
            } catch (const Error& e) {
                throw ParseError(e.what(), path + ".variables");
            }
        }();
        std::vector<std::string> rels;
        for (std::size_t i = 0; i < r.relations.size(); ++i) {
            detail::parse_poly_at(probe, r.relations[i], path + ".relations[" + std::to_string(i) + "]");
            rels.push_back(r.relations[i]);
        }
        try {
            out.rings.emplace(name, QuotientRing<F>(RingSpec<F>::parse(k, r.variables, rels)));
        } catch (const Error& e) {
            throw ParseError(e.what(), path);
        }
    }
    for (const auto& [name, m] : s.modules) {
        const std::string path = "modules." + name;
        auto it = out.rings.find(m.ring);
        if (it == out.rings.end()) throw ParseError("unknown ring '" + m.ring + "'", path + ".ring");
        const auto& r = it->second;
        FiniteDGModule<F> mod = [&] {
            if (m.kind == "residue") return FiniteDGModule<F>::residue_field(r.algebra());
            if (m.kind == "free") return free_module(r, m.rank);
            if (m.kind == "maximal-ideal") return maximal_ideal(r);
            if (m.kind == "quotient") {
                std::vector<Poly<F>> ideal;
                for (std::size_t i = 0; i < m.ideal.size(); ++i)
                    ideal.push_back(detail::parse_poly_at(r.poly_ring(), m.ideal[i], path + ".ideal[" + std::to_string(i) + "]"));
                return cyclic_quotient(r, ideal);
            }
            ModulePresentation<F> p;
            p.rows = m.matrix.size();
            const std::size_t cols = p.rows ? m.matrix[0].size() : 0;
            for (std::size_t i = 0; i < p.rows; ++i) {
                if (m.matrix[i].size() != cols)
                    throw ParseError("ragged matrix row", path + ".matrix[" + std::to_string(i) + "]");
                std::vector<Poly<F>> row;
                for (std::size_t j = 0; j < cols; ++j)
                    row.push_back(detail::parse_poly_at(r.poly_ring(), m.matrix[i][j],
                                                        path + ".matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
                p.entries.push_back(std::move(row));
            }
            try {
                return cokernel(r, p);
            } catch (const Error& e) {
                throw ParseError(e.what(), path + ".matrix");
            }
        }();
        out.modules.emplace(name, std::move(mod));
    }
    for (const auto& [name, m] : s.dg_modules) {
        const std::string path = "dg_modules." + name;
        auto alg = out.lambda(m.c);
        FiniteDGModule<F> mod = [&] {
            if (m.kind == "residue") return FiniteDGModule<F>::residue_field(alg);
            if (m.kind == "free") return FiniteDGModule<F>::free_rank_one(alg);
            if (m.kind == "random") {
                RandomModuleSpec spec;
                spec.seed = m.seed;
                return random_dg_module(alg, spec);
            }
            const std::size_t n = m.degrees.size();
            auto d = detail::parse_matrix(k, m.differential, n, n, path + ".differential");
            if (m.actions.size() != m.c)
                throw ParseError("expected " + std::to_string(m.c) + " action matrices, got " + std::to_string(m.actions.size()), path + ".actions");
            std::vector<Matrix<F>> acts;
            for (std::size_t i = 0; i < m.c; ++i)
                acts.push_back(detail::parse_matrix(k, m.actions[i], n, n, path + ".actions[" + std::to_string(i) + "]"));
            try {
                return FiniteDGModule<F>::from_generator_actions(alg, m.degrees, d, acts);
            } catch (const Error& e) {
                throw ParseError(e.what(), path);
            }
        }();
        if (auto v = mod.validate(); !v) throw ParseError("not a DG module: " + v.describe(), path);
        out.dg_modules.emplace(name, std::move(mod));
    }
    for (std::size_t i = 0; i < s.tasks.size(); ++i) {
        const auto& t = s.tasks[i];
        const std::string path = "tasks[" + std::to_string(i) + "]";
        const bool ring_side = t.command == "resolve" || t.command == "ext" || t.command == "tor" || t.command == "complexity";
        const bool lambda_side = t.command == "support" || t.command == "thick";
        std::size_t want = t.command == "resolve" || t.command == "support" ? 1 : t.command == "verify" ? 0 : 2;
        if ((ring_side || lambda_side) && t.modules.size() != want)
            throw ParseError("expected " + std::to_string(want) + " module name(s)", path + ".modules");
        if (ring_side) {
            if (!out.rings.count(t.ring)) throw ParseError("unknown ring '" + t.ring + "'", path + ".ring");
            for (std::size_t j = 0; j < t.modules.size(); ++j) {
                auto it = out.modules.find(t.modules[j]);
                if (it == out.modules.end() || it->second.algebra() != out.rings.at(t.ring).algebra())
                    throw ParseError("unknown module '" + t.modules[j] + "' over ring '" + t.ring + "'", path + ".modules[" + std::to_string(j) + "]");
            }
        }
        if (lambda_side) {
            for (std::size_t j = 0; j < t.modules.size(); ++j)
                if (!out.dg_modules.count(t.modules[j]))
                    throw ParseError("unknown DG module '" + t.modules[j] + "'", path + ".modules[" + std::to_string(j) + "]");
            if (t.modules.size() == 2 && out.dg_modules.at(t.modules[0]).algebra() != out.dg_modules.at(t.modules[1]).algebra())
                throw ParseError("DG modules over different exterior algebras", path + ".modules");
        }
        if (t.command == "verify")
            for (std::size_t j = 0; j < t.scenarios.size(); ++j)
                if (t.scenarios[j] != "all" && std::none_of(scenario_registry().begin(), scenario_registry().end(),
                                                            [&](const ScenarioInfo& sc) { return sc.name == t.scenarios[j]; }))
                    throw ParseError("unknown scenario '" + t.scenarios[j] + "'", path + ".scenarios[" + std::to_string(j) + "]");
    }
    return out;
}

// ------------------------------------------------------------ tasks

/// Flag overrides applied on top of each task.
struct TaskOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> n_max;
};

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

template <Field F>
std::string support_text(const SupportDescriptor<F>& d) {
    if (d.is_everything()) return "support = Spec* S";
    if (d.is_empty()) return "support = empty";
    return "support = V" + d.describe();
}

}  // namespace detail

/// Run one task. Computation tasks yield a single result whose statement is
/// the computed answer; verify yields one result per scenario.
template <Field F>
std::vector<ScenarioResult> run_task(ResolvedSession<F>& s, const TaskDecl& t, const TaskOverrides& o = {}) {
    const int default_n = t.command == "complexity" || t.command == "verify" ? kDefaultNMax : 12;
    const int n_max = o.n_max.value_or(t.n_max.value_or(default_n));
    const std::uint64_t seed = o.seed.value_or(t.seed.value_or(1));
    const std::size_t budget = t.budget.value_or(kDefaultResolutionBudget);
    if (t.command == "verify") {
        HarnessOptions h;
        h.seed = seed;
        h.n_max = n_max;
        h.budget = budget;
        auto names = t.scenarios.empty() ? std::vector<std::string>{"all"} : t.scenarios;
        return run_suite(names, s.field, h);
    }
    ScenarioResult r;
    r.scenario = "task:" + t.name;
    r.seed = seed;
    r.budgets = Json{{"resolution_dim", budget}, {"n_max", n_max}};
    r.evidence["command"] = t.command;
    r.evidence["field"] = s.field.name();
    if (!t.ring.empty()) r.evidence["ring"] = t.ring;
    r.evidence["modules"] = t.modules;
    try {
        if (t.command == "resolve") {
            const auto& m = s.modules.at(t.modules[0]);
            const int lo = m.dim() ? m.min_degree() : 0;
            auto res = detail::resolve_within(m, lo + n_max, budget);
            auto beta = res.betti_by_degree(lo, lo + n_max);
            r.evidence["betti"] = beta;
            r.evidence["exact"] = res.check_exactness().ok;
            r.evidence["minimal"] = res.check_minimality().ok;
            r.statement = "betti: " + detail::join(beta);
            r.verdict = r.evidence["exact"].get<bool>() && r.evidence["minimal"].get<bool>() ? Verdict::pass : Verdict::fail;
        } else if (t.command == "ext" || t.command == "complexity") {
            const auto& m = s.modules.at(t.modules[0]);
            const auto& n = s.modules.at(t.modules[1]);
            auto e = ext_table(m, n, n_max, budget);
            r.evidence["dims"] = e.dims;
            r.evidence["generators"] = e.generators;
            if (t.command == "ext") {
                r.statement = "dim Ext^n: " + detail::join(e.dims);
            } else {
                auto fit = complexity_fit(e.generators);
                r.evidence["fit"] = detail::fit_json(fit);
                r.statement = "cx = " + std::to_string(fit.complexity);
            }
            r.verdict = Verdict::pass;
        } else if (t.command == "tor") {
            auto d = tor_table(s.modules.at(t.modules[0]), s.modules.at(t.modules[1]), n_max, budget);
            r.evidence["dims"] = d;
            r.statement = "dim Tor_n: " + detail::join(d);
            r.verdict = Verdict::pass;
        } else if (t.command == "support") {
            const auto& x = s.dg_modules.at(t.modules[0]);
            auto b = bgg(x);
            auto d = support_annihilator(b);
            r.evidence["c"] = b.codim();
            r.evidence["annihilator"] = d.describe();
            r.evidence["delta_squared_zero"] = b.check_square_zero().ok;
            r.statement = "annihilator " + d.describe() + ", " + detail::support_text(d);
            r.verdict = Verdict::pass;
        } else if (t.command == "thick") {
            const auto& x = s.dg_modules.at(t.modules[0]);
            const auto& y = s.dg_modules.at(t.modules[1]);
            auto dx = support_annihilator(x), dy = support_annihilator(y);
            bool member = support_contained(dx, dy);
            r.evidence["member"] = member;
            r.evidence["annihilator_X"] = dx.describe();
            r.evidence["annihilator_Y"] = dy.describe();
            r.statement = t.modules[0] + (member ? " is" : " is not") + " in thick(" + t.modules[1] + ")";
            r.verdict = Verdict::pass;
        }
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::budget_exceeded;
        r.evidence["error"] = e.what();
        r.statement = "budget exceeded";
    } catch (const Error& e) {
        r.verdict = Verdict::fail;
        r.evidence["error"] = e.what();
        r.statement = std::string("error: ") + e.what();
    }
    return {r};
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitBudget = 3;

/// 0 iff every verdict is pass or heuristic-pass; a failure outranks budget
/// exhaustion.
inline int exit_code(const std::vector<ScenarioResult>& results) {
    bool fail = false, budget = false;
    for (const auto& r : results) {
        fail = fail || r.verdict == Verdict::fail || r.verdict == Verdict::heuristic_fail;
        budget = budget || r.verdict == Verdict::budget_exceeded;
    }
    return fail ? kExitVerifyFailure : budget ? kExitBudget : kExitOk;
}

inline std::string results_table(const std::vector<ScenarioResult>& results) {
    std::ostringstream os;
    std::size_t w = 8;
    for (const auto& r : results) w = std::max(w, r.scenario.size());
    auto pad = [](std::string s, std::size_t n) { return s.size() >= n ? s : s + std::string(n - s.size(), ' '); };
    os << pad("scenario", w) << "  " << pad("verdict", 15) << "  seed  statement\n";
    for (const auto& r : results)
        os << pad(r.scenario, w) << "  " << pad(to_string(r.verdict), 15) << "  " << pad(std::to_string(r.seed), 4) << "  " << r.statement << "\n";
    return os.str();
}

inline Json results_json(const std::vector<ScenarioResult>& results) {
    Json a = Json::array();
    for (const auto& r : results) a.push_back(r.to_json());
    return a;
}

}  // namespace cidual
