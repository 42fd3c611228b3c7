// cidual: run the tasks of a session file and report the results.
//
//   cidual --session sessions/default.json
//   cidual --session s.json --task betti-k --n-max 16 --report out.json
//   cidual                       (no session: verify all scenarios)
//
// Exit status: 0 all verdicts pass, 1 a verification failed, 2 the session
// could not be parsed, 3 a computation ran out of budget.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cidual/session.hpp"

namespace {

using namespace cidual;

template <Field F>
int run(const SessionFile& file, const F& field, const std::string& task, const TaskOverrides& o, const std::string& report) {
    ResolvedSession<F> s = resolve_session(file, field);
    std::vector<ScenarioResult> results;
    bool found = task.empty();
    for (const auto& t : file.tasks) {
        if (!task.empty() && t.name != task) continue;
        found = true;
        auto r = run_task(s, t, o);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (!found) throw ParseError("no task named '" + task + "'", "--task");
    std::cout << results_table(results);
    if (!report.empty()) {
        std::ofstream out(report);
        if (!out) throw Error("cannot write report " + report);
        out << results_json(results).dump(2) << "\n";
    }
    return exit_code(results);
}

SessionFile default_session() {
    SessionFile s;
    s.tasks.push_back(TaskDecl{"verify-all", "verify", "", {}, {"all"}, std::nullopt, std::nullopt, std::nullopt});
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homological algebra over artinian complete intersections and exterior algebras"};
    std::string session_path, task, report, field_flag;
    std::optional<std::uint64_t> seed;
    std::optional<int> n_max;
    app.add_option("--session", session_path, "session file (JSON)");
    app.add_option("--task", task, "run only the task with this name");
    app.add_option("--seed", seed, "seed for verification scenarios");
    app.add_option("--n-max", n_max, "homological window");
    app.add_option("--report", report, "write the machine-readable report here");
    app.add_option("--field", field_flag, "coefficient field: a prime p, 'p' for 101, or Q");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    try {
        SessionFile file = default_session();
        if (!session_path.empty()) {
            std::ifstream in(session_path);
            if (!in) throw ParseError("cannot open session file", session_path);
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                file = parse_session(buf.str());
            } catch (const ParseError& e) {
                throw ParseError(e.what(), session_path);
            }
        }
        std::string field = field_flag.empty() ? file.field : field_flag;
        TaskOverrides o{seed, n_max};
        if (field == "Q") return run(file, RationalField{}, task, o, report);
        if (field == "p") field = "101";
        std::uint32_t p = 0;
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(field, &used);
            if (used != field.size() || v > 0x7fffffffUL) throw std::invalid_argument(field);
            p = static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
            throw ParseError("field must be a prime or Q, got '" + field + "'", field_flag.empty() ? "field" : "--field");
        }
        PrimeField k = [&] {
            try {
                return PrimeField(p);
            } catch (const Error& e) {
                throw ParseError(e.what(), field_flag.empty() ? "field" : "--field");
            }
        }();
        return run(file, k, task, o, report);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}
