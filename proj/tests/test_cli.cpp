#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cidual/session.hpp"

using namespace cidual;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path default_session_path() { return fs::path(CIDUAL_SESSION_DIR) / "default.json"; }

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + CIDUAL_CLI_PATH + "\" " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

fs::path write_temp(const std::string& name, const std::string& text) {
    auto dir = fs::temp_directory_path() / "cidual_cli_test";
    fs::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p) << text;
    return p;
}

std::string locus_of(const std::string& text) {
    try {
        parse_session(text);
    } catch (const ParseError& e) {
        return e.locus;
    }
    return "<no error>";
}

const char* kRing = R"("rings": {"A": {"variables": ["x"], "relations": ["x^2"]}})";

}  // namespace

TEST(Session, RoundTripOnDefaultSession) {
    auto s = parse_session(read_file(default_session_path()));
    EXPECT_EQ(s.tasks.size(), 15u);
    auto text = emit_session(s);
    auto again = parse_session(text);
    EXPECT_EQ(again, s);
    EXPECT_EQ(emit_session(again), text);
}

TEST(Session, ParseErrorsCarryLoci) {
    EXPECT_NE(locus_of("{\n  \"rings\": {,\n}").find("line 2"), std::string::npos);
    EXPECT_EQ(locus_of(R"({"colour": 1})"), "colour");
    EXPECT_EQ(locus_of(std::string("{") + kRing + R"(, "modules": {"M": {"ring": "A", "kind": "weird"}}})"), "modules.M.kind");
    EXPECT_EQ(locus_of(std::string("{") + kRing + R"(, "tasks": [{"name": "t", "command": "dance", "modules": []}]})"), "tasks[0].command");
    EXPECT_EQ(locus_of(std::string("{") + kRing +
                       R"(, "modules": {"k": {"ring": "A", "kind": "residue"}}, "tasks": [{"name": "t", "command": "resolve", "ring": "A", "modules": ["k"]}, {"name": "t", "command": "resolve", "ring": "A", "modules": ["k"]}]})"),
              "tasks[1].name");
}

TEST(Session, ResolveErrorsNameTheField) {
    auto bad_ring = parse_session(R"({"modules": {"M": {"ring": "Z", "kind": "residue"}}})");
    try {
        resolve_session(bad_ring, PrimeField{});
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.locus, "modules.M.ring");
    }
    auto bad_task = parse_session(std::string("{") + kRing + R"(, "tasks": [{"name": "t", "command": "ext", "ring": "A", "modules": ["nope", "nope"]}]})");
    EXPECT_THROW(resolve_session(bad_task, PrimeField{}), ParseError);
    auto bad_matrix = parse_session(std::string("{") + kRing + R"(, "modules": {"P": {"ring": "A", "kind": "presentation", "matrix": [["x"], ["x", "x"]]}}})");
    EXPECT_THROW(resolve_session(bad_matrix, PrimeField{}), ParseError);
}

TEST(Session, TasksInProcess) {
    auto file = parse_session(read_file(default_session_path()));
    auto s = resolve_session(file, PrimeField{});
    auto find = [&](const std::string& n) {
        for (const auto& t : file.tasks)
            if (t.name == n) return t;
        throw std::runtime_error(n);
    };
    auto betti = run_task(s, find("betti-k"));
    ASSERT_EQ(betti.size(), 1u);
    EXPECT_EQ(betti[0].statement, "betti: 1 2 3 4 5 6 7 8 9 10 11 12 13");
    auto sup = run_task(s, find("support-k"));
    EXPECT_EQ(sup[0].statement, "annihilator (0), support = Spec* S");
    EXPECT_EQ(run_task(s, find("thick-E-k"))[0].evidence["member"], true);
    EXPECT_EQ(run_task(s, find("thick-k-E"))[0].evidence["member"], false);
    EXPECT_EQ(run_task(s, find("tor-x-y"))[0].evidence["dims"], Json({1, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(ExitCodes, Precedence) {
    ScenarioResult p, f, b;
    p.verdict = Verdict::pass;
    f.verdict = Verdict::fail;
    b.verdict = Verdict::budget_exceeded;
    EXPECT_EQ(exit_code({p}), kExitOk);
    EXPECT_EQ(exit_code({p, b}), kExitBudget);
    EXPECT_EQ(exit_code({b, f}), kExitVerifyFailure);
}

TEST(Cli, DefaultSessionPassesAndWritesReport) {
    auto report = fs::temp_directory_path() / "cidual_cli_test" / "report.json";
    fs::create_directories(report.parent_path());
    fs::remove(report);
    auto r = run_cli("--session \"" + default_session_path().string() + "\" --report \"" + report.string() + "\"");
    EXPECT_EQ(r.status, 0) << r.out;
    auto j = Json::parse(read_file(report));
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 14u + 14u);
    for (const auto& e : j) {
        for (const char* key : {"scenario", "verdict", "evidence", "budgets", "seed", "versions"}) EXPECT_TRUE(e.contains(key)) << key;
        // each verdict in the report appears on the table line of its scenario
        std::string line = e["scenario"].get<std::string>();
        auto pos = r.out.find(line + " ");
        ASSERT_NE(pos, std::string::npos) << line;
        auto eol = r.out.find('\n', pos);
        EXPECT_NE(r.out.substr(pos, eol - pos).find(e["verdict"].get<std::string>()), std::string::npos) << line;
    }
}

TEST(Cli, SingleTasks) {
    auto session = "--session \"" + default_session_path().string() + "\"";
    auto betti = run_cli(session + " --task betti-k");
    EXPECT_EQ(betti.status, 0);
    EXPECT_NE(betti.out.find("1 2 3 4 5 6 7 8 9 10 11 12 13"), std::string::npos) << betti.out;
    auto sup = run_cli(session + " --task support-k");
    EXPECT_EQ(sup.status, 0);
    EXPECT_NE(sup.out.find("annihilator (0)"), std::string::npos);
    EXPECT_NE(sup.out.find("support = Spec* S"), std::string::npos);
    auto longer = run_cli(session + " --task betti-kB --n-max 4");
    EXPECT_NE(longer.out.find("betti: 1 1 1 1 1\n"), std::string::npos) << longer.out;
    EXPECT_EQ(run_cli(session + " --task no-such-task").status, kExitParseError);
}

TEST(Cli, ParseErrorsExitTwo) {
    auto bad = write_temp("bad.json", "{ \"rings\": [ }");
    auto r = run_cli("--session \"" + bad.string() + "\"");
    EXPECT_EQ(r.status, kExitParseError);
    EXPECT_NE(r.out.find("line 1"), std::string::npos) << r.out;
    EXPECT_EQ(run_cli("--session /nonexistent/session.json").status, kExitParseError);
    EXPECT_EQ(run_cli("--session \"" + default_session_path().string() + "\" --field 12").status, kExitParseError);
    auto unresolved = write_temp("unresolved.json", R"({"modules": {"M": {"ring": "Z", "kind": "residue"}}})");
    auto u = run_cli("--session \"" + unresolved.string() + "\"");
    EXPECT_EQ(u.status, kExitParseError);
    EXPECT_NE(u.out.find("modules.M.ring"), std::string::npos) << u.out;
}

TEST(Cli, BudgetExitsThree) {
    auto s = write_temp("budget.json", std::string("{") + kRing +
                                           R"(, "modules": {"k": {"ring": "A", "kind": "residue"}}, "tasks": [{"name": "b", "command": "resolve", "ring": "A", "modules": ["k"], "n_max": 30, "budget": 6}]})");
    auto r = run_cli("--session \"" + s.string() + "\"");
    EXPECT_EQ(r.status, kExitBudget) << r.out;
    EXPECT_NE(r.out.find("budget-exceeded"), std::string::npos);
}

TEST(Cli, FailedComputationExitsOne) {
    // a complexity fit needs at least 12 values
    auto s = write_temp("fail.json", std::string("{") + kRing +
                                         R"(, "modules": {"k": {"ring": "A", "kind": "residue"}}, "tasks": [{"name": "c", "command": "complexity", "ring": "A", "modules": ["k", "k"], "n_max": 5}]})");
    auto r = run_cli("--session \"" + s.string() + "\"");
    EXPECT_EQ(r.status, kExitVerifyFailure) << r.out;
}

TEST(Cli, RationalFieldOnSmallTask) {
    auto r = run_cli("--session \"" + default_session_path().string() + "\" --task betti-k --field Q");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("1 2 3 4 5 6 7 8 9 10 11 12 13"), std::string::npos);
}
