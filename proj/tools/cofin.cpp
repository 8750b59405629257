#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cofin/checks.hpp"
#include "cofin/io.hpp"
#include "cofin/lang.hpp"

namespace {

using cofin::Report;
namespace lang = cofin::lang;

void print_report_text(const Report& r, std::ostream& os) {
    for (const auto& item : r.items) {
        os << (item.pass ? "PASS " : "FAIL ") << item.id;
        if (!item.pass && !item.detail.empty()) os << " -- " << item.detail;
        os << "\n";
    }
}

// Executes one statement; returns false when it counts as a failure.
bool run_statement(lang::Session& session, const lang::Stmt& stmt, bool json,
                   std::ostream& os) {
    std::string shown = lang::show(stmt);
    try {
        auto result = session.run(stmt);
        if (!result) {
            if (json)
                os << nlohmann::json{{"query", shown}, {"answer", "ok"}}.dump() << "\n";
            return true;
        }
        bool ok = !result->report || result->report->all_pass();
        if (stmt.kind == lang::Stmt::Kind::Assert) ok = true;  // throws on failure
        if (json) {
            os << lang::result_json(shown, *result).dump() << "\n";
        } else {
            os << shown << " : " << lang::show(result->value);
            if (result->witness) os << "   [witness " << *result->witness << "]";
            os << "\n";
            if (result->report) print_report_text(*result->report, os);
        }
        return ok;
    } catch (const lang::AssertFailure& e) {
        if (json)
            os << nlohmann::json{{"query", shown}, {"answer", "fail"}, {"witness", e.what()}}
                      .dump()
               << "\n";
        else
            os << "FAIL " << e.what() << "\n";
        return false;
    } catch (const cofin::Error& e) {
        if (json)
            os << nlohmann::json{{"query", shown}, {"answer", "error"}, {"witness", e.what()}}
                      .dump()
               << "\n";
        else
            os << "error: " << e.what() << "\n";
        return false;
    }
}

int run_file(const std::string& path, bool json, std::uint64_t seed) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<lang::Stmt> stmts;
    try {
        stmts = lang::parse_program(buffer.str());
    } catch (const lang::SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    lang::Session session(seed);
    bool all_ok = true;
    for (const auto& s : stmts) all_ok = run_statement(session, s, json, std::cout) && all_ok;
    return all_ok ? 0 : 1;
}

int repl(bool json, std::uint64_t seed) {
    lang::Session session(seed);
    bool all_ok = true;
    bool tty = isatty(fileno(stdin));
    std::string line;
    while (true) {
        if (tty) std::cout << "cofin> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lang::Stmt stmt;
        try {
            stmt = lang::parse_statement(line);
        } catch (const lang::SyntaxError& e) {
            std::cout << e.what() << "\n";
            all_ok = false;
            continue;
        }
        all_ok = run_statement(session, stmt, json, std::cout) && all_ok;
    }
    return all_ok ? 0 : 1;
}

int run_checks(const std::string& suite, std::uint64_t arg, bool json, std::uint64_t seed) {
    std::vector<Report> reports;
    try {
        if (suite == "all")
            reports = cofin::checks::run_all(seed);
        else
            reports.push_back(cofin::checks::run_suite(suite, arg, seed));
    } catch (const cofin::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.all_pass();
        if (json)
            std::cout << to_json(r).dump() << "\n";
        else
            print_report_text(r, std::cout);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cofin: exact calculator for ultimately periodic sets, enumerating maps, "
                 "their right ideals, and representable filters"};
    app.require_subcommand(1);
    bool json = false;
    std::uint64_t seed = 0;
    app.add_flag("--json", json, "emit one JSON object per statement");
    app.add_option("--seed", seed, "seed for sampled checks (default 0)");

    auto* repl_cmd = app.add_subcommand("repl", "interactive session on stdin");
    repl_cmd->fallthrough();
    std::string path;
    auto* run_cmd = app.add_subcommand("run", "execute a statement file");
    run_cmd->fallthrough();
    run_cmd->add_option("file", path, "statement file")->required();
    std::string suite;
    std::uint64_t arg = 0;
    auto* check_cmd = app.add_subcommand("check", "run a verification suite");
    check_cmd->fallthrough();
    check_cmd->add_option("suite", suite,
                          "clu1|acont|ldn|sigma|extcof|fdn|rules|monoid|all")
        ->required();
    check_cmd->add_option("arg", arg, "suite argument (clu1 universe size, acont corpus)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (repl_cmd->parsed()) return repl(json, seed);
    if (run_cmd->parsed()) return run_file(path, json, seed);
    if (check_cmd->parsed()) return run_checks(suite, arg, json, seed);
    return 2;
}
