// Command-line front end: verification suites, table rendering, full report.
//
// Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage error.

#include <qpc/report.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>

namespace {

// run_checks takes a plain function pointer, so the streaming sink is global.
std::ostream* g_stream = nullptr;
bool g_json = false;

void stream_result(const qpc::CheckResult& r) {
    if (g_json) {
        nlohmann::json j;
        j["suite"] = r.suite;
        j["check"] = r.name;
        j["status"] = r.pass ? "pass" : "fail";
        j["detail"] = r.detail;
        *g_stream << j.dump() << "\n";
    } else {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "[%s] %-8s %-26s", r.pass ? "pass" : "FAIL",
                      r.suite.c_str(), r.name.c_str());
        *g_stream << buf;
        if (!r.detail.empty()) *g_stream << "  " << r.detail;
        *g_stream << "\n";
    }
    g_stream->flush();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tool for the quantum symmetries of M3(C)"};
    app.require_subcommand(1);
    app.fallthrough(); // accept --format / --out after the subcommand too

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("selector", suite, "Suite: all or one of the registered suites");
    verify->add_option("--suite", suite, "Suite (same as the positional selector)");

    std::string table;
    auto* tab = app.add_subcommand("table", "Render one table");
    tab->add_option("name", table, "Table name")->required();

    auto* rep = app.add_subcommand("report", "Emit the full markdown report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        os = &file;
    }

    try {
        if (verify->parsed()) {
            if (suite != "all") {
                bool known = false;
                for (const auto& s : qpc::check_suites()) known = known || s == suite;
                if (!known) {
                    std::cerr << "unknown suite: " << suite << "\n";
                    return 2;
                }
            }
            g_stream = os;
            g_json = format == "json";
            auto results = qpc::run_checks(suite, stream_result);
            int fails = 0;
            for (const auto& r : results) fails += !r.pass;
            if (!g_json)
                *os << results.size() << " checks, " << fails << " failed\n";
            return fails ? 1 : 0;
        }
        if (tab->parsed()) {
            bool known = false;
            for (const auto& n : qpc::table_names()) known = known || n == table;
            if (!known) {
                std::cerr << "unknown table: " << table << "\n";
                return 2;
            }
            *os << (format == "json" ? qpc::render_table_json(table)
                                     : qpc::render_table_text(table));
            return 0;
        }
        if (rep->parsed()) {
            *os << qpc::markdown_report();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
