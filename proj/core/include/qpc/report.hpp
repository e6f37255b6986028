#pragma once

#include <string>
#include <vector>

namespace qpc {

/// Outcome of one registered verification check.
struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail; // counterexample or computed values
    double ms = 0.0;
};

/// Suite names accepted by run_checks (besides "all").
const std::vector<std::string>& check_suites();

/// Runs one suite (or "all"). Throws std::invalid_argument on unknown names.
/// The on_result callback, when given, is invoked as each check finishes.
std::vector<CheckResult> run_checks(const std::string& suite,
                                    void (*on_result)(const CheckResult&) = nullptr);

/// Table identifiers accepted by the renderers.
const std::vector<std::string>& table_names();

/// Renders a named table; text mode mirrors the source layout.
/// Throws std::invalid_argument on unknown names.
std::string render_table_text(const std::string& name);
std::string render_table_json(const std::string& name);

/// Full markdown document: every table, the decomposition diagrams, the
/// hermitian families, and all derived values. Deterministic across runs.
std::string markdown_report();

} // namespace qpc
