#pragma once

#include "lefschetz/check_report.hpp"
#include "lefschetz/form.hpp"
#include "lefschetz/lefschetz_ops.hpp"
#include "lefschetz/rational.hpp"

#include <string>
#include <vector>

namespace lefschetz {

/// Parameters for one verification run. k_values empty means every k the
/// suite considers valid for the given n; max_n is the runtime cap
/// (LEFSCHETZ_MAX_N, default 6).
struct SuiteConfig {
    std::string suite;
    std::vector<int> n_values{3};
    std::vector<int> k_values;
    std::vector<Rational> scales{Rational(2), Rational(3), Rational(3, 2)};
    int budget = 4;
    std::string out_path;
    int jobs = 1;
    int max_n = 6;

    void validate() const;
};

struct SuiteResult {
    std::vector<CheckReport> reports;
    bool all_passed = false;
};

/// Runs the named suite (kahler | injectivity | orbit-span | large-family |
/// counterexample | all). Checks are pure; with jobs > 1 they run on a
/// thread pool but the report content and order never change.
SuiteResult run_suite(const SuiteConfig& config);

/// Deterministic rendering of the report array (the bytes written to the
/// --out file).
std::string render_reports(const std::vector<CheckReport>& reports);

/// One-line summary: degree, term count, weight families (degree 2),
/// non-degeneracy (degree 2) and primitivity under the standard triple.
std::string describe_form(const Form& f);

/// Operator export for the CLI; validates the name and degree and, for the
/// star operator, re-checks the involution identity before handing the
/// matrix out.
OperatorMatrix export_operator(const std::string& op_name, int n, int k);

}  // namespace lefschetz
