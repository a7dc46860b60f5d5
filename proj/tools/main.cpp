#include "lefschetz/json_io.hpp"
#include "lefschetz/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int max_n_from_env() {
    const char* raw = std::getenv("LEFSCHETZ_MAX_N");
    if (!raw) return 6;
    try {
        const int v = std::stoi(raw);
        if (v < 1) throw std::invalid_argument("nonpositive");
        return v;
    } catch (...) {
        throw std::invalid_argument("LEFSCHETZ_MAX_N must be a positive integer");
    }
}

int run_verify(const lefschetz::SuiteConfig& config) {
    const auto result = lefschetz::run_suite(config);
    for (const auto& r : result.reports)
        std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.check << " " << r.params.dump() << "\n";
    std::cout << (result.all_passed ? "ok: " : "FAILED: ") << result.reports.size() << " checks\n";
    const std::string rendered = lefschetz::render_reports(result.reports);
    if (!config.out_path.empty()) {
        std::ofstream out(config.out_path);
        if (!out) throw std::invalid_argument("cannot open output file " + config.out_path);
        out << rendered;
    }
    return result.all_passed ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exterior-algebra verification for symplectic linear algebra"};
    app.require_subcommand(1);

    lefschetz::SuiteConfig config;
    std::vector<std::string> scale_args;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", config.suite,
                       "kahler | injectivity | orbit-span | large-family | counterexample | all")
        ->required();
    verify->add_option("--n", config.n_values, "half-dimensions to check (default 3)");
    verify->add_option("--k", config.k_values, "degrees/powers to check (default: every valid k)");
    verify->add_option("--scale", scale_args, "rational scales, e.g. 2 or 3/2 (default 2 3 3/2)");
    verify->add_option("--budget", config.budget, "generator word-length budget (default 4)");
    verify->add_option("--out", config.out_path, "write the JSON report array here");
    verify->add_option("--jobs", config.jobs, "worker threads (report content is unaffected)");

    std::string describe_path;
    auto* describe = app.add_subcommand("describe", "summarize a form JSON file");
    describe->add_option("path", describe_path, "form JSON file")->required();

    std::string op_name, export_out;
    int export_n = 3, export_k = 0;
    auto* exporter = app.add_subcommand("export", "write an operator matrix as JSON");
    exporter->add_option("op", op_name, "L | Lambda | H | star | Lpow:i")->required();
    exporter->add_option("--n", export_n, "half-dimension")->required();
    exporter->add_option("--k", export_k, "source degree")->required();
    exporter->add_option("--out", export_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            config.max_n = max_n_from_env();
            if (!scale_args.empty()) {
                config.scales.clear();
                for (const auto& s : scale_args) config.scales.push_back(lefschetz::Rational::parse(s));
            }
            return run_verify(config);
        }
        if (*describe) {
            std::cout << lefschetz::describe_form(lefschetz::io::load_form(describe_path)) << "\n";
            return 0;
        }
        if (*exporter) {
            const int cap = max_n_from_env();
            if (export_n > cap)
                throw std::invalid_argument("n exceeds the cap " + std::to_string(cap) +
                                            " (LEFSCHETZ_MAX_N)");
            const auto om = lefschetz::export_operator(op_name, export_n, export_k);
            const std::string rendered = lefschetz::io::matrix_to_json(om.mat).dump(2) + "\n";
            if (export_out.empty()) {
                std::cout << rendered;
            } else {
                std::ofstream out(export_out);
                if (!out) throw std::invalid_argument("cannot open output file " + export_out);
                out << rendered;
            }
            return 0;
        }
    } catch (const lefschetz::io::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
