#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefschetz/json_io.hpp"
#include "lefschetz/suites.hpp"
#include "lefschetz/symplectic_group.hpp"

#include "oracles.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace lefschetz;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "lefschetz_io_tests";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

#ifdef CLI_BINARY_PATH
int run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("form JSON round trip") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const Form f = oracles::random_form(rng, 3, 2 + trial % 2, 6);
        CHECK(io::form_from_json(io::form_to_json(f)) == f);
    }
    // canonical emission: integral coefficients carry no denominator
    Form f(2, 1);
    f.add_term(MultiIndex{1}, Rational(2));
    f.add_term(MultiIndex{3}, Rational(-1, 2));
    const auto j = io::form_to_json(f);
    CHECK(j.at("terms").at(0).at("coeff") == "2");
    CHECK(j.at("terms").at(1).at("coeff") == "-1/2");
}

TEST_CASE("malformed form JSON is rejected with a position") {
    auto parse = [](const char* text) { return io::form_from_json(nlohmann::json::parse(text)); };

    CHECK_THROWS_WITH_AS(parse(R"({"n":2,"degree":2,"terms":[{"idx":[3,1],"coeff":"1"}]})"),
                         "terms[0].idx: indices must be strictly increasing", io::SchemaError);
    CHECK_THROWS_AS(parse(R"({"n":2,"degree":2,"terms":[{"idx":[1,9],"coeff":"1"}]})"),
                    io::SchemaError);
    CHECK_THROWS_AS(parse(R"({"n":2,"degree":2,"terms":[{"idx":[1],"coeff":"1"}]})"),
                    io::SchemaError);
    CHECK_THROWS_AS(parse(R"({"n":2,"degree":2,"terms":[{"idx":[1,2],"coeff":"0"}]})"),
                    io::SchemaError);
    CHECK_THROWS_AS(parse(R"({"n":2,"degree":2,"terms":[{"idx":[1,2],"coeff":"1.5"}]})"),
                    io::SchemaError);
    CHECK_THROWS_AS(parse(R"({"n":2,"degree":2,"terms":[{"idx":[1,2],"coeff":1.5}]})"),
                    io::SchemaError);
    CHECK_THROWS_AS(
        parse(R"({"n":2,"degree":2,"terms":[{"idx":[1,2],"coeff":"1"},{"idx":[1,2],"coeff":"2"}]})"),
        io::SchemaError);
    CHECK_THROWS_AS(parse(R"({"n":0,"degree":2,"terms":[]})"), io::SchemaError);
    CHECK_THROWS_AS(parse(R"([1,2,3])"), io::SchemaError);

    // integer coefficients may arrive as JSON numbers
    const Form ok = parse(R"({"n":2,"degree":2,"terms":[{"idx":[1,3],"coeff":2}]})");
    CHECK(ok.coeff(MultiIndex{1, 3}) == Rational(2));
}

TEST_CASE("linear map JSON round trip and validation") {
    std::mt19937 rng(43);
    Matrix m(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = oracles::random_rational(rng);
    const LinearMap t(2, m);
    CHECK(io::linear_map_from_json(io::linear_map_to_json(t)) == t);

    CHECK_THROWS_AS(io::linear_map_from_json(nlohmann::json::parse(R"({"n":2,"matrix":[["1"]]})")),
                    io::SchemaError);
}

TEST_CASE("describe summarizes weights, degeneracy and primitivity") {
    const std::string omega = describe_form(standard_symplectic_form(3));
    CHECK(omega.find("degree 2") != std::string::npos);
    CHECK(omega.find("3 terms") != std::string::npos);
    CHECK(omega.find("F-diagonal only") != std::string::npos);
    CHECK(omega.find("non-degenerate") != std::string::npos);
    CHECK(omega.find("not primitive") != std::string::npos);

    const std::string e12 = describe_form(Form::monomial(3, MultiIndex{1, 2}, Rational(1)));
    CHECK(e12.find(", primitive") != std::string::npos);
    CHECK(e12.find("degenerate") != std::string::npos);
    CHECK(e12.find("weights: E") != std::string::npos);

    const std::string constant = describe_form(Form::constant(2, Rational(5)));
    CHECK(constant.find("degree 0") != std::string::npos);
    CHECK(constant.find("weights") == std::string::npos);
    CHECK(constant.find(", primitive") != std::string::npos);
}

TEST_CASE("operator export") {
    const auto h = export_operator("H", 3, 2);
    CHECK(h.mat == Matrix::identity(15).scaled(Rational(-1)));
    const auto j = io::matrix_to_json(h.mat);
    CHECK(j.at("rows") == 15);
    CHECK(j.at("cols") == 15);
    CHECK(j.at("entries").at(0).at(0) == "-1");

    const auto star3 = export_operator("star", 3, 3);  // involution self-check runs inside
    CHECK(star3.mat.rows() == 20);
    CHECK(star3.mat.cols() == 20);

    const auto l0 = export_operator("L", 3, 0);
    CHECK(l0.mat.rows() == 15);
    CHECK(l0.mat.cols() == 1);

    // Lambda out of degree 1 has an empty target basis
    const auto lam1 = export_operator("Lambda", 3, 1);
    CHECK(lam1.mat.rows() == 0);
    CHECK(lam1.mat.cols() == 6);

    CHECK_THROWS_AS(export_operator("Q", 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(export_operator("L", 3, 9), std::invalid_argument);
}

TEST_CASE("report bytes match the golden file") {
    SuiteConfig config;
    config.suite = "injectivity";
    config.n_values = {3};
    const auto result = run_suite(config);
    CHECK(result.all_passed);

    const fs::path golden = fs::path(GOLDEN_DIR) / "injectivity_n3.json";
    std::ifstream in(golden);
    REQUIRE(in.good());
    const std::string expected((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    CHECK(render_reports(result.reports) == expected);
}

TEST_CASE("span certificates round-trip through the form schema") {
    Form seed = standard_symplectic_form(2);
    seed.add_term(MultiIndex{1, 2}, Rational(1));
    const auto r = lefschetz::orbit_span(seed, 3);
    REQUIRE(r.pass);
    const auto& words = r.witness.at("spanning_words");
    CHECK(words.size() >= 3);
    for (const auto& entry : words) {
        const Form f = io::form_from_json(entry.at("form"));
        CHECK(f.half_dim() == 2);
        CHECK(f.degree() == 2);
        CHECK_FALSE(f.is_zero());
        for (const auto& step : entry.at("word")) {
            CHECK(step.contains("gen"));
            CHECK(step.contains("args"));
        }
    }
}

TEST_CASE("suite runs are deterministic and job-count independent") {
    SuiteConfig config;
    config.suite = "counterexample";
    config.n_values = {2, 3};
    config.scales = {Rational(2)};

    const auto first = run_suite(config);
    CHECK(first.all_passed);
    const auto second = run_suite(config);
    CHECK(render_reports(first.reports) == render_reports(second.reports));

    config.jobs = 3;
    const auto parallel = run_suite(config);
    CHECK(render_reports(first.reports) == render_reports(parallel.reports));

    // the identity scale runs only the checks that apply to it
    SuiteConfig with_identity = config;
    with_identity.scales = {Rational(1)};
    const auto identity_result = run_suite(with_identity);
    CHECK(identity_result.all_passed);
    CHECK(identity_result.reports.size() == 4);  // volume + ratio per n

    CheckReport fabricated;
    fabricated.check = "x";
    fabricated.pass = false;
    CHECK_FALSE(all_passed({fabricated}));

    SuiteConfig bad = config;
    bad.suite = "unknown";
    CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
    bad = config;
    bad.n_values = {9};
    CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);  // over the default cap
    bad = config;
    bad.n_values.clear();
    CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
}

#ifdef CLI_BINARY_PATH
TEST_CASE("command line contract") {
    const fs::path dir = scratch_dir();

    CHECK(run_cli("verify counterexample --n 3 --scale 2") == 0);
    CHECK(run_cli("verify injectivity --n 3 --k 2") == 0);
    CHECK(run_cli("verify kahler --n 7") == 2);       // over LEFSCHETZ_MAX_N default 6
    CHECK(run_cli("verify nosuchsuite --n 2") == 2);  // unknown suite
    CHECK(run_cli("frobnicate") == 2);                // unknown subcommand

    const fs::path good = dir / "omega.json";
    write_file(good, io::form_to_json(standard_symplectic_form(3)).dump());
    CHECK(run_cli("describe " + good.string()) == 0);

    const fs::path bad = dir / "bad.json";
    write_file(bad, R"({"n":2,"degree":2,"terms":[{"idx":[2,1],"coeff":"1"}]})");
    CHECK(run_cli("describe " + bad.string()) == 2);
    CHECK(run_cli("describe " + (dir / "missing.json").string()) == 2);

    const fs::path out = dir / "H.json";
    CHECK(run_cli("export H --n 3 --k 2 --out " + out.string()) == 0);
    const auto exported = io::load_json(out.string());
    CHECK(exported.at("rows") == 15);
    CHECK(run_cli("export H --n 3 --k 99") == 2);

    // report files are byte-identical across runs and job counts
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p);
        return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    };
    const fs::path r1 = dir / "r1.json", r2 = dir / "r2.json";
    CHECK(run_cli("verify injectivity --n 3 --out " + r1.string()) == 0);
    CHECK(run_cli("verify injectivity --n 3 --jobs 4 --out " + r2.string()) == 0);
    CHECK(slurp(r1) == slurp(r2));
    CHECK(!slurp(r1).empty());

    // concurrent operator-matrix construction does not change the bytes
    const fs::path k1 = dir / "k1.json", k2 = dir / "k2.json";
    CHECK(run_cli("verify kahler --n 2 --out " + k1.string()) == 0);
    CHECK(run_cli("verify kahler --n 2 --jobs 4 --out " + k2.string()) == 0);
    CHECK(slurp(k1) == slurp(k2));
}
#endif
