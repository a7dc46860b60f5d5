#include "lefschetz/suites.hpp"

#include "lefschetz/counterexample.hpp"
#include "lefschetz/injectivity.hpp"
#include "lefschetz/symplectic_group.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lefschetz {

namespace {

using Thunk = std::function<CheckReport()>;

CheckReport matrix_identity_report(std::string check, nlohmann::json params, bool pass) {
    CheckReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.pass = pass;
    return r;
}

CheckReport check_star_involution(int n, int k) {
    const auto t = CompatibleTriple::standard(n);
    const Matrix round_trip = star_matrix(2 * n - k, t).mat * star_matrix(k, t).mat;
    const Matrix expected = Matrix::identity(static_cast<int>(exterior_dim(n, k)))
                                .scaled(Rational(k % 2 == 0 ? 1 : -1));
    return matrix_identity_report("kahler.star_involution", {{"n", n}, {"k", k}},
                                  round_trip == expected);
}

CheckReport check_lambda_star_conjugation(int n, int k) {
    const auto t = CompatibleTriple::standard(n);
    const OperatorMatrix lam = lambda_matrix(k, t);
    bool pass;
    if (k < 2) {
        pass = lam.mat.rows() == 0 || lam.mat.is_zero();
    } else {
        // adjoint route against star^-1 . L . star, with star^-1 taken as an
        // exact matrix inverse
        const Matrix star_hi = star_matrix(k, t).mat;
        const Matrix l_mid = l_matrix(2 * n - k, t).mat;
        auto star_lo_inv = star_matrix(k - 2, t).mat.inverse();
        pass = star_lo_inv && lam.mat == (*star_lo_inv) * l_mid * star_hi;
    }
    return matrix_identity_report("kahler.lambda_star_conjugation", {{"n", n}, {"k", k}}, pass);
}

CheckReport check_sl2_commutators(int n, int k) {
    const auto t = CompatibleTriple::standard(n);
    const Matrix l_k = l_matrix(k, t).mat;
    const Matrix lam_k = lambda_matrix(k, t).mat;
    const Matrix h_k = h_matrix(k, t).mat;
    const Matrix h_up = h_matrix(k + 2, t).mat;
    const Matrix h_dn = h_matrix(k - 2, t).mat;
    const bool hl = (h_up * l_k - l_k * h_k) == l_k.scaled(Rational(2));
    const bool hlam = (h_dn * lam_k - lam_k * h_k) == lam_k.scaled(Rational(-2));
    const Matrix l_dn = l_matrix(k - 2, t).mat;
    const Matrix lam_up = lambda_matrix(k + 2, t).mat;
    const bool llam = (l_dn * lam_k - lam_up * l_k) == h_k;
    return matrix_identity_report("kahler.sl2_commutators", {{"n", n}, {"k", k}},
                                  hl && hlam && llam);
}

CheckReport check_l_power_commutator(int n, int k, int i) {
    const auto t = CompatibleTriple::standard(n);
    const Matrix li_dn = l_power_matrix(i, k - 2, t).mat;
    const Matrix lam_k = lambda_matrix(k, t).mat;
    const Matrix lam_up = lambda_matrix(k + 2 * i, t).mat;
    const Matrix li_k = l_power_matrix(i, k, t).mat;
    const Matrix lhs = li_dn * lam_k - lam_up * li_k;
    const Rational factor = Rational(i) * Rational(k - n + i - 1);
    const Matrix rhs = l_power_matrix(i - 1, k, t).mat.scaled(factor);
    return matrix_identity_report("kahler.l_power_commutator", {{"n", n}, {"k", k}, {"i", i}},
                                  lhs == rhs);
}

CheckReport check_primitive_decomposition(int n, int k) {
    const auto t = CompatibleTriple::standard(n);
    CheckReport r;
    r.check = "lefschetz.primitive_decomposition";
    r.params = {{"n", n}, {"k", k}};
    // Lambda matrices once per involved degree; primitivity of individual
    // forms is checked through them.
    const PrimitiveDecomposer decomposer(k, t);
    std::map<int, std::pair<std::vector<MultiIndex>, Matrix>> lambda_by_degree;
    for (const auto& [i, dim] : decomposer.level_dims()) {
        (void)dim;
        lambda_by_degree.emplace(k - 2 * i, std::make_pair(multi_index_basis(n, k - 2 * i),
                                                           lambda_matrix(k - 2 * i, t).mat));
    }
    auto component_primitive = [&](int degree, const Form& beta) {
        const auto it = lambda_by_degree.find(degree);
        if (it == lambda_by_degree.end()) return beta.is_zero();
        const auto image = it->second.second.apply(beta.coordinates(it->second.first));
        for (const auto& x : image)
            if (!x.is_zero()) return false;
        return true;
    };

    const long expected_dim =
        (k <= n) ? exterior_dim(n, k) - exterior_dim(n, k - 2) : 0;
    const auto prims = primitive_space_basis(k, t);
    bool pass = static_cast<long>(prims.size()) == expected_dim;
    for (const auto& beta : prims)
        pass = pass && component_primitive(k, beta);

    // counted through the L^i images: levels below k-n embed as zero
    long dimension_sum = 0;
    for (const auto& [i, dim] : decomposer.level_dims()) {
        (void)i;
        dimension_sum += dim;
    }
    pass = pass && dimension_sum == exterior_dim(n, k);

    const Form omega = t.symplectic_form();
    std::map<int, Form> omega_powers;
    for (const auto& m : multi_index_basis(n, k)) {
        const Form input = Form::monomial(n, m, Rational(1));
        const auto decomp = decomposer.decompose(input);
        Form rebuilt(n, k);
        for (const auto& [i, beta] : decomp.components) {
            pass = pass && component_primitive(k - 2 * i, beta);
            auto [pow_it, fresh] = omega_powers.try_emplace(i, Form(n, 0));
            if (fresh) pow_it->second = form_power(omega, i);
            rebuilt = rebuilt + wedge(pow_it->second, beta);
        }
        pass = pass && rebuilt == input;
        if (!pass) break;
    }
    r.pass = pass;
    r.witness = {{"primitive_dim", prims.size()},
                 {"expected_primitive_dim", expected_dim},
                 {"dimension_sum", dimension_sum}};
    return r;
}

CheckReport check_l_power_on_primitives(int n, int k) {
    const auto t = CompatibleTriple::standard(n);
    const auto prims = primitive_space_basis(k, t);
    const auto target = multi_index_basis(n, 2 * n - k);
    Matrix m(static_cast<int>(target.size()), static_cast<int>(prims.size()));
    const Form omega_pow = form_power(t.symplectic_form(), n - k);
    for (size_t c = 0; c < prims.size(); ++c) {
        const auto coords = wedge(omega_pow, prims[c]).coordinates(target);
        for (size_t r = 0; r < coords.size(); ++r)
            m.at(static_cast<int>(r), static_cast<int>(c)) = coords[r];
    }
    const bool pass = m.rank() == static_cast<int>(prims.size());
    CheckReport r = matrix_identity_report("lefschetz.l_power_injective_on_primitives",
                                           {{"n", n}, {"k", k}}, pass);
    r.witness = {{"primitive_dim", prims.size()}, {"rank", m.rank()}};
    return r;
}

CheckReport check_l_power_bijective(int n, int k) {
    const auto t = CompatibleTriple::standard(n);
    const Matrix m = l_power_matrix(n - k, k, t).mat;
    const long expected = exterior_dim(n, k);
    CheckReport r = matrix_identity_report("lefschetz.l_power_bijective", {{"n", n}, {"k", k}},
                                           m.rank() == expected);
    r.witness = {{"rank", m.rank()}, {"expected_rank", expected}};
    return r;
}

void append_kahler(std::vector<Thunk>& thunks, int n) {
    for (int k = 0; k <= 2 * n; ++k)
        thunks.push_back([n, k] { return check_star_involution(n, k); });
    for (int k = 0; k <= 2 * n; ++k)
        thunks.push_back([n, k] { return check_lambda_star_conjugation(n, k); });
    for (int k = 0; k <= 2 * n; ++k)
        thunks.push_back([n, k] { return check_sl2_commutators(n, k); });
    for (int k = 0; k <= 2 * n; ++k) {
        const int i_max = (2 * n - k) / 2 + 1;
        for (int i = 1; i <= i_max; ++i)
            thunks.push_back([n, k, i] { return check_l_power_commutator(n, k, i); });
    }
    for (int k = 0; k <= 2 * n; ++k)
        thunks.push_back([n, k] { return check_primitive_decomposition(n, k); });
    for (int k = 0; k <= n; ++k)
        thunks.push_back([n, k] { return check_l_power_on_primitives(n, k); });
    for (int k = 0; k <= n; ++k)
        thunks.push_back([n, k] { return check_l_power_bijective(n, k); });
}

void append_injectivity(std::vector<Thunk>& thunks, int n, const std::vector<int>& ks) {
    std::vector<int> k_list = ks;
    if (k_list.empty())
        for (int k = 1; k <= n; ++k) k_list.push_back(k);
    for (int k : k_list) {
        thunks.push_back([n, k] { return verify_injectivity(n, k); });
        if (k < n && n >= 3)
            thunks.push_back([n, k] { return proof_certificate_kernel(n, k); });
        thunks.push_back([n, k] { return kernel_chain_check(n, k); });
    }
}

std::vector<std::pair<std::string, Form>> orbit_seeds(int n) {
    const Form omega = standard_symplectic_form(n);
    std::vector<std::pair<std::string, Form>> seeds;
    Form s1 = omega;
    s1.add_term(MultiIndex{1, n + 1}, Rational(-2));
    seeds.emplace_back("w - 2 dx1^dy1", std::move(s1));
    Form s2 = omega;
    s2.add_term(MultiIndex{1, 2}, Rational(1));
    seeds.emplace_back("w + dx1^dx2", std::move(s2));
    Form s3 = omega;
    s3.add_term(MultiIndex{1, n + 2}, Rational(1));
    seeds.emplace_back("w + dx1^dy2", std::move(s3));
    return seeds;
}

void append_orbit_span(std::vector<Thunk>& thunks, int n, int budget) {
    for (const auto& [label, seed] : orbit_seeds(n)) {
        thunks.push_back([label = label, seed = seed, budget] {
            CheckReport r = orbit_span(seed, budget);
            r.params["seed"] = label;
            return r;
        });
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) thunks.push_back([n, i, j] { return shear_identity_check(n, i, j); });
    thunks.push_back([n] { return averaging_identity_check(n, 1); });
    thunks.push_back([n] { return span_step_f_diagonal(n, 1); });
    thunks.push_back([n] { return span_step_mixed_to_e(n, 1, 2); });
    thunks.push_back([n] { return span_step_e_to_diagonal(n, 1, 2); });
}

CheckReport check_large_family(int n) {
    CheckReport r;
    r.check = "family.power_span";
    r.params = {{"n", n}};
    const LargeFamily family = construct_large_family(n);
    const Form omega_n = form_power(standard_symplectic_form(n), n);
    bool volumes_ok = true;
    for (const auto& f : family.pullback_forms)
        volumes_ok = volumes_ok && form_power(f, n) == omega_n;
    r.pass = family.complete && volumes_ok;
    r.witness = {{"rank", family.rank},
                 {"target_rank", family.target_rank},
                 {"members", family.members.size()},
                 {"volume_checks_pass", volumes_ok},
                 {"certificate", family.certificate}};
    return r;
}

void append_counterexample(std::vector<Thunk>& thunks, int n, const std::vector<Rational>& scales,
                           const std::vector<int>& ks) {
    for (const auto& s : scales) {
        thunks.push_back([n, s] {
            return verify_volume_preserving(s == Rational(1) ? CounterexampleMap::identity(n)
                                                             : CounterexampleMap::make(n, s));
        });
        if (s > Rational(1)) {
            // the identity member moves nothing, so the k-checks only make
            // sense for proper scales
            std::vector<int> k_list = ks;
            if (k_list.empty())
                for (int k = 1; k < n; ++k) k_list.push_back(k);
            for (int k : k_list) {
                thunks.push_back([n, s, k] {
                    return verify_not_k_preserving(CounterexampleMap::make(n, s), k);
                });
            }
        }
        thunks.push_back([n, s] { return scaling_factor_check(n, s); });
    }
}

std::vector<Thunk> build_thunks(const SuiteConfig& config) {
    std::vector<Thunk> thunks;
    const bool all = config.suite == "all";
    if (all || config.suite == "kahler")
        for (int n : config.n_values) append_kahler(thunks, n);
    if (all || config.suite == "injectivity")
        for (int n : config.n_values) append_injectivity(thunks, n, config.k_values);
    if (all || config.suite == "orbit-span")
        for (int n : config.n_values) append_orbit_span(thunks, n, config.budget);
    if (all || config.suite == "large-family")
        for (int n : config.n_values) thunks.push_back([n] { return check_large_family(n); });
    if (all || config.suite == "counterexample")
        for (int n : config.n_values) append_counterexample(thunks, n, config.scales, config.k_values);
    return thunks;
}

}  // namespace

void SuiteConfig::validate() const {
    static const char* known[] = {"kahler", "injectivity", "orbit-span",
                                  "large-family", "counterexample", "all"};
    bool ok = false;
    for (const char* s : known) ok = ok || suite == s;
    if (!ok) throw std::invalid_argument("SuiteConfig: unknown suite '" + suite + "'");
    if (n_values.empty()) throw std::invalid_argument("SuiteConfig: empty n range");
    for (int n : n_values) {
        if (n < 1) throw std::invalid_argument("SuiteConfig: n must be positive");
        if (n > max_n)
            throw std::invalid_argument("SuiteConfig: n exceeds the cap " + std::to_string(max_n) +
                                        " (LEFSCHETZ_MAX_N)");
        if (n < 2 && suite != "kahler" && suite != "all")
            throw std::invalid_argument("SuiteConfig: suite '" + suite + "' requires n >= 2");
    }
    for (int k : k_values)
        if (k < 1) throw std::invalid_argument("SuiteConfig: k must be positive");
    for (const auto& s : scales)
        if (s < Rational(1)) throw std::invalid_argument("SuiteConfig: scales must be >= 1");
    if (budget < 1) throw std::invalid_argument("SuiteConfig: budget must be at least 1");
    if (jobs < 1) throw std::invalid_argument("SuiteConfig: jobs must be at least 1");
}

SuiteResult run_suite(const SuiteConfig& config) {
    config.validate();
    const auto thunks = build_thunks(config);
    SuiteResult result;
    result.reports.resize(thunks.size());
    if (config.jobs <= 1) {
        for (size_t i = 0; i < thunks.size(); ++i) result.reports[i] = thunks[i]();
    } else {
        // Workers fill pre-assigned slots, so the report order is the suite
        // order no matter how execution interleaves.
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= thunks.size()) return;
                try {
                    result.reports[i] = thunks[i]();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const int threads = std::min<int>(config.jobs, static_cast<int>(thunks.size()));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    result.all_passed = all_passed(result.reports);
    return result;
}

std::string render_reports(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr.dump(2) + "\n";
}

std::string describe_form(const Form& f) {
    std::ostringstream os;
    os << "degree " << f.degree() << " form on R^" << 2 * f.half_dim() << " (n = " << f.half_dim()
       << "), " << f.term_count() << (f.term_count() == 1 ? " term" : " terms");
    if (f.degree() == 2) {
        const auto w = weight_decompose(f);
        std::vector<std::string> families;
        if (!w.e.empty()) families.push_back("E");
        if (!w.e_prime.empty()) families.push_back("E'");
        if (!w.f_mixed.empty()) families.push_back("F-mixed");
        if (!w.f_diag.empty()) families.push_back("F-diagonal");
        os << ", weights: ";
        if (families.empty()) {
            os << "none";
        } else if (families.size() == 1 && families[0] == "F-diagonal") {
            os << "F-diagonal only";
        } else {
            for (size_t i = 0; i < families.size(); ++i) os << (i ? ", " : "") << families[i];
        }
        os << (form_power(f, f.half_dim()).is_zero() ? ", degenerate" : ", non-degenerate");
    }
    const auto t = CompatibleTriple::standard(f.half_dim());
    os << (op_Lambda(f, t).is_zero() ? ", primitive" : ", not primitive");
    return os.str();
}

OperatorMatrix export_operator(const std::string& op_name, int n, int k) {
    if (n < 1) throw std::invalid_argument("export_operator: n must be positive");
    if (k < 0 || k > 2 * n) throw std::invalid_argument("export_operator: degree out of range");
    const auto t = CompatibleTriple::standard(n);
    OperatorMatrix om = operator_matrix(op_name, k, t);
    if (op_name == "star") {
        const Matrix round_trip = star_matrix(2 * n - k, t).mat * om.mat;
        const Matrix expected = Matrix::identity(static_cast<int>(exterior_dim(n, k)))
                                    .scaled(Rational(k % 2 == 0 ? 1 : -1));
        if (!(round_trip == expected))
            throw std::logic_error("export_operator: star involution self-check failed");
    }
    return om;
}

}  // namespace lefschetz
