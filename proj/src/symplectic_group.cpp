#include "lefschetz/symplectic_group.hpp"

#include "lefschetz/counterexample.hpp"
#include "lefschetz/json_io.hpp"
#include "lefschetz/matrix.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

namespace {

Form plane_form(int n, int t) { return Form::monomial(n, MultiIndex{t, n + t}, Rational(1)); }

std::string matrix_key(const Matrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) os << m.at(r, c).str() << ',';
    return os.str();
}

void require_plane(int n, int p, const char* who) {
    if (p < 1 || p > n) throw std::invalid_argument(std::string(who) + ": plane index out of range");
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(LinearMap m) : m_(std::move(m)) {
    const Form omega = standard_symplectic_form(m_.half_dim());
    if (!(pullback(m_, omega) == omega))
        throw std::invalid_argument("SymplecticMatrix: map does not preserve the symplectic form");
    if (!(m_.determinant() == Rational(1)))
        throw std::invalid_argument("SymplecticMatrix: determinant is not 1");
}

SymplecticMatrix torus_element(const std::vector<Rational>& t) {
    const int n = static_cast<int>(t.size());
    if (n < 1) throw std::invalid_argument("torus_element: empty parameter tuple");
    std::vector<Rational> diag;
    diag.reserve(static_cast<size_t>(2 * n));
    for (const auto& ti : t) {
        if (ti.is_zero()) throw std::invalid_argument("torus_element: zero entry");
        diag.push_back(ti);
    }
    for (const auto& ti : t) diag.push_back(ti.reciprocal());
    return SymplecticMatrix(LinearMap::diagonal(n, diag));
}

SymplecticMatrix plane_swap(int n, int r, int i) {
    require_plane(n, r, "plane_swap");
    require_plane(n, i, "plane_swap");
    if (r == i) throw std::invalid_argument("plane_swap: planes must differ");
    Matrix m = Matrix::identity(2 * n);
    m.at(r - 1, r - 1) = 0;
    m.at(i - 1, i - 1) = 0;
    m.at(r - 1, i - 1) = 1;
    m.at(i - 1, r - 1) = 1;
    m.at(n + r - 1, n + r - 1) = 0;
    m.at(n + i - 1, n + i - 1) = 0;
    m.at(n + r - 1, n + i - 1) = 1;
    m.at(n + i - 1, n + r - 1) = 1;
    return SymplecticMatrix(LinearMap(n, std::move(m)));
}

SymplecticMatrix shear_f_ij(int n, int i, int j) {
    require_plane(n, i, "shear_f_ij");
    require_plane(n, j, "shear_f_ij");
    if (i == j) throw std::invalid_argument("shear_f_ij: indices must differ");
    Matrix m = Matrix::identity(2 * n);
    m.at(j - 1, i - 1) = -1;          // x_j -> x_j - x_i
    m.at(n + i - 1, n + j - 1) = 1;   // y_i -> y_i + y_j
    return SymplecticMatrix(LinearMap(n, std::move(m)));
}

SymplecticMatrix rotation_j(int n, int j) {
    require_plane(n, j, "rotation_j");
    Matrix m = Matrix::identity(2 * n);
    m.at(j - 1, j - 1) = 0;
    m.at(n + j - 1, n + j - 1) = 0;
    m.at(j - 1, n + j - 1) = -1;  // x_j -> -y_j
    m.at(n + j - 1, j - 1) = 1;   // y_j -> x_j
    return SymplecticMatrix(LinearMap(n, std::move(m)));
}

SymplecticMatrix hyperbolic_shear(int n, int r, int s) {
    require_plane(n, r, "hyperbolic_shear");
    require_plane(n, s, "hyperbolic_shear");
    if (r == s) throw std::invalid_argument("hyperbolic_shear: indices must differ");
    Matrix m = Matrix::identity(2 * n);
    m.at(r - 1, n + s - 1) = 1;  // x_r -> x_r + y_s
    m.at(s - 1, n + r - 1) = 1;  // x_s -> x_s + y_r
    return SymplecticMatrix(LinearMap(n, std::move(m)));
}

SymplecticMatrix plane_permutation(int n, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("plane_permutation: expected n images");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("plane_permutation: not a permutation");
        seen[static_cast<size_t>(v - 1)] = true;
    }
    Matrix m(2 * n, 2 * n);
    for (int p = 1; p <= n; ++p) {
        const int q = sigma[static_cast<size_t>(p - 1)];
        m.at(q - 1, p - 1) = 1;
        m.at(n + q - 1, n + p - 1) = 1;
    }
    return SymplecticMatrix(LinearMap(n, std::move(m)));
}

Form WeightComponents::reassemble() const {
    Form out(n, 2);
    for (const auto& [ij, c] : e) out.add_term(MultiIndex{ij.first, ij.second}, c);
    for (const auto& [ij, c] : e_prime) out.add_term(MultiIndex{n + ij.first, n + ij.second}, c);
    for (const auto& [ij, c] : f_mixed) out.add_term(MultiIndex{ij.first, n + ij.second}, c);
    for (const auto& [i, c] : f_diag) out.add_term(MultiIndex{i, n + i}, c);
    return out;
}

WeightComponents weight_decompose(const Form& a) {
    if (a.degree() != 2) throw std::invalid_argument("weight_decompose: degree must be 2");
    WeightComponents w;
    w.n = a.half_dim();
    const int n = w.n;
    for (const auto& [m, c] : a.terms()) {
        const int p = m.indices()[0], q = m.indices()[1];
        if (q <= n) {
            w.e[{p, q}] = c;
        } else if (p > n) {
            w.e_prime[{p - n, q - n}] = c;
        } else if (q - n == p) {
            w.f_diag[p] = c;
        } else {
            w.f_mixed[{p, q - n}] = c;
        }
    }
    return w;
}

std::vector<Generator> generator_catalog(int n) {
    std::vector<Generator> out;
    auto torus_at = [n](int i, const Rational& scale) {
        std::vector<Rational> t(static_cast<size_t>(n), Rational(1));
        t[static_cast<size_t>(i - 1)] = scale;
        return torus_element(t);
    };
    for (int i = 1; i <= n; ++i) {
        out.push_back({"torus", {std::to_string(i), "2"}, torus_at(i, Rational(2)).map()});
        out.push_back({"torus", {std::to_string(i), "1/2"}, torus_at(i, Rational(1, 2)).map()});
    }
    for (int r = 1; r <= n; ++r)
        for (int i = r + 1; i <= n; ++i)
            out.push_back({"swap", {std::to_string(r), std::to_string(i)}, plane_swap(n, r, i).map()});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                out.push_back({"shear", {std::to_string(i), std::to_string(j)}, shear_f_ij(n, i, j).map()});
    for (int j = 1; j <= n; ++j)
        out.push_back({"rotation", {std::to_string(j)}, rotation_j(n, j).map()});
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            out.push_back(
                {"hyperbolic", {std::to_string(r), std::to_string(s)}, hyperbolic_shear(n, r, s).map()});
    return out;
}

CheckReport orbit_span(const Form& alpha, int budget) {
    if (alpha.degree() != 2) throw std::invalid_argument("orbit_span: seed must be a 2-form");
    if (budget < 1) throw std::invalid_argument("orbit_span: budget must be at least 1");
    const int n = alpha.half_dim();
    const Form omega = standard_symplectic_form(n);
    if (form_power(alpha, n).is_zero())
        throw std::invalid_argument("orbit_span: seed 2-form is degenerate");
    {
        const Rational lambda = alpha.coeff(MultiIndex{1, n + 1});
        if (!lambda.is_zero() && alpha == omega.scaled(lambda))
            throw std::invalid_argument("orbit_span: seed is proportional to the symplectic form");
    }

    const auto basis2 = multi_index_basis(n, 2);
    const int target = static_cast<int>(basis2.size());
    const auto catalog = generator_catalog(n);

    RowSpan span(target);
    nlohmann::json words = nlohmann::json::array();
    auto offer = [&](const Form& f, const nlohmann::json& word) {
        if (span.add(f.coordinates(basis2)))
            words.push_back({{"word", word}, {"form", io::form_to_json(f)}});
    };

    span.add(omega.coordinates(basis2));  // the adjoined line

    struct Node {
        LinearMap map;
        Form pulled;
        nlohmann::json word;
    };
    std::deque<Node> frontier;
    std::set<std::string> seen;
    {
        Node root{LinearMap::identity(n), alpha, nlohmann::json::array()};
        seen.insert(matrix_key(root.map.matrix()));
        offer(root.pulled, root.word);
        frontier.push_back(std::move(root));
    }
    for (int level = 1; level <= budget && span.rank() < target; ++level) {
        std::deque<Node> next;
        for (const auto& node : frontier) {
            for (const auto& gen : catalog) {
                LinearMap child = node.map.compose(gen.map);
                auto key = matrix_key(child.matrix());
                if (!seen.insert(std::move(key)).second) continue;
                Form pulled = pullback(gen.map, node.pulled);
                nlohmann::json word = node.word;
                word.push_back(gen.to_json());
                offer(pulled, word);
                if (span.rank() >= target) break;
                next.push_back(Node{std::move(child), std::move(pulled), std::move(word)});
            }
            if (span.rank() >= target) break;
        }
        frontier = std::move(next);
    }

    CheckReport r;
    r.check = "orbit.span_saturation";
    r.params = {{"n", n}, {"budget", budget}, {"seed_terms", alpha.term_count()}};
    r.pass = span.rank() >= target;
    r.witness = {{"span_dim", span.rank()}, {"target_dim", target}, {"spanning_words", std::move(words)}};
    return r;
}

CheckReport shear_identity_check(int n, int i, int j) {
    CheckReport r;
    r.check = "orbit.shear_identity";
    r.params = {{"n", n}, {"i", i}, {"j", j}};
    const Form lhs = pullback(shear_f_ij(n, i, j).map(), plane_form(n, i)) - plane_form(n, i);
    const Form rhs = Form::monomial(n, MultiIndex{i, n + j}, Rational(1));
    r.pass = (lhs == rhs);
    return r;
}

CheckReport averaging_identity_check(int n, int r) {
    CheckReport rep;
    rep.check = "orbit.averaging_identity";
    rep.params = {{"n", n}, {"r", r}};
    const Form omega = standard_symplectic_form(n);
    Form sum(n, 2);
    for (int i = 1; i <= n; ++i) sum = sum + (plane_form(n, r) - plane_form(n, i));
    const Form average = (sum + omega).scaled(Rational(1, n));
    rep.pass = (average == plane_form(n, r));
    return rep;
}

CheckReport span_step_f_diagonal(int n, int r) {
    CheckReport rep;
    rep.check = "orbit.step_f_diagonal_generates_mixed";
    rep.params = {{"n", n}, {"r", r}};
    const auto basis2 = multi_index_basis(n, 2);
    const Form seed = plane_form(n, r);
    RowSpan span(static_cast<int>(basis2.size()));
    bool ok = true;
    std::vector<LinearMap> to_plane;
    for (int i = 1; i <= n; ++i) {
        LinearMap w = (i == r) ? LinearMap::identity(n) : plane_swap(n, r, i).map();
        const Form f = pullback(w, seed);
        ok = ok && (f == plane_form(n, i));
        span.add(f.coordinates(basis2));
        to_plane.push_back(std::move(w));
    }
    for (int i = 1; i <= n && ok; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const LinearMap word = to_plane[static_cast<size_t>(i - 1)].compose(shear_f_ij(n, i, j).map());
            span.add(pullback(word, seed).coordinates(basis2));
        }
    }
    for (int i = 1; i <= n && ok; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            ok = ok && span.contains(Form::monomial(n, MultiIndex{i, n + j}, Rational(1)).coordinates(basis2));
        }
    rep.pass = ok;
    rep.witness = {{"span_dim", span.rank()}};
    return rep;
}

namespace {

// Permutation with sigma(from1) = to1 and sigma(from2) = to2, remaining
// planes matched in increasing order.
std::vector<int> route_two(int n, int from1, int to1, int from2, int to2) {
    std::vector<int> sigma(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n), false);
    sigma[static_cast<size_t>(from1 - 1)] = to1;
    used[static_cast<size_t>(to1 - 1)] = true;
    sigma[static_cast<size_t>(from2 - 1)] = to2;
    used[static_cast<size_t>(to2 - 1)] = true;
    int next = 1;
    for (int p = 1; p <= n; ++p) {
        if (sigma[static_cast<size_t>(p - 1)] != 0) continue;
        while (used[static_cast<size_t>(next - 1)]) ++next;
        sigma[static_cast<size_t>(p - 1)] = next;
        used[static_cast<size_t>(next - 1)] = true;
    }
    return sigma;
}

}  // namespace

CheckReport span_step_mixed_to_e(int n, int r, int s) {
    CheckReport rep;
    rep.check = "orbit.step_mixed_generates_e_pairs";
    rep.params = {{"n", n}, {"r", r}, {"s", s}};
    const auto basis2 = multi_index_basis(n, 2);
    const Form seed = Form::monomial(n, MultiIndex{r, n + s}, Rational(1));
    RowSpan span(static_cast<int>(basis2.size()));
    bool ok = true;
    // All mixed weights via plane permutations; the pullback of dx_r^dy_s
    // under the permutation sending i to r and j to s is dx_i^dy_j.
    for (int i = 1; i <= n && ok; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const auto perm = plane_permutation(n, route_two(n, i, r, j, s));
            const Form f = pullback(perm.map(), seed);
            ok = ok && (f == Form::monomial(n, MultiIndex{i, n + j}, Rational(1)));
            span.add(f.coordinates(basis2));
            // rotation in plane j turns dx_i^dy_j into dx_i^dx_j; rotation
            // in plane i turns it into -dy_i^dy_j
            const Form e_pair = pullback(rotation_j(n, j).map(), f);
            Form expected_e(n, 2);
            expected_e.add_unsorted_term({i, j}, Rational(1));
            ok = ok && (e_pair == expected_e);
            span.add(e_pair.coordinates(basis2));
            const Form e_prime_pair = pullback(rotation_j(n, i).map(), f);
            Form expected_e_prime(n, 2);
            expected_e_prime.add_unsorted_term({n + i, n + j}, Rational(-1));
            ok = ok && (e_prime_pair == expected_e_prime);
            span.add(e_prime_pair.coordinates(basis2));
        }
    }
    for (int i = 1; i <= n && ok; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ok = ok && span.contains(Form::monomial(n, MultiIndex{i, j}, Rational(1)).coordinates(basis2));
            ok = ok && span.contains(
                           Form::monomial(n, MultiIndex{n + i, n + j}, Rational(1)).coordinates(basis2));
        }
    rep.pass = ok;
    rep.witness = {{"span_dim", span.rank()}};
    return rep;
}

CheckReport span_step_e_to_diagonal(int n, int r, int s) {
    CheckReport rep;
    rep.check = "orbit.step_e_pair_generates_f_diagonal";
    rep.params = {{"n", n}, {"r", r}, {"s", s}};
    const auto basis2 = multi_index_basis(n, 2);
    const Form omega = standard_symplectic_form(n);
    const Form seed = Form::monomial(n, MultiIndex{r, s}, Rational(1));
    RowSpan span(static_cast<int>(basis2.size()));
    bool ok = true;

    const LinearMap both_rotations = rotation_j(n, r).map().compose(rotation_j(n, s).map());
    const Form e_prime = pullback(both_rotations, seed);
    ok = ok && (e_prime == Form::monomial(n, MultiIndex{n + r, n + s}, Rational(1)));

    const LinearMap hyper = hyperbolic_shear(n, r, s).map();
    const Form sheared = pullback(hyper, seed);
    ok = ok && (sheared - seed + e_prime == plane_form(n, r) - plane_form(n, s));

    // alpha_i = dx_r^dy_r - dx_i^dy_i as combinations of pullbacks of the
    // seed, routed through the plane permutation fixing r and sending i to s.
    for (int i = 1; i <= n && ok; ++i) {
        if (i == r) continue;
        LinearMap route = LinearMap::identity(n);
        if (i != s) route = plane_permutation(n, route_two(n, r, r, i, s)).map();
        for (const Form& piece : {sheared, seed, e_prime})
            span.add(pullback(route, piece).coordinates(basis2));
        ok = ok && span.contains((plane_form(n, r) - plane_form(n, i)).coordinates(basis2));
    }
    span.add(omega.coordinates(basis2));  // the adjoined line enters the average
    for (int i = 1; i <= n && ok; ++i)
        ok = ok && span.contains(plane_form(n, i).coordinates(basis2));
    rep.pass = ok;
    rep.witness = {{"span_dim", span.rank()}};
    return rep;
}

LargeFamily construct_large_family(int n, const std::vector<LinearMap>& pool, int budget) {
    if (n < 2) throw std::invalid_argument("construct_large_family: requires n >= 2");
    if (budget < 1) throw std::invalid_argument("construct_large_family: budget must be at least 1");
    const Form omega = standard_symplectic_form(n);
    const Form omega_n = form_power(omega, n);
    for (const auto& seed : pool)
        if (!(form_power(pullback(seed, omega), n) == omega_n))
            throw std::invalid_argument("construct_large_family: pool map does not preserve the volume form");

    const auto basis_target = multi_index_basis(n, 2 * n - 2);
    LargeFamily family;
    family.target_rank = static_cast<int>(basis_target.size());

    // Candidate forms are g*(p*w) for generator words g; precompute p*w.
    std::vector<std::pair<nlohmann::json, Form>> seeds;
    seeds.emplace_back(nlohmann::json("identity"), omega);
    for (size_t i = 0; i < pool.size(); ++i)
        seeds.emplace_back(nlohmann::json("pool:" + std::to_string(i)), pullback(pool[i], omega));

    RowSpan span(family.target_rank);
    const auto catalog = generator_catalog(n);

    struct Node {
        LinearMap map;
        nlohmann::json word;
    };
    std::deque<Node> frontier;
    std::set<std::string> seen_words;
    frontier.push_back(Node{LinearMap::identity(n), nlohmann::json::array()});
    seen_words.insert(matrix_key(frontier.front().map.matrix()));

    auto offer = [&](const Node& node) {
        for (size_t i = 0; i < seeds.size() && family.rank < family.target_rank; ++i) {
            const Form candidate = pullback(node.map, seeds[i].second);
            if (!span.add(form_power(candidate, n - 1).coordinates(basis_target))) continue;
            if (!(form_power(candidate, n) == omega_n))
                throw std::logic_error("construct_large_family: candidate lost the volume form");
            LinearMap member = (i == 0) ? node.map : pool[i - 1].compose(node.map);
            family.members.push_back(member);
            family.certificate.push_back({{"seed", seeds[i].first},
                                          {"word", node.word},
                                          {"form", io::form_to_json(candidate)}});
            family.pullback_forms.push_back(candidate);
            family.rank = span.rank();
        }
    };

    offer(frontier.front());
    for (int level = 1; level <= budget && family.rank < family.target_rank; ++level) {
        std::deque<Node> next;
        for (const auto& node : frontier) {
            for (const auto& gen : catalog) {
                LinearMap child = node.map.compose(gen.map);
                auto key = matrix_key(child.matrix());
                if (!seen_words.insert(std::move(key)).second) continue;
                nlohmann::json word = node.word;
                word.push_back(gen.to_json());
                Node child_node{std::move(child), std::move(word)};
                offer(child_node);
                if (family.rank >= family.target_rank) break;
                next.push_back(std::move(child_node));
            }
            if (family.rank >= family.target_rank) break;
        }
        frontier = std::move(next);
    }
    family.complete = family.rank >= family.target_rank;
    return family;
}

LargeFamily construct_large_family(int n) {
    if (n < 2) throw std::invalid_argument("construct_large_family: requires n >= 2");
    std::vector<LinearMap> pool;
    const LinearMap squeeze = CounterexampleMap::make(n, Rational(2)).map();
    for (int i = 1; i <= n; ++i) {
        if (i == n) {
            pool.push_back(squeeze);
        } else {
            const LinearMap swap = plane_swap(n, i, n).map();
            pool.push_back(swap.compose(squeeze).compose(swap));
        }
    }
    return construct_large_family(n, pool, 3);
}

}  // namespace lefschetz
