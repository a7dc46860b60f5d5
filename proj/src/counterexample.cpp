#include "lefschetz/counterexample.hpp"

#include "lefschetz/form.hpp"

#include <stdexcept>

namespace lefschetz {

namespace {

Rational factorial(int k) {
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= Rational(i);
    return r;
}

}  // namespace

CounterexampleMap::CounterexampleMap(int n, Rational s, LinearMap m)
    : n_(n), s_(std::move(s)), m_(std::move(m)) {
    if (!(m_.determinant() == Rational(1)))
        throw std::logic_error("CounterexampleMap: determinant is not 1");
    const Form omega_n = form_power(standard_symplectic_form(n_), n_);
    if (!(pullback(m_, omega_n) == omega_n))
        throw std::logic_error("CounterexampleMap: volume form not preserved");
}

CounterexampleMap CounterexampleMap::make(int n, const Rational& scale) {
    if (n < 2) throw std::invalid_argument("CounterexampleMap: requires n >= 2");
    if (!(scale > Rational(1)))
        throw std::invalid_argument(
            "CounterexampleMap: scale must exceed 1 (the identity member is explicit)");
    std::vector<Rational> diag(static_cast<size_t>(2 * n), scale);
    diag[static_cast<size_t>(2 * n - 1)] = scale.pow(1 - 2 * n);
    return CounterexampleMap(n, scale, LinearMap::diagonal(n, diag));
}

CounterexampleMap CounterexampleMap::identity(int n) {
    if (n < 2) throw std::invalid_argument("CounterexampleMap: requires n >= 2");
    return CounterexampleMap(n, Rational(1), LinearMap::identity(n));
}

CheckReport verify_volume_preserving(const CounterexampleMap& f) {
    CheckReport r;
    r.check = "counterexample.volume_preserved";
    r.params = {{"n", f.half_dim()}, {"scale", f.scale().str()}};
    const Form omega_n = form_power(standard_symplectic_form(f.half_dim()), f.half_dim());
    const Form pulled = pullback(f.map(), omega_n);
    r.pass = (pulled == omega_n);
    const MultiIndex top = multi_index_basis(f.half_dim(), 2 * f.half_dim()).front();
    r.witness = {{"top_coefficient", omega_n.coeff(top).str()},
                 {"pulled_top_coefficient", pulled.coeff(top).str()}};
    return r;
}

CheckReport verify_not_k_preserving(const CounterexampleMap& f, int k) {
    const int n = f.half_dim();
    if (k < 1 || k >= n)
        throw std::invalid_argument("verify_not_k_preserving: requires 0 < k < n");
    CheckReport r;
    r.check = "counterexample.power_not_preserved";
    r.params = {{"n", n}, {"scale", f.scale().str()}, {"k", k}};
    const Form omega_k = form_power(standard_symplectic_form(n), k);
    const Form pulled = pullback(f.map(), omega_k);
    // lexicographically smallest differing monomial
    for (const auto& m : multi_index_basis(n, 2 * k)) {
        const Rational before = omega_k.coeff(m);
        const Rational after = pulled.coeff(m);
        if (before == after) continue;
        r.pass = true;
        r.witness = {{"idx", m.indices()}, {"coeff", before.str()}, {"pulled_coeff", after.str()}};
        return r;
    }
    r.pass = false;
    r.witness = {{"note", "pullback equals the power exactly"}};
    return r;
}

CheckReport scaling_factor_check(int n, const Rational& s) {
    if (n < 2) throw std::invalid_argument("scaling_factor_check: requires n >= 2");
    if (s < Rational(1)) throw std::invalid_argument("scaling_factor_check: requires s >= 1");
    CheckReport r;
    r.check = "counterexample.scaling_ratio";
    r.params = {{"n", n}, {"scale", s.str()}};

    const CounterexampleMap f =
        s == Rational(1) ? CounterexampleMap::identity(n) : CounterexampleMap::make(n, s);
    const Form omega_power = form_power(standard_symplectic_form(n), n - 1);
    const Form pulled = pullback(f.map(), omega_power);

    // main tuple: (e_1, e_1', .., e_{n-1}, e_{n-1}')
    std::vector<Vector> tuple;
    for (int i = 1; i < n; ++i) {
        tuple.push_back(Vector::basis(n, i));
        tuple.push_back(Vector::basis(n, n + i));
    }
    const Rational base = evaluate(omega_power, tuple);
    const Rational moved = evaluate(pulled, tuple);
    const Rational ratio = moved / base;

    // alternate tuple through the squeezed plane: swap the last pair for
    // (e_n, e_n')
    std::vector<Vector> alt;
    for (int i = 1; i + 1 < n; ++i) {
        alt.push_back(Vector::basis(n, i));
        alt.push_back(Vector::basis(n, n + i));
    }
    alt.push_back(Vector::basis(n, n));
    alt.push_back(Vector::basis(n, 2 * n));
    const Rational alt_ratio = evaluate(pulled, alt) / evaluate(omega_power, alt);

    const Rational expected = s.pow(2 * n - 2);
    const Rational expected_alt = s.pow(-2);
    const int block_sign = ((n - 1) * (n - 2) / 2) % 2 == 0 ? 1 : -1;
    r.pass = (base == factorial(n - 1)) && (ratio == expected) && (alt_ratio == expected_alt);
    r.witness = {{"value", base.str()},
                 {"pulled_value", moved.str()},
                 {"ratio", ratio.str()},
                 {"expected_ratio", expected.str()},
                 {"alt_tuple_ratio", alt_ratio.str()},
                 {"alt_tuple_expected_ratio", expected_alt.str()},
                 {"ordering",
                  "values are stated for the interleaved tuple (e_1, e_1', ..); reading the same "
                  "product against block-sorted labels multiplies them by the reordering parity"},
                 {"block_reorder_sign", block_sign}};
    return r;
}

}  // namespace lefschetz
