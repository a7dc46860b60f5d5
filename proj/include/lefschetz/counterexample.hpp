#pragma once

#include "lefschetz/check_report.hpp"
#include "lefschetz/linear_map.hpp"

namespace lefschetz {

/// The diagonal map scaling every x_i and y_1..y_{n-1} by s and y_n by
/// s^(1-2n). Its determinant is 1 and it preserves w^n exactly, yet for
/// s > 1 it moves w^k for every 0 < k < n; both invariants are asserted at
/// construction. The parameter composes multiplicatively:
/// make(n,s) after make(n,s') equals make(n, s s').
class CounterexampleMap {
public:
    /// Requires s > 1; the s = 1 member is only available as identity(n).
    static CounterexampleMap make(int n, const Rational& scale);
    static CounterexampleMap identity(int n);

    int half_dim() const { return n_; }
    const Rational& scale() const { return s_; }
    const LinearMap& map() const { return m_; }

private:
    CounterexampleMap(int n, Rational s, LinearMap m);

    int n_;
    Rational s_;
    LinearMap m_;
};

/// pass iff the pullback of w^n equals w^n exactly.
CheckReport verify_volume_preserving(const CounterexampleMap& f);

/// pass iff the pullback of w^k differs from w^k; the witness is the
/// lexicographically smallest differing monomial with both coefficients.
CheckReport verify_not_k_preserving(const CounterexampleMap& f, int k);

/// Evaluates w^(n-1) and its pullback on (e_1, e_1', .., e_{n-1},
/// e_{n-1}'): the ratio must be s^(2n-2). A second tuple through the
/// squeezed plane is evaluated alongside (its ratio is s^-2), and the
/// witness records the ordering convention for the raw values.
CheckReport scaling_factor_check(int n, const Rational& s);

}  // namespace lefschetz
