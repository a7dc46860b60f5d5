#pragma once

#include "lefschetz/form.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/rational.hpp"

#include <vector>

namespace lefschetz {

/// Linear endomorphism of R^{2n}; column j is the image of the j-th basis
/// vector. Indices follow the MultiIndex convention (x_i at i, y_i at n+i).
class LinearMap {
public:
    LinearMap(int n, Matrix m);
    static LinearMap identity(int n);
    static LinearMap diagonal(int n, const std::vector<Rational>& entries);

    int half_dim() const { return n_; }
    int dim() const { return 2 * n_; }
    const Matrix& matrix() const { return m_; }

    /// 0-based access.
    const Rational& entry(int r, int c) const { return m_.at(r, c); }
    Rational& entry(int r, int c) { return m_.at(r, c); }

    Vector apply(const Vector& v) const;

    /// this after inner: (compose(inner))(v) = this(inner(v)).
    LinearMap compose(const LinearMap& inner) const;

    Rational determinant() const { return m_.determinant(); }

    bool operator==(const LinearMap&) const = default;

private:
    int n_;
    Matrix m_;
};

/// Pullback action on forms: pullback(t, a)(v_1..v_k) = a(t v_1, .., t v_k).
/// Contravariant: pullback(s.compose(t), a) = pullback(t, pullback(s, a)).
Form pullback(const LinearMap& t, const Form& a);

}  // namespace lefschetz
