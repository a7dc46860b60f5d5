#pragma once

#include "lefschetz/multi_index.hpp"
#include "lefschetz/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace lefschetz {

/// Vector in R^{2n}. Coordinates are addressed 1..2n to match the index
/// convention of MultiIndex (x_i at i, y_i at n+i).
class Vector {
public:
    Vector(int n, std::vector<Rational> coords);
    static Vector zero(int n);
    static Vector basis(int n, int index);

    int half_dim() const { return n_; }
    int dim() const { return 2 * n_; }
    const Rational& coord(int index) const { return c_[static_cast<size_t>(index - 1)]; }
    Rational& coord(int index) { return c_[static_cast<size_t>(index - 1)]; }

    bool operator==(const Vector&) const = default;

private:
    int n_;
    std::vector<Rational> c_;
};

/// Degree-k alternating form on R^{2n}, stored as a sparse map from basis
/// label to coefficient. Zero coefficients are never stored, so equality is
/// plain term-map equality. Degrees above 2n are legal but only admit the
/// zero form.
class Form {
public:
    Form(int n, int degree);
    static Form constant(int n, const Rational& value);
    static Form monomial(int n, const MultiIndex& m, const Rational& coeff);

    int half_dim() const { return n_; }
    int degree() const { return degree_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    /// Coefficient on a canonical label; zero when absent.
    Rational coeff(const MultiIndex& m) const;

    /// Accumulates c on an already-canonical label, dropping the entry when
    /// the total cancels to zero.
    void add_term(const MultiIndex& m, const Rational& c);

    /// Accumulates c on an arbitrary index tuple, resolving order and sign.
    /// A repeated index contributes nothing.
    void add_unsorted_term(std::vector<int> indices, const Rational& c);

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form scaled(const Rational& c) const;

    bool operator==(const Form&) const = default;

    /// Coordinates in the given lexicographic monomial basis.
    std::vector<Rational> coordinates(const std::vector<MultiIndex>& basis) const;
    static Form from_coordinates(int n, int degree, const std::vector<MultiIndex>& basis,
                                 const std::vector<Rational>& coords);

private:
    int n_;
    int degree_;
    std::map<MultiIndex, Rational> terms_;
};

/// dx_1^y_1 + ... + dx_n^y_n: one unit term per Darboux pair (i, n+i).
Form standard_symplectic_form(int n);

/// Exterior product. Bilinear, associative, graded-commutative; signs come
/// from the merge parity of the index tuples.
Form wedge(const Form& a, const Form& b);

/// k-fold wedge of a with itself; k = 0 gives the constant 1.
Form form_power(const Form& a, int k);

/// Multilinear alternating evaluation; the argument count must equal the
/// degree.
Rational evaluate(const Form& a, std::span<const Vector> vectors);

/// Contraction by a vector; degree-lowering antiderivation.
Form interior_product(const Vector& x, const Form& a);

}  // namespace lefschetz
