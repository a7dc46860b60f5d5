#pragma once

#include "lefschetz/form.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/triple.hpp"

#include <string>
#include <vector>

namespace lefschetz {

/// Exact matrix of a degree-homogeneous operator over the lexicographic
/// monomial bases: rows = C(2n, target degree), cols = C(2n, source
/// degree). Out-of-range degrees give zero-dimensional shapes, which keeps
/// compositions across empty degrees well-typed.
struct OperatorMatrix {
    int n = 0;
    int source_degree = 0;
    int target_degree = 0;
    Matrix mat;
};

/// Gram-determinant extension of the metric to degree-k forms.
Rational induced_inner_product(const Form& a, const Form& b, const CompatibleTriple& t);

/// Gram matrix of the induced inner product on the degree-k monomial basis.
Matrix gram_matrix(int k, const CompatibleTriple& t);

/// The volume form of the triple: evaluates 1 on a g-orthonormal basis
/// oriented by J. Computed as w^n / n!, which stays rational for every
/// rational triple.
Form volume_form(const CompatibleTriple& t);

/// Hodge star: the unique (2n-k)-form with a ^ star(b) = g(a, b) vol for
/// all degree-k forms a. Solved monomial-by-monomial through the
/// complement pairing.
Form hodge_star(const Form& a, const CompatibleTriple& t);

/// Lefschetz operator: wedge with the symplectic form.
Form op_L(const Form& a, const CompatibleTriple& t);

/// Dual Lefschetz operator: the g-adjoint of L. Computed by the adjoint
/// route and cross-checked against star-conjugation on every call; the two
/// must agree exactly.
Form op_Lambda(const Form& a, const CompatibleTriple& t);

/// Counting operator: scales degree-k forms by (k - n).
Form op_H(const Form& a, const CompatibleTriple& t);

OperatorMatrix l_matrix(int k, const CompatibleTriple& t);
OperatorMatrix l_power_matrix(int power, int k, const CompatibleTriple& t);
OperatorMatrix lambda_matrix(int k, const CompatibleTriple& t);
OperatorMatrix h_matrix(int k, const CompatibleTriple& t);
OperatorMatrix star_matrix(int k, const CompatibleTriple& t);

/// Operator lookup for the CLI: "L", "Lambda", "H", "star" or "Lpow:i".
OperatorMatrix operator_matrix(const std::string& op_name, int k, const CompatibleTriple& t);

/// Basis of P^k = ker(Lambda) on degree k, as forms. Size is
/// C(2n,k) - C(2n,k-2) for k <= n and 0 for k > n.
std::vector<Form> primitive_space_basis(int k, const CompatibleTriple& t);

/// input = sum_i L^i(components[i]) with every component primitive of
/// degree k - 2i. Components with zero value are included so the index
/// structure is explicit.
struct PrimitiveDecomposition {
    Form input;
    std::vector<std::pair<int, Form>> components;
};

/// Reusable exact decomposer for one (triple, degree): the primitive bases
/// and the inverted block system are built once.
class PrimitiveDecomposer {
public:
    PrimitiveDecomposer(int k, const CompatibleTriple& t);
    PrimitiveDecomposition decompose(const Form& a) const;

    /// (level i, dim of the primitive space it lifts), contributing levels
    /// only.
    std::vector<std::pair<int, int>> level_dims() const;

private:
    int n_;
    int k_;
    std::vector<MultiIndex> target_basis_;
    std::vector<std::vector<Form>> primitive_bases_;  // per i
    std::vector<int> levels_;                         // i values with k-2i >= 0
    Matrix system_inverse_;
};

PrimitiveDecomposition primitive_decompose(const Form& a, const CompatibleTriple& t);

}  // namespace lefschetz
