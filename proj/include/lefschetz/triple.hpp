#pragma once

#include "lefschetz/form.hpp"
#include "lefschetz/linear_map.hpp"
#include "lefschetz/matrix.hpp"

namespace lefschetz {

/// Compatible triple (g, J, w) on R^{2n}: an inner product g, an almost
/// complex structure with J*J = -id that is a g-isometry, and the induced
/// symplectic form w = g(J., .). All three invariants are checked at
/// construction. The standard instance has g = identity and J the block
/// structure e_i -> e_i', e_i' -> -e_i, so w is the standard symplectic
/// form.
class CompatibleTriple {
public:
    static CompatibleTriple standard(int n);

    /// Builds from a metric Gram matrix and a complex structure, deriving w.
    static CompatibleTriple make(Matrix metric, LinearMap j);

    int half_dim() const { return n_; }
    const Matrix& metric() const { return g_; }
    /// Inverse Gram matrix: the induced inner product on covectors.
    const Matrix& dual_metric() const { return g_dual_; }
    bool dual_metric_diagonal() const { return dual_diagonal_; }
    const LinearMap& complex_structure() const { return j_; }
    const Form& symplectic_form() const { return omega_; }

private:
    CompatibleTriple(int n, Matrix g, Matrix g_dual, LinearMap j, Form omega);

    int n_;
    Matrix g_;
    Matrix g_dual_;
    bool dual_diagonal_;
    LinearMap j_;
    Form omega_;
};

}  // namespace lefschetz
