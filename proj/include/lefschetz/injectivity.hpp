#pragma once

#include "lefschetz/check_report.hpp"
#include "lefschetz/matrix.hpp"

namespace lefschetz {

/// Matrix of a -> w^{k-1} ^ a from degree 2 to degree 2k over the
/// lexicographic monomial bases, with w the standard symplectic form.
Matrix wedge_power_map(int n, int k);

/// Exact kernel of the wedge map on 2-forms. For 0 < k < n the kernel must
/// be {0}; at k = n it has dimension C(2n,2) - 1 (the map has rank 1). The
/// n = 2 case is accepted but flagged trivial.
CheckReport verify_injectivity(int n, int k);

/// Replays the coefficient-elimination proof of injectivity on a symbolic
/// 2-form: unique-monomial eliminations for the off-diagonal coefficients,
/// then either the 3-plane pair-relation chain or the contraction /
/// induction step producing b(i,i) = -(k-1) b(j,j). Returns the ordered
/// trace and cross-checks the outcome against verify_injectivity.
CheckReport proof_certificate_kernel(int n, int k);

/// ker(^ w^{k-1}) is contained in ker(^ w^{n-1}) on 2-forms; exact subspace
/// containment of kernel bases.
CheckReport kernel_chain_check(int n, int k);

}  // namespace lefschetz
