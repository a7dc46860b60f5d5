#include "lefschetz/triple.hpp"

#include <stdexcept>
#include <utility>

namespace lefschetz {

namespace {

bool is_diagonal(const Matrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (r != c && !m.at(r, c).is_zero()) return false;
    return true;
}

void check_positive_definite(const Matrix& g) {
    // Sylvester: all leading principal minors positive.
    for (int k = 1; k <= g.rows(); ++k) {
        Matrix sub(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub.at(r, c) = g.at(r, c);
        if (sub.determinant().sign() <= 0)
            throw std::invalid_argument("CompatibleTriple: metric is not positive definite");
    }
}

}  // namespace

CompatibleTriple::CompatibleTriple(int n, Matrix g, Matrix g_dual, LinearMap j, Form omega)
    : n_(n),
      g_(std::move(g)),
      g_dual_(std::move(g_dual)),
      dual_diagonal_(is_diagonal(g_dual_)),
      j_(std::move(j)),
      omega_(std::move(omega)) {}

CompatibleTriple CompatibleTriple::standard(int n) {
    if (n < 1) throw std::invalid_argument("CompatibleTriple: n must be positive");
    Matrix j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j.at(n + i, i) = 1;   // e_i -> e_i'
        j.at(i, n + i) = -1;  // e_i' -> -e_i
    }
    return make(Matrix::identity(2 * n), LinearMap(n, std::move(j)));
}

CompatibleTriple CompatibleTriple::make(Matrix metric, LinearMap j) {
    const int n = j.half_dim();
    const int dim = 2 * n;
    if (metric.rows() != dim || metric.cols() != dim)
        throw std::invalid_argument("CompatibleTriple: metric must be 2n x 2n");
    if (metric != metric.transpose())
        throw std::invalid_argument("CompatibleTriple: metric must be symmetric");
    check_positive_definite(metric);

    const Matrix& jm = j.matrix();
    if (!(jm * jm + Matrix::identity(dim)).is_zero())
        throw std::invalid_argument("CompatibleTriple: J*J must be -identity");
    if (jm.transpose() * metric * jm != metric)
        throw std::invalid_argument("CompatibleTriple: J must be a g-isometry");

    // w(v, w) = g(Jv, w), so the coefficient matrix is J^T G.
    Matrix omega_mat = jm.transpose() * metric;
    if (omega_mat != omega_mat.transpose().scaled(Rational(-1)))
        throw std::invalid_argument("CompatibleTriple: derived form is not alternating");
    Form omega(n, 2);
    for (int p = 0; p < dim; ++p)
        for (int q = p + 1; q < dim; ++q) omega.add_term(MultiIndex{p + 1, q + 1}, omega_mat.at(p, q));

    auto dual = metric.inverse();
    if (!dual) throw std::invalid_argument("CompatibleTriple: metric is singular");
    return CompatibleTriple(n, std::move(metric), std::move(*dual), std::move(j), std::move(omega));
}

}  // namespace lefschetz
