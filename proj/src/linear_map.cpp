#include "lefschetz/linear_map.hpp"

#include <stdexcept>
#include <utility>

namespace lefschetz {

LinearMap::LinearMap(int n, Matrix m) : n_(n), m_(std::move(m)) {
    if (n < 1) throw std::invalid_argument("LinearMap: n must be positive");
    if (m_.rows() != 2 * n || m_.cols() != 2 * n)
        throw std::invalid_argument("LinearMap: matrix must be 2n x 2n");
}

LinearMap LinearMap::identity(int n) { return LinearMap(n, Matrix::identity(2 * n)); }

LinearMap LinearMap::diagonal(int n, const std::vector<Rational>& entries) {
    if (entries.size() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("LinearMap: expected 2n diagonal entries");
    Matrix m(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i) m.at(i, i) = entries[static_cast<size_t>(i)];
    return LinearMap(n, std::move(m));
}

Vector LinearMap::apply(const Vector& v) const {
    if (v.half_dim() != n_) throw std::invalid_argument("LinearMap: dimension mismatch");
    Vector out = Vector::zero(n_);
    for (int r = 1; r <= 2 * n_; ++r) {
        Rational acc = 0;
        for (int c = 1; c <= 2 * n_; ++c) {
            const Rational& e = m_.at(r - 1, c - 1);
            if (!e.is_zero()) acc += e * v.coord(c);
        }
        out.coord(r) = acc;
    }
    return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.n_ != n_) throw std::invalid_argument("LinearMap: dimension mismatch");
    return LinearMap(n_, m_ * inner.m_);
}

Form pullback(const LinearMap& t, const Form& a) {
    if (t.half_dim() != a.half_dim()) throw std::invalid_argument("pullback: dimension mismatch");
    const int dim = t.dim();
    // Row i of the matrix is the pullback of the coordinate 1-form e^i.
    std::vector<Form> covector(static_cast<size_t>(dim), Form(t.half_dim(), 1));
    std::vector<bool> built(static_cast<size_t>(dim), false);
    auto row_form = [&](int i) -> const Form& {
        if (!built[static_cast<size_t>(i - 1)]) {
            Form f(t.half_dim(), 1);
            for (int c = 1; c <= dim; ++c) {
                const Rational& e = t.entry(i - 1, c - 1);
                if (!e.is_zero()) f.add_term(MultiIndex{c}, e);
            }
            covector[static_cast<size_t>(i - 1)] = std::move(f);
            built[static_cast<size_t>(i - 1)] = true;
        }
        return covector[static_cast<size_t>(i - 1)];
    };
    Form r(a.half_dim(), a.degree());
    for (const auto& [m, c] : a.terms()) {
        Form acc = Form::constant(a.half_dim(), c);
        for (int i : m.indices()) acc = wedge(acc, row_form(i));
        r = r + acc;
    }
    return r;
}

}  // namespace lefschetz
