#include "lefschetz/form.hpp"

#include "lefschetz/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lefschetz {

Vector::Vector(int n, std::vector<Rational> coords) : n_(n), c_(std::move(coords)) {
    if (n < 1) throw std::invalid_argument("Vector: n must be positive");
    if (c_.size() != static_cast<size_t>(2 * n)) throw std::invalid_argument("Vector: expected 2n coordinates");
}

Vector Vector::zero(int n) { return Vector(n, std::vector<Rational>(static_cast<size_t>(2 * n), Rational(0))); }

Vector Vector::basis(int n, int index) {
    if (index < 1 || index > 2 * n) throw std::invalid_argument("Vector: basis index out of range");
    Vector v = zero(n);
    v.coord(index) = 1;
    return v;
}

Form::Form(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1) throw std::invalid_argument("Form: n must be positive");
    if (degree < 0) throw std::invalid_argument("Form: negative degree");
}

Form Form::constant(int n, const Rational& value) {
    Form f(n, 0);
    if (!value.is_zero()) f.terms_.emplace(MultiIndex{}, value);
    return f;
}

Form Form::monomial(int n, const MultiIndex& m, const Rational& coeff) {
    Form f(n, m.degree());
    f.add_term(m, coeff);
    return f;
}

Rational Form::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const MultiIndex& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.degree() != degree_) throw std::invalid_argument("Form: term degree mismatch");
    if (m.max_index() > 2 * n_) throw std::invalid_argument("Form: index above ambient dimension");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Form::add_unsorted_term(std::vector<int> indices, const Rational& c) {
    auto sorted = MultiIndex::from_unsorted(std::move(indices));
    if (!sorted) return;
    add_term(sorted->first, sorted->second == 1 ? c : -c);
}

Form Form::operator+(const Form& o) const {
    if (n_ != o.n_ || degree_ != o.degree_) throw std::invalid_argument("Form: sum shape mismatch");
    Form r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Form Form::operator-(const Form& o) const {
    if (n_ != o.n_ || degree_ != o.degree_) throw std::invalid_argument("Form: difference shape mismatch");
    Form r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Form Form::operator-() const { return scaled(Rational(-1)); }

Form Form::scaled(const Rational& c) const {
    Form r(n_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

std::vector<Rational> Form::coordinates(const std::vector<MultiIndex>& basis) const {
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto& [m, c] : terms_) {
        int pos = basis_position(basis, m);
        if (pos < 0) throw std::invalid_argument("Form: term missing from basis");
        out[static_cast<size_t>(pos)] = c;
    }
    return out;
}

Form Form::from_coordinates(int n, int degree, const std::vector<MultiIndex>& basis,
                            const std::vector<Rational>& coords) {
    if (basis.size() != coords.size()) throw std::invalid_argument("Form: coordinate length mismatch");
    Form f(n, degree);
    for (size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
    return f;
}

Form standard_symplectic_form(int n) {
    if (n < 1) throw std::invalid_argument("standard_symplectic_form: n must be positive");
    Form f(n, 2);
    for (int i = 1; i <= n; ++i) f.add_term(MultiIndex{i, n + i}, Rational(1));
    return f;
}

Form wedge(const Form& a, const Form& b) {
    if (a.half_dim() != b.half_dim()) throw std::invalid_argument("wedge: ambient dimension mismatch");
    Form r(a.half_dim(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto [m, sign] = MultiIndex::wedge(ma, mb);
            if (sign == 0) continue;
            r.add_term(m, sign == 1 ? ca * cb : -(ca * cb));
        }
    }
    return r;
}

Form form_power(const Form& a, int k) {
    if (k < 0) throw std::invalid_argument("form_power: negative exponent");
    Form r = Form::constant(a.half_dim(), Rational(1));
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

Rational evaluate(const Form& a, std::span<const Vector> vectors) {
    const int k = a.degree();
    if (static_cast<int>(vectors.size()) != k)
        throw std::invalid_argument("evaluate: argument count must equal the degree");
    for (const auto& v : vectors)
        if (v.half_dim() != a.half_dim()) throw std::invalid_argument("evaluate: ambient dimension mismatch");
    if (k == 0) return a.coeff(MultiIndex{});
    Rational total = 0;
    for (const auto& [m, c] : a.terms()) {
        Matrix sel(k, k);
        const auto& idx = m.indices();
        for (int r = 0; r < k; ++r)
            for (int col = 0; col < k; ++col) sel.at(r, col) = vectors[static_cast<size_t>(col)].coord(idx[static_cast<size_t>(r)]);
        total += c * sel.determinant();
    }
    return total;
}

Form interior_product(const Vector& x, const Form& a) {
    if (x.half_dim() != a.half_dim()) throw std::invalid_argument("interior_product: ambient dimension mismatch");
    if (a.degree() < 1) throw std::invalid_argument("interior_product: degree must be at least 1");
    Form r(a.half_dim(), a.degree() - 1);
    for (const auto& [m, c] : a.terms()) {
        const auto& idx = m.indices();
        int sign = 1;
        for (size_t j = 0; j < idx.size(); ++j) {
            const Rational& xj = x.coord(idx[j]);
            if (!xj.is_zero()) {
                std::vector<int> rest;
                rest.reserve(idx.size() - 1);
                for (size_t t = 0; t < idx.size(); ++t)
                    if (t != j) rest.push_back(idx[t]);
                r.add_term(MultiIndex(std::move(rest)), Rational(sign) * xj * c);
            }
            sign = -sign;
        }
    }
    return r;
}

}  // namespace lefschetz
