#include "lefschetz/lefschetz_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

namespace {

Rational factorial(int k) {
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= Rational(i);
    return r;
}

// Inner product of two monomial labels: the (I, J) minor of the dual Gram.
Rational monomial_inner(const MultiIndex& a, const MultiIndex& b, const CompatibleTriple& t) {
    const auto& g = t.dual_metric();
    if (t.dual_metric_diagonal()) {
        if (!(a == b)) return 0;
        Rational r = 1;
        for (int i : a.indices()) r *= g.at(i - 1, i - 1);
        return r;
    }
    const int k = a.degree();
    Matrix sub(k, k);
    const auto& ia = a.indices();
    const auto& ib = b.indices();
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            sub.at(r, c) = g.at(ia[static_cast<size_t>(r)] - 1, ib[static_cast<size_t>(c)] - 1);
    return sub.determinant();
}

// Inner product of a monomial against a general form of the same degree.
Rational monomial_against(const MultiIndex& m, const Form& a, const CompatibleTriple& t) {
    Rational acc = 0;
    for (const auto& [mb, cb] : a.terms()) {
        Rational g = monomial_inner(m, mb, t);
        if (!g.is_zero()) acc += g * cb;
    }
    return acc;
}

Form zero_form_of_degree(int n, int degree) { return Form(n, degree < 0 ? 0 : degree); }

}  // namespace

Rational induced_inner_product(const Form& a, const Form& b, const CompatibleTriple& t) {
    if (a.half_dim() != t.half_dim() || b.half_dim() != t.half_dim())
        throw std::invalid_argument("induced_inner_product: ambient dimension mismatch");
    if (a.degree() != b.degree())
        throw std::invalid_argument("induced_inner_product: degree mismatch");
    Rational acc = 0;
    for (const auto& [ma, ca] : a.terms()) acc += ca * monomial_against(ma, b, t);
    return acc;
}

Matrix gram_matrix(int k, const CompatibleTriple& t) {
    const auto basis = multi_index_basis(t.half_dim(), k);
    const int dim = static_cast<int>(basis.size());
    Matrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            g.at(r, c) = monomial_inner(basis[static_cast<size_t>(r)], basis[static_cast<size_t>(c)], t);
    return g;
}

Form volume_form(const CompatibleTriple& t) {
    const int n = t.half_dim();
    return form_power(t.symplectic_form(), n).scaled(factorial(n).reciprocal());
}

Form hodge_star(const Form& a, const CompatibleTriple& t) {
    if (a.half_dim() != t.half_dim()) throw std::invalid_argument("hodge_star: ambient dimension mismatch");
    const int n = t.half_dim();
    const int k = a.degree();
    if (k > 2 * n) return Form(n, 0);  // only the zero form lives there; its star is 0 in degree 2n - k < 0

    const Form vol = volume_form(t);
    // vol is a single term on the full index tuple
    const MultiIndex top = multi_index_basis(n, 2 * n).front();
    const Rational v = vol.coeff(top);

    // For each degree-k monomial m only the complement survives the wedge:
    // m ^ star(a) picks out sign(m, m^c) coeff(star a, m^c), which must be
    // g(m, a) v.
    Form star(n, 2 * n - k);
    auto emit = [&](const MultiIndex& m, const Rational& inner) {
        if (inner.is_zero()) return;
        const MultiIndex comp = m.complement(2 * n);
        const int sign = MultiIndex::wedge(m, comp).second;
        star.add_term(comp, Rational(sign) * inner * v);
    };
    if (t.dual_metric_diagonal()) {
        for (const auto& [m, c] : a.terms()) emit(m, monomial_inner(m, m, t) * c);
    } else {
        for (const auto& m : multi_index_basis(n, k)) emit(m, monomial_against(m, a, t));
    }
    return star;
}

Form op_L(const Form& a, const CompatibleTriple& t) {
    if (a.half_dim() != t.half_dim()) throw std::invalid_argument("op_L: ambient dimension mismatch");
    return wedge(t.symplectic_form(), a);
}

Form op_H(const Form& a, const CompatibleTriple& t) {
    if (a.half_dim() != t.half_dim()) throw std::invalid_argument("op_H: ambient dimension mismatch");
    return a.scaled(Rational(a.degree() - t.half_dim()));
}

Form op_Lambda(const Form& a, const CompatibleTriple& t) {
    if (a.half_dim() != t.half_dim()) throw std::invalid_argument("op_Lambda: ambient dimension mismatch");
    const int n = t.half_dim();
    const int k = a.degree();
    if (k < 2 || k > 2 * n) return zero_form_of_degree(n, k - 2);

    const auto basis_k = multi_index_basis(n, k);
    const auto basis_lo = multi_index_basis(n, k - 2);
    const OperatorMatrix lam = lambda_matrix(k, t);
    Form adjoint =
        Form::from_coordinates(n, k - 2, basis_lo, lam.mat.apply(a.coordinates(basis_k)));

    // star-conjugation route: star is (-1)^m-involutive on degree m, so the
    // inverse star out of degree 2n-(k-2) is (-1)^k star.
    Form via_star = hodge_star(op_L(hodge_star(a, t), t), t);
    if (k % 2 != 0) via_star = -via_star;
    if (!(adjoint == via_star))
        throw std::logic_error("op_Lambda: adjoint and star-conjugation routes disagree");
    return adjoint;
}

OperatorMatrix l_matrix(int k, const CompatibleTriple& t) { return l_power_matrix(1, k, t); }

// The matrix builders accept any integer degree: out-of-range degrees have
// zero-dimensional bases, which keeps compositions across empty degrees
// well-typed (CLI-facing validation happens in operator_matrix).
OperatorMatrix l_power_matrix(int power, int k, const CompatibleTriple& t) {
    const int n = t.half_dim();
    if (power < 0) throw std::invalid_argument("l_power_matrix: negative power");
    OperatorMatrix om{n, k, k + 2 * power, Matrix()};
    const auto src = multi_index_basis(n, k);
    const auto dst = multi_index_basis(n, k + 2 * power);
    om.mat = Matrix(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    const Form omega_pow = form_power(t.symplectic_form(), power);
    for (size_t c = 0; c < src.size(); ++c) {
        Form img = wedge(omega_pow, Form::monomial(n, src[c], Rational(1)));
        for (const auto& [m, v] : img.terms())
            om.mat.at(basis_position(dst, m), static_cast<int>(c)) = v;
    }
    return om;
}

OperatorMatrix lambda_matrix(int k, const CompatibleTriple& t) {
    const int n = t.half_dim();
    OperatorMatrix om{n, k, k - 2, Matrix()};
    const int rows = static_cast<int>(exterior_dim(n, k - 2));
    const int cols = static_cast<int>(exterior_dim(n, k));
    if (rows == 0 || cols == 0) {
        om.mat = Matrix(rows, cols);
        return om;
    }
    // Adjoint of L: G_{k-2}^{-1} L^T G_k. Identity Grams collapse this to
    // the plain transpose.
    const OperatorMatrix l = l_matrix(k - 2, t);
    const Matrix g_hi = gram_matrix(k, t);
    const Matrix g_lo = gram_matrix(k - 2, t);
    auto g_lo_inv = g_lo.inverse();
    if (!g_lo_inv) throw std::logic_error("lambda_matrix: induced Gram matrix is singular");
    om.mat = *g_lo_inv * l.mat.transpose() * g_hi;
    return om;
}

OperatorMatrix h_matrix(int k, const CompatibleTriple& t) {
    const int n = t.half_dim();
    const int dim = static_cast<int>(exterior_dim(n, k));
    OperatorMatrix om{n, k, k, Matrix::identity(dim).scaled(Rational(k - n))};
    return om;
}

OperatorMatrix star_matrix(int k, const CompatibleTriple& t) {
    const int n = t.half_dim();
    OperatorMatrix om{n, k, 2 * n - k, Matrix()};
    const auto src = multi_index_basis(n, k);
    const auto dst = multi_index_basis(n, 2 * n - k);
    om.mat = Matrix(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
        Form img = hodge_star(Form::monomial(n, src[c], Rational(1)), t);
        for (const auto& [m, v] : img.terms())
            om.mat.at(basis_position(dst, m), static_cast<int>(c)) = v;
    }
    return om;
}

OperatorMatrix operator_matrix(const std::string& op_name, int k, const CompatibleTriple& t) {
    if (k < 0 || k > 2 * t.half_dim())
        throw std::invalid_argument("operator_matrix: source degree out of range");
    if (op_name == "L") return l_matrix(k, t);
    if (op_name == "Lambda") return lambda_matrix(k, t);
    if (op_name == "H") return h_matrix(k, t);
    if (op_name == "star") return star_matrix(k, t);
    if (op_name.rfind("Lpow:", 0) == 0) {
        const std::string tail = op_name.substr(5);
        if (tail.empty() || tail.size() > 4 ||
            tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("operator_matrix: bad power in '" + op_name + "'");
        return l_power_matrix(std::stoi(tail), k, t);
    }
    throw std::invalid_argument("operator_matrix: unknown operator '" + op_name + "'");
}

std::vector<Form> primitive_space_basis(int k, const CompatibleTriple& t) {
    const int n = t.half_dim();
    if (k < 0 || k > 2 * n) throw std::invalid_argument("primitive_space_basis: degree out of range");
    const auto basis = multi_index_basis(n, k);
    std::vector<Form> out;
    for (const auto& v : lambda_matrix(k, t).mat.kernel_basis())
        out.push_back(Form::from_coordinates(n, k, basis, v));
    return out;
}

PrimitiveDecomposer::PrimitiveDecomposer(int k, const CompatibleTriple& t)
    : n_(t.half_dim()), k_(k), target_basis_(multi_index_basis(t.half_dim(), k)) {
    if (k < 0 || k > 2 * n_) throw std::invalid_argument("PrimitiveDecomposer: degree out of range");
    const int dim = static_cast<int>(target_basis_.size());
    std::vector<std::vector<Rational>> columns;
    // Levels below k-n contribute nothing: there L^i annihilates the whole
    // primitive space, so their columns would be zero.
    for (int i = std::max(0, k - n_); 2 * i <= k; ++i) {
        auto prims = primitive_space_basis(k - 2 * i, t);
        std::vector<Form> lifted;
        const Form omega_pow = form_power(t.symplectic_form(), i);
        for (const auto& beta : prims) {
            Form img = wedge(omega_pow, beta);
            columns.push_back(img.coordinates(target_basis_));
            lifted.push_back(beta);
        }
        levels_.push_back(i);
        primitive_bases_.push_back(std::move(lifted));
    }
    if (static_cast<int>(columns.size()) != dim)
        throw std::logic_error("PrimitiveDecomposer: block system is not square");
    Matrix system(dim, dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r) system.at(r, c) = columns[static_cast<size_t>(c)][static_cast<size_t>(r)];
    auto inv = system.inverse();
    if (!inv) throw std::logic_error("PrimitiveDecomposer: block system is singular");
    system_inverse_ = std::move(*inv);
}

std::vector<std::pair<int, int>> PrimitiveDecomposer::level_dims() const {
    std::vector<std::pair<int, int>> out;
    for (size_t lvl = 0; lvl < levels_.size(); ++lvl)
        out.emplace_back(levels_[lvl], static_cast<int>(primitive_bases_[lvl].size()));
    return out;
}

PrimitiveDecomposition PrimitiveDecomposer::decompose(const Form& a) const {
    if (a.half_dim() != n_ || a.degree() != k_)
        throw std::invalid_argument("PrimitiveDecomposer: shape mismatch");
    const auto coords = system_inverse_.apply(a.coordinates(target_basis_));
    PrimitiveDecomposition out{a, {}};
    for (int i = 0; i < levels_.front(); ++i)
        out.components.emplace_back(i, Form(n_, k_ - 2 * i));  // annihilated levels
    size_t offset = 0;
    for (size_t lvl = 0; lvl < levels_.size(); ++lvl) {
        Form beta(n_, k_ - 2 * levels_[lvl]);
        for (const auto& basis_form : primitive_bases_[lvl]) {
            beta = beta + basis_form.scaled(coords[offset]);
            ++offset;
        }
        out.components.emplace_back(levels_[lvl], std::move(beta));
    }
    return out;
}

PrimitiveDecomposition primitive_decompose(const Form& a, const CompatibleTriple& t) {
    return PrimitiveDecomposer(a.degree(), t).decompose(a);
}

}  // namespace lefschetz
