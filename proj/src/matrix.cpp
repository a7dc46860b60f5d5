#include "lefschetz/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lefschetz {

namespace {

// Row echelon data from fraction-free elimination. Rows hold integer
// entries once the per-row denominator lcm has been cleared.
struct Echelon {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivot_cols;
    int swap_sign = 1;
    Rational scale_product = 1;  // product of the row multipliers applied
};

std::vector<Rational> cleared_row(const Matrix& m, int r, Rational* scale_out) {
    mpz_class l(1);
    for (int c = 0; c < m.cols(); ++c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).denominator().get_mpz_t());
    Rational scale{mpq_class(l)};
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c) * scale);
    if (scale_out) *scale_out = scale;
    return row;
}

// Bareiss elimination. Pivots are searched left to right, first nonzero row
// wins; `pivot_col_limit` lets augmented solves keep pivots out of the
// right-hand block.
Echelon echelon_form(const Matrix& m, int pivot_col_limit) {
    Echelon e;
    e.rows.reserve(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        Rational scale;
        e.rows.push_back(cleared_row(m, r, &scale));
        e.scale_product *= scale;
    }
    const int ncols = m.cols();
    Rational prev_pivot = 1;
    int lead = 0;
    for (int col = 0; col < pivot_col_limit && lead < m.rows(); ++col) {
        int found = -1;
        for (int r = lead; r < m.rows(); ++r) {
            if (!e.rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                found = r;
                break;
            }
        }
        if (found < 0) continue;
        if (found != lead) {
            std::swap(e.rows[static_cast<size_t>(found)], e.rows[static_cast<size_t>(lead)]);
            e.swap_sign = -e.swap_sign;
        }
        const auto& prow = e.rows[static_cast<size_t>(lead)];
        const Rational pivot = prow[static_cast<size_t>(col)];
        for (int r = lead + 1; r < m.rows(); ++r) {
            auto& row = e.rows[static_cast<size_t>(r)];
            const Rational factor = row[static_cast<size_t>(col)];
            if (factor.is_zero()) {
                // Bareiss update degenerates to a rescale; entries stay integral.
                if (pivot == prev_pivot) continue;
                for (int c = 0; c < ncols; ++c) {
                    Rational& rc = row[static_cast<size_t>(c)];
                    if (!rc.is_zero()) rc = rc * pivot / prev_pivot;
                }
            } else {
                for (int c = 0; c < ncols; ++c) {
                    row[static_cast<size_t>(c)] =
                        (row[static_cast<size_t>(c)] * pivot - factor * prow[static_cast<size_t>(c)]) / prev_pivot;
                }
            }
        }
        e.pivot_cols.push_back(col);
        prev_pivot = pivot;
        ++lead;
    }
    return e;
}

// Back-substitution through echelon rows with the given values fixed on the
// free columns. `cols` counts only the left (non-augmented) block.
std::vector<Rational> back_substitute(const Echelon& e, int cols,
                                      const std::vector<Rational>& free_values,
                                      const std::vector<int>& free_cols, int augmented_col) {
    std::vector<Rational> x(static_cast<size_t>(cols), Rational(0));
    for (size_t i = 0; i < free_cols.size(); ++i)
        x[static_cast<size_t>(free_cols[i])] = free_values[i];
    for (int r = static_cast<int>(e.pivot_cols.size()) - 1; r >= 0; --r) {
        const auto& row = e.rows[static_cast<size_t>(r)];
        const int pc = e.pivot_cols[static_cast<size_t>(r)];
        Rational acc = 0;
        for (int c = pc + 1; c < cols; ++c) {
            const Rational& rc = row[static_cast<size_t>(c)];
            if (!rc.is_zero()) acc += rc * x[static_cast<size_t>(c)];
        }
        if (augmented_col >= 0) acc -= row[static_cast<size_t>(augmented_col)];
        x[static_cast<size_t>(pc)] = -acc / row[static_cast<size_t>(pc)];
    }
    return x;
}

// Scale to a primitive integer vector with positive leading entry.
void canonicalize_vector(std::vector<Rational>& v) {
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& x : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
    for (auto& x : v) x *= Rational(mpq_class(den_lcm));
    for (const auto& x : v)
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.numerator().get_mpz_t());
    if (num_gcd == 0) return;
    Rational g{mpq_class(num_gcd)};
    int lead_sign = 0;
    for (auto& x : v) {
        x = x / g;
        if (lead_sign == 0) lead_sign = x.sign();
    }
    if (lead_sign < 0)
        for (auto& x : v) x = -x;
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0));
}

Matrix Matrix::identity(int m) {
    Matrix r(m, m);
    for (int i = 0; i < m; ++i) r.at(i, i) = 1;
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;  // operator matrices are sparse
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& bkj = o.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: sum shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: difference shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix: apply shape mismatch");
    std::vector<Rational> r(static_cast<size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rational& aij = at(i, j);
            if (!aij.is_zero() && !v[static_cast<size_t>(j)].is_zero()) r[static_cast<size_t>(i)] += aij * v[static_cast<size_t>(j)];
        }
    return r;
}

int Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return static_cast<int>(echelon_form(*this, cols_).pivot_cols.size());
}

Rational Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: determinant of non-square matrix");
    if (rows_ == 0) return 1;
    Echelon e = echelon_form(*this, cols_);
    if (static_cast<int>(e.pivot_cols.size()) < rows_) return 0;
    const Rational last_pivot =
        e.rows[static_cast<size_t>(rows_ - 1)][static_cast<size_t>(e.pivot_cols.back())];
    return Rational(e.swap_sign) * last_pivot / e.scale_product;
}

std::vector<std::vector<Rational>> Matrix::kernel_basis() const {
    std::vector<std::vector<Rational>> out;
    if (cols_ == 0) return out;
    Echelon e = echelon_form(*this, cols_);
    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (int c = 0; c < cols_; ++c) {
            if (p < e.pivot_cols.size() && e.pivot_cols[p] == c) {
                ++p;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    for (size_t f = 0; f < free_cols.size(); ++f) {
        std::vector<Rational> fv(free_cols.size(), Rational(0));
        fv[f] = 1;
        auto v = back_substitute(e, cols_, fv, free_cols, -1);
        canonicalize_vector(v);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square matrix");
    const int m = rows_;
    Matrix work = *this;
    Matrix inv = Matrix::identity(m);
    for (int col = 0; col < m; ++col) {
        int found = -1;
        for (int r = col; r < m; ++r) {
            if (!work.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found < 0) return std::nullopt;
        if (found != col) {
            for (int c = 0; c < m; ++c) {
                std::swap(work.at(found, c), work.at(col, c));
                std::swap(inv.at(found, c), inv.at(col, c));
            }
        }
        const Rational pivot = work.at(col, col);
        for (int c = 0; c < m; ++c) {
            work.at(col, c) = work.at(col, c) / pivot;
            inv.at(col, c) = inv.at(col, c) / pivot;
        }
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            const Rational factor = work.at(r, col);
            if (factor.is_zero()) continue;
            for (int c = 0; c < m; ++c) {
                work.at(r, c) -= factor * work.at(col, c);
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::optional<std::vector<Rational>> Matrix::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("Matrix: solve shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[static_cast<size_t>(r)];
    }
    Echelon e = echelon_form(aug, cols_);
    for (size_t r = e.pivot_cols.size(); r < static_cast<size_t>(rows_); ++r)
        if (!e.rows[r][static_cast<size_t>(cols_)].is_zero()) return std::nullopt;
    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (int c = 0; c < cols_; ++c) {
            if (p < e.pivot_cols.size() && e.pivot_cols[p] == c) {
                ++p;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    std::vector<Rational> fv(free_cols.size(), Rational(0));
    return back_substitute(e, cols_, fv, free_cols, cols_);
}

std::vector<Rational> RowSpan::reduce(std::vector<Rational> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[static_cast<size_t>(pivots_[r])];
        if (c.is_zero()) continue;
        const Rational factor = c;  // stored rows have unit pivots
        for (int j = 0; j < width_; ++j) {
            const Rational& rj = rows_[r][static_cast<size_t>(j)];
            if (!rj.is_zero()) v[static_cast<size_t>(j)] -= factor * rj;
        }
    }
    return v;
}

bool RowSpan::contains(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("RowSpan: width mismatch");
    auto r = reduce(v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool RowSpan::add(std::vector<Rational> v) {
    if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("RowSpan: width mismatch");
    v = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < width_; ++j) {
        if (!v[static_cast<size_t>(j)].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return false;
    const Rational p = v[static_cast<size_t>(pivot)];
    for (auto& x : v) x = x / p;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational factor = rows_[r][static_cast<size_t>(pivot)];
        if (factor.is_zero()) continue;
        for (int j = 0; j < width_; ++j) {
            const Rational& vj = v[static_cast<size_t>(j)];
            if (!vj.is_zero()) rows_[r][static_cast<size_t>(j)] -= factor * vj;
        }
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), pivot);
    return true;
}

}  // namespace lefschetz
