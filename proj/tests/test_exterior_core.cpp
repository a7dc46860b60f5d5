#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefschetz/form.hpp"
#include "lefschetz/linear_map.hpp"
#include "lefschetz/matrix.hpp"

#include "oracles.hpp"

using namespace lefschetz;

TEST_CASE("rational arithmetic is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/ 2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("multi-index ordering and wedge signs") {
    CHECK_THROWS_AS(MultiIndex({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({0}), std::invalid_argument);

    auto sorted = MultiIndex::from_unsorted({3, 1, 2});
    REQUIRE(sorted.has_value());
    CHECK(sorted->first == MultiIndex({1, 2, 3}));
    CHECK(sorted->second == 1);  // (3,1,2) has two inversions
    CHECK(MultiIndex::from_unsorted({2, 1})->second == -1);
    CHECK_FALSE(MultiIndex::from_unsorted({1, 1}).has_value());

    auto [merged, sign] = MultiIndex::wedge(MultiIndex{1, 4}, MultiIndex{2, 5});
    CHECK(merged == MultiIndex({1, 2, 4, 5}));
    CHECK(sign == -1);
    CHECK(MultiIndex::wedge(MultiIndex{1}, MultiIndex{1}).second == 0);
    CHECK(MultiIndex({1, 3}).complement(4) == MultiIndex({2, 4}));
    CHECK(MultiIndex({1, 2}) < MultiIndex({1, 3}));

    CHECK(multi_index_basis(3, 2).size() == 15);
    CHECK(multi_index_basis(3, 7).empty());
    CHECK(exterior_dim(5, 5) == 252);
    CHECK(exterior_dim(3, -2) == 0);
}

TEST_CASE("exact matrix rank, kernel, determinant, inverse") {
    Matrix m(2, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    CHECK(m.determinant() == Rational(-1));
    CHECK(m.rank() == 2);

    Matrix wide(1, 2);
    wide.at(0, 0) = Rational(1, 2);
    wide.at(0, 1) = 1;
    auto kernel = wide.kernel_basis();
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0][0] == Rational(2));
    CHECK(kernel[0][1] == Rational(-1));

    Matrix a(2, 2);
    a.at(0, 0) = Rational(1, 3);
    a.at(0, 1) = 2;
    a.at(1, 0) = 1;
    a.at(1, 1) = Rational(7);
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv) * a == Matrix::identity(2));

    auto x = a.solve({Rational(1), Rational(0)});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == std::vector<Rational>{Rational(1), Rational(0)});

    Matrix singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(1, 0) = 2;
    CHECK(singular.rank() == 1);
    CHECK_FALSE(singular.inverse().has_value());
    CHECK_FALSE(singular.solve({Rational(0), Rational(1)}).has_value());

    // 0-dimensional shapes are legal
    CHECK(Matrix(0, 3).rank() == 0);
    CHECK((Matrix(0, 3) * Matrix(3, 2)).rows() == 0);
}

TEST_CASE("elimination engine agrees with independent oracles") {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = size(rng), cols = size(rng);
        Matrix m(rows, cols);
        std::uniform_int_distribution<int> sparsity(0, 2);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (sparsity(rng) != 0) m.at(r, c) = oracles::random_rational(rng);

        const int rk = m.rank();
        CHECK(rk == oracles::rank(m));

        const auto kernel = m.kernel_basis();
        CHECK(static_cast<int>(kernel.size()) == cols - rk);
        for (const auto& v : kernel) {
            const auto image = m.apply(v);
            for (const auto& x : image) CHECK(x.is_zero());
        }

        if (rows == cols) {
            CHECK(m.determinant() == oracles::determinant(m));
            const auto inv = m.inverse();
            if (m.determinant().is_zero()) {
                CHECK_FALSE(inv.has_value());
            } else {
                REQUIRE(inv.has_value());
                CHECK((*inv) * m == Matrix::identity(rows));
            }
        }
    }
}

TEST_CASE("row span saturation is exact") {
    RowSpan span(3);
    CHECK(span.add({Rational(1), Rational(2), Rational(0)}));
    CHECK_FALSE(span.add({Rational(2), Rational(4), Rational(0)}));
    CHECK(span.add({Rational(0), Rational(1), Rational(1)}));
    CHECK(span.rank() == 2);
    CHECK(span.contains({Rational(1), Rational(3), Rational(1)}));
    CHECK_FALSE(span.contains({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("standard symplectic form") {
    const Form w1 = standard_symplectic_form(1);
    CHECK(w1.term_count() == 1);
    CHECK(w1.coeff(MultiIndex{1, 2}) == Rational(1));

    const Form w3 = standard_symplectic_form(3);
    CHECK(w3.term_count() == 3);
    CHECK(w3.coeff(MultiIndex{1, 4}) == Rational(1));
    CHECK(w3.coeff(MultiIndex{2, 5}) == Rational(1));
    CHECK(w3.coeff(MultiIndex{3, 6}) == Rational(1));

    std::vector<Vector> darboux{Vector::basis(3, 1), Vector::basis(3, 4)};
    CHECK(evaluate(w3, darboux) == Rational(1));
    std::vector<Vector> crossed{Vector::basis(3, 1), Vector::basis(3, 5)};
    CHECK(evaluate(w3, crossed) == Rational(0));

    CHECK_THROWS_AS(standard_symplectic_form(0), std::invalid_argument);
}

TEST_CASE("wedge basics") {
    const int n = 2;
    const Form dx1 = Form::monomial(n, MultiIndex{1}, Rational(1));
    const Form dy1 = Form::monomial(n, MultiIndex{3}, Rational(1));
    const Form w = wedge(dx1, dy1);
    CHECK(w.term_count() == 1);
    CHECK(w.coeff(MultiIndex{1, 3}) == Rational(1));

    const Form p1 = Form::monomial(n, MultiIndex{1, 3}, Rational(1));
    const Form m12 = Form::monomial(n, MultiIndex{1, 4}, Rational(1));
    CHECK(wedge(p1, m12).is_zero());  // repeated dx_1

    Form a(1, 1), b(2, 1);
    CHECK_THROWS_AS(wedge(a, b), std::invalid_argument);
}

TEST_CASE("wedge of the symplectic form with itself, sign frozen from the oracle") {
    const int n = 2;
    const Form w = standard_symplectic_form(n);
    const Form ww = wedge(w, w);
    REQUIRE(ww.term_count() == 1);
    // (1,3,2,4) sorts to (1,2,3,4) with one inversion
    CHECK(ww.coeff(MultiIndex{1, 2, 3, 4}) == Rational(-2));

    std::vector<Vector> basis_tuple{Vector::basis(n, 1), Vector::basis(n, 2), Vector::basis(n, 3),
                                    Vector::basis(n, 4)};
    CHECK(evaluate(ww, basis_tuple) == oracles::wedge_evaluate(w, w, basis_tuple));
    std::vector<Vector> interleaved{Vector::basis(n, 1), Vector::basis(n, 3), Vector::basis(n, 2),
                                    Vector::basis(n, 4)};
    CHECK(evaluate(ww, interleaved) == Rational(2));
}

TEST_CASE("powers of the symplectic form") {
    const Form w = standard_symplectic_form(3);
    CHECK(form_power(w, 0) == Form::constant(3, Rational(1)));

    const Form top = form_power(w, 3);
    REQUIRE(top.term_count() == 1);
    CHECK(top.coeff(MultiIndex{1, 2, 3, 4, 5, 6}) == Rational(-6));
    std::vector<Vector> interleaved{Vector::basis(3, 1), Vector::basis(3, 4), Vector::basis(3, 2),
                                    Vector::basis(3, 5), Vector::basis(3, 3), Vector::basis(3, 6)};
    CHECK(evaluate(top, interleaved) == Rational(6));
    CHECK(oracles::evaluate(top, interleaved) == Rational(6));

    CHECK(form_power(w, 4).is_zero());
    CHECK(form_power(w, 4).degree() == 8);
}

TEST_CASE("closed-form expansion of symplectic powers, sign fixed by the oracle") {
    // In block-ordered labels dx_I ^ dy_I the m-th power expands as
    // m! (-1)^{m(m-1)/2} over strictly increasing plane sets I; the sign is
    // the parity of sorting the interleaved plane product into block order
    // (frozen from the evaluation oracle, see the power tests above).
    for (int n = 2; n <= 4; ++n) {
        const Form w = standard_symplectic_form(n);
        for (int m = 0; m <= n; ++m) {
            Rational coeff = 1;
            for (int i = 2; i <= m; ++i) coeff *= Rational(i);
            if ((m * (m - 1) / 2) % 2 != 0) coeff = -coeff;
            Form expansion(n, 2 * m);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != m) continue;
                std::vector<int> idx;
                for (int i = 1; i <= n; ++i)
                    if (mask & (1u << (i - 1))) idx.push_back(i);
                for (int i = 1; i <= n; ++i)
                    if (mask & (1u << (i - 1))) idx.push_back(n + i);
                expansion.add_term(MultiIndex(idx), coeff);
            }
            CHECK(form_power(w, m) == expansion);
        }
    }
}

TEST_CASE("operations on zero forms keep the contractual degree") {
    const Form zero2(3, 2);
    CHECK(wedge(zero2, standard_symplectic_form(3)).degree() == 4);
    CHECK(wedge(zero2, standard_symplectic_form(3)).is_zero());
    CHECK(interior_product(Vector::basis(3, 1), zero2).degree() == 1);
    CHECK(pullback(LinearMap::identity(3), zero2) == zero2);
}

TEST_CASE("evaluation conventions") {
    const Form w = standard_symplectic_form(3);
    const Form w2 = form_power(w, 2);
    std::vector<Vector> tuple{Vector::basis(3, 1), Vector::basis(3, 4), Vector::basis(3, 2),
                              Vector::basis(3, 5)};
    CHECK(evaluate(w2, tuple) == Rational(2));  // (n-1)! on the interleaved tuple

    const Form e12 = Form::monomial(3, MultiIndex{1, 2}, Rational(1));
    std::vector<Vector> fwd{Vector::basis(3, 1), Vector::basis(3, 2)};
    std::vector<Vector> rev{Vector::basis(3, 2), Vector::basis(3, 1)};
    CHECK(evaluate(e12, fwd) == Rational(1));
    CHECK(evaluate(e12, rev) == Rational(-1));

    std::vector<Vector> wrong{Vector::basis(3, 1)};
    CHECK_THROWS_AS(evaluate(e12, wrong), std::invalid_argument);
}

TEST_CASE("interior product") {
    const int n = 3;
    const Form w = standard_symplectic_form(n);
    const Vector e1 = Vector::basis(n, 1);

    const Form contracted = interior_product(e1, w);
    CHECK(contracted.term_count() == 1);
    CHECK(contracted.coeff(MultiIndex{n + 1}) == Rational(1));

    // k dy_1 ^ w^{k-1} for k = 2, termwise
    const Form lhs = interior_product(e1, form_power(w, 2));
    const Form dy1 = Form::monomial(n, MultiIndex{n + 1}, Rational(1));
    const Form rhs = wedge(dy1, w).scaled(Rational(2));
    CHECK(lhs == rhs);

    CHECK(interior_product(e1, Form::monomial(n, MultiIndex{2, 5}, Rational(1))).is_zero());
    CHECK_THROWS_AS(interior_product(e1, Form::constant(n, Rational(1))), std::invalid_argument);
}

TEST_CASE("pullback on frozen examples") {
    const int n = 3;
    const Form w = standard_symplectic_form(n);
    CHECK(pullback(LinearMap::identity(n), w) == w);

    const LinearMap squeeze = LinearMap::diagonal(
        n, {Rational(2), Rational(2), Rational(2), Rational(2), Rational(2), Rational(1, 32)});
    Form expected(n, 2);
    expected.add_term(MultiIndex{1, 4}, Rational(4));
    expected.add_term(MultiIndex{2, 5}, Rational(4));
    expected.add_term(MultiIndex{3, 6}, Rational(1, 16));
    CHECK(pullback(squeeze, w) == expected);
}

TEST_CASE("properties: alternation, oracle agreement, Leibniz, functoriality") {
    std::mt19937 rng(20260810);
    const int n = 3;
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> deg(1, 3);
        const int da = deg(rng);
        const Form a = oracles::random_form(rng, n, da, 5);

        // alternation: repeated vector kills the evaluation
        if (da >= 2) {
            auto vs = oracles::random_vectors(rng, n, da);
            vs[0] = vs[da - 1];
            CHECK(evaluate(a, vs) == Rational(0));
        }

        // evaluation agrees with the permutation-sum oracle
        const auto vs = oracles::random_vectors(rng, n, da);
        CHECK(evaluate(a, vs) == oracles::evaluate(a, vs));

        // wedge agrees with the shuffle-sum oracle
        const int db = deg(rng);
        const Form b = oracles::random_form(rng, n, db, 5);
        const auto vw = oracles::random_vectors(rng, n, da + db);
        CHECK(evaluate(wedge(a, b), vw) == oracles::wedge_evaluate(a, b, vw));

        // graded commutativity
        const Rational flip((da * db) % 2 == 0 ? 1 : -1);
        CHECK(wedge(a, b) == wedge(b, a).scaled(flip));

        // Leibniz rule and double contraction
        const Vector x = oracles::random_vector(rng, n);
        if (da >= 1 && db >= 1) {
            const Form lhs = interior_product(x, wedge(a, b));
            Form rhs = wedge(interior_product(x, a), b);
            const Form second = wedge(a, interior_product(x, b));
            rhs = (da % 2 == 0) ? rhs + second : rhs - second;
            CHECK(lhs == rhs);
        }
        if (da >= 2) CHECK(interior_product(x, interior_product(x, a)).is_zero());
    }

    // pullback functoriality and wedge-naturality
    for (int trial = 0; trial < 20; ++trial) {
        const int nn = 2;
        Matrix sm(4, 4), tm(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                sm.at(r, c) = oracles::random_rational(rng);
                tm.at(r, c) = oracles::random_rational(rng);
            }
        const LinearMap s(nn, sm), t(nn, tm);
        const Form a = oracles::random_form(rng, nn, 1, 3);
        const Form b = oracles::random_form(rng, nn, 2, 4);
        CHECK(pullback(s.compose(t), b) == pullback(t, pullback(s, b)));
        CHECK(pullback(s, wedge(a, b)) == wedge(pullback(s, a), pullback(s, b)));
        const Form sum = b + oracles::random_form(rng, nn, 2, 4);
        CHECK(pullback(s, sum) == pullback(s, b) + pullback(s, sum - b));
    }
}
