#include <random>

#include "doctest.h"
#include "hikita/exact/charpoly.hpp"
#include "hikita/exact/cyclotomic.hpp"
#include "hikita/exact/matrix.hpp"
#include "hikita/exact/polynomial.hpp"
#include "hikita/exact/ratfunc.hpp"
#include "hikita/exact/symmetric.hpp"
#include "support/generators.hpp"

using namespace hikita::exact;
using hikita::DomainError;

namespace {

// Laplace expansion along the first row; independent of Berkowitz.
QPoly cofactor_det(const ExactMatrix<QPoly>& m) {
    const int n = m.rows();
    if (n == 0) return QPoly(Rational(1));
    if (n == 1) return m(0, 0);
    QPoly det;
    for (int j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        ExactMatrix<QPoly> minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i)
            for (int k = 0, c = 0; k < n; ++k) {
                if (k == j) continue;
                minor(i - 1, c++) = m(i, k);
            }
        QPoly term = m(0, j) * cofactor_det(minor);
        if (j % 2) {
            det -= term;
        } else {
            det += term;
        }
    }
    return det;
}

QPoly cofactor_charpoly(const ExactMatrix<Rational>& m) {
    const int n = m.rows();
    ExactMatrix<QPoly> tm(n, n);
    const QPoly t = QPoly::variable(Var::t());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tm(i, j) = (i == j ? t : QPoly()) - QPoly(m(i, j));
    return cofactor_det(tm);
}

QPoly poly_from_coeffs(std::initializer_list<long> coeffs) {
    QPoly p;
    int e = 0;
    for (long c : coeffs) p += QPoly::term(Monomial::of(Var::t(), e++), Rational(c));
    return p;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("-6/8").to_string() == "-3/4");
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    for (int r = 1; r <= 12; ++r) {
        CHECK(static_cast<int>(cyclotomic_polynomial(r).size()) - 1 == euler_phi(r));
        // prod_{d | r} Phi_d = x^r - 1
        std::vector<long long> prod{1};
        for (int d = 1; d <= r; ++d) {
            if (r % d) continue;
            auto phi = cyclotomic_polynomial(d);
            std::vector<long long> next(prod.size() + phi.size() - 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = next;
        }
        std::vector<long long> expect(r + 1, 0);
        expect[0] = -1;
        expect[r] = 1;
        CHECK(prod == expect);
    }
    CHECK_THROWS_AS(cyclotomic_polynomial(0), DomainError);
}

TEST_CASE("roots of unity sum") {
    for (int r = 1; r <= 8; ++r)
        for (int l = 0; l < r; ++l) {
            CycloNum s(r, Rational(0));
            for (int i = 0; i < r; ++i) s += CycloNum::eta(r, i * l);
            CHECK(s == CycloNum(l == 0 ? r : 0));
        }
    CHECK(CycloNum::eta(2) == CycloNum(-1));
    CHECK(CycloNum::eta(4).pow(2) == CycloNum(-1));
    CHECK(CycloNum::eta(5, 5) == CycloNum(1));
    CHECK(CycloNum::eta(3).conj() == CycloNum::eta(3, -1));
}

TEST_CASE("cyclotomic field axioms on random samples") {
    std::mt19937_64 rng(20240601);
    for (int r = 1; r <= 8; ++r) {
        for (int s = 0; s < 1000; ++s) {
            auto a = hikita::testing::random_cyclo(rng, r);
            auto b = hikita::testing::random_cyclo(rng, r);
            auto c = hikita::testing::random_cyclo(rng, r);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            if (!a.is_zero()) REQUIRE(a * a.inverse() == CycloNum(1));
        }
    }
}

TEST_CASE("mixing cyclotomic orders") {
    CHECK_THROWS_AS(CycloNum::eta(3) + CycloNum::eta(4), DomainError);
    CHECK(CycloNum(Rational(1, 2)) + CycloNum::eta(3) == CycloNum::eta(3) + CycloNum(3, Rational(1, 2)));
}

TEST_CASE("polynomial arithmetic and framing elimination") {
    const QPoly k = QPoly::variable(Var::kappa());
    const QPoly a1 = QPoly::variable(Var::a(1));
    auto sq = (k + a1) * (k - a1);
    CHECK(sq == k.pow(2) - a1.pow(2));
    CHECK(sq.to_string() == "kappa^2 - a1^2");
    auto q = sq.divide_exact(k + a1);
    REQUIRE(q.has_value());
    CHECK(*q == k - a1);
    CHECK_FALSE(sq.divide_exact(k + QPoly(Rational(1))).has_value());
    QPoly sum;
    for (int i = 1; i <= 3; ++i) sum += framing_parameter(i, 3);
    CHECK(sum.is_zero());
    CHECK(framing_parameter(1, 1).is_zero());
    CHECK_THROWS_AS(framing_parameter(4, 3), DomainError);
}

TEST_CASE("rational functions with linear denominators") {
    const QPoly k = QPoly::variable(Var::kappa());
    const QPoly a1 = QPoly::variable(Var::a(1));
    RatFunc x = RatFunc::over_linear(k, k + a1);
    RatFunc y = RatFunc::over_linear(a1, k + a1);
    CHECK(x + y == RatFunc(1));
    RatFunc z = RatFunc::over_linear(QPoly(Rational(1)), QPoly(Rational(2)) * k - a1);
    CHECK((x * z) / z == x);
    CHECK(RatFunc(1) - x * x == (RatFunc(1) - x) * (RatFunc(1) + x));
    auto at = [](Var v) { return v == Var::kappa() ? Rational(2) : Rational(3); };
    CHECK((x + z).evaluate(at) == Rational(2, 5) + Rational(1, 1));
    CHECK_THROWS_AS(RatFunc(k * k + a1).inverse(), DomainError);
}

TEST_CASE("elementary symmetric evaluation") {
    CHECK(elem_sym_eval(0, std::vector<Rational>{5, 7}) == Rational(1));
    CHECK(elem_sym_eval(2, std::vector<Rational>{0, 1, -1}) == Rational(-1));
    CHECK(elem_sym_eval(3, std::vector<Rational>{1, 1, 1}) == Rational(1));
    CHECK_THROWS_AS(elem_sym_eval(3, std::vector<Rational>{1, 1}), DomainError);
}

TEST_CASE("Newton identities on random multisets") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        int size = 1 + static_cast<int>(rng() % 8);
        std::vector<Rational> xs;
        for (int i = 0; i < size; ++i) xs.push_back(hikita::testing::random_rational(rng));
        auto e = elem_sym_all(xs);
        for (int k = 1; k <= size; ++k) {
            REQUIRE(e[k] == elem_sym_eval(k, xs));
            // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
            Rational rhs;
            for (int i = 1; i <= k; ++i) {
                Rational p;
                for (const auto& x : xs) p += x.pow(i);
                Rational term = e[k - i] * p;
                rhs += (i % 2 ? term : -term);
            }
            REQUIRE(Rational(k) * e[k] == rhs);
        }
    }
}

TEST_CASE("charpoly fixed values") {
    CHECK(charpoly(ExactMatrix<Rational>::identity(2)) == poly_from_coeffs({1, -2, 1}));
    CHECK(charpoly(ExactMatrix<Rational>(3, 3)) == poly_from_coeffs({0, 0, 0, 1}));
    // Y(3,2) D_3 = E22 - E33
    ExactMatrix<Rational> y(3, 3), d(3, 3);
    y(1, 0) = 1;
    y(2, 1) = -1;
    d(0, 1) = 1;
    d(1, 2) = 1;
    CHECK(charpoly(y * d) == poly_from_coeffs({0, -1, 0, 1}));
    CHECK_THROWS_AS(charpoly(ExactMatrix<Rational>(2, 3)), DomainError);
}

TEST_CASE("charpoly agrees with cofactor expansion") {
    std::mt19937_64 rng(4242);
    for (int n = 0; n <= 4; ++n)
        for (int trial = 0; trial < 60; ++trial) {
            auto m = hikita::testing::random_int_matrix(rng, n);
            REQUIRE(charpoly(m) == cofactor_charpoly(m));
        }
}

TEST_CASE("linear algebra") {
    ExactMatrix<Rational> m(2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(rank(m) == 1);
    auto ns = null_space(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        CHECK(v[0] + Rational(2) * v[1] + Rational(3) * v[2] == Rational(0));
    }
    auto x = solve_linear(m, {Rational(1), Rational(2)});
    REQUIRE(x.has_value());
    CHECK_FALSE(solve_linear(m, {Rational(1), Rational(3)}).has_value());
    SparseMatrix<Rational> s(2);
    s.set(0, 1, 1);
    s.set(1, 0, 1);
    CHECK(s * s == SparseMatrix<Rational>::identity(2));
    CHECK((s * s).to_dense() == ExactMatrix<Rational>::identity(2));
}
