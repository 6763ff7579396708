#include <algorithm>
#include <random>

#include "doctest.h"
#include "hikita/appendixfix/quotient.hpp"
#include "hikita/combinat/multipartition.hpp"

using namespace hikita::appendixfix;
using hikita::combinat::multipartition_count;

namespace {

OrbitMonomial om(int r, std::vector<Triple> bag) { return OrbitMonomial(r, std::move(bag)); }

// m_Λ evaluated at concrete coordinates (x_i, y_i), with x' = x^r, y' = y^r, z' = xy.
Rational evaluate(const OrbitMonomial& m, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    const int n = static_cast<int>(x.size());
    const int r = m.r();
    std::vector<Triple> v = m.bag();
    v.resize(n);
    std::sort(v.begin(), v.end());
    Rational total;
    do {
        Rational term(1);
        for (int i = 0; i < n; ++i) term *= x[i].pow(r * v[i].a + v[i].c) * y[i].pow(r * v[i].b + v[i].c);
        total += term;
    } while (std::next_permutation(v.begin(), v.end()));
    return total;
}

Rational evaluate(const InvariantElement& f, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational total;
    for (const auto& [m, c] : f.terms()) total += c * evaluate(m, x, y);
    return total;
}

OrbitMonomial random_monomial(std::mt19937& rng, int r, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), e(0, 2), col(0, r - 1);
    std::vector<Triple> bag;
    int l = len(rng);
    while (static_cast<int>(bag.size()) < l) {
        Triple t{e(rng), e(rng), col(rng)};
        if (!t.is_zero()) bag.push_back(t);
    }
    return om(r, bag);
}

}  // namespace

TEST_CASE("orbit products on small examples") {
    auto p = orbit_product(om(1, {{1, 0, 0}}), om(1, {{0, 1, 0}}), 2);
    InvariantElement want(2, 1);
    want.add(om(1, {{1, 1, 0}}), 1);
    want.add(om(1, {{1, 0, 0}, {0, 1, 0}}), 1);
    CHECK(p == want);

    auto sq = orbit_product(om(1, {{1, 0, 0}}), om(1, {{1, 0, 0}}), 2);
    InvariantElement want_sq(2, 1);
    want_sq.add(om(1, {{2, 0, 0}}), 1);
    want_sq.add(om(1, {{1, 0, 0}, {1, 0, 0}}), 2);
    CHECK(sq == want_sq);
    CHECK(sq.to_string() == "2*m(1,0)(1,0) + m(2,0)");

    for (int r = 2; r <= 5; ++r) {
        auto z = orbit_product(om(r, {{0, 0, 1}}), om(r, {{0, 0, r - 1}}), 1);
        CHECK(z == InvariantElement::monomial(1, om(r, {{1, 1, 0}})));
    }
    // Products landing on more than n coordinates vanish.
    CHECK(orbit_product(om(1, {{1, 0, 0}}), om(1, {{0, 1, 0}}), 1) == InvariantElement::monomial(1, om(1, {{1, 1, 0}})));
    CHECK(InvariantElement::monomial(1, om(1, {{1, 0, 0}, {0, 1, 0}})).is_zero());
    CHECK_THROWS_AS(orbit_product(InvariantElement(2, 1), InvariantElement(3, 1)), hikita::DomainError);
    CHECK_THROWS_AS(om(2, {{0, 0, 2}}), hikita::DomainError);
    CHECK_THROWS_AS(om(2, {{0, 0, 0}}), hikita::DomainError);
}

TEST_CASE("orbit products agree with evaluation in concrete coordinates") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 3; ++n)
            for (int trial = 0; trial < 8; ++trial) {
                auto u = random_monomial(rng, r, n);
                auto v = random_monomial(rng, r, n);
                auto p = orbit_product(u, v, n);
                for (int pt = 0; pt < 3; ++pt) {
                    std::vector<Rational> x, y;
                    for (int i = 0; i < n; ++i) {
                        x.emplace_back(val(rng), 1 + (val(rng) + 5) % 3);
                        y.emplace_back(val(rng), 1 + (val(rng) + 5) % 3);
                    }
                    CHECK_MESSAGE(evaluate(u, x, y) * evaluate(v, x, y) == evaluate(p, x, y),
                                  u.to_string() << " * " << v.to_string());
                }
            }
}

TEST_CASE("structure constants without wrap-around are positive integers") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            auto single = random_monomial(rng, 1, 1);
            auto rest = random_monomial(rng, 1, n);
            auto p = orbit_product(single, rest, n);
            for (const auto& [m, c] : p.terms()) CHECK((c.is_integer() && c.sign() > 0));
            auto joint = rest.with(single.bag()[0]);
            if (joint.length() <= n) CHECK(p.coeff(joint).sign() > 0);
        }
}

TEST_CASE("orbit product is associative and commutative") {
    std::mt19937 rng(3);
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 3; ++n)
            for (int trial = 0; trial < 5; ++trial) {
                auto a = InvariantElement::monomial(n, random_monomial(rng, r, n));
                auto b = InvariantElement::monomial(n, random_monomial(rng, r, n));
                auto c = InvariantElement::monomial(n, random_monomial(rng, r, n));
                CHECK(orbit_product(orbit_product(a, b), c) == orbit_product(a, orbit_product(b, c)));
                CHECK(orbit_product(a, b) == orbit_product(b, a));
            }
}

TEST_CASE("fixed-point quotient examples") {
    auto q = fixed_point_quotient(2, 1, 4);
    CHECK(q.dimension() == 2);
    CHECK(q.basis() == std::vector<OrbitMonomial>{OrbitMonomial::one(1), om(1, {{1, 1, 0}})});

    for (int r = 1; r <= 5; ++r) {
        auto q1 = fixed_point_quotient(1, r, spanning_bound(1, r));
        CHECK(q1.dimension() == r);
        std::vector<OrbitMonomial> z_powers{OrbitMonomial::one(r)};
        for (int c = 1; c < r; ++c) z_powers.push_back(om(r, {{0, 0, c}}));
        CHECK(q1.basis() == z_powers);
    }
    CHECK(fixed_point_quotient(3, 1, 6).dimension() == 3);
    CHECK(spanning_bound(2, 1) == 4);
    CHECK(spanning_bound(2, 2) == 8);
    CHECK_THROWS_AS(fixed_point_quotient(3, 1, 5), hikita::DomainError);
}

TEST_CASE("quotient dimension matches multipartition count and the canonical family is a basis") {
    const std::vector<std::pair<int, int>> cases{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 2}, {2, 2},
                                                 {3, 2}, {1, 3}, {2, 3}};
    for (auto [n, r] : cases) {
        CAPTURE(n);
        CAPTURE(r);
        auto q = fixed_point_quotient(n, r, spanning_bound(n, r));
        CHECK(q.dimension() == multipartition_count(r, n));
        CHECK(q.vanishes_above_canonical());
        auto family = canonical_family(n, r);
        CHECK(static_cast<long long>(family.size()) == multipartition_count(r, n));
        CHECK(q.independent(family));
    }
}

TEST_CASE("spanning reduction") {
    InvariantElement want(2, 1);
    want.add(om(1, {{1, 0, 0}, {0, 1, 0}}), -1);
    CHECK(spanning_reduction(om(1, {{1, 1, 0}}), 2) == want);

    for (const auto& m : canonical_family(3, 2)) CHECK(spanning_reduction(m, 3) == InvariantElement::monomial(3, m));
    CHECK(spanning_reduction(om(1, {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}}), 2).is_zero());
    CHECK_THROWS_AS(spanning_reduction(om(1, {{1, 0, 0}}), 2), hikita::DomainError);
}

TEST_CASE("spanning reduction agrees with the quotient linear algebra") {
    const std::vector<std::pair<int, int>> cases{{2, 1}, {3, 1}, {2, 2}, {2, 3}};
    std::mt19937 rng(5);
    for (auto [n, r] : cases) {
        auto q = fixed_point_quotient(n, r, spanning_bound(n, r));
        SpanningReducer reducer(n, r);
        auto family = canonical_family(n, r);
        int checked = 0;
        for (int trial = 0; trial < 400 && checked < 40; ++trial) {
            auto m = random_monomial(rng, r, n);
            if (m.t_degree() != 0 || m.poly_degree() > q.cutoff()) continue;
            ++checked;
            auto red = reducer.reduce(m);
            for (const auto& [t, c] : red.terms()) CHECK(std::find(family.begin(), family.end(), t) != family.end());
            CHECK_MESSAGE(q.in_ideal(InvariantElement::monomial(n, m) - red), m.to_string());
        }
        CHECK(checked > 5);
    }
}
