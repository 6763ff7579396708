#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "hikita/exact/symmetric.hpp"
#include "hikita/symcenter/center.hpp"
#include "hikita/symcenter/specht.hpp"
#include "support/generators.hpp"

using namespace hikita::symcenter;
using hikita::combinat::Partition;
using hikita::exact::Rational;

namespace {

PermElement times_jm(const PermElement& x, int i) {
    PermElement out(x.n());
    for (int j = 1; j < i; ++j) out += x.times_transposition(j, i);
    return out;
}

// m_λ(JM_1..JM_n): sum over distinct rearrangements of λ padded with zeros, sharing prefix products.
PermElement monomial_symmetric_jm(const Partition& lam, int n) {
    std::map<int, int> remaining;
    for (int part : lam.parts()) ++remaining[part];
    remaining[0] += n - lam.length();
    PermElement total(n);
    std::function<void(int, const PermElement&)> dfs = [&](int i, const PermElement& x) {
        if (i > n) {
            total += x;
            return;
        }
        for (auto& [value, count] : remaining) {
            if (count == 0) continue;
            if (i == 1 && value > 0) continue;  // JM_1 = 0
            --count;
            PermElement y = x;
            for (int e = 0; e < value; ++e) y = times_jm(y, i);
            dfs(i + 1, y);
            ++count;
        }
    };
    dfs(1, PermElement::one(n));
    return total;
}

Rational monomial_symmetric_eval(const Partition& lam, const std::vector<int>& xs) {
    const int n = static_cast<int>(xs.size());
    std::vector<int> exps(lam.parts());
    exps.resize(n, 0);
    std::sort(exps.begin(), exps.end());
    Rational total;
    do {
        Rational term(1);
        for (int i = 0; i < n; ++i) term *= Rational(xs[i]).pow(exps[i]);
        total += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return total;
}

// Partitions of n counted by length, by dynamic programming.
std::vector<int> partitions_by_length(int n) {
    // c[m][l] = partitions of m with exactly l parts.
    std::vector<std::vector<int>> c(n + 1, std::vector<int>(n + 1, 0));
    c[0][0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int l = 1; l <= m; ++l) c[m][l] = c[m - 1][l - 1] + (m - l >= l ? c[m - l][l] : 0);
    std::vector<int> dims(n, 0);
    for (int l = 1; l <= n; ++l) dims[n - l] = c[n][l];
    return dims;
}

}  // namespace

TEST_CASE("Jucys-Murphy elements") {
    CHECK(jm_element(1, 4).is_zero());
    CHECK(jm_element(2, 3) == PermElement::basis(transposition(3, 1, 2)));
    CHECK(jm_element(3, 3) == PermElement::basis(transposition(3, 1, 3)) + PermElement::basis(transposition(3, 2, 3)));
    CHECK_THROWS_AS(jm_element(0, 3), hikita::DomainError);
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(jm_element(i, n) * jm_element(j, n) == jm_element(j, n) * jm_element(i, n));
}

TEST_CASE("symmetric functions of JM elements") {
    auto classes3 = center_basis(3);
    CHECK(symmetric_jm(1, 3) == classes3[1].element);
    CHECK(symmetric_jm(2, 2).is_zero());
    auto theta = theta_map(3).apply(symmetric_jm(2, 3));
    CHECK(theta[0] == Rational(2));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) CHECK_NOTHROW(symmetric_jm(k, n));
}

TEST_CASE("center basis and filtration degrees") {
    auto b3 = center_basis(3);
    REQUIRE(b3.size() == 3);
    CHECK(b3[0].degree == 0);
    CHECK(b3[1].degree == 2);
    CHECK(b3[2].degree == 4);
    std::vector<int> d4;
    for (const auto& c : center_basis(4)) d4.push_back(c.degree);
    CHECK(d4 == std::vector<int>{0, 2, 4, 4, 6});
    auto b1 = center_basis(1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].element == PermElement::one(1));
    for (int n = 1; n <= 6; ++n) {
        const auto& alg = center_algebra(n);
        hikita::exact::ExactMatrix<Rational> m(alg.dimension(), static_cast<int>(factorial(n)));
        auto basis = center_basis(n);
        for (int c = 0; c < alg.dimension(); ++c)
            for (long long k = 0; k < factorial(n); ++k) m(c, static_cast<int>(k)) = basis[c].element.coeff_at(k);
        CHECK(hikita::exact::rank(m) == static_cast<int>(hikita::combinat::partition_count(n)));
    }
}

TEST_CASE("structure constants agree with convolution") {
    for (int n = 1; n <= 4; ++n) {
        const auto& alg = center_algebra(n);
        auto basis = center_basis(n);
        for (int a = 0; a < alg.dimension(); ++a)
            for (int b = 0; b < alg.dimension(); ++b) {
                std::vector<Rational> ea(alg.dimension()), eb(alg.dimension());
                ea[a] = 1;
                eb[b] = 1;
                CHECK(alg.element(alg.multiply(ea, eb)) == basis[a].element * basis[b].element);
            }
    }
}

TEST_CASE("filtration is multiplicative") {
    for (int n = 1; n <= 6; ++n) {
        const auto& alg = center_algebra(n);
        for (int a = 0; a < alg.dimension(); ++a)
            for (int b = 0; b < alg.dimension(); ++b)
                for (int c = 0; c < alg.dimension(); ++c)
                    if (alg.structure_constant(a, b, c) != 0) CHECK(alg.degree(c) <= alg.degree(a) + alg.degree(b));
    }
}

TEST_CASE("Rees graded dimensions") {
    CHECK(rees_graded_dims(3) == std::vector<int>{1, 1, 1});
    CHECK(rees_graded_dims(4) == std::vector<int>{1, 1, 2, 1});
    CHECK(rees_graded_dims(1) == std::vector<int>{1});
    for (int n = 1; n <= 9; ++n) {
        auto dims = rees_graded_dims(n);
        CHECK(dims == partitions_by_length(n));
        long long sum = 0;
        for (int d : dims) sum += d;
        CHECK(sum == hikita::combinat::partition_count(n));
    }
}

TEST_CASE("filtration generated by JM symmetric functions") {
    for (int n = 1; n <= 6; ++n) {
        auto report = filtration_generation_check(n);
        CHECK_MESSAGE(report.passed, report.witness);
        CHECK(report.ranks == report.expected);
    }
}

TEST_CASE("seminormal Specht modules") {
    for (int n = 1; n <= 5; ++n) {
        auto triv = seminormal_specht(Partition({n}));
        CHECK(triv.dimension() == 1);
        for (const auto& s : triv.s) CHECK(s.get(0, 0) == Rational(1));
        auto jm = jm_matrices(triv);
        for (int i = 1; i <= n; ++i) CHECK(jm[i - 1].get(0, 0) == Rational(i - 1));
        auto sign = seminormal_specht(Partition(std::vector<int>(n, 1)));
        for (const auto& s : sign.s) CHECK(s.get(0, 0) == Rational(-1));
        auto jms = jm_matrices(sign);
        for (int i = 1; i <= n; ++i) CHECK(jms[i - 1].get(0, 0) == Rational(1 - i));
    }
    auto mod = seminormal_specht(Partition({2, 1}));
    CHECK(mod.dimension() == 2);
    auto jm = jm_matrices(mod);
    hikita::exact::SparseMatrix<Rational> e2(2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) e2 += jm[i] * jm[j];
    CHECK(e2 == hikita::exact::SparseMatrix<Rational>::identity(2) * Rational(-1));
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : hikita::combinat::enumerate_partitions(n)) CHECK_NOTHROW(seminormal_specht(lam));
}

TEST_CASE("Theta map values") {
    for (int n = 1; n <= 6; ++n) {
        const auto& th = theta_map(n);
        auto one = th.apply(PermElement::one(n));
        for (const auto& v : one) CHECK(v == Rational(1));
        for (int l = 0; l < static_cast<int>(th.partitions().size()); ++l) {
            auto ind = th.apply_coordinates(th.idempotent(l));
            for (int m = 0; m < static_cast<int>(ind.size()); ++m) CHECK(ind[m] == Rational(l == m ? 1 : 0));
        }
        CHECK(th.isomorphism_failure().empty());
    }
    auto t3 = theta_map(3).apply(center_basis(3)[1].element);
    CHECK(t3 == std::vector<Rational>{3, 0, -3});
}

TEST_CASE("Theta is multiplicative on random central pairs") {
    std::mt19937_64 rng(1234);
    for (int n = 2; n <= 6; ++n) {
        const auto& alg = center_algebra(n);
        const auto& th = theta_map(n);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rational> x(alg.dimension()), y(alg.dimension());
            for (auto& v : x) v = hikita::testing::random_rational(rng);
            for (auto& v : y) v = hikita::testing::random_rational(rng);
            auto tx = th.apply_coordinates(x);
            auto ty = th.apply_coordinates(y);
            auto txy = th.apply_coordinates(alg.multiply(x, y));
            for (std::size_t l = 0; l < txy.size(); ++l) REQUIRE(txy[l] == tx[l] * ty[l]);
        }
    }
}

TEST_CASE("eigenvalue law for symmetric functions of JM") {
    for (int n = 1; n <= 6; ++n) {
        const auto& th = theta_map(n);
        for (int d = 0; d <= n; ++d)
            for (const auto& lam : hikita::combinat::enumerate_partitions(d)) {
                if (lam.length() > n) continue;
                auto z = monomial_symmetric_jm(lam, n);
                auto image = th.apply(z);
                for (std::size_t l = 0; l < th.partitions().size(); ++l)
                    REQUIRE(image[l] == monomial_symmetric_eval(lam, hikita::combinat::contents(th.partitions()[l])));
            }
        for (int k = 1; k <= n; ++k) {
            auto image = th.apply(symmetric_jm(k, n));
            for (std::size_t l = 0; l < th.partitions().size(); ++l) {
                std::vector<Rational> cs;
                for (int c : hikita::combinat::contents(th.partitions()[l])) cs.push_back(Rational(c));
                CHECK(image[l] == hikita::exact::elem_sym_eval(k, cs));
            }
        }
    }
}
