#include "doctest.h"
#include "hikita/heckecyclo/hecke.hpp"

using namespace hikita::heckecyclo;
using hikita::combinat::Multipartition;
using hikita::exact::Rational;
using hikita::exact::Var;

namespace {

QPoly kappa() { return QPoly::variable(Var::kappa()); }
QPoly a(int i) { return QPoly::variable(Var::a(i)); }
Multipartition mp(const char* text) { return Multipartition::parse(text); }

}  // namespace

TEST_CASE("one-dimensional modules with a free framing value") {
    auto row = hecke_seminormal_module(mp("2"), {a(1)});
    REQUIRE(row.dimension() == 1);
    CHECK(row.z_value[0][0] == a(1));
    CHECK(row.z_value[1][0] == a(1) + kappa());
    CHECK(row.s(1).get(0, 0) == RatFunc(1));
    CHECK(central_scalar(1, row) == a(1) * Rational(2) + kappa());

    auto col = hecke_seminormal_module(mp("1,1"), {a(1)});
    CHECK(col.z_value[1][0] == a(1) - kappa());
    CHECK(col.s(1).get(0, 0) == RatFunc(-1));

    for (int n = 1; n <= 5; ++n) {
        std::vector<int> ones(n, 1);
        auto column = hecke_seminormal_module(Multipartition({hikita::combinat::Partition(ones)}), {a(1)});
        QPoly expected(Rational(1));
        for (int j = 0; j < n; ++j) expected *= a(1) - kappa() * Rational(j);
        CHECK(central_scalar(n, column) == expected);
    }
}

TEST_CASE("two components") {
    auto mod = hecke_seminormal_module(mp("1|1"));
    REQUIRE(mod.dimension() == 2);
    std::vector<QPoly> z1 = mod.z_value[0];
    CHECK(((z1[0] == a(1) && z1[1] == -a(1)) || (z1[0] == -a(1) && z1[1] == a(1))));
    CHECK(relation_failure(mod) == "");
    CHECK(central_scalar(1, mp("1|∅")) == a(1));
    CHECK(central_scalar(1, mp("∅|1")) == -a(1));
    auto w = walls(mod);
    REQUIRE(w.size() == 1);
    CHECK(hikita::exact::monic_linear(w[0]).second == a(1));
}

TEST_CASE("relation suite and dimensions") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= (r == 3 ? 4 : 5); ++n) {
            long long total = 0;
            long long expected = 1;
            for (int k = 1; k <= n; ++k) expected *= static_cast<long long>(k) * r;
            for (const auto& shape : hikita::combinat::enumerate_multipartitions(r, n)) {
                auto mod = hecke_seminormal_module(shape);
                CHECK(relation_failure(mod) == "");
                total += static_cast<long long>(mod.dimension()) * mod.dimension();
                for (int k = 1; k <= n; ++k) CHECK_NOTHROW(central_scalar(k, mod));
            }
            CHECK(total == expected);
        }
}

TEST_CASE("relation checks catch a corrupted module") {
    auto mod = hecke_seminormal_module(mp("2,1|1"));
    auto broken = mod;
    broken.z[1] = broken.z[1] + HeckeMatrix::identity(broken.dimension()) * RatFunc(kappa());
    CHECK(relation_failure(broken) != "");
    auto twisted = mod;
    twisted.framing[0] = twisted.framing[0] + QPoly(Rational(1));
    CHECK(relation_failure(twisted).find("cyclotomic") != std::string::npos);
}

TEST_CASE("central elements") {
    CHECK(centrality_check(2, 1));
    CHECK(centrality_check(3, 2));
    CHECK(centrality_check(3, 3));
    // For r = 1 the cyclotomic relation forces z_1 = a, which is central.
    CHECK(z1_commutes_everywhere(3, 1));
    CHECK_FALSE(z1_commutes_everywhere(2, 2));
    CHECK_FALSE(z1_commutes_everywhere(3, 3));
    CHECK(z1_commutes_everywhere(1, 3));
    CHECK_THROWS_AS(central_scalar(0, mp("1")), hikita::DomainError);
}
