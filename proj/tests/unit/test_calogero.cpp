#include "doctest.h"
#include "hikita/calogero/wilson.hpp"
#include "hikita/exact/charpoly.hpp"
#include "hikita/exact/symmetric.hpp"
#include "hikita/symcenter/specht.hpp"

using namespace hikita::calogero;
using hikita::combinat::Partition;

namespace {

// Hook with k cells in its first row and m cells in total.
Partition hook(int m, int k) {
    std::vector<int> parts{k};
    parts.insert(parts.end(), m - k, 1);
    return Partition(parts);
}

}  // namespace

TEST_CASE("shift matrices") {
    CHECK(shift_matrix(1).is_zero());
    Matrix d2(2, 2);
    d2(0, 1) = 1;
    CHECK(shift_matrix(2) == d2);
    Matrix d3(3, 3);
    d3(0, 1) = 1;
    d3(1, 2) = 1;
    CHECK(shift_matrix(3) == d3);
}

TEST_CASE("Wilson blocks") {
    CHECK(wilson_block(1, 1).is_zero());
    auto y = wilson_block(3, 2);
    CHECK(y(1, 0) == Rational(1));
    CHECK(y(2, 1) == Rational(-1));
    auto comm = hikita::exact::commutator(y, shift_matrix(3));
    CHECK(comm == Matrix::diagonal({Rational(-1), Rational(2), Rational(-1)}));
    CHECK_THROWS_AS(wilson_block(3, 4), hikita::DomainError);
    for (int m = 1; m <= 8; ++m)
        for (int k = 1; k <= m; ++k) {
            auto ym = wilson_block(m, k);
            auto d = shift_matrix(m);
            Matrix expected = Matrix::identity(m) * Rational(-1);
            expected(k - 1, k - 1) += Rational(m);
            CHECK(hikita::exact::commutator(ym, d) == expected);
            CHECK(hikita::exact::commutator(ym, d).trace() == Rational(0));
            // diag(Y D) = (0, 1, …, k-1, -(m-k), …, -1): its trace is the content sum of the hook.
            int content_sum = 0;
            for (int c : hikita::combinat::contents(hook(m, k))) content_sum += c;
            CHECK((ym * d).trace() == Rational(content_sum));
        }
}

TEST_CASE("fixed point examples") {
    auto p1 = cm_fixed_point(Partition({1}));
    CHECK(p1.X.is_zero());
    CHECK(p1.Y.is_zero());
    CHECK(commutator_defect_rank(p1) == 1);

    auto p21 = cm_fixed_point(Partition({2, 1}));
    CHECK(p21.X == shift_matrix(3));
    CHECK(p21.Y == wilson_block(3, 2));
    CHECK(p21.off_diagonal.empty());
    CHECK(cm_charpoly(p21) == hikita::exact::polynomial_from_roots({Rational(0), Rational(1), Rational(-1)}));

    auto p22 = cm_fixed_point(Partition({2, 2}));
    REQUIRE(p22.blocks.size() == 2);
    CHECK(p22.blocks[0].size == 3);
    CHECK(p22.blocks[0].height == 2);
    CHECK(p22.blocks[1].size == 1);
    CHECK(commutator_defect_rank(p22) == 1);
    CHECK(cm_spectrum_check(Partition({2, 2})));
}

TEST_CASE("spectrum and rank for all partitions up to 8") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : hikita::combinat::enumerate_partitions(n)) {
            auto pair = cm_fixed_point(lam);
            CHECK(commutator_defect_rank(pair) == 1);
            CHECK(cm_spectrum_check(lam));
            for (const auto& b : pair.off_diagonal) {
                CHECK(b.mode == SupportMode::ShiftedDiagonal);
                CHECK(b.unique);
            }
            // Off-diagonal blocks do not change the characteristic polynomial.
            auto block_product = hikita::exact::QPoly(Rational(1));
            for (const auto& b : pair.blocks)
                block_product *= hikita::exact::charpoly(wilson_block(b.size, b.height) * shift_matrix(b.size));
            CHECK(cm_charpoly(pair) == block_product);
        }
}

TEST_CASE("spectrum matches the central character of JM symmetric functions") {
    for (int n = 1; n <= 6; ++n) {
        const auto& theta = hikita::symcenter::theta_map(n);
        for (int k = 1; k <= n; ++k) {
            auto image = theta.apply(hikita::symcenter::symmetric_jm(k, n));
            for (std::size_t l = 0; l < theta.partitions().size(); ++l) {
                auto pair = cm_fixed_point(theta.partitions()[l]);
                auto coeffs = hikita::exact::charpoly_coefficients(pair.Y * pair.X);
                // charpoly = Σ_k (-1)^k e_k(spectrum) t^{n-k}
                Rational ek = coeffs[n - k];
                if (k % 2) ek = -ek;
                CHECK(ek == image[l]);
            }
        }
    }
}
