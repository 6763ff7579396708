#pragma once

#include <random>
#include <vector>

#include "hikita/exact/cyclotomic.hpp"
#include "hikita/exact/matrix.hpp"
#include "hikita/exact/rational.hpp"

namespace hikita::testing {

using exact::CycloNum;
using exact::ExactMatrix;
using exact::Rational;

inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rational(num(rng), den(rng));
}

inline long random_small(std::mt19937_64& rng, int span = 5) {
    return std::uniform_int_distribution<long>(-span, span)(rng);
}

inline CycloNum random_cyclo(std::mt19937_64& rng, int order) {
    int d = exact::euler_phi(order);
    std::vector<Rational> coords;
    for (int i = 0; i < d; ++i) coords.push_back(random_rational(rng));
    return CycloNum(order, coords);
}

inline ExactMatrix<Rational> random_int_matrix(std::mt19937_64& rng, int n, int span = 4) {
    ExactMatrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rational(random_small(rng, span));
    return m;
}

}  // namespace hikita::testing
