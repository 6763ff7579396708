#pragma once

#include <vector>

#include "hikita/exact/matrix.hpp"
#include "hikita/exact/polynomial.hpp"

namespace hikita::exact {

/// Coefficients of det(t Id - M), constant term first, leading coefficient 1.
/// Berkowitz's algorithm: uses only ring operations, so any commutative entry ring works.
template <class T>
std::vector<T> charpoly_coefficients(const ExactMatrix<T>& m) {
    if (!m.is_square()) throw DomainError("charpoly of non-square matrix " + m.shape());
    const int n = m.rows();
    // v holds the coefficients (leading first) of the characteristic polynomial of the
    // leading principal submatrix processed so far.
    std::vector<T> v{T(1)};
    for (int k = 0; k < n; ++k) {
        // Submatrix A_k = m[0..k-1][0..k-1], column c = m[0..k-1][k], row r = m[k][0..k-1].
        const T& a = m(k, k);
        // Toeplitz column: 1, -a, -r c, -r A c, -r A^2 c, ...
        std::vector<T> col(k + 2);
        col[0] = T(1);
        col[1] = -a;
        std::vector<T> w(k);
        for (int i = 0; i < k; ++i) w[i] = m(i, k);
        for (int p = 2; p < k + 2; ++p) {
            T s{};
            for (int i = 0; i < k; ++i)
                if (!m(k, i).is_zero() && !w[i].is_zero()) s += m(k, i) * w[i];
            col[p] = -s;
            if (p + 1 < k + 2) {
                std::vector<T> nw(k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        if (!m(i, j).is_zero() && !w[j].is_zero()) nw[i] += m(i, j) * w[j];
                w = std::move(nw);
            }
        }
        std::vector<T> next(k + 2);
        for (int i = 0; i < k + 2; ++i)
            for (int j = 0; j <= std::min(i, k); ++j)
                if (!col[i - j].is_zero() && !v[j].is_zero()) next[i] += col[i - j] * v[j];
        v = std::move(next);
    }
    std::reverse(v.begin(), v.end());
    return v;
}

/// Characteristic polynomial of a rational matrix as a polynomial in the variable t.
inline QPoly charpoly(const ExactMatrix<Rational>& m) {
    auto coeffs = charpoly_coefficients(m);
    QPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p += QPoly::term(Monomial::of(Var::t(), static_cast<int>(i)), coeffs[i]);
    return p;
}

/// prod (t - root) as a polynomial in t.
inline QPoly polynomial_from_roots(const std::vector<Rational>& roots) {
    QPoly p(Rational(1));
    const QPoly t = QPoly::variable(Var::t());
    for (const auto& r : roots) p *= t - QPoly(r);
    return p;
}

}  // namespace hikita::exact
