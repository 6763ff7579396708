#pragma once

#include <string>
#include <vector>

#include "hikita/exact/rational.hpp"

namespace hikita::exact {

/// Coefficients of the r-th cyclotomic polynomial, constant term first. Monic of degree phi(r).
std::vector<long long> cyclotomic_polynomial(int r);

/// Euler's totient.
int euler_phi(int r);

/// Element of Q(eta), eta a primitive r-th root of unity, stored in the power basis
/// 1, eta, ..., eta^{phi(r)-1} of Q[eta]/(Phi_r).
///
/// Order 1 doubles as "plain rational": such values combine with elements of any order.
/// Mixing two different orders > 1 is an error.
class CycloNum {
   public:
    CycloNum() : order_(1), coords_(1) {}
    template <std::integral I>
    CycloNum(I v) : CycloNum(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    CycloNum(const Rational& v) : order_(1), coords_{v} {}  // NOLINT(google-explicit-constructor)
    CycloNum(int order, const Rational& v);
    CycloNum(int order, std::vector<Rational> coords);

    /// eta^k in Q(zeta_order); k may be negative.
    static CycloNum eta(int order, int k = 1);

    int order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant coordinate; equals the value when is_rational().
    const Rational& rational_part() const { return coords_[0]; }

    /// Re-expresses a rational-valued element (order 1) in Q(zeta_order).
    CycloNum promoted(int order) const;

    CycloNum inverse() const;
    CycloNum pow(int e) const;
    /// Complex conjugation, eta -> eta^{-1}.
    CycloNum conj() const;

    std::string to_string() const;

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend CycloNum operator-(const CycloNum& a);

    friend bool operator==(const CycloNum& a, const CycloNum& b);

   private:
    void align_with(const CycloNum& o);

    int order_;
    std::vector<Rational> coords_;
};

}  // namespace hikita::exact
