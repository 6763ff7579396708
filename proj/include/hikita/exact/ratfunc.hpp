#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hikita/exact/polynomial.hpp"

namespace hikita::exact {

/// Rational function over Q whose denominator is a product of linear forms.
///
/// This is the fraction field element type of the seminormal Hecke modules: every denominator
/// there is a product of forms kappa*d + a_i - a_j. Denominator factors are kept monic (leading
/// lex coefficient 1) and sorted; a factor is cancelled whenever it divides the numerator, which
/// makes the representation canonical because linear forms are irreducible.
class RatFunc {
   public:
    RatFunc() = default;
    template <std::integral I>
    RatFunc(I c) : num_(Rational(c)) {}             // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(c) {}          // NOLINT(google-explicit-constructor)
    RatFunc(QPoly p) : num_(std::move(p)) {}         // NOLINT(google-explicit-constructor)

    /// num / linear, where linear has total degree exactly 1.
    static RatFunc over_linear(const QPoly& num, const QPoly& linear);

    const QPoly& numerator() const { return num_; }
    const std::vector<QPoly>& denominator_factors() const { return den_; }
    QPoly denominator() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    std::optional<QPoly> as_polynomial() const {
        if (!den_.empty()) return std::nullopt;
        return num_;
    }

    /// Inverse; only defined when the numerator is a nonzero constant or a linear form.
    RatFunc inverse() const;

    /// Value at a point; throws DomainError if a denominator factor vanishes there.
    Rational evaluate(const std::function<Rational(Var)>& value) const;

    std::string to_string() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    void reduce();

    QPoly num_;
    std::vector<QPoly> den_;
};

/// Splits a nonzero linear form into (leading coefficient, monic form).
std::pair<Rational, QPoly> monic_linear(const QPoly& linear);

}  // namespace hikita::exact
