#include "hikita/exact/rational.hpp"

#include "hikita/exact/error.hpp"

namespace hikita::exact {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
    if (v.get_den() == 0) throw DomainError("rational with zero denominator: '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace hikita::exact
