#include "hikita/exact/ratfunc.hpp"

#include <algorithm>

namespace hikita::exact {

namespace {

bool poly_less(const QPoly& x, const QPoly& y) { return x.terms() < y.terms(); }

// Multiset difference big \ small of sorted factor lists; small must be contained in big.
std::vector<QPoly> factor_difference(const std::vector<QPoly>& big, const std::vector<QPoly>& small) {
    std::vector<QPoly> out;
    std::size_t j = 0;
    for (const auto& f : big) {
        if (j < small.size() && small[j] == f) {
            ++j;
            continue;
        }
        out.push_back(f);
    }
    return out;
}

std::vector<QPoly> factor_union(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
    std::vector<QPoly> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), poly_less);
    return out;
}

QPoly product(const std::vector<QPoly>& fs) {
    QPoly p(Rational(1));
    for (const auto& f : fs) p *= f;
    return p;
}

}  // namespace

std::pair<Rational, QPoly> monic_linear(const QPoly& linear) {
    if (linear.is_zero() || linear.total_degree() != 1)
        throw DomainError("expected a linear form, got " + linear.to_string());
    Rational lc = linear.leading_term().second;
    return {lc, linear * lc.inverse()};
}

RatFunc RatFunc::over_linear(const QPoly& num, const QPoly& linear) {
    auto [lc, monic] = monic_linear(linear);
    RatFunc r;
    r.num_ = num * lc.inverse();
    r.den_.push_back(monic);
    r.reduce();
    return r;
}

QPoly RatFunc::denominator() const { return product(den_); }

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::vector<QPoly> kept;
    for (const auto& f : den_) {
        if (auto q = num_.divide_exact(f)) {
            num_ = std::move(*q);
        } else {
            kept.push_back(f);
        }
    }
    den_ = std::move(kept);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        auto common = factor_union(den_, o.den_);
        num_ = num_ * product(factor_difference(common, den_)) + o.num_ * product(factor_difference(common, o.den_));
        den_ = std::move(common);
    }
    reduce();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    std::vector<QPoly> merged;
    std::merge(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(), std::back_inserter(merged), poly_less);
    den_ = std::move(merged);
    reduce();
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    RatFunc r;
    if (num_.is_constant()) {
        r.num_ = product(den_) * num_.constant_term().inverse();
        return r;
    }
    if (num_.total_degree() != 1)
        throw DomainError("inverse of non-linear numerator is outside the supported field elements: " + num_.to_string());
    auto [lc, monic] = monic_linear(num_);
    r.num_ = product(den_) * lc.inverse();
    r.den_.push_back(monic);
    r.reduce();
    return r;
}

Rational RatFunc::evaluate(const std::function<Rational(Var)>& value) const {
    Rational d(1);
    for (const auto& f : den_) d *= f.evaluate<Rational>(value);
    if (d.is_zero()) throw DomainError("rational function " + to_string() + " has a pole at the given point");
    return num_.evaluate<Rational>(value) / d;
}

std::string RatFunc::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string s = "(" + num_.to_string() + ")/";
    for (std::size_t i = 0; i < den_.size(); ++i) s += (i ? "*(" : "(") + den_[i].to_string() + ")";
    return s;
}

}  // namespace hikita::exact
