#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hikita/exact/cyclotomic.hpp"
#include "hikita/exact/error.hpp"
#include "hikita/exact/rational.hpp"

namespace hikita::exact {

/// Polynomial variable. The set is closed: the deformation parameters kappa and hbar, the
/// auxiliary indeterminates q and t, framing parameters a_1..a_7 and Cherednik parameters c_1..c_7.
/// Ids double as lex priority (kappa is the most significant variable).
class Var {
   public:
    static constexpr int kMaxIndexed = 7;
    static constexpr int kCount = 4 + 2 * kMaxIndexed;

    static constexpr Var kappa() { return Var(0); }
    static constexpr Var hbar() { return Var(1); }
    static constexpr Var q() { return Var(2); }
    static constexpr Var t() { return Var(3); }
    static Var a(int i);
    static Var c(int i);

    constexpr int id() const { return id_; }
    bool is_framing() const { return id_ >= 4 && id_ < 4 + kMaxIndexed; }
    bool is_cherednik() const { return id_ >= 4 + kMaxIndexed; }
    /// 1-based index for a_i / c_i, 0 otherwise.
    int index() const;
    std::string name() const;

    friend constexpr bool operator==(Var x, Var y) { return x.id_ == y.id_; }
    friend constexpr bool operator<(Var x, Var y) { return x.id_ < y.id_; }

   private:
    explicit constexpr Var(int id) : id_(id) {}
    int id_;
};

/// Dense exponent vector over the fixed variable set. Ordered lexicographically with
/// kappa most significant, which is a monomial order.
class Monomial {
   public:
    Monomial() { exps_.fill(0); }
    static Monomial of(Var v, int e = 1) {
        Monomial m;
        m.exps_[v.id()] = static_cast<std::uint16_t>(e);
        return m;
    }

    int exponent(Var v) const { return exps_[v.id()]; }
    int exponent(int id) const { return exps_[id]; }
    void set(Var v, int e) { exps_[v.id()] = static_cast<std::uint16_t>(e); }
    int total_degree() const {
        int d = 0;
        for (auto e : exps_) d += e;
        return d;
    }
    bool is_one() const { return total_degree() == 0; }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < Var::kCount; ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& o) const;  // this / o, requires o.divides(*this)
    std::string to_string() const;

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        Monomial m;
        for (int i = 0; i < Var::kCount; ++i) m.exps_[i] = static_cast<std::uint16_t>(x.exps_[i] + y.exps_[i]);
        return m;
    }
    friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps_ == y.exps_; }
    friend bool operator<(const Monomial& x, const Monomial& y) { return x.exps_ < y.exps_; }

   private:
    std::array<std::uint16_t, Var::kCount> exps_;
};

namespace detail {
inline std::string coeff_string(const Rational& c) { return c.to_string(); }
inline std::string coeff_string(const CycloNum& c) { return c.to_string(); }
inline bool coeff_negative(const Rational& c) { return c.sign() < 0; }
inline bool coeff_negative(const CycloNum& c) { return c.is_rational() && c.rational_part().sign() < 0; }
}  // namespace detail

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients are never stored.
template <class Coeff>
class MPoly {
   public:
    using coeff_type = Coeff;
    using TermMap = std::map<Monomial, Coeff>;

    MPoly() = default;
    template <std::integral I>
    MPoly(I c) : MPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
    MPoly(const Coeff& c) {          // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.emplace(Monomial(), c);
    }
    static MPoly variable(Var v) { return term(Monomial::of(v), Coeff(1)); }
    static MPoly term(const Monomial& m, const Coeff& c) {
        MPoly p;
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == Coeff(1); }
    Coeff constant_term() const {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? Coeff() : it->second;
    }
    Coeff coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff() : it->second;
    }
    std::size_t size() const { return terms_.size(); }

    /// Largest monomial in the lex order together with its coefficient.
    const std::pair<const Monomial, Coeff>& leading_term() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    int degree(Var v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.total_degree();
        for (const auto& [m, c] : terms_)
            if (m.total_degree() != d) return false;
        return true;
    }
    std::set<int> variable_ids() const {
        std::set<int> ids;
        for (const auto& [m, c] : terms_)
            for (int i = 0; i < Var::kCount; ++i)
                if (m.exponent(i) > 0) ids.insert(i);
        return ids;
    }
    bool uses(Var v) const { return degree(v) > 0; }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MPoly& operator*=(const MPoly& o) {
        *this = *this * o;
        return *this;
    }
    MPoly& operator*=(const Coeff& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend MPoly operator*(MPoly a, const Coeff& s) { return a *= s; }
    friend MPoly operator*(const Coeff& s, MPoly a) { return a *= s; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(int e) const {
        MPoly result(Coeff(1));
        MPoly base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// Evaluates with every variable replaced by value(var); absent variables must be handled by the callback.
    template <class Value>
    Value evaluate(const std::function<Value(Var)>& value) const {
        Value total{};
        for (const auto& [m, c] : terms_) {
            Value t = Value(c);
            for (int i = 0; i < Var::kCount; ++i) {
                int e = m.exponent(i);
                if (e == 0) continue;
                Value base = value(var_from_id(i));
                for (int k = 0; k < e; ++k) t = t * base;
            }
            total = total + t;
        }
        return total;
    }

    /// Replaces each variable v for which image(v) is set by that polynomial.
    MPoly substitute(const std::function<std::optional<MPoly>(Var)>& image) const {
        std::array<std::optional<MPoly>, Var::kCount> cache;
        std::array<bool, Var::kCount> looked{};
        MPoly total;
        for (const auto& [m, c] : terms_) {
            Monomial kept;
            MPoly factor(c);
            for (int i = 0; i < Var::kCount; ++i) {
                int e = m.exponent(i);
                if (e == 0) continue;
                if (!looked[i]) {
                    cache[i] = image(var_from_id(i));
                    looked[i] = true;
                }
                if (cache[i]) {
                    factor *= cache[i]->pow(e);
                } else {
                    kept.set(var_from_id(i), e);
                }
            }
            total += factor * term(kept, Coeff(1));
        }
        return total;
    }

    /// Applies f to each coefficient, producing a polynomial over another coefficient type.
    template <class Target, class F>
    MPoly<Target> map_coefficients(F f) const {
        MPoly<Target> out;
        for (const auto& [m, c] : terms_) out += MPoly<Target>::term(m, f(c));
        return out;
    }

    /// Exact quotient by divisor, or nullopt when divisor does not divide this polynomial.
    std::optional<MPoly> divide_exact(const MPoly& divisor) const {
        if (divisor.is_zero()) throw DomainError("polynomial division by zero");
        const auto& [lm, lc] = divisor.leading_term();
        MPoly rem = *this;
        MPoly quot;
        while (!rem.is_zero()) {
            const auto& [rm, rc] = rem.leading_term();
            if (!lm.divides(rm)) return std::nullopt;
            MPoly t = term(rm.quotient(lm), rc / lc);
            quot += t;
            rem -= t * divisor;
        }
        return quot;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            bool neg = detail::coeff_negative(c);
            Coeff mag = neg ? -c : c;
            if (first) {
                if (neg) os << '-';
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            std::string cs = detail::coeff_string(mag);
            if (m.is_one()) {
                os << cs;
            } else {
                if (cs != "1") os << cs << '*';
                os << m.to_string();
            }
        }
        return os.str();
    }

   private:
    static Var var_from_id(int id);

    void add_term(const Monomial& m, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    TermMap terms_;
};

Var var_from_id_impl(int id);

template <class Coeff>
Var MPoly<Coeff>::var_from_id(int id) {
    return var_from_id_impl(id);
}

using QPoly = MPoly<Rational>;
using CPoly = MPoly<CycloNum>;

/// Framing parameter a_i of the rank-r family with a_r eliminated through a_1 + ... + a_r = 0.
QPoly framing_parameter(int i, int r);

/// Embeds a rational polynomial into Q(zeta_order)[vars].
CPoly to_cyclotomic(const QPoly& p, int order);

}  // namespace hikita::exact
