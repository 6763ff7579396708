#include "hikita/appendixfix/orbit.hpp"

#include <algorithm>
#include <functional>

#include "hikita/exact/error.hpp"

namespace hikita::appendixfix {

Triple multiply_triples(const Triple& s, const Triple& t, int r) {
    Triple out{s.a + t.a, s.b + t.b, s.c + t.c};
    if (out.c >= r) {
        out.a += 1;
        out.b += 1;
        out.c -= r;
    }
    return out;
}

int poly_degree(const Triple& t, int r) { return r * (t.a + t.b) + 2 * t.c; }

OrbitMonomial::OrbitMonomial(int r, std::vector<Triple> bag) : r_(r), bag_(std::move(bag)) {
    if (r < 1) throw DomainError("orbit monomial needs r >= 1");
    for (const auto& t : bag_) {
        if (t.a < 0 || t.b < 0 || t.c < 0 || t.c >= r)
            throw DomainError("triple exponents out of range");
        if (t.is_zero()) throw DomainError("orbit monomial contains the zero triple");
    }
    std::sort(bag_.begin(), bag_.end(), std::greater<>());
}

int OrbitMonomial::t_degree() const {
    int d = 0;
    for (const auto& t : bag_) d += t.a - t.b;
    return d;
}

int OrbitMonomial::poly_degree() const {
    int d = 0;
    for (const auto& t : bag_) d += appendixfix::poly_degree(t, r_);
    return d;
}

OrbitMonomial OrbitMonomial::with(const Triple& t) const {
    auto bag = bag_;
    bag.push_back(t);
    return OrbitMonomial(r_, std::move(bag));
}

OrbitMonomial OrbitMonomial::without(const Triple& t) const {
    auto bag = bag_;
    auto it = std::find(bag.begin(), bag.end(), t);
    if (it == bag.end()) throw DomainError("triple not in orbit monomial");
    bag.erase(it);
    return OrbitMonomial(r_, std::move(bag));
}

std::string OrbitMonomial::to_string() const {
    if (bag_.empty()) return "1";
    std::string s;
    for (const auto& t : bag_) {
        s += "(" + std::to_string(t.a) + "," + std::to_string(t.b);
        if (r_ > 1) s += "," + std::to_string(t.c);
        s += ")";
    }
    return s;
}

bool column_before(const OrbitMonomial& a, const OrbitMonomial& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.bag() > b.bag();
}

InvariantElement InvariantElement::monomial(int n, const OrbitMonomial& m, const Rational& coeff) {
    InvariantElement e(n, m.r());
    e.add(m, coeff);
    return e;
}

Rational InvariantElement::coeff(const OrbitMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

void InvariantElement::add(const OrbitMonomial& m, const Rational& c) {
    if (m.r() != r_) throw DomainError("orbit monomial has a different r");
    if (m.length() > n_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void InvariantElement::check_same(const InvariantElement& o) const {
    if (n_ != o.n_ || r_ != o.r_) throw DomainError("invariant elements with different n or r");
}

InvariantElement& InvariantElement::operator+=(const InvariantElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

InvariantElement& InvariantElement::operator-=(const InvariantElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

InvariantElement& InvariantElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

std::string InvariantElement::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const OrbitMonomial, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return column_before(x->first, y->first); });
    std::string s;
    for (const auto* t : order) {
        Rational c = t->second;
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        c = c.abs();
        if (!c.is_one()) s += c.to_string() + "*";
        s += "m" + (t->first.length() == 0 ? std::string("()") : t->first.to_string());
    }
    return s;
}

namespace {

std::vector<Triple> padded(const OrbitMonomial& m, int n) {
    std::vector<Triple> v = m.bag();
    v.resize(n);
    std::sort(v.begin(), v.end());
    return v;
}

long long arrangements(std::vector<Triple> v) {
    std::sort(v.begin(), v.end());
    long long count = 0;
    do ++count;
    while (std::next_permutation(v.begin(), v.end()));
    return count;
}

}  // namespace

InvariantElement orbit_product(const OrbitMonomial& lhs, const OrbitMonomial& rhs, int n) {
    if (lhs.r() != rhs.r()) throw DomainError("orbit_product: mismatched r");
    const int r = lhs.r();
    InvariantElement out(n, r);
    if (lhs.length() > n || rhs.length() > n) return out;
    // Fix one arrangement of lhs and run over all arrangements of rhs; the coefficient of m_N is
    // (#lhs arrangements)(#hits on N) / (#N arrangements).
    const std::vector<Triple> fixed = padded(lhs, n);
    const long long lhs_count = arrangements(fixed);
    std::map<std::vector<Triple>, long long> hits;
    std::vector<Triple> moving = padded(rhs, n);
    do {
        std::vector<Triple> prod(n);
        for (int i = 0; i < n; ++i) prod[i] = multiply_triples(fixed[i], moving[i], r);
        std::sort(prod.begin(), prod.end());
        ++hits[prod];
    } while (std::next_permutation(moving.begin(), moving.end()));
    for (const auto& [prod, count] : hits) {
        std::vector<Triple> bag;
        for (const auto& t : prod)
            if (!t.is_zero()) bag.push_back(t);
        out.add(OrbitMonomial(r, bag), Rational(lhs_count * count, arrangements(prod)));
    }
    return out;
}

InvariantElement orbit_product(const InvariantElement& u, const InvariantElement& v) {
    if (u.n() != v.n() || u.r() != v.r()) throw DomainError("orbit_product: mismatched n or r");
    InvariantElement out(u.n(), u.r());
    for (const auto& [m1, c1] : u.terms())
        for (const auto& [m2, c2] : v.terms()) out += orbit_product(m1, m2, u.n()) * (c1 * c2);
    return out;
}

}  // namespace hikita::appendixfix
