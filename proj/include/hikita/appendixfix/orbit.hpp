#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hikita/exact/rational.hpp"

namespace hikita::appendixfix {

using exact::Rational;

/// Exponents of x'^a y'^b z'^c in one coordinate, 0 <= c <= r-1.
struct Triple {
    int a = 0;
    int b = 0;
    int c = 0;
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Coordinatewise product in C[x',y',z']/(x'y' - z'^r), kept in normal form c <= r-1.
Triple multiply_triples(const Triple& s, const Triple& t, int r);

/// Polynomial degree of a triple once x' = x^r, y' = y^r, z' = xy: r(a+b) + 2c.
int poly_degree(const Triple& t, int r);

/// Multiset of nonzero triples; the orbit sum m_Λ of the corresponding monomial.
class OrbitMonomial {
   public:
    OrbitMonomial() = default;
    OrbitMonomial(int r, std::vector<Triple> bag);

    static OrbitMonomial one(int r) { return OrbitMonomial(r, {}); }

    int r() const { return r_; }
    const std::vector<Triple>& bag() const { return bag_; }
    int length() const { return static_cast<int>(bag_.size()); }
    /// Σa - Σb.
    int t_degree() const;
    int poly_degree() const;

    OrbitMonomial with(const Triple& t) const;
    /// Bag with one copy of t removed; throws if t is absent.
    OrbitMonomial without(const Triple& t) const;

    /// "(1,0)(0,1)" for r = 1, "(1,0,1)(0,1,0)" otherwise, "1" for the empty bag.
    std::string to_string() const;

    friend bool operator==(const OrbitMonomial&, const OrbitMonomial&) = default;
    friend auto operator<=>(const OrbitMonomial&, const OrbitMonomial&) = default;

   private:
    int r_ = 1;
    std::vector<Triple> bag_;  // sorted descending
};

/// Column order used by the quotient computations: longer bags first, then descending bags.
bool column_before(const OrbitMonomial& a, const OrbitMonomial& b);

/// Element of C[A^{2n}/Γ_n] written in orbit sums with at most n triples.
class InvariantElement {
   public:
    InvariantElement(int n, int r) : n_(n), r_(r) {}
    /// m_Λ, or zero when ℓ(Λ) > n.
    static InvariantElement monomial(int n, const OrbitMonomial& m, const Rational& coeff = Rational(1));

    int n() const { return n_; }
    int r() const { return r_; }
    const std::map<OrbitMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const OrbitMonomial& m) const;

    void add(const OrbitMonomial& m, const Rational& c);
    InvariantElement& operator+=(const InvariantElement& o);
    InvariantElement& operator-=(const InvariantElement& o);
    InvariantElement& operator*=(const Rational& s);
    friend InvariantElement operator+(InvariantElement a, const InvariantElement& b) { return a += b; }
    friend InvariantElement operator-(InvariantElement a, const InvariantElement& b) { return a -= b; }
    friend InvariantElement operator*(InvariantElement a, const Rational& s) { return a *= s; }
    friend bool operator==(const InvariantElement&, const InvariantElement&) = default;

    std::string to_string() const;

   private:
    void check_same(const InvariantElement& o) const;
    int n_;
    int r_;
    std::map<OrbitMonomial, Rational> terms_;
};

/// m_Λ m_M in n coordinates, by expanding both orbit sums and recollecting.
InvariantElement orbit_product(const OrbitMonomial& lhs, const OrbitMonomial& rhs, int n);
InvariantElement orbit_product(const InvariantElement& u, const InvariantElement& v);

}  // namespace hikita::appendixfix
