#pragma once

#include <map>
#include <string>
#include <vector>

#include "hikita/appendixfix/orbit.hpp"
#include "hikita/combinat/hat.hpp"

namespace hikita::appendixfix {

/// m_{(λ,p)(0,1,0)^{|λ|}}.
OrbitMonomial canonical_monomial(const combinat::HatInput& input, int r);
/// Every triple is (0,1,0) or has b = 0, and the 𝕋-degree is zero.
bool is_canonical(const OrbitMonomial& m);
/// Canonical monomials with ℓ(λ) + |λ| + |p| <= n, in admissible_hat_inputs order.
std::vector<OrbitMonomial> canonical_family(int n, int r);

/// Largest polynomial degree in the canonical family plus two.
int spanning_bound(int n, int r);

/// 𝕋-degree zero monomials with ℓ <= n and polynomial degree <= cutoff, in column order per degree.
std::vector<OrbitMonomial> degree_zero_monomials(int n, int r, int cutoff);

/// Grading description recorded alongside results.
std::string grading_description(int r);

/// Degree-zero part of C[A^{2n}/Γ_n] modulo Σ_{i>0} B_{-i} B_i, one polynomial degree at a time.
class FixedPointQuotient {
   public:
    FixedPointQuotient(int n, int r, int cutoff);

    int n() const { return n_; }
    int r() const { return r_; }
    int cutoff() const { return cutoff_; }
    int dimension() const;
    long long expected_dimension() const;
    /// Non-pivot columns: representatives of a basis of the quotient.
    std::vector<OrbitMonomial> basis() const;
    /// Quotient dimension in each polynomial degree 0..cutoff.
    std::vector<int> profile() const;
    /// Every graded piece above the canonical family's top degree is zero.
    bool vanishes_above_canonical() const;

    /// Element lies in the ideal slice (checked degree by degree; must be 𝕋-degree 0, degrees <= cutoff).
    bool in_ideal(const InvariantElement& f) const;
    /// Rewrites f in terms of basis() modulo the ideal.
    InvariantElement normal_form(const InvariantElement& f) const;
    /// Images of the given degree-zero monomials are linearly independent in the quotient.
    bool independent(const std::vector<OrbitMonomial>& family) const;

   private:
    struct Slice {
        std::vector<OrbitMonomial> columns;
        std::map<OrbitMonomial, int> index;
        // Reduced echelon rows of the ideal slice, keyed by pivot column.
        std::map<int, std::map<int, Rational>> rows;
    };
    std::map<int, Rational> reduce(const Slice& s, std::map<int, Rational> v) const;
    const Slice& slice(int degree) const;

    int n_;
    int r_;
    int cutoff_;
    std::vector<Slice> slices_;
};

FixedPointQuotient fixed_point_quotient(int n, int r, int cutoff);

/// Rewrites m̄_Λ (𝕋-degree 0) as a combination of canonical monomials with ℓ <= n.
class SpanningReducer {
   public:
    SpanningReducer(int n, int r) : n_(n), r_(r) {}
    InvariantElement reduce(const OrbitMonomial& m);

   private:
    InvariantElement eliminate_unbalanced(const OrbitMonomial& m);
    InvariantElement lower_b(const OrbitMonomial& m);
    InvariantElement solve_for(const OrbitMonomial& target, const InvariantElement& relation);
    int n_;
    int r_;
    std::map<OrbitMonomial, InvariantElement> memo_;
};

InvariantElement spanning_reduction(const OrbitMonomial& m, int n);

}  // namespace hikita::appendixfix
