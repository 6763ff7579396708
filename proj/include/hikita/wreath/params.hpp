#pragma once

#include <vector>

#include "hikita/combinat/multipartition.hpp"
#include "hikita/exact/polynomial.hpp"

namespace hikita::wreath {

using exact::CPoly;

/// p(q) = (1/r) Σ_{l=1}^{r-1} c_l / (η^{-l} - 1) q^l over Q(ζ_r)[c_1..c_{r-1}, q]; zero for r = 1.
CPoly p_poly(int r);

/// c(q) = Σ_{l=1}^{r-1} c_l q^l.
CPoly c_poly(int r);

/// f with q replaced by value.
CPoly substitute_q(const CPoly& f, const CPoly& value);

/// p(η^k) as a polynomial in c_1..c_{r-1}.
CPoly p_at_eta_power(int r, int k);

/// c(q) = r (p(η^{-1} q) - p(q)).
bool c_vs_p_identity(int r);
/// Σ_{i=1}^r p(η^{i-1}) = 0.
bool p_sum_vanishes(int r);

/// For each standard multitableau of the shape (in standard_multitableaux order), the scalars
/// κ ct(B(i)) + p(η^{β(B(i))-1}) for i = 1..n.
std::vector<std::vector<CPoly>> dunkl_opdam_spectrum(const combinat::Multipartition& shape);

}  // namespace hikita::wreath
