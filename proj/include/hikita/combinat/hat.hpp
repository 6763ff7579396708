#pragma once

#include <vector>

#include "hikita/combinat/multipartition.hpp"

namespace hikita::combinat {

/// lambda = 1^{α_1} 2^{α_2} … with ℓ(λ) + |λ| ≤ n  ↦  1^{n-ℓ(λ)-|λ|} 2^{α_1} 3^{α_2} …, a partition of n.
Partition hat_bijection_r1(const Partition& lambda, int n);
/// Inverse of hat_bijection_r1.
Partition hat_inverse_r1(const Partition& mu);

/// Input of the general hat map: an r-multipartition of any size and a vector p of r-1 nonnegative
/// integers, subject to ℓ(λ) + |λ| + |p| ≤ n.
struct HatInput {
    Multipartition lambda;
    std::vector<int> p;
    friend bool operator==(const HatInput&, const HatInput&) = default;
};

Multipartition hat_bijection_general(const HatInput& input, int n, int r);
HatInput hat_inverse_general(const Multipartition& mu);

/// All admissible (λ, p) for given n, r.
std::vector<HatInput> admissible_hat_inputs(int n, int r);

}  // namespace hikita::combinat
