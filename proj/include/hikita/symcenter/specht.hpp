#pragma once

#include <string>
#include <vector>

#include "hikita/combinat/partition.hpp"
#include "hikita/combinat/seminormal.hpp"
#include "hikita/exact/rational.hpp"
#include "hikita/symcenter/center.hpp"

namespace hikita::symcenter {

using SpechtModule = combinat::SeminormalModule<Rational>;

/// Young's seminormal form of S(λ): α = 1/(ct(B(i+1)) - ct(B(i))). The S_n relations and the
/// diagonal JM spectrum are asserted; a failure raises ConstructionError.
SpechtModule seminormal_specht(const combinat::Partition& lambda);

/// JM_1..JM_n acting on the module, computed by JM_{i+1} = s_i JM_i s_i + s_i from JM_1 = 0.
std::vector<exact::SparseMatrix<Rational>> jm_matrices(const SpechtModule& mod);

/// χ_λ on the class of cycle type μ, as a trace of a product of seminormal matrices.
Rational character_value(const SpechtModule& mod, const combinat::Partition& mu);

/// Θ: Z(Q S_n) → ⊕_{λ ⊢ n} Q, z ↦ (scalar by which z acts on S(λ))_λ.
class ThetaMap {
   public:
    explicit ThetaMap(int n);

    int n() const { return n_; }
    /// Components in the order of enumerate_partitions(n).
    const std::vector<combinat::Partition>& partitions() const { return partitions_; }
    long long dimension(int lam) const { return dims_[lam]; }
    Rational character(int lam, int cls) const { return chars_[lam][cls]; }

    std::vector<Rational> apply_coordinates(const std::vector<Rational>& class_coords) const;
    std::vector<Rational> apply(const PermElement& z) const;
    /// Class coordinates of the primitive central idempotent of λ.
    std::vector<Rational> idempotent(int lam) const;

    /// Empty when Θ is bijective and multiplicative on all pairs of class sums; otherwise a witness.
    std::string isomorphism_failure() const;

   private:
    int n_;
    std::vector<combinat::Partition> partitions_;
    std::vector<long long> dims_;
    std::vector<std::vector<Rational>> chars_;  // [λ][class index of center_algebra(n)]
};

const ThetaMap& theta_map(int n);

}  // namespace hikita::symcenter
