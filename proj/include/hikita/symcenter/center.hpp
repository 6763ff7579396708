#pragma once

#include <string>
#include <vector>

#include "hikita/combinat/partition.hpp"
#include "hikita/symcenter/perm.hpp"

namespace hikita::symcenter {

/// JM_i = sum_{j<i} (j i).
PermElement jm_element(int i, int n);

/// e_k(JM_1, …, JM_n) expanded in the group algebra; centrality is asserted against every
/// adjacent transposition.
PermElement symmetric_jm(int k, int n);

/// e_0(JM), …, e_n(JM) in one pass.
std::vector<PermElement> elementary_jm_all(int n);

/// JM_1^{α_1} ⋯ JM_n^{α_n}.
PermElement jm_monomial(const std::vector<int>& exponents);

struct FilteredCenterElement {
    PermElement element;
    combinat::Partition cycle_type;
    int degree = 0;  // 2 (n - ℓ(cycle type))
};

/// Class sums C_μ, μ ⊢ n, ordered by ascending filtration degree (reverse of the partition order).
std::vector<FilteredCenterElement> center_basis(int n);

/// Z(Q S_n) in the class-sum basis with its structure constants.
class CenterAlgebra {
   public:
    explicit CenterAlgebra(int n);

    int n() const { return n_; }
    int dimension() const { return static_cast<int>(classes_.size()); }
    const std::vector<combinat::Partition>& classes() const { return classes_; }
    int index_of(const combinat::Partition& mu) const;
    long long class_size(int idx) const { return class_sizes_[idx]; }
    int degree(int idx) const { return 2 * (n_ - classes_[idx].length()); }
    /// a^ρ_{μν}: coefficient of C_ρ in C_μ C_ν.
    long long structure_constant(int mu, int nu, int rho) const;

    /// Class-sum coordinates of a central element; throws DomainError if it is not central.
    std::vector<Rational> coordinates(const PermElement& z) const;
    PermElement element(const std::vector<Rational>& coords) const;
    std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    /// Smallest m with x in F_{2m}; -1 for x = 0.
    int filtration_level(const std::vector<Rational>& x) const;

   private:
    int n_;
    std::vector<combinat::Partition> classes_;
    std::vector<long long> class_sizes_;
    std::vector<long long> constants_;  // [mu][nu][rho]
};

const CenterAlgebra& center_algebra(int n);

/// dim F_{2m} / F_{2m-2} for m = 0..n-1, counted from the cycle types of all permutations.
std::vector<int> rees_graded_dims(int n);

struct FiltrationReport {
    bool passed = true;
    std::vector<int> ranks;     // rank of the span of JM products of degree ≤ m
    std::vector<int> expected;  // dim F_{2m}
    std::string witness;
};

/// F_{2m} Z(Q S_n) = span of products e_{λ_1}(JM)⋯e_{λ_l}(JM) with |λ| ≤ m, for every m.
FiltrationReport filtration_generation_check(int n);

}  // namespace hikita::symcenter
