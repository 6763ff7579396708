#pragma once

#include <map>
#include <string>
#include <vector>

#include "hikita/combinat/seminormal.hpp"
#include "hikita/wreath/group.hpp"

namespace hikita::wreath {

using Sparse = exact::SparseMatrix<CycloNum>;

/// Seminormal model of the irreducible Γ_n-module attached to a multipartition (r = number of components).
/// ε_i acts on p_B by η^{β(B(i))}; s_i uses α = 1/(ct(i+1) - ct(i)) inside one component and α = 0 across.
struct WreathIrrep {
    combinat::SeminormalModule<CycloNum> module;
    int r = 1;
    std::vector<Sparse> eps;  // ε_1..ε_n

    int dimension() const { return module.dimension(); }
    int n() const { return module.n(); }
    const Sparse& s(int i) const { return module.generator(i); }
    const Sparse& epsilon(int i) const { return eps.at(i - 1); }
};

/// Builds the module; ε_{i+1} is obtained as s_i ε_i s_i from ε_1 and checked against η^{β}. The full
/// presentation of Γ_n is asserted, a failure raises ConstructionError.
WreathIrrep wreath_seminormal_irrep(const combinat::Multipartition& shape);

/// Empty when s_i² = 1, braid and distant commutation, ε_i^r = 1, ε_i ε_j = ε_j ε_i, s_i ε_i s_i = ε_{i+1}
/// and s_i ε_j = ε_j s_i (j ∉ {i, i+1}) all hold; otherwise the first failing relation.
std::string presentation_failure(const WreathIrrep& irrep);

/// Factorization of a permutation as s_{w_1} ∘ … ∘ s_{w_m} (1-based indices).
std::vector<int> reduced_word(const Perm& p);

/// Matrix action of group elements and group algebra elements on one irreducible; permutation matrices are cached.
class WreathRepresentation {
   public:
    explicit WreathRepresentation(const WreathIrrep& irrep) : irrep_(irrep) {}

    const WreathIrrep& irrep() const { return irrep_; }
    Sparse operator()(const ColoredPerm& g) const;
    Sparse operator()(const WreathElement& x) const;
    /// Trace of ρ(g) without forming the product.
    CycloNum character(const ColoredPerm& g) const;

   private:
    const Sparse& perm_matrix(const Perm& p) const;
    CycloNum color_factor(const ColoredPerm& g, int b) const;

    const WreathIrrep& irrep_;
    mutable std::map<Perm, Sparse> perm_cache_;
};

/// JM_{Γ_n,1..n} acting on the irreducible, via the group algebra elements wreath_jm.
std::vector<Sparse> wreath_jm_matrices(const WreathIrrep& irrep);

/// Empty when every JM_{Γ_n,i} is diagonal with entry ct(B(i)) and every ε_i with entry η^{β(B(i))}.
std::string spectrum_failure(const WreathIrrep& irrep);

struct CharacterReport {
    bool orthonormal = true;
    long long class_count = 0;
    std::string witness;
};

/// ⟨χ_λ, χ_μ⟩ = (1/|Γ_n|) Σ_g χ_λ(g) conj(χ_μ(g)) = δ over all multipartitions of n, summed class by class.
CharacterReport character_orthonormality(int n, int r);

}  // namespace hikita::wreath
