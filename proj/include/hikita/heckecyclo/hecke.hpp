#pragma once

#include <string>
#include <vector>

#include "hikita/combinat/seminormal.hpp"
#include "hikita/exact/polynomial.hpp"
#include "hikita/exact/ratfunc.hpp"

namespace hikita::heckecyclo {

using exact::QPoly;
using exact::RatFunc;
using HeckeMatrix = exact::SparseMatrix<RatFunc>;

/// Seminormal model of the universal Specht module of the degenerate cyclotomic Hecke algebra over
/// Frac(Q[κ, a]): z_i p_B = (κ ct(B(i)) + a_{β(B(i))}) p_B, s_i with α = κ / (z_{i+1}(B) - z_i(B)).
struct HeckeModule {
    combinat::SeminormalModule<RatFunc> module;
    std::vector<QPoly> framing;               // a_1..a_r
    std::vector<std::vector<QPoly>> z_value;  // [i-1][b]
    std::vector<HeckeMatrix> z;               // z_1..z_n as matrices

    int dimension() const { return module.dimension(); }
    int n() const { return module.n(); }
    int r() const { return static_cast<int>(framing.size()); }
    const HeckeMatrix& s(int i) const { return module.generator(i); }
};

/// a_1..a_r with a_r = -(a_1 + … + a_{r-1}); for r = 1 this is the single value 0.
std::vector<QPoly> default_framing(int r);

/// Builds the module and asserts the full relation suite (ConstructionError on failure). z_{i+1} is obtained
/// as s_i z_i s_i + κ s_i from z_1 = diag(a_β) and required to be diagonal with the prescribed spectrum.
HeckeModule hecke_seminormal_module(const combinat::Multipartition& shape);
HeckeModule hecke_seminormal_module(const combinat::Multipartition& shape, const std::vector<QPoly>& framing);

/// Empty when s_i z_j = z_{s_i(j)} s_i + κ(δ_{i+1,j} - δ_{i,j}), the S_n relations, [z_i, z_j] = 0 and
/// Π_l (z_1 - a_l) = 0 all hold; otherwise the first failing relation.
std::string relation_failure(const HeckeModule& mod);

/// Scalar by which e_k(z_1..z_n) acts, read off the z-spectrum of every basis vector; throws
/// ConstructionError if it differs between basis vectors.
QPoly spectral_scalar(int k, const HeckeModule& mod);

/// spectral_scalar, additionally checked against e_k over the boxes; throws ConstructionError if the action is not scalar or disagrees
/// with e_k over the boxes.
QPoly central_scalar(int k, const combinat::Multipartition& shape);
QPoly central_scalar(int k, const HeckeModule& mod);

/// e_k(z) commutes with every s_i on every module of P(r,n), for all k.
bool centrality_check(int n, int r);
/// Negative control: z_1 alone commutes with every s_i on every module (expected false for n ≥ 2).
bool z1_commutes_everywhere(int n, int r);

/// Distinct monic linear denominators κ(ct' - ct) + a_β' - a_β met by the seminormal coefficients.
std::vector<QPoly> walls(const HeckeModule& mod);

}  // namespace hikita::heckecyclo
