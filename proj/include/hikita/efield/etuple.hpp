#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hikita/combinat/multipartition.hpp"
#include "hikita/exact/polynomial.hpp"

namespace hikita::efield {

using combinat::Multipartition;
using exact::CPoly;
using exact::CycloNum;
using exact::QPoly;
using exact::Rational;

/// Element of E = ⊕_{λ ∈ P(r,n)} (parameter ring), components in canonical order.
template <class Poly>
struct BasicETuple {
    int n = 0;
    int r = 1;
    std::vector<Multipartition> shapes;
    std::vector<Poly> values;

    std::size_t size() const { return values.size(); }
    const Poly& at(const Multipartition& shape) const;
    friend bool operator==(const BasicETuple&, const BasicETuple&) = default;
};

using ETuple = BasicETuple<QPoly>;   // over Q in κ, a_1..a_{r-1}
using CETuple = BasicETuple<CPoly>;  // over Q(ζ_r) in κ, c_1..c_{r-1}

template <class Poly>
const Poly& BasicETuple<Poly>::at(const Multipartition& shape) const {
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (shapes[i] == shape) return values[i];
    throw DomainError("multipartition " + shape.to_string() + " is not a component index");
}

/// Component λ: e_k{κc + a_{l+1} : box of content c in λ^l}.
ETuple chern_image(int k, int n, int r);
/// Component λ: the scalar of e_k(z) on the seminormal Hecke module of λ.
ETuple hecke_center_image(int k, int n, int r);
/// hecke_center_image for k = 1..n, building each module once.
std::vector<ETuple> hecke_center_images(int n, int r);
/// Component λ: e_k of the Dunkl–Opdam spectrum on the standard module of λ.
CETuple dunkl_opdam_image(int k, int n, int r);

/// a_i ↦ p(η^{i-1}).
struct ParamSubstitution {
    int r = 1;
    std::vector<CPoly> a_images;  // a_1..a_r

    /// Σ a_images = 0.
    bool respects_relation() const;
};

ParamSubstitution identify_parameters(int r);

/// Replaces a_1..a_{r-1} by their images; throws DomainError on variables other than κ and a_i.
CETuple substitute_parameters(const ETuple& t, const ParamSubstitution& sub);

struct MainTheoremEntry {
    int k = 0;
    bool hecke_agrees = false;
    bool dunkl_opdam_agrees = false;
    std::string witness;  // first disagreeing component and the difference
};

struct MainTheoremReport {
    int n = 0;
    int r = 1;
    std::vector<MainTheoremEntry> entries;
    bool passed() const;
};

/// Compares the three generator images for k = 1..n. mutate, when given, is applied to every chern image
/// first (negative control).
MainTheoremReport verify_main_theorem(int n, int r, const std::function<void(ETuple&)>& mutate = {});

/// Values for κ and a_1..a_{r-1}; a_r follows from Σa_i = 0.
struct ParameterPoint {
    Rational kappa;
    std::vector<Rational> a;  // a_1..a_{r-1}

    std::vector<Rational> framing(int r) const;  // a_1..a_r
    std::string to_string() const;
    /// Inverse of to_string: "kappa=3/2,a1=1/3,…" with exactly the keys kappa, a1..a_{r-1}.
    static ParameterPoint parse(std::string_view text, int r);
};

Rational evaluate(const QPoly& p, const ParameterPoint& point);

/// Dimension of the unital subalgebra of Q^{|P(r,n)|} generated by the specialized tuples.
int specialize_and_dimension(const std::vector<ETuple>& generators, const ParameterPoint& point);

/// The chern images for k = 1..n.
std::vector<ETuple> chern_generators(int n, int r);

/// The vectors (C_1(λ), …, C_n(λ)) at the point are pairwise distinct over λ ∈ P(r,n).
bool separation_check(int n, int r, const ParameterPoint& point);

struct GenericPoint {
    ParameterPoint point;
    int attempts = 0;
};

/// Rejection-samples small rational points with κ ≠ 0 and pairwise distinct a_1..a_r until separation holds.
GenericPoint random_generic_point(int n, int r, std::mt19937_64& rng);

}  // namespace hikita::efield
