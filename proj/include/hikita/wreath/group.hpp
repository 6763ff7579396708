#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hikita/exact/cyclotomic.hpp"
#include "hikita/symcenter/perm.hpp"

namespace hikita::wreath {

using exact::CycloNum;
using symcenter::Perm;

/// Element of Γ_n = S_n ⋉ (Z/r)^n, realized as the monomial matrix diag(η^{colors}) · P_perm on C^n
/// with P_perm e_j = e_{perm(j)}.
struct ColoredPerm {
    Perm perm;
    std::vector<int> colors;
    int r = 1;

    int n() const { return static_cast<int>(perm.size()); }

    static ColoredPerm identity(int n, int r);
    /// ε_j (1-based): identity permutation, color 1 at slot j.
    static ColoredPerm epsilon(int j, int n, int r);
    /// The transposition of the 1-based points i and j with trivial colors.
    static ColoredPerm transposition(int i, int j, int n, int r);

    ColoredPerm inverse() const;
    ColoredPerm pow(int e) const;
    /// Sum of all colors mod r.
    int color_sum() const;
    std::string to_string() const;

    friend ColoredPerm operator*(const ColoredPerm& a, const ColoredPerm& b);
    friend bool operator==(const ColoredPerm&, const ColoredPerm&) = default;
    friend auto operator<=>(const ColoredPerm&, const ColoredPerm&) = default;
};

/// Γ_n in a fixed order: permutations in rank order, colors in base-r counting order within each.
std::vector<ColoredPerm> all_colored_perms(int n, int r);
long long wreath_order(int n, int r);

/// Conjugacy class label: the sorted multiset of (cycle length, color sum along the cycle).
std::vector<std::pair<int, int>> conjugacy_label(const ColoredPerm& g);

/// Finitely supported element of Q(ζ_r)Γ_n.
class WreathElement {
   public:
    WreathElement(int n, int r) : n_(n), r_(r) {}
    static WreathElement basis(const ColoredPerm& g, const CycloNum& c = CycloNum(1));
    static WreathElement one(int n, int r) { return basis(ColoredPerm::identity(n, r)); }

    int n() const { return n_; }
    int r() const { return r_; }
    const std::map<ColoredPerm, CycloNum>& terms() const { return terms_; }
    CycloNum coeff(const ColoredPerm& g) const;
    void add(const ColoredPerm& g, const CycloNum& c);
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    WreathElement& operator+=(const WreathElement& o);
    WreathElement& operator-=(const WreathElement& o);
    WreathElement& operator*=(const CycloNum& s);
    friend WreathElement operator+(WreathElement a, const WreathElement& b) { return a += b; }
    friend WreathElement operator-(WreathElement a, const WreathElement& b) { return a -= b; }
    friend WreathElement operator*(WreathElement a, const CycloNum& s) { return a *= s; }
    /// Convolution.
    friend WreathElement operator*(const WreathElement& a, const WreathElement& b);
    friend bool operator==(const WreathElement& a, const WreathElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

   private:
    void check_same(const WreathElement& o) const;

    int n_;
    int r_;
    std::map<ColoredPerm, CycloNum> terms_;
};

/// ζ_{i,j} = (1/r) Σ_p ε_i^p ε_j^{-p}; idempotent (asserted). Throws DomainError when i = j.
WreathElement zeta_projector(int i, int j, int n, int r);

/// JM_{Γ_n,i} = Σ_{j<i} ζ_{i,j} (i j).
WreathElement wreath_jm(int i, int n, int r);

/// e = (1/|Γ_n|) Σ_g g.
WreathElement uniform_idempotent(int n, int r);

}  // namespace hikita::wreath
