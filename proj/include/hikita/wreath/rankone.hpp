#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hikita/exact/polynomial.hpp"

namespace hikita::wreath {

using exact::CPoly;
using exact::CycloNum;

/// Element of the n = 1 rational Cherednik algebra with [x,y] = -ħ - c(ε), εx = ηxε, εy = η⁻¹yε, ε^r = 1,
/// written in the normal-form basis x^a y^b ε^c (0 ≤ c < r) with coefficients in Q(ζ_r)[ħ, c_1..c_{r-1}].
class RankOneWord {
   public:
    using Exponents = std::array<int, 3>;

    explicit RankOneWord(int r);
    static RankOneWord monomial(int r, int a, int b, int c, const CPoly& coeff = CPoly(1));
    static RankOneWord scalar(int r, const CPoly& coeff) { return monomial(r, 0, 0, 0, coeff); }
    static RankOneWord x(int r) { return monomial(r, 1, 0, 0); }
    static RankOneWord y(int r) { return monomial(r, 0, 1, 0); }
    static RankOneWord eps(int r, int k = 1);

    int r() const { return r_; }
    const std::map<Exponents, CPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Exponents& e, const CPoly& coeff);

    RankOneWord pow(int e) const;
    /// Applies f to every coefficient (e.g. a specialization ħ → 0).
    template <class F>
    RankOneWord map_coefficients(F f) const {
        RankOneWord out(r_);
        for (const auto& [e, c] : terms_) out.add(e, f(c));
        return out;
    }

    RankOneWord& operator+=(const RankOneWord& o);
    RankOneWord& operator-=(const RankOneWord& o);
    RankOneWord& operator*=(const CPoly& s);
    friend RankOneWord operator+(RankOneWord a, const RankOneWord& b) { return a += b; }
    friend RankOneWord operator-(RankOneWord a, const RankOneWord& b) { return a -= b; }
    friend RankOneWord operator*(RankOneWord a, const CPoly& s) { return a *= s; }
    /// Product of normal forms, computed by right multiplication with one generator at a time.
    friend RankOneWord operator*(const RankOneWord& a, const RankOneWord& b);
    friend bool operator==(const RankOneWord& a, const RankOneWord& b) {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

   private:
    RankOneWord times_letter(char letter) const;
    void check_same(const RankOneWord& o) const;

    int r_;
    std::map<Exponents, CPoly> terms_;
};

/// Linear combination of words in the letters 'x', 'y', 'e' (ε).
using FreeElement = std::map<std::string, CPoly>;

enum class ReductionOrder { Leftmost, Rightmost, Random };

/// Rewrites with yx → xy + ħ + c(ε), εx → ηxε, εy → η⁻¹yε, ε^r → 1 until every word is normal,
/// choosing the redex by the given order (rng required for Random).
RankOneWord rank_one_normal_form(const FreeElement& w, int r, ReductionOrder order = ReductionOrder::Leftmost,
                                 std::mt19937_64* rng = nullptr);
RankOneWord rank_one_normal_form(const std::string& word, int r, ReductionOrder order = ReductionOrder::Leftmost,
                                 std::mt19937_64* rng = nullptr);

struct ConfluenceReport {
    bool confluent = true;
    int words = 0;
    std::string witness;
};

/// Random words of length ≤ max_length reduced leftmost, rightmost, in random order and by the
/// normal-form product; all four must agree.
ConfluenceReport confluence_check(int r, int samples, int max_length, std::uint64_t seed);

struct CoulombRelation {
    std::string name;
    bool stated = false;   // with r_{-1} = e x^r e, r_1 = r^{-r} e y^r e
    bool swapped = false;  // with the roles of r_1 and r_{-1} exchanged
};

struct CoulombReport {
    int r = 1;
    std::vector<CoulombRelation> relations;  // r1 r-1, r-1 r1, [r1,b], [r-1,b]
    bool classical_commutative = false;      // r_1 r_{-1} = r_{-1} r_1 after ħ → 0
    bool quantum_noncommutative = false;     // and they differ before the specialization

    bool stated_holds() const;
    bool swapped_holds() const;
    /// "stated", "swapped", "both" or "none".
    std::string orientation() const;
};

/// Checks r_1 r_{-1} = Π(b - a_i), r_{-1} r_1 = Π(b - a_i - ħ), [r_1, b] = ħ r_1, [r_{-1}, b] = -ħ r_{-1} in
/// e H e with b = e u e, u = (1/r)(xy + ħ) + p(η⁻¹ε) and a_i = p(η^{i-1}) - (i-1)ħ/r.
CoulombReport verify_rank_one_coulomb(int r);

}  // namespace hikita::wreath
