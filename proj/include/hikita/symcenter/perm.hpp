#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hikita/combinat/partition.hpp"
#include "hikita/exact/rational.hpp"

namespace hikita::symcenter {

using exact::Rational;

/// Permutation of {0..n-1} in one-line notation.
using Perm = std::vector<int>;

/// (a ∘ b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm identity_perm(int n);
/// Transposition of the 1-based points i and j.
Perm transposition(int n, int i, int j);
combinat::Partition cycle_type(const Perm& p);
int cycle_count(const Perm& p);
std::string cycle_notation(const Perm& p);

long long factorial(int n);
/// Lehmer-code rank in [0, n!).
long long perm_rank(const Perm& p);
Perm perm_unrank(int n, long long rank);

/// Element of Q S_n stored densely, indexed by Lehmer rank.
class PermElement {
   public:
    explicit PermElement(int n);
    static PermElement basis(const Perm& p, const Rational& c = Rational(1));
    static PermElement one(int n) { return basis(identity_perm(n)); }

    int n() const { return n_; }
    const Rational& coeff(const Perm& p) const { return coeffs_[perm_rank(p)]; }
    const Rational& coeff_at(long long rank) const { return coeffs_[rank]; }
    void add(const Perm& p, const Rational& c) { coeffs_[perm_rank(p)] += c; }
    void add_at(long long rank, const Rational& c) { coeffs_[rank] += c; }
    long long group_order() const { return static_cast<long long>(coeffs_.size()); }
    bool is_zero() const;
    std::size_t support_size() const;

    /// this * (i j) for 1-based points.
    PermElement times_transposition(int i, int j) const;
    /// (i j) * this.
    PermElement transposition_times(int i, int j) const;

    PermElement& operator+=(const PermElement& o);
    PermElement& operator-=(const PermElement& o);
    PermElement& operator*=(const Rational& s);
    friend PermElement operator+(PermElement a, const PermElement& b) { return a += b; }
    friend PermElement operator-(PermElement a, const PermElement& b) { return a -= b; }
    friend PermElement operator*(PermElement a, const Rational& s) { return a *= s; }
    /// Convolution.
    friend PermElement operator*(const PermElement& a, const PermElement& b);
    friend bool operator==(const PermElement& a, const PermElement& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

   private:
    int n_;
    std::vector<Rational> coeffs_;
};

/// All permutations of n in rank order; cached.
const std::vector<Perm>& all_perms(int n);

}  // namespace hikita::symcenter
