#include "hikita/symcenter/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hikita/exact/error.hpp"

namespace hikita::symcenter {

Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
    return c;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<int>(x);
    return q;
}

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw DomainError("bad transposition points");
    Perm p = identity_perm(n);
    std::swap(p[i - 1], p[j - 1]);
    return p;
}

combinat::Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lengths;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (std::size_t y = x; !seen[y]; y = p[y]) {
            seen[y] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return combinat::Partition(lengths);
}

int cycle_count(const Perm& p) { return cycle_type(p).length(); }

std::string cycle_notation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::string s;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x] || p[x] == static_cast<int>(x)) continue;
        s += '(';
        bool first = true;
        for (std::size_t y = x; !seen[y]; y = p[y]) {
            seen[y] = true;
            if (!first) s += ' ';
            s += std::to_string(y + 1);
            first = false;
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

long long perm_rank(const Perm& p) {
    const int n = static_cast<int>(p.size());
    long long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

Perm perm_unrank(int n, long long rank) {
    std::vector<int> code(n);
    for (int i = n - 1; i >= 0; --i) {
        code[i] = static_cast<int>(rank % (n - i));
        rank /= (n - i);
    }
    std::vector<int> pool = identity_perm(n);
    Perm p(n);
    for (int i = 0; i < n; ++i) {
        p[i] = pool[code[i]];
        pool.erase(pool.begin() + code[i]);
    }
    return p;
}

const std::vector<Perm>& all_perms(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<Perm>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Perm> perms;
    Perm p = identity_perm(n);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return cache.emplace(n, std::move(perms)).first->second;
}

PermElement::PermElement(int n) : n_(n) {
    if (n < 0 || n > 9) throw DomainError("group algebra of S_n supported for 0 <= n <= 9");
    coeffs_.assign(factorial(n), Rational());
}

PermElement PermElement::basis(const Perm& p, const Rational& c) {
    PermElement e(static_cast<int>(p.size()));
    e.add(p, c);
    return e;
}

bool PermElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::size_t PermElement::support_size() const {
    return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
}

PermElement PermElement::times_transposition(int i, int j) const {
    const auto& perms = all_perms(n_);
    PermElement out(n_);
    for (long long k = 0; k < group_order(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        Perm q = perms[k];
        std::swap(q[i - 1], q[j - 1]);
        out.coeffs_[perm_rank(q)] += coeffs_[k];
    }
    return out;
}

PermElement PermElement::transposition_times(int i, int j) const {
    const auto& perms = all_perms(n_);
    PermElement out(n_);
    for (long long k = 0; k < group_order(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        Perm q = perms[k];
        for (int& v : q) {
            if (v == i - 1) {
                v = j - 1;
            } else if (v == j - 1) {
                v = i - 1;
            }
        }
        out.coeffs_[perm_rank(q)] += coeffs_[k];
    }
    return out;
}

PermElement& PermElement::operator+=(const PermElement& o) {
    if (o.n_ != n_) throw DomainError("group algebra size mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

PermElement& PermElement::operator-=(const PermElement& o) {
    if (o.n_ != n_) throw DomainError("group algebra size mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

PermElement& PermElement::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

PermElement operator*(const PermElement& a, const PermElement& b) {
    if (a.n_ != b.n_) throw DomainError("group algebra size mismatch");
    const auto& perms = all_perms(a.n_);
    std::vector<long long> right;
    for (long long k = 0; k < b.group_order(); ++k)
        if (!b.coeffs_[k].is_zero()) right.push_back(k);
    PermElement out(a.n_);
    for (long long i = 0; i < a.group_order(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (long long j : right) out.coeffs_[perm_rank(compose(perms[i], perms[j]))] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

std::string PermElement::to_string() const {
    const auto& perms = all_perms(n_);
    std::string s;
    for (long long k = 0; k < group_order(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (!coeffs_[k].is_one()) s += coeffs_[k].to_string() + "*";
        s += cycle_notation(perms[k]);
    }
    return s.empty() ? "0" : s;
}

}  // namespace hikita::symcenter
