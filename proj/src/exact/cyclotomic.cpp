#include "hikita/exact/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hikita/exact/error.hpp"

namespace hikita::exact {

namespace {

// Long division of integer polynomials by a monic divisor; remainder must vanish.
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw ConstructionError("cyclotomic division underflow");
    std::vector<long long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        long long c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw ConstructionError("x^r - 1 not divisible by lower cyclotomic factors");
    return quot;
}

// Per-order reduction data: eta^k in the power basis for 0 <= k < 2 phi(r).
struct FieldContext {
    int order = 1;
    int degree = 1;
    std::vector<std::vector<Rational>> eta_powers;
};

const FieldContext& context(int r) {
    static std::mutex mutex;
    static std::map<int, FieldContext> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    FieldContext ctx;
    ctx.order = r;
    const auto phi_poly = cyclotomic_polynomial(r);
    ctx.degree = static_cast<int>(phi_poly.size()) - 1;
    const int d = ctx.degree;
    const int span = std::max(2 * d, r + 1);
    ctx.eta_powers.assign(span, std::vector<Rational>(d));
    for (int k = 0; k < d; ++k) ctx.eta_powers[k][k] = 1;
    // eta^d = -sum_{j<d} phi_j eta^j, then eta^{k+1} = eta * eta^k.
    for (int k = d; k < span; ++k) {
        const auto& prev = ctx.eta_powers[k - 1];
        std::vector<Rational> next(d);
        for (int j = 0; j + 1 < d; ++j) next[j + 1] = prev[j];
        const Rational& top = prev[d - 1];
        if (!top.is_zero())
            for (int j = 0; j < d; ++j) next[j] -= top * Rational(phi_poly[j]);
        ctx.eta_powers[k] = std::move(next);
    }
    return cache.emplace(r, std::move(ctx)).first->second;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int r) {
    if (r < 1) throw DomainError("cyclotomic_polynomial: order must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<long long>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(r); it != cache.end()) return it->second;
    }
    std::vector<long long> result(r + 1, 0);
    result[0] = -1;
    result[r] = 1;
    for (int d = 1; d < r; ++d)
        if (r % d == 0) result = divide_monic(result, cyclotomic_polynomial(d));
    std::lock_guard lock(mutex);
    cache.emplace(r, result);
    return result;
}

int euler_phi(int r) {
    if (r < 1) throw DomainError("euler_phi: argument must be positive");
    int result = r;
    int m = r;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

CycloNum::CycloNum(int order, const Rational& v) : order_(order) {
    if (order < 1) throw DomainError("CycloNum: order must be positive");
    coords_.assign(context(order).degree, Rational());
    coords_[0] = v;
}

CycloNum::CycloNum(int order, std::vector<Rational> coords) : order_(order), coords_(std::move(coords)) {
    if (order < 1) throw DomainError("CycloNum: order must be positive");
    if (static_cast<int>(coords_.size()) != context(order).degree)
        throw DomainError("CycloNum: coordinate vector has wrong length for Q(zeta_" + std::to_string(order) + ")");
}

CycloNum CycloNum::eta(int order, int k) {
    const auto& ctx = context(order);
    int e = ((k % order) + order) % order;
    return CycloNum(order, ctx.eta_powers[e]);
}

bool CycloNum::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

bool CycloNum::is_one() const { return is_rational() && coords_[0].is_one(); }

CycloNum CycloNum::promoted(int order) const {
    if (order == order_) return *this;
    if (order_ != 1) throw DomainError("cannot move an element of Q(zeta_" + std::to_string(order_) + ") to order " +
                                       std::to_string(order));
    return CycloNum(order, coords_[0]);
}

void CycloNum::align_with(const CycloNum& o) {
    if (order_ == o.order_ || o.order_ == 1) return;
    if (order_ == 1) {
        *this = promoted(o.order_);
        return;
    }
    throw DomainError("mixed cyclotomic orders " + std::to_string(order_) + " and " + std::to_string(o.order_));
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    align_with(o);
    if (o.order_ == order_) {
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    } else {
        coords_[0] += o.coords_[0];
    }
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    align_with(o);
    if (o.order_ == order_) {
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    } else {
        coords_[0] -= o.coords_[0];
    }
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    align_with(o);
    if (o.order_ != order_ || o.coords_.size() == 1) {
        const Rational& s = o.coords_[0];
        for (auto& c : coords_) c *= s;
        return *this;
    }
    if (coords_.size() == 1) {
        Rational s = coords_[0];
        coords_ = o.coords_;
        for (auto& c : coords_) c *= s;
        return *this;
    }
    const auto& ctx = context(order_);
    const int d = ctx.degree;
    std::vector<Rational> full(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (coords_[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (o.coords_[j].is_zero()) continue;
            full[i + j] += coords_[i] * o.coords_[j];
        }
    }
    std::vector<Rational> reduced(full.begin(), full.begin() + d);
    for (int k = d; k < 2 * d - 1; ++k) {
        if (full[k].is_zero()) continue;
        const auto& pw = ctx.eta_powers[k];
        for (int j = 0; j < d; ++j)
            if (!pw[j].is_zero()) reduced[j] += full[k] * pw[j];
    }
    coords_ = std::move(reduced);
    return *this;
}

CycloNum operator-(const CycloNum& a) {
    CycloNum r = a;
    for (auto& c : r.coords_) c = -c;
    return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.order_ == b.order_) return a.coords_ == b.coords_;
    if (a.order_ == 1 || b.order_ == 1) {
        const CycloNum& rat = a.order_ == 1 ? a : b;
        const CycloNum& other = a.order_ == 1 ? b : a;
        return other.is_rational() && other.coords_[0] == rat.coords_[0];
    }
    return false;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    const int d = static_cast<int>(coords_.size());
    if (d == 1) return CycloNum(order_, std::vector<Rational>{coords_[0].inverse()});
    // Solve (multiplication-by-this) * x = e_0 by Gauss-Jordan elimination.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    for (int j = 0; j < d; ++j) {
        CycloNum col = *this * eta(order_, j);
        for (int i = 0; i < d; ++i) m[i][j] = col.coords_[i];
    }
    m[0][d] = 1;
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (piv < d && m[piv][c].is_zero()) ++piv;
        if (piv == d) throw ConstructionError("singular multiplication matrix in cyclotomic inverse");
        std::swap(m[piv], m[c]);
        Rational inv = m[c][c].inverse();
        for (int k = c; k <= d; ++k) m[c][k] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int k = c; k <= d; ++k) m[i][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> x(d);
    for (int i = 0; i < d; ++i) x[i] = m[i][d];
    return CycloNum(order_, std::move(x));
}

CycloNum CycloNum::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum result(order_, Rational(1));
    CycloNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

CycloNum CycloNum::conj() const {
    CycloNum result(order_, Rational());
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j].is_zero()) continue;
        result += CycloNum(order_, coords_[j]) * eta(order_, -static_cast<int>(j));
    }
    return result;
}

std::string CycloNum::to_string() const {
    if (is_rational()) return coords_[0].to_string();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        const Rational& c = coords_[j];
        if (c.is_zero()) continue;
        std::string mag = (c.sign() < 0 ? -c : c).to_string();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (j == 0) {
            os << mag;
            continue;
        }
        if (mag != "1") os << mag << '*';
        os << "eta";
        if (j > 1) os << '^' << j;
    }
    return "(" + os.str() + ")";
}

}  // namespace hikita::exact
