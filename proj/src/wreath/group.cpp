#include "hikita/wreath/group.hpp"

#include <algorithm>
#include <sstream>

#include "hikita/exact/error.hpp"

namespace hikita::wreath {

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

void check_params(int n, int r) {
    if (n < 0) throw DomainError("wreath product needs n >= 0");
    if (r < 1) throw DomainError("wreath product needs r >= 1");
}

}  // namespace

ColoredPerm ColoredPerm::identity(int n, int r) {
    check_params(n, r);
    return {symcenter::identity_perm(n), std::vector<int>(n, 0), r};
}

ColoredPerm ColoredPerm::epsilon(int j, int n, int r) {
    if (j < 1 || j > n) throw DomainError("epsilon index out of range");
    ColoredPerm g = identity(n, r);
    g.colors[j - 1] = mod(1, r);
    return g;
}

ColoredPerm ColoredPerm::transposition(int i, int j, int n, int r) {
    ColoredPerm g = identity(n, r);
    g.perm = symcenter::transposition(n, i, j);
    return g;
}

// (d1 P1)(d2 P2) = d1 (P1 d2 P1^{-1}) P1 P2, and P1 diag(c) P1^{-1} moves the color at j to slot perm1(j).
ColoredPerm operator*(const ColoredPerm& a, const ColoredPerm& b) {
    if (a.n() != b.n() || a.r != b.r) throw DomainError("colored permutations of different shapes");
    ColoredPerm out{symcenter::compose(a.perm, b.perm), a.colors, a.r};
    for (int j = 0; j < a.n(); ++j) out.colors[a.perm[j]] = mod(out.colors[a.perm[j]] + b.colors[j], a.r);
    return out;
}

ColoredPerm ColoredPerm::inverse() const {
    // (d P)^{-1} = P^{-1} d^{-1} = (P^{-1} d^{-1} P) P^{-1}: the color at slot perm(j) moves back to j.
    ColoredPerm out{symcenter::inverse(perm), std::vector<int>(n(), 0), r};
    for (int j = 0; j < n(); ++j) out.colors[j] = mod(-colors[perm[j]], r);
    return out;
}

ColoredPerm ColoredPerm::pow(int e) const {
    ColoredPerm base = e < 0 ? inverse() : *this;
    ColoredPerm result = identity(n(), r);
    for (int k = 0; k < std::abs(e); ++k) result = result * base;
    return result;
}

int ColoredPerm::color_sum() const {
    int s = 0;
    for (int c : colors) s += c;
    return mod(s, r);
}

std::string ColoredPerm::to_string() const {
    std::ostringstream os;
    os << symcenter::cycle_notation(perm);
    bool any = std::any_of(colors.begin(), colors.end(), [](int c) { return c != 0; });
    if (any) {
        os << "[";
        for (int j = 0; j < n(); ++j) os << (j ? "," : "") << colors[j];
        os << "]";
    }
    return os.str();
}

std::vector<ColoredPerm> all_colored_perms(int n, int r) {
    check_params(n, r);
    long long colorings = 1;
    for (int k = 0; k < n; ++k) colorings *= r;
    std::vector<ColoredPerm> out;
    out.reserve(static_cast<std::size_t>(symcenter::factorial(n) * colorings));
    for (const auto& p : symcenter::all_perms(n))
        for (long long code = 0; code < colorings; ++code) {
            ColoredPerm g{p, std::vector<int>(n, 0), r};
            long long rest = code;
            for (int k = 0; k < n; ++k) {
                g.colors[k] = static_cast<int>(rest % r);
                rest /= r;
            }
            out.push_back(std::move(g));
        }
    return out;
}

long long wreath_order(int n, int r) {
    long long order = symcenter::factorial(n);
    for (int k = 0; k < n; ++k) order *= r;
    return order;
}

std::vector<std::pair<int, int>> conjugacy_label(const ColoredPerm& g) {
    std::vector<std::pair<int, int>> label;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        int color = 0;
        for (int j = s; !seen[j]; j = g.perm[j]) {
            seen[j] = true;
            ++len;
            color += g.colors[j];
        }
        label.emplace_back(len, mod(color, g.r));
    }
    std::sort(label.begin(), label.end());
    return label;
}

WreathElement WreathElement::basis(const ColoredPerm& g, const CycloNum& c) {
    WreathElement e(g.n(), g.r);
    e.add(g, c);
    return e;
}

CycloNum WreathElement::coeff(const ColoredPerm& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? CycloNum() : it->second;
}

void WreathElement::add(const ColoredPerm& g, const CycloNum& c) {
    if (g.n() != n_ || g.r != r_) throw DomainError("group element of the wrong shape");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void WreathElement::check_same(const WreathElement& o) const {
    if (n_ != o.n_ || r_ != o.r_) throw DomainError("group algebra elements of different shapes");
}

WreathElement& WreathElement::operator+=(const WreathElement& o) {
    check_same(o);
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

WreathElement& WreathElement::operator-=(const WreathElement& o) {
    check_same(o);
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

WreathElement& WreathElement::operator*=(const CycloNum& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, c] : terms_) c *= s;
    return *this;
}

WreathElement operator*(const WreathElement& a, const WreathElement& b) {
    a.check_same(b);
    WreathElement out(a.n_, a.r_);
    for (const auto& [g, x] : a.terms_)
        for (const auto& [h, y] : b.terms_) out.add(g * h, x * y);
    return out;
}

std::string WreathElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << g.to_string();
    }
    return os.str();
}

WreathElement zeta_projector(int i, int j, int n, int r) {
    if (i == j) throw DomainError("zeta_projector needs i != j");
    if (i < 1 || j < 1 || i > n || j > n) throw DomainError("zeta_projector index out of range");
    WreathElement z(n, r);
    const CycloNum weight(r, exact::Rational(1, r));
    const ColoredPerm ei = ColoredPerm::epsilon(i, n, r);
    const ColoredPerm ej_inv = ColoredPerm::epsilon(j, n, r).inverse();
    for (int p = 0; p < r; ++p) z.add(ei.pow(p) * ej_inv.pow(p), weight);
    if (!(z * z == z)) throw ConstructionError("zeta projector is not idempotent");
    return z;
}

WreathElement wreath_jm(int i, int n, int r) {
    if (i < 1 || i > n) throw DomainError("wreath_jm index out of range");
    WreathElement jm(n, r);
    for (int j = 1; j < i; ++j)
        jm += zeta_projector(i, j, n, r) * WreathElement::basis(ColoredPerm::transposition(i, j, n, r));
    return jm;
}

WreathElement uniform_idempotent(int n, int r) {
    WreathElement e(n, r);
    const CycloNum weight(r, exact::Rational(1, wreath_order(n, r)));
    for (const auto& g : all_colored_perms(n, r)) e.add(g, weight);
    return e;
}

}  // namespace hikita::wreath
