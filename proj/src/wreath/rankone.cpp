#include "hikita/wreath/rankone.hpp"

#include <sstream>

#include "hikita/exact/error.hpp"
#include "hikita/wreath/params.hpp"

namespace hikita::wreath {

using exact::Rational;
using exact::Var;

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

CPoly hbar() { return CPoly::variable(Var::hbar()); }

CycloNum cyclo(int r, const Rational& v) { return CycloNum(r, v); }

}  // namespace

RankOneWord::RankOneWord(int r) : r_(r) {
    if (r < 1) throw DomainError("rank-one algebra needs r >= 1");
}

RankOneWord RankOneWord::monomial(int r, int a, int b, int c, const CPoly& coeff) {
    if (a < 0 || b < 0) throw DomainError("negative exponent in rank-one monomial");
    RankOneWord w(r);
    w.add({a, b, mod(c, r)}, coeff);
    return w;
}

RankOneWord RankOneWord::eps(int r, int k) { return monomial(r, 0, 0, k); }

void RankOneWord::add(const Exponents& e, const CPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void RankOneWord::check_same(const RankOneWord& o) const {
    if (r_ != o.r_) throw DomainError("rank-one elements for different r");
}

RankOneWord& RankOneWord::operator+=(const RankOneWord& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

RankOneWord& RankOneWord::operator-=(const RankOneWord& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

RankOneWord& RankOneWord::operator*=(const CPoly& s) {
    RankOneWord out(r_);
    for (const auto& [e, c] : terms_) out.add(e, c * s);
    return *this = std::move(out);
}

RankOneWord RankOneWord::times_letter(char letter) const {
    RankOneWord out(r_);
    for (const auto& [e, k] : terms_) {
        auto [a, b, c] = e;
        switch (letter) {
            case 'e':
                out.add({a, b, mod(c + 1, r_)}, k);
                break;
            case 'y':
                out.add({a, b + 1, c}, k * CycloNum::eta(r_, -c));
                break;
            case 'x': {
                // y^b x = x y^b + b ħ y^{b-1} + Σ_l c_l (Σ_{m<b} η^{-lm}) y^{b-1} ε^l
                CPoly kc = k * CycloNum::eta(r_, c);
                out.add({a + 1, b, c}, kc);
                if (b == 0) break;
                out.add({a, b - 1, c}, kc * hbar() * cyclo(r_, Rational(b)));
                for (int l = 1; l < r_; ++l) {
                    CycloNum s;
                    for (int m = 0; m < b; ++m) s += CycloNum::eta(r_, -l * m);
                    out.add({a, b - 1, mod(l + c, r_)}, kc * CPoly::variable(Var::c(l)) * s);
                }
                break;
            }
            default:
                throw DomainError(std::string("unknown rank-one letter '") + letter + "'");
        }
    }
    return out;
}

RankOneWord operator*(const RankOneWord& a, const RankOneWord& b) {
    a.check_same(b);
    RankOneWord out(a.r_);
    for (const auto& [e, k] : b.terms_) {
        RankOneWord partial = a;
        for (int i = 0; i < e[0]; ++i) partial = partial.times_letter('x');
        for (int i = 0; i < e[1]; ++i) partial = partial.times_letter('y');
        for (int i = 0; i < e[2]; ++i) partial = partial.times_letter('e');
        out += partial * k;
    }
    return out;
}

RankOneWord RankOneWord::pow(int e) const {
    if (e < 0) throw DomainError("negative power of a rank-one element");
    RankOneWord out = scalar(r_, CPoly(1));
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

std::string RankOneWord::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (e[0]) os << "*x^" << e[0];
        if (e[1]) os << "*y^" << e[1];
        if (e[2]) os << "*e^" << e[2];
    }
    return os.str();
}

namespace {

struct Redex {
    std::size_t pos;
    std::size_t len;
};

std::vector<Redex> redexes(const std::string& w, int r) {
    std::vector<Redex> out;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] == 'y' && w[k + 1] == 'x') out.push_back({k, 2});
        if (w[k] == 'e' && (w[k + 1] == 'x' || w[k + 1] == 'y')) out.push_back({k, 2});
    }
    for (std::size_t k = 0; k + r <= w.size(); ++k)
        if (w.compare(k, r, std::string(r, 'e')) == 0) out.push_back({k, static_cast<std::size_t>(r)});
    return out;
}

void add_word(FreeElement& f, const std::string& w, const CPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = f.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
}

void rewrite(FreeElement& pending, const std::string& w, const CPoly& k, const Redex& rx, int r) {
    const std::string pre = w.substr(0, rx.pos);
    const std::string post = w.substr(rx.pos + rx.len);
    const std::string pat = w.substr(rx.pos, rx.len);
    if (pat == "yx") {
        add_word(pending, pre + "xy" + post, k);
        add_word(pending, pre + post, k * hbar());
        for (int l = 1; l < r; ++l) add_word(pending, pre + std::string(l, 'e') + post, k * CPoly::variable(Var::c(l)));
    } else if (pat == "ex") {
        add_word(pending, pre + "xe" + post, k * CycloNum::eta(r, 1));
    } else if (pat == "ey") {
        add_word(pending, pre + "ye" + post, k * CycloNum::eta(r, -1));
    } else {
        add_word(pending, pre + post, k);
    }
}

}  // namespace

RankOneWord rank_one_normal_form(const FreeElement& w, int r, ReductionOrder order, std::mt19937_64* rng) {
    if (order == ReductionOrder::Random && !rng) throw DomainError("random reduction order needs a generator");
    RankOneWord out(r);
    FreeElement pending = w;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string& word = node.key();
        for (char ch : word)
            if (ch != 'x' && ch != 'y' && ch != 'e') throw DomainError("unknown rank-one letter in '" + word + "'");
        auto rx = redexes(word, r);
        if (rx.empty()) {
            RankOneWord::Exponents e{0, 0, 0};
            for (char ch : word) ++e[ch == 'x' ? 0 : ch == 'y' ? 1 : 2];
            out.add(e, node.mapped());
            continue;
        }
        Redex chosen = rx.front();
        if (order == ReductionOrder::Rightmost) {
            for (const auto& cand : rx)
                if (cand.pos >= chosen.pos) chosen = cand;
        } else if (order == ReductionOrder::Leftmost) {
            for (const auto& cand : rx)
                if (cand.pos < chosen.pos) chosen = cand;
        } else {
            chosen = rx[std::uniform_int_distribution<std::size_t>(0, rx.size() - 1)(*rng)];
        }
        rewrite(pending, word, node.mapped(), chosen, r);
    }
    return out;
}

RankOneWord rank_one_normal_form(const std::string& word, int r, ReductionOrder order, std::mt19937_64* rng) {
    return rank_one_normal_form(FreeElement{{word, CPoly(1)}}, r, order, rng);
}

ConfluenceReport confluence_check(int r, int samples, int max_length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(0, max_length);
    std::uniform_int_distribution<int> letter_dist(0, 2);
    ConfluenceReport report;
    for (int s = 0; s < samples; ++s) {
        std::string word;
        int len = len_dist(rng);
        for (int k = 0; k < len; ++k) word += "xye"[letter_dist(rng)];
        auto left = rank_one_normal_form(word, r, ReductionOrder::Leftmost);
        auto right = rank_one_normal_form(word, r, ReductionOrder::Rightmost);
        auto random = rank_one_normal_form(word, r, ReductionOrder::Random, &rng);
        RankOneWord product = RankOneWord::scalar(r, CPoly(1));
        for (char ch : word)
            product = product * (ch == 'x' ? RankOneWord::x(r) : ch == 'y' ? RankOneWord::y(r) : RankOneWord::eps(r));
        ++report.words;
        if (!(left == right && left == random && left == product)) {
            report.confluent = false;
            report.witness = word;
            break;
        }
    }
    return report;
}

bool CoulombReport::stated_holds() const {
    for (const auto& rel : relations)
        if (!rel.stated) return false;
    return true;
}

bool CoulombReport::swapped_holds() const {
    for (const auto& rel : relations)
        if (!rel.swapped) return false;
    return true;
}

std::string CoulombReport::orientation() const {
    bool s = stated_holds();
    bool w = swapped_holds();
    if (s && w) return "both";
    if (s) return "stated";
    if (w) return "swapped";
    return "none";
}

CoulombReport verify_rank_one_coulomb(int r) {
    RankOneWord e(r);
    for (int p = 0; p < r; ++p) e.add({0, 0, p}, CPoly(cyclo(r, Rational(1, r))));

    // p(η⁻¹ε) = Σ_l p_l η^{-l} ε^l, with p_l the coefficient of q^l in p.
    RankOneWord p_eps(r);
    const CPoly p = p_poly(r);
    for (const auto& [m, c] : p.terms()) {
        int l = m.exponent(Var::q());
        exact::Monomial rest = m;
        rest.set(Var::q(), 0);
        p_eps.add({0, 0, l}, CPoly::term(rest, c * CycloNum::eta(r, -l)));
    }
    RankOneWord u = (RankOneWord::x(r) * RankOneWord::y(r) + RankOneWord::scalar(r, hbar())) *
                        CPoly(cyclo(r, Rational(1, r))) +
                    p_eps;
    const RankOneWord b = e * u * e;
    const RankOneWord r_minus = e * RankOneWord::x(r).pow(r) * e;
    Rational rr(1);
    for (int k = 0; k < r; ++k) rr *= Rational(1, r);
    const RankOneWord r_plus = e * RankOneWord::y(r).pow(r) * e * CPoly(cyclo(r, rr));

    RankOneWord prod_a = e;
    RankOneWord prod_a_hbar = e;
    for (int i = 1; i <= r; ++i) {
        CPoly ai = p_at_eta_power(r, i - 1) - hbar() * cyclo(r, Rational(i - 1, r));
        prod_a = prod_a * (b - e * ai);
        prod_a_hbar = prod_a_hbar * (b - e * (ai + hbar()));
    }

    auto relations = [&](const RankOneWord& r1, const RankOneWord& rm1) {
        return std::vector<bool>{r1 * rm1 == prod_a, rm1 * r1 == prod_a_hbar, r1 * b - b * r1 == r1 * hbar(),
                                 rm1 * b - b * rm1 == rm1 * (-hbar())};
    };
    auto stated = relations(r_plus, r_minus);
    auto swapped = relations(r_minus, r_plus);
    const char* names[] = {"r1*r-1 = prod(b - a_i)", "r-1*r1 = prod(b - a_i - hbar)", "[r1, b] = hbar*r1",
                           "[r-1, b] = -hbar*r-1"};
    CoulombReport report;
    report.r = r;
    for (int k = 0; k < 4; ++k) report.relations.push_back({names[k], stated[k], swapped[k]});

    auto classical = [](const CPoly& c) {
        return c.substitute([](Var v) -> std::optional<CPoly> {
            if (v == Var::hbar()) return CPoly();
            return std::nullopt;
        });
    };
    RankOneWord forward = r_plus * r_minus;
    RankOneWord backward = r_minus * r_plus;
    report.quantum_noncommutative = !(forward == backward);
    report.classical_commutative = forward.map_coefficients(classical) == backward.map_coefficients(classical);
    return report;
}

}  // namespace hikita::wreath
