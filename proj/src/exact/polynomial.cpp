#include "hikita/exact/polynomial.hpp"

namespace hikita::exact {

Var Var::a(int i) {
    if (i < 1 || i > kMaxIndexed) throw DomainError("framing parameter index out of range: " + std::to_string(i));
    return Var(3 + i);
}

Var Var::c(int i) {
    if (i < 1 || i > kMaxIndexed) throw DomainError("Cherednik parameter index out of range: " + std::to_string(i));
    return Var(3 + kMaxIndexed + i);
}

int Var::index() const {
    if (is_framing()) return id_ - 3;
    if (is_cherednik()) return id_ - 3 - kMaxIndexed;
    return 0;
}

std::string Var::name() const {
    switch (id_) {
        case 0:
            return "kappa";
        case 1:
            return "hbar";
        case 2:
            return "q";
        case 3:
            return "t";
        default:
            return (is_framing() ? "a" : "c") + std::to_string(index());
    }
}

Var var_from_id_impl(int id) {
    switch (id) {
        case 0:
            return Var::kappa();
        case 1:
            return Var::hbar();
        case 2:
            return Var::q();
        case 3:
            return Var::t();
        default:
            if (id < 4 + Var::kMaxIndexed) return Var::a(id - 3);
            return Var::c(id - 3 - Var::kMaxIndexed);
    }
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < Var::kCount; ++i) {
        if (o.exps_[i] > exps_[i]) throw DomainError("monomial quotient is not a monomial");
        m.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
    }
    return m;
}

std::string Monomial::to_string() const {
    std::string s;
    for (int i = 0; i < Var::kCount; ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += var_from_id_impl(i).name();
        if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
}

QPoly framing_parameter(int i, int r) {
    if (r < 1 || i < 1 || i > r) throw DomainError("framing parameter a_" + std::to_string(i) + " out of range for r=" +
                                                   std::to_string(r));
    if (r - 1 > Var::kMaxIndexed) throw DomainError("framing rank too large");
    if (i < r) return QPoly::variable(Var::a(i));
    QPoly sum;
    for (int j = 1; j < r; ++j) sum -= QPoly::variable(Var::a(j));
    return sum;
}

CPoly to_cyclotomic(const QPoly& p, int order) {
    return p.map_coefficients<CycloNum>([order](const Rational& c) { return CycloNum(order, c); });
}

}  // namespace hikita::exact
