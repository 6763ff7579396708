#include "hikita/wreath/params.hpp"

#include "hikita/exact/error.hpp"

namespace hikita::wreath {

using exact::CycloNum;
using exact::Var;

CPoly p_poly(int r) {
    if (r < 1) throw DomainError("p_poly needs r >= 1");
    CPoly p;
    const CycloNum inv_r(r, exact::Rational(1, r));
    for (int l = 1; l < r; ++l) {
        CycloNum coeff = inv_r / (CycloNum::eta(r, -l) - CycloNum(r, exact::Rational(1)));
        p += CPoly::variable(Var::c(l)) * CPoly::variable(Var::q()).pow(l) * coeff;
    }
    return p;
}

CPoly c_poly(int r) {
    if (r < 1) throw DomainError("c_poly needs r >= 1");
    CPoly c;
    for (int l = 1; l < r; ++l) c += CPoly::variable(Var::c(l)) * CPoly::variable(Var::q()).pow(l);
    return c;
}

CPoly substitute_q(const CPoly& f, const CPoly& value) {
    return f.substitute([&](Var v) -> std::optional<CPoly> {
        if (v == Var::q()) return value;
        return std::nullopt;
    });
}

CPoly p_at_eta_power(int r, int k) { return substitute_q(p_poly(r), CPoly(CycloNum::eta(r, k))); }

bool c_vs_p_identity(int r) {
    const CPoly q = CPoly::variable(Var::q());
    CPoly rhs = (substitute_q(p_poly(r), q * CycloNum::eta(r, -1)) - p_poly(r)) * CycloNum(r, exact::Rational(r));
    return rhs == c_poly(r);
}

bool p_sum_vanishes(int r) {
    CPoly total;
    for (int i = 1; i <= r; ++i) total += p_at_eta_power(r, i - 1);
    return total.is_zero();
}

std::vector<std::vector<CPoly>> dunkl_opdam_spectrum(const combinat::Multipartition& shape) {
    const int r = shape.r();
    std::vector<CPoly> p_values;
    for (int b = 1; b <= r; ++b) p_values.push_back(p_at_eta_power(r, b - 1));
    const CPoly kappa = CPoly::variable(Var::kappa());
    std::vector<std::vector<CPoly>> out;
    for (const auto& B : combinat::standard_multitableaux(shape)) {
        std::vector<CPoly> row;
        for (int i = 1; i <= B.n(); ++i)
            row.push_back(kappa * CycloNum(exact::Rational(B.content(i))) + p_values[B.beta(i) - 1]);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace hikita::wreath
