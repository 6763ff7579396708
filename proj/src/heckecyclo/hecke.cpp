#include "hikita/heckecyclo/hecke.hpp"

#include <set>

#include "hikita/exact/error.hpp"
#include "hikita/exact/symmetric.hpp"

namespace hikita::heckecyclo {

using exact::Rational;
using exact::Var;

namespace {

QPoly kappa() { return QPoly::variable(Var::kappa()); }

QPoly z_entry(const combinat::StandardMultitableau& B, int i, const std::vector<QPoly>& framing) {
    return kappa() * Rational(B.content(i)) + framing[B.beta(i) - 1];
}

HeckeMatrix scalar_matrix(int dim, const QPoly& c) { return HeckeMatrix::identity(dim) * RatFunc(c); }

}  // namespace

std::vector<QPoly> default_framing(int r) {
    std::vector<QPoly> a;
    for (int i = 1; i <= r; ++i) a.push_back(exact::framing_parameter(i, r));
    return a;
}

HeckeModule hecke_seminormal_module(const combinat::Multipartition& shape) {
    return hecke_seminormal_module(shape, default_framing(shape.r()));
}

HeckeModule hecke_seminormal_module(const combinat::Multipartition& shape, const std::vector<QPoly>& framing) {
    if (static_cast<int>(framing.size()) != shape.r())
        throw DomainError("framing values do not match the number of components of " + shape.to_string());
    auto alpha = [&framing](const combinat::StandardMultitableau& B, int i) {
        QPoly d = z_entry(B, i + 1, framing) - z_entry(B, i, framing);
        if (d.is_zero()) throw ConstructionError("vanishing seminormal denominator at " + B.to_string());
        return RatFunc(kappa()) / RatFunc(d);
    };
    HeckeModule mod{combinat::build_seminormal<RatFunc>(shape, alpha), framing, {}, {}};
    const int n = mod.n();
    for (int i = 1; i <= n; ++i) {
        std::vector<QPoly> values;
        for (const auto& B : mod.module.basis) values.push_back(z_entry(B, i, framing));
        std::vector<RatFunc> diag(values.begin(), values.end());
        HeckeMatrix expected = HeckeMatrix::diagonal(diag);
        if (i > 1) {
            const HeckeMatrix& s = mod.s(i - 1);
            HeckeMatrix next = s * mod.z.back() * s + s * RatFunc(kappa());
            if (!(next == expected))
                throw ConstructionError("z_" + std::to_string(i) + " from the cross relation is not diag(κ ct + a) on " +
                                        shape.to_string());
        }
        mod.z_value.push_back(std::move(values));
        mod.z.push_back(std::move(expected));
    }
    if (auto f = relation_failure(mod); !f.empty())
        throw ConstructionError("Hecke relations fail on " + shape.to_string() + ": " + f);
    return mod;
}

std::string relation_failure(const HeckeModule& mod) {
    const int n = mod.n();
    const int dim = mod.dimension();
    if (auto f = combinat::check_symmetric_group_relations(mod.module.s, dim); !f.empty()) return f;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!(mod.z[i - 1] * mod.z[j - 1] == mod.z[j - 1] * mod.z[i - 1]))
                return "z_" + std::to_string(i) + " and z_" + std::to_string(j) + " do not commute";
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j) {
            int image = j == i ? i + 1 : j == i + 1 ? i : j;
            int delta = (j == i + 1 ? 1 : 0) - (j == i ? 1 : 0);
            HeckeMatrix lhs = mod.s(i) * mod.z[j - 1];
            HeckeMatrix rhs = mod.z[image - 1] * mod.s(i) + scalar_matrix(dim, kappa() * Rational(delta));
            if (!(lhs == rhs)) return "s_" + std::to_string(i) + " z_" + std::to_string(j) + " cross relation";
        }
    if (n >= 1) {
        HeckeMatrix prod = HeckeMatrix::identity(dim);
        for (const auto& a : mod.framing) prod = prod * (mod.z[0] - scalar_matrix(dim, a));
        if (!prod.is_zero()) return "cyclotomic relation prod (z_1 - a_l) != 0";
    }
    return {};
}

QPoly spectral_scalar(int k, const HeckeModule& mod) {
    const int n = mod.n();
    if (k < 1 || k > n) throw DomainError("central_scalar needs 1 <= k <= n");
    std::optional<QPoly> scalar;
    for (int b = 0; b < mod.dimension(); ++b) {
        std::vector<QPoly> spectrum;
        for (int i = 0; i < n; ++i) {
            auto entry = mod.z[i].get(b, b).as_polynomial();
            if (!entry) throw ConstructionError("z-eigenvalue is not a polynomial on " + mod.module.shape.to_string());
            spectrum.push_back(*entry);
        }
        QPoly v = exact::elem_sym_eval(k, spectrum);
        if (scalar && !(*scalar == v))
            throw ConstructionError("e_" + std::to_string(k) + "(z) is not scalar on " + mod.module.shape.to_string());
        scalar = v;
    }
    return *scalar;
}

QPoly central_scalar(int k, const HeckeModule& mod) {
    QPoly scalar = spectral_scalar(k, mod);
    std::vector<QPoly> boxes;
    const auto& shape = mod.module.shape;
    for (int l = 0; l < shape.r(); ++l)
        for (int c : combinat::contents(shape[l])) boxes.push_back(kappa() * Rational(c) + mod.framing[l]);
    if (!(exact::elem_sym_eval(k, boxes) == scalar))
        throw ConstructionError("central scalar disagrees with the box spectrum on " + shape.to_string());
    return scalar;
}

QPoly central_scalar(int k, const combinat::Multipartition& shape) {
    return central_scalar(k, hecke_seminormal_module(shape));
}

namespace {

bool commutes_with_all_s(const HeckeModule& mod, const HeckeMatrix& m) {
    for (int i = 1; i < mod.n(); ++i)
        if (!(mod.s(i) * m == m * mod.s(i))) return false;
    return true;
}

}  // namespace

bool centrality_check(int n, int r) {
    for (const auto& shape : combinat::enumerate_multipartitions(r, n)) {
        auto mod = hecke_seminormal_module(shape);
        // e_k(z) for all k at once by the recursion e_k ← e_k + e_{k-1} z_i on matrices.
        std::vector<HeckeMatrix> e(n + 1, HeckeMatrix(mod.dimension()));
        e[0] = HeckeMatrix::identity(mod.dimension());
        for (const auto& z : mod.z)
            for (int k = n; k >= 1; --k) e[k] += e[k - 1] * z;
        for (int k = 1; k <= n; ++k)
            if (!commutes_with_all_s(mod, e[k])) return false;
    }
    return true;
}

bool z1_commutes_everywhere(int n, int r) {
    for (const auto& shape : combinat::enumerate_multipartitions(r, n)) {
        auto mod = hecke_seminormal_module(shape);
        if (!commutes_with_all_s(mod, mod.z[0])) return false;
    }
    return true;
}

std::vector<QPoly> walls(const HeckeModule& mod) {
    std::set<QPoly, bool (*)(const QPoly&, const QPoly&)> seen([](const QPoly& a, const QPoly& b) {
        return a.terms() < b.terms();
    });
    for (const auto& s : mod.module.s)
        for (int i = 0; i < s.size(); ++i)
            for (const auto& [j, v] : s.row(i))
                for (const auto& f : v.denominator_factors()) seen.insert(f);
    return {seen.begin(), seen.end()};
}

}  // namespace hikita::heckecyclo
