#include "hikita/wreath/irrep.hpp"

#include "hikita/exact/error.hpp"

namespace hikita::wreath {

namespace {

Sparse power(const Sparse& m, int e) {
    Sparse out = Sparse::identity(m.size());
    for (int k = 0; k < e; ++k) out = out * m;
    return out;
}

}  // namespace

WreathIrrep wreath_seminormal_irrep(const combinat::Multipartition& shape) {
    const int r = shape.r();
    if (r < 1) throw DomainError("multipartition with no components");
    auto alpha = [r](const combinat::StandardMultitableau& B, int i) {
        if (B.component(i) != B.component(i + 1)) return CycloNum(r, exact::Rational(0));
        return CycloNum(r, exact::Rational(1, B.content(i + 1) - B.content(i)));
    };
    WreathIrrep irrep{combinat::build_seminormal<CycloNum>(shape, alpha), r, {}};
    const int dim = irrep.dimension();
    const int n = irrep.n();
    for (int i = 1; i <= n; ++i) {
        std::vector<CycloNum> expected(dim);
        for (int b = 0; b < dim; ++b) expected[b] = CycloNum::eta(r, irrep.module.basis[b].beta(i));
        Sparse e = Sparse::diagonal(expected);
        if (i > 1) {
            Sparse conj = irrep.s(i - 1) * irrep.eps.back() * irrep.s(i - 1);
            if (!(conj == e))
                throw ConstructionError("s_i eps_i s_i is not diag(eta^beta) at i=" + std::to_string(i) + " for " +
                                        shape.to_string());
        }
        irrep.eps.push_back(std::move(e));
    }
    if (auto f = presentation_failure(irrep); !f.empty())
        throw ConstructionError("wreath presentation fails for " + shape.to_string() + ": " + f);
    return irrep;
}

std::string presentation_failure(const WreathIrrep& irrep) {
    const int dim = irrep.dimension();
    const int n = irrep.n();
    if (auto f = combinat::check_symmetric_group_relations(irrep.module.s, dim); !f.empty()) return f;
    const Sparse id = Sparse::identity(dim);
    for (int i = 1; i <= n; ++i) {
        if (!(power(irrep.epsilon(i), irrep.r) == id)) return "eps_" + std::to_string(i) + "^r != 1";
        for (int j = i + 1; j <= n; ++j)
            if (!(irrep.epsilon(i) * irrep.epsilon(j) == irrep.epsilon(j) * irrep.epsilon(i)))
                return "eps_" + std::to_string(i) + " and eps_" + std::to_string(j) + " do not commute";
    }
    for (int i = 1; i < n; ++i) {
        if (!(irrep.s(i) * irrep.epsilon(i) * irrep.s(i) == irrep.epsilon(i + 1)))
            return "s_" + std::to_string(i) + " eps_" + std::to_string(i) + " s_" + std::to_string(i) + " != eps_" +
                   std::to_string(i + 1);
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            if (!(irrep.s(i) * irrep.epsilon(j) == irrep.epsilon(j) * irrep.s(i)))
                return "s_" + std::to_string(i) + " and eps_" + std::to_string(j) + " do not commute";
        }
    }
    return {};
}

std::vector<int> reduced_word(const Perm& p) {
    Perm w = p;
    std::vector<int> reversed;
    // p = (p ∘ s_k) ∘ s_k; right-multiplying by s_k swaps positions k, k+1 and removes a descent.
    for (;;) {
        int k = 0;
        while (k + 1 < static_cast<int>(w.size()) && w[k] < w[k + 1]) ++k;
        if (k + 1 >= static_cast<int>(w.size())) break;
        std::swap(w[k], w[k + 1]);
        reversed.push_back(k + 1);
    }
    return {reversed.rbegin(), reversed.rend()};
}

const Sparse& WreathRepresentation::perm_matrix(const Perm& p) const {
    auto it = perm_cache_.find(p);
    if (it != perm_cache_.end()) return it->second;
    Sparse m = Sparse::identity(irrep_.dimension());
    for (int i : reduced_word(p)) m = m * irrep_.s(i);
    return perm_cache_.emplace(p, std::move(m)).first->second;
}

CycloNum WreathRepresentation::color_factor(const ColoredPerm& g, int b) const {
    int e = 0;
    for (int k = 0; k < g.n(); ++k) e += g.colors[k] * irrep_.module.basis[b].beta(k + 1);
    return CycloNum::eta(irrep_.r, e);
}

Sparse WreathRepresentation::operator()(const ColoredPerm& g) const {
    if (g.n() != irrep_.n() || g.r != irrep_.r) throw DomainError("group element does not match the module");
    std::vector<CycloNum> d(irrep_.dimension());
    for (int b = 0; b < irrep_.dimension(); ++b) d[b] = color_factor(g, b);
    return Sparse::diagonal(d) * perm_matrix(g.perm);
}

Sparse WreathRepresentation::operator()(const WreathElement& x) const {
    Sparse out(irrep_.dimension());
    for (const auto& [g, c] : x.terms()) out += (*this)(g) * c;
    return out;
}

CycloNum WreathRepresentation::character(const ColoredPerm& g) const {
    const Sparse& p = perm_matrix(g.perm);
    CycloNum tr;
    for (int b = 0; b < irrep_.dimension(); ++b) {
        CycloNum pb = p.get(b, b);
        if (!pb.is_zero()) tr += color_factor(g, b) * pb;
    }
    return tr;
}

std::vector<Sparse> wreath_jm_matrices(const WreathIrrep& irrep) {
    WreathRepresentation rho(irrep);
    std::vector<Sparse> out;
    for (int i = 1; i <= irrep.n(); ++i) out.push_back(rho(wreath_jm(i, irrep.n(), irrep.r)));
    return out;
}

std::string spectrum_failure(const WreathIrrep& irrep) {
    auto jm = wreath_jm_matrices(irrep);
    for (int i = 1; i <= irrep.n(); ++i) {
        std::vector<CycloNum> ct(irrep.dimension());
        std::vector<CycloNum> col(irrep.dimension());
        for (int b = 0; b < irrep.dimension(); ++b) {
            ct[b] = CycloNum(irrep.r, exact::Rational(irrep.module.basis[b].content(i)));
            col[b] = CycloNum::eta(irrep.r, irrep.module.basis[b].beta(i));
        }
        if (!(jm[i - 1] == Sparse::diagonal(ct)))
            return "JM_" + std::to_string(i) + " is not diag(ct) on " + irrep.module.shape.to_string();
        if (!(irrep.epsilon(i) == Sparse::diagonal(col)))
            return "eps_" + std::to_string(i) + " is not diag(eta^beta) on " + irrep.module.shape.to_string();
    }
    return {};
}

CharacterReport character_orthonormality(int n, int r) {
    std::map<std::vector<std::pair<int, int>>, std::pair<ColoredPerm, long long>> classes;
    for (const auto& g : all_colored_perms(n, r)) {
        auto [it, inserted] = classes.try_emplace(conjugacy_label(g), g, 0);
        ++it->second.second;
    }
    const auto shapes = combinat::enumerate_multipartitions(r, n);
    std::vector<std::vector<CycloNum>> chars;
    for (const auto& shape : shapes) {
        auto irrep = wreath_seminormal_irrep(shape);
        WreathRepresentation rho(irrep);
        std::vector<CycloNum> row;
        for (const auto& [label, rep] : classes) row.push_back(rho.character(rep.first));
        chars.push_back(std::move(row));
    }
    CharacterReport report;
    report.class_count = static_cast<long long>(classes.size());
    const exact::Rational inv_order(1, wreath_order(n, r));
    for (std::size_t a = 0; a < shapes.size(); ++a)
        for (std::size_t b = 0; b < shapes.size(); ++b) {
            CycloNum pairing;
            std::size_t k = 0;
            for (const auto& [label, rep] : classes) {
                pairing += chars[a][k] * chars[b][k].conj() * CycloNum(exact::Rational(rep.second));
                ++k;
            }
            pairing *= CycloNum(inv_order);
            CycloNum expected(a == b ? 1 : 0);
            if (!(pairing == expected) && report.orthonormal) {
                report.orthonormal = false;
                report.witness = "<chi_" + shapes[a].to_string() + ", chi_" + shapes[b].to_string() +
                                 "> = " + pairing.to_string();
            }
        }
    return report;
}

}  // namespace hikita::wreath
