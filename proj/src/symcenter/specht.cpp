#include "hikita/symcenter/specht.hpp"

#include <map>
#include <mutex>

#include "hikita/exact/error.hpp"
#include "hikita/exact/matrix.hpp"

namespace hikita::symcenter {

using exact::SparseMatrix;

SpechtModule seminormal_specht(const combinat::Partition& lambda) {
    combinat::Multipartition shape({lambda});
    auto mod = combinat::build_seminormal<Rational>(shape, [](const combinat::StandardMultitableau& B, int i) {
        return Rational(1) / Rational(B.content(i + 1) - B.content(i));
    });
    auto failure = combinat::check_symmetric_group_relations(mod.s, mod.dimension());
    if (!failure.empty()) throw ConstructionError("Specht module " + lambda.to_string() + ": " + failure);
    auto jm = jm_matrices(mod);
    for (int i = 1; i <= mod.n(); ++i) {
        if (!jm[i - 1].is_diagonal())
            throw ConstructionError("JM_" + std::to_string(i) + " is not diagonal on S(" + lambda.to_string() + ")");
        for (int b = 0; b < mod.dimension(); ++b)
            if (!(jm[i - 1].get(b, b) == Rational(mod.basis[b].content(i))))
                throw ConstructionError("JM_" + std::to_string(i) + " eigenvalue differs from the content on " +
                                        mod.basis[b].to_string());
    }
    return mod;
}

std::vector<SparseMatrix<Rational>> jm_matrices(const SpechtModule& mod) {
    std::vector<SparseMatrix<Rational>> jm;
    if (mod.n() == 0) return jm;
    jm.emplace_back(mod.dimension());
    for (int i = 1; i < mod.n(); ++i) {
        const auto& s = mod.generator(i);
        jm.push_back(s * jm.back() * s + s);
    }
    return jm;
}

Rational character_value(const SpechtModule& mod, const combinat::Partition& mu) {
    if (mu.size() != mod.n()) throw DomainError("cycle type and module have different n");
    auto g = SparseMatrix<Rational>::identity(mod.dimension());
    int start = 1;
    for (int len : mu.parts()) {
        // s_start s_{start+1} ⋯ s_{start+len-2} is a len-cycle on start..start+len-1.
        for (int i = start; i < start + len - 1; ++i) g = g * mod.generator(i);
        start += len;
    }
    Rational tr;
    for (int b = 0; b < mod.dimension(); ++b) tr += g.get(b, b);
    return tr;
}

ThetaMap::ThetaMap(int n) : n_(n), partitions_(combinat::enumerate_partitions(n)) {
    const auto& alg = center_algebra(n);
    for (const auto& lam : partitions_) {
        auto mod = seminormal_specht(lam);
        dims_.push_back(mod.dimension());
        std::vector<Rational> row;
        for (const auto& mu : alg.classes()) row.push_back(character_value(mod, mu));
        chars_.push_back(std::move(row));
    }
}

std::vector<Rational> ThetaMap::apply_coordinates(const std::vector<Rational>& class_coords) const {
    const auto& alg = center_algebra(n_);
    std::vector<Rational> out;
    for (std::size_t l = 0; l < partitions_.size(); ++l) {
        Rational v;
        for (int c = 0; c < alg.dimension(); ++c)
            if (!class_coords[c].is_zero()) v += class_coords[c] * Rational(alg.class_size(c)) * chars_[l][c];
        out.push_back(v / Rational(dims_[l]));
    }
    return out;
}

std::vector<Rational> ThetaMap::apply(const PermElement& z) const {
    return apply_coordinates(center_algebra(n_).coordinates(z));
}

std::vector<Rational> ThetaMap::idempotent(int lam) const {
    const auto& alg = center_algebra(n_);
    // e_λ = (dim λ / n!) Σ_g χ_λ(g^{-1}) g, and χ_λ is constant on classes and real.
    Rational scale = Rational(dims_[lam]) / Rational(factorial(n_));
    std::vector<Rational> coords;
    for (int c = 0; c < alg.dimension(); ++c) coords.push_back(scale * chars_[lam][c]);
    return coords;
}

std::string ThetaMap::isomorphism_failure() const {
    const auto& alg = center_algebra(n_);
    const int p = alg.dimension();
    exact::ExactMatrix<Rational> image(p, p);
    std::vector<std::vector<Rational>> theta_basis;
    for (int c = 0; c < p; ++c) {
        std::vector<Rational> e(p);
        e[c] = 1;
        theta_basis.push_back(apply_coordinates(e));
        for (int l = 0; l < p; ++l) image(c, l) = theta_basis[c][l];
    }
    if (exact::rank(image) != p) return "Theta is not bijective";
    for (int a = 0; a < p; ++a)
        for (int b = a; b < p; ++b) {
            std::vector<Rational> ea(p), eb(p);
            ea[a] = 1;
            eb[b] = 1;
            auto lhs = apply_coordinates(alg.multiply(ea, eb));
            for (int l = 0; l < p; ++l)
                if (!(lhs[l] == theta_basis[a][l] * theta_basis[b][l]))
                    return "Theta(C_" + alg.classes()[a].to_string() + " C_" + alg.classes()[b].to_string() +
                           ") differs at " + partitions_[l].to_string();
        }
    return {};
}

const ThetaMap& theta_map(int n) {
    static std::mutex mutex;
    static std::map<int, ThetaMap> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, ThetaMap(n)).first->second;
}

}  // namespace hikita::symcenter
