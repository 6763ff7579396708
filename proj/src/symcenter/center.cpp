#include "hikita/symcenter/center.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "hikita/exact/error.hpp"
#include "hikita/exact/matrix.hpp"

namespace hikita::symcenter {

namespace {

PermElement times_jm(const PermElement& x, int i) {
    PermElement out(x.n());
    for (int j = 1; j < i; ++j) out += x.times_transposition(j, i);
    return out;
}

void partitions_up_to(int budget, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    out.push_back(prefix);
    for (int part = std::min(budget, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_up_to(budget - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

PermElement jm_element(int i, int n) {
    if (i < 1 || i > n) throw DomainError("JM index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
    PermElement out(n);
    for (int j = 1; j < i; ++j) out.add(transposition(n, j, i), Rational(1));
    return out;
}

std::vector<PermElement> elementary_jm_all(int n) {
    std::vector<PermElement> e(n + 1, PermElement(n));
    e[0] = PermElement::one(n);
    for (int i = 2; i <= n; ++i)
        for (int k = i - 1; k >= 1; --k) e[k] += times_jm(e[k - 1], i);
    return e;
}

PermElement symmetric_jm(int k, int n) {
    if (k < 1 || k > n) throw DomainError("symmetric_jm needs 1 <= k <= n");
    PermElement z = elementary_jm_all(n)[k];
    for (int i = 1; i < n; ++i)
        if (!(z.times_transposition(i, i + 1) == z.transposition_times(i, i + 1)))
            throw ConstructionError("e_" + std::to_string(k) + "(JM) does not commute with s_" + std::to_string(i));
    return z;
}

PermElement jm_monomial(const std::vector<int>& exponents) {
    const int n = static_cast<int>(exponents.size());
    PermElement x = PermElement::one(n);
    for (int i = 1; i <= n; ++i)
        for (int e = 0; e < exponents[i - 1]; ++e) x = times_jm(x, i);
    return x;
}

std::vector<FilteredCenterElement> center_basis(int n) {
    const auto& alg = center_algebra(n);
    std::vector<FilteredCenterElement> out;
    for (int c = 0; c < alg.dimension(); ++c) {
        std::vector<Rational> coords(alg.dimension());
        coords[c] = 1;
        out.push_back({alg.element(coords), alg.classes()[c], alg.degree(c)});
    }
    return out;
}

CenterAlgebra::CenterAlgebra(int n) : n_(n) {
    if (n < 1 || n > 8) throw DomainError("center algebra supported for 1 <= n <= 8");
    classes_ = combinat::enumerate_partitions(n);
    std::reverse(classes_.begin(), classes_.end());
    const int p = dimension();
    const auto& perms = all_perms(n);
    std::vector<int> type(perms.size());
    std::vector<long long> reps(p, -1);
    class_sizes_.assign(p, 0);
    for (std::size_t k = 0; k < perms.size(); ++k) {
        type[k] = index_of(cycle_type(perms[k]));
        ++class_sizes_[type[k]];
        if (reps[type[k]] < 0) reps[type[k]] = static_cast<long long>(k);
    }
    constants_.assign(static_cast<std::size_t>(p) * p * p, 0);
    for (int rho = 0; rho < p; ++rho) {
        const Perm& g = perms[reps[rho]];
        for (std::size_t k = 0; k < perms.size(); ++k) {
            int nu = type[perm_rank(compose(inverse(perms[k]), g))];
            ++constants_[(static_cast<std::size_t>(type[k]) * p + nu) * p + rho];
        }
    }
}

int CenterAlgebra::index_of(const combinat::Partition& mu) const {
    for (int i = 0; i < dimension(); ++i)
        if (classes_[i] == mu) return i;
    throw DomainError("not a cycle type of S_" + std::to_string(n_) + ": " + mu.to_string());
}

long long CenterAlgebra::structure_constant(int mu, int nu, int rho) const {
    const std::size_t p = classes_.size();
    return constants_[(mu * p + nu) * p + rho];
}

std::vector<Rational> CenterAlgebra::coordinates(const PermElement& z) const {
    if (z.n() != n_) throw DomainError("element lives in a different group algebra");
    const auto& perms = all_perms(n_);
    std::vector<Rational> coords(dimension());
    std::vector<bool> seen(dimension(), false);
    for (std::size_t k = 0; k < perms.size(); ++k) {
        int c = index_of(cycle_type(perms[k]));
        if (!seen[c]) {
            coords[c] = z.coeff_at(static_cast<long long>(k));
            seen[c] = true;
        } else if (!(coords[c] == z.coeff_at(static_cast<long long>(k)))) {
            throw DomainError("element is not central: coefficients differ on class " + classes_[c].to_string());
        }
    }
    return coords;
}

PermElement CenterAlgebra::element(const std::vector<Rational>& coords) const {
    const auto& perms = all_perms(n_);
    PermElement z(n_);
    for (std::size_t k = 0; k < perms.size(); ++k) {
        int c = index_of(cycle_type(perms[k]));
        if (!coords[c].is_zero()) z.add_at(static_cast<long long>(k), coords[c]);
    }
    return z;
}

std::vector<Rational> CenterAlgebra::multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    const int p = dimension();
    std::vector<Rational> out(p);
    for (int mu = 0; mu < p; ++mu) {
        if (x[mu].is_zero()) continue;
        for (int nu = 0; nu < p; ++nu) {
            if (y[nu].is_zero()) continue;
            Rational xy = x[mu] * y[nu];
            for (int rho = 0; rho < p; ++rho) {
                long long a = structure_constant(mu, nu, rho);
                if (a) out[rho] += xy * Rational(a);
            }
        }
    }
    return out;
}

int CenterAlgebra::filtration_level(const std::vector<Rational>& x) const {
    int level = -1;
    for (int c = 0; c < dimension(); ++c)
        if (!x[c].is_zero()) level = std::max(level, degree(c) / 2);
    return level;
}

const CenterAlgebra& center_algebra(int n) {
    static std::mutex mutex;
    static std::map<int, CenterAlgebra> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, CenterAlgebra(n)).first->second;
}

std::vector<int> rees_graded_dims(int n) {
    if (n < 1) throw DomainError("rees_graded_dims needs n >= 1");
    std::vector<std::set<std::vector<int>>> types(n);
    Perm p = identity_perm(n);
    do {
        auto mu = cycle_type(p);
        types[n - mu.length()].insert(mu.parts());
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> dims;
    for (const auto& s : types) dims.push_back(static_cast<int>(s.size()));
    return dims;
}

FiltrationReport filtration_generation_check(int n) {
    const auto& alg = center_algebra(n);
    auto e = elementary_jm_all(n);
    std::vector<std::vector<Rational>> ecoords;
    for (int k = 0; k <= n; ++k) ecoords.push_back(alg.coordinates(e[k]));

    std::vector<std::vector<int>> lams;
    std::vector<int> prefix;
    partitions_up_to(n - 1, n, prefix, lams);
    std::map<std::vector<int>, std::vector<Rational>> products;
    std::sort(lams.begin(), lams.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& lam : lams) {
        if (lam.empty()) {
            products.emplace(lam, ecoords[0]);
            continue;
        }
        std::vector<int> head(lam.begin(), lam.end() - 1);
        products.emplace(lam, alg.multiply(products.at(head), ecoords[lam.back()]));
    }

    FiltrationReport report;
    for (int m = 0; m < n; ++m) {
        int expected = 0;
        for (int c = 0; c < alg.dimension(); ++c)
            if (alg.degree(c) <= 2 * m) ++expected;
        std::vector<Rational> rows;
        int count = 0;
        for (const auto& [lam, coords] : products) {
            int deg = 0;
            for (int part : lam) deg += part;
            if (deg > m) continue;
            if (alg.filtration_level(coords) > m && report.passed) {
                report.passed = false;
                std::string name;
                for (int part : lam) name += (name.empty() ? "" : ",") + std::to_string(part);
                report.witness = "e_(" + name + ")(JM) leaves F_" + std::to_string(2 * m);
            }
            rows.insert(rows.end(), coords.begin(), coords.end());
            ++count;
        }
        int rk = exact::rank(exact::ExactMatrix<Rational>(count, alg.dimension(), rows));
        report.ranks.push_back(rk);
        report.expected.push_back(expected);
        if (rk != expected && report.passed) {
            report.passed = false;
            report.witness = "rank " + std::to_string(rk) + " != dim F_" + std::to_string(2 * m) + " = " +
                             std::to_string(expected);
        }
    }
    return report;
}

}  // namespace hikita::symcenter
