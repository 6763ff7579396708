#include "hikita/combinat/hat.hpp"

#include <functional>

#include "hikita/exact/error.hpp"

namespace hikita::combinat {

namespace {

// 1^{ones} 2^{m_1} 3^{m_2} ... where m are the multiplicities of lambda.
Partition shift_up(const Partition& lambda, int ones) {
    auto m = lambda.multiplicities();
    std::vector<int> shifted(m.size() + 1, 0);
    shifted[1] = ones;
    for (std::size_t j = 1; j < m.size(); ++j) shifted[j + 1] = m[j];
    return Partition::from_multiplicities(shifted);
}

// Inverse of shift_up: returns (lambda, number of ones).
std::pair<Partition, int> shift_down(const Partition& mu) {
    auto m = mu.multiplicities();
    int ones = m.size() > 1 ? m[1] : 0;
    std::vector<int> lowered(m.size() > 1 ? m.size() - 1 : 1, 0);
    for (std::size_t j = 2; j < m.size(); ++j) lowered[j - 1] = m[j];
    return {Partition::from_multiplicities(lowered), ones};
}

}  // namespace

Partition hat_bijection_r1(const Partition& lambda, int n) {
    int ones = n - lambda.length() - lambda.size();
    if (ones < 0) throw DomainError("hat map needs l(lambda) + |lambda| <= n, got " + lambda.to_string());
    return shift_up(lambda, ones);
}

Partition hat_inverse_r1(const Partition& mu) { return shift_down(mu).first; }

Multipartition hat_bijection_general(const HatInput& input, int n, int r) {
    if (input.lambda.r() != r) throw DomainError("hat map: multipartition has wrong number of components");
    if (static_cast<int>(input.p.size()) != r - 1) throw DomainError("hat map: p must have r - 1 entries");
    int p_total = 0;
    for (int v : input.p) {
        if (v < 0) throw DomainError("hat map: p must be nonnegative");
        p_total += v;
    }
    int ones = n - input.lambda.length() - input.lambda.size() - p_total;
    if (ones < 0) throw DomainError("hat map needs l + |lambda| + |p| <= n");
    std::vector<Partition> comps;
    comps.push_back(shift_up(input.lambda[0], ones));
    for (int i = 1; i < r; ++i) comps.push_back(shift_up(input.lambda[i], input.p[i - 1]));
    return Multipartition(comps);
}

HatInput hat_inverse_general(const Multipartition& mu) {
    HatInput out;
    std::vector<Partition> comps;
    for (int i = 0; i < mu.r(); ++i) {
        auto [lam, ones] = shift_down(mu[i]);
        comps.push_back(lam);
        if (i > 0) out.p.push_back(ones);
    }
    out.lambda = Multipartition(comps);
    return out;
}

std::vector<HatInput> admissible_hat_inputs(int n, int r) {
    std::vector<HatInput> out;
    // Budget b = l(λ) + |λ| + |p|; a partition λ of size s uses s + l(λ) ≥ s + 1 when nonempty.
    for (int total = 0; total <= n; ++total)
        for (const auto& lam : enumerate_multipartitions(r, total)) {
            int used = lam.length() + lam.size();
            if (used > n) continue;
            std::vector<int> p(r - 1, 0);
            std::function<void(int, int)> rec = [&](int i, int budget) {
                if (i == r - 1) {
                    out.push_back({lam, p});
                    return;
                }
                for (int v = 0; v <= budget; ++v) {
                    p[i] = v;
                    rec(i + 1, budget - v);
                }
                p[i] = 0;
            };
            rec(0, n - used);
        }
    return out;
}

}  // namespace hikita::combinat
