#include "hikita/calogero/wilson.hpp"

#include <algorithm>

#include "hikita/exact/charpoly.hpp"
#include "hikita/exact/error.hpp"

namespace hikita::calogero {

namespace {

struct BlockSolution {
    Matrix block;
    bool unique = false;
};

// Solves B D_{nj} - D_{ni} B = ni E_{ki kj} for an ni x nj block B restricted to the given support.
std::optional<BlockSolution> solve_block(const HookBlock& bi, const HookBlock& bj, SupportMode mode) {
    const int ni = bi.size;
    const int nj = bj.size;
    std::vector<std::pair<int, int>> unknowns;
    for (int p = 0; p < ni; ++p)
        for (int q = 0; q < nj; ++q) {
            int diff = (p + 1) - (q + 1);
            bool allowed = mode == SupportMode::Relaxed ||
                           (mode == SupportMode::Diagonal && diff == bi.height - bj.height) ||
                           (mode == SupportMode::ShiftedDiagonal && diff == bi.height - bj.height + 1);
            if (allowed) unknowns.emplace_back(p, q);
        }
    const int eqs = ni * nj;
    Matrix system(eqs, static_cast<int>(unknowns.size()));
    std::vector<Rational> rhs(eqs);
    // (B D)_{pq} = B_{p,q-1}; (D B)_{pq} = B_{p+1,q}.
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [p, q] = unknowns[u];
        if (q + 1 < nj) system(p * nj + (q + 1), static_cast<int>(u)) += Rational(1);
        if (p - 1 >= 0) system((p - 1) * nj + q, static_cast<int>(u)) -= Rational(1);
    }
    rhs[(bi.height - 1) * nj + (bj.height - 1)] = Rational(ni);
    auto x = exact::solve_linear(system, rhs);
    if (!x) return std::nullopt;
    BlockSolution sol{Matrix(ni, nj), exact::rank(system) == static_cast<int>(unknowns.size())};
    for (std::size_t u = 0; u < unknowns.size(); ++u) sol.block(unknowns[u].first, unknowns[u].second) = (*x)[u];
    return sol;
}

}  // namespace

std::string to_string(SupportMode mode) {
    switch (mode) {
        case SupportMode::Diagonal:
            return "diagonal";
        case SupportMode::ShiftedDiagonal:
            return "shifted-diagonal";
        case SupportMode::Relaxed:
            return "relaxed";
    }
    return "unknown";
}

Matrix shift_matrix(int m) {
    if (m < 1) throw DomainError("shift_matrix needs m >= 1");
    Matrix d(m, m);
    for (int i = 0; i + 1 < m; ++i) d(i, i + 1) = 1;
    return d;
}

Matrix wilson_block(int m, int k) {
    if (k < 1 || k > m) throw DomainError("wilson_block needs 1 <= k <= m, got m=" + std::to_string(m) +
                                          " k=" + std::to_string(k));
    Matrix y(m, m);
    for (int p = 1; p < m; ++p) y(p, p - 1) = p < k ? Rational(p) : Rational(p - m);
    return y;
}

SupportMode CMPair::support_mode() const {
    SupportMode worst = SupportMode::Diagonal;
    for (const auto& b : off_diagonal) worst = std::max(worst, b.mode);
    return worst;
}

CMPair cm_fixed_point(const combinat::Partition& lambda) {
    if (lambda.size() < 1) throw DomainError("cm_fixed_point needs a nonempty partition");
    const int n = lambda.size();
    CMPair pair{lambda, Matrix(n, n), Matrix(n, n), {}, {}};
    int offset = 0;
    for (const auto& h : combinat::frobenius_hooks(lambda)) {
        pair.blocks.push_back({offset, h.size, h.width});
        offset += h.size;
    }
    for (const auto& b : pair.blocks) {
        Matrix d = shift_matrix(b.size);
        Matrix y = wilson_block(b.size, b.height);
        for (int p = 0; p < b.size; ++p)
            for (int q = 0; q < b.size; ++q) {
                pair.X(b.offset + p, b.offset + q) = d(p, q);
                pair.Y(b.offset + p, b.offset + q) = y(p, q);
            }
    }
    for (int i = 0; i < static_cast<int>(pair.blocks.size()); ++i)
        for (int j = 0; j < static_cast<int>(pair.blocks.size()); ++j) {
            if (i == j) continue;
            const auto& bi = pair.blocks[i];
            const auto& bj = pair.blocks[j];
            std::optional<BlockSolution> sol;
            SupportMode mode = SupportMode::Diagonal;
            for (auto m : {SupportMode::Diagonal, SupportMode::ShiftedDiagonal, SupportMode::Relaxed}) {
                sol = solve_block(bi, bj, m);
                mode = m;
                if (sol && (sol->unique || m == SupportMode::Relaxed)) break;
            }
            if (!sol)
                throw ConstructionError("off-diagonal Sylvester system infeasible for hooks " + std::to_string(i) +
                                        "," + std::to_string(j) + " of " + lambda.to_string());
            pair.off_diagonal.push_back({i, j, mode, sol->unique});
            for (int p = 0; p < bi.size; ++p)
                for (int q = 0; q < bj.size; ++q) pair.Y(bi.offset + p, bj.offset + q) = sol->block(p, q);
        }
    if (commutator_defect_rank(pair) != 1)
        throw ConstructionError("rank([X,Y] - Id) != 1 for " + lambda.to_string());
    return pair;
}

int commutator_defect_rank(const CMPair& pair) {
    const int n = pair.X.rows();
    return exact::rank(exact::commutator(pair.X, pair.Y) - Matrix::identity(n));
}

exact::QPoly cm_charpoly(const CMPair& pair) { return exact::charpoly(pair.Y * pair.X); }

bool cm_spectrum_check(const combinat::Partition& lambda) {
    auto pair = cm_fixed_point(lambda);
    std::vector<Rational> roots;
    for (int c : combinat::contents(lambda)) roots.push_back(Rational(c));
    return cm_charpoly(pair) == exact::polynomial_from_roots(roots);
}

}  // namespace hikita::calogero
