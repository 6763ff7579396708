#pragma once

#include <string>
#include <vector>

#include "hikita/combinat/partition.hpp"
#include "hikita/exact/matrix.hpp"
#include "hikita/exact/polynomial.hpp"
#include "hikita/exact/rational.hpp"

namespace hikita::calogero {

using exact::Rational;
using Matrix = exact::ExactMatrix<Rational>;

/// D_m = Σ_{i<m} E_{i,i+1}.
Matrix shift_matrix(int m);

/// Y(m, k): subdiagonal 1, 2, …, k-1, -(m-k), …, -2, -1 and zeros elsewhere.
/// Satisfies [Y(m,k), D_m] = m E_kk - Id.
Matrix wilson_block(int m, int k);

/// How the off-diagonal blocks were pinned down.
enum class SupportMode {
    Diagonal,         // entries only at p - q = k_i - k_j (1-based rows p, columns q of the block)
    ShiftedDiagonal,  // entries only at p - q = k_i - k_j + 1
    Relaxed,          // unrestricted support, free entries set to zero
};
std::string to_string(SupportMode mode);

struct HookBlock {
    int offset = 0;  // first row/column of the block
    int size = 0;    // n_i
    int height = 0;  // k_i: cells of the hook in the root's row, so that diag(Y(n_i,k_i) D_{n_i}) lists its contents
};

struct OffDiagonalBlock {
    int row_hook = 0;
    int col_hook = 0;
    SupportMode mode = SupportMode::Diagonal;
    bool unique = true;  // no free entries left within the chosen support
};

struct CMPair {
    combinat::Partition lambda;
    Matrix X;
    Matrix Y;
    std::vector<HookBlock> blocks;
    std::vector<OffDiagonalBlock> off_diagonal;

    /// Most relaxed support mode used by any off-diagonal block.
    SupportMode support_mode() const;
};

/// Torus-fixed Calogero–Moser pair attached to λ: X = ⊕ D_{n_i} over the Frobenius hooks, Y with
/// diagonal blocks Y(n_i, k_i) and off-diagonal blocks solving Y_ij D_{n_j} - D_{n_i} Y_ij = n_i E_{k_i k_j}.
/// Asserts rank([X, Y] - Id) = 1; throws ConstructionError on failure.
CMPair cm_fixed_point(const combinat::Partition& lambda);

int commutator_defect_rank(const CMPair& pair);

/// charpoly(Y X) as a polynomial in t.
exact::QPoly cm_charpoly(const CMPair& pair);

/// charpoly(Y X) = Π_{cells} (t - content).
bool cm_spectrum_check(const combinat::Partition& lambda);

}  // namespace hikita::calogero
