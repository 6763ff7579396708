#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hikita/combinat/multipartition.hpp"
#include "hikita/exact/matrix.hpp"

namespace hikita::combinat {

/// Matrices of s_1..s_{n-1} on the basis of standard multitableaux of a fixed shape.
/// Column b of s[i-1] holds the coordinates of s_i p_{B_b}.
template <class T>
struct SeminormalModule {
    Multipartition shape;
    std::vector<StandardMultitableau> basis;
    std::vector<exact::SparseMatrix<T>> s;

    int dimension() const { return static_cast<int>(basis.size()); }
    int n() const { return shape.size(); }
    const exact::SparseMatrix<T>& generator(int i) const { return s.at(i - 1); }
};

/// Builds s_i p_B = α p_B + coef p_{s_i B}, where α = alpha(B, i) and coef is 1 when entry i sits in an
/// earlier (component, row) than entry i+1 and 1 - α² otherwise. When s_i B is not standard,
/// s_i p_B = α p_B and α must be ±1.
template <class T>
SeminormalModule<T> build_seminormal(const Multipartition& shape,
                                     const std::function<T(const StandardMultitableau&, int)>& alpha) {
    SeminormalModule<T> mod{shape, standard_multitableaux(shape), {}};
    std::map<std::vector<MultiCell>, int> index;
    for (int b = 0; b < mod.dimension(); ++b) index.emplace(mod.basis[b].positions(), b);
    const int n = shape.size();
    for (int i = 1; i < n; ++i) {
        exact::SparseMatrix<T> m(mod.dimension());
        for (int b = 0; b < mod.dimension(); ++b) {
            const auto& B = mod.basis[b];
            T a = alpha(B, i);
            m.set(b, b, a);
            auto swapped = B.swapped(i);
            if (!swapped) {
                if (!(a == T(1)) && !(a == T(-1)))
                    throw ConstructionError("seminormal diagonal coefficient must be ±1 when s_" + std::to_string(i) +
                                            " B is not standard, tableau " + B.to_string());
                continue;
            }
            const auto& p = B.position(i);
            const auto& q = B.position(i + 1);
            bool ordered = std::pair(p.component, p.cell.row) < std::pair(q.component, q.cell.row);
            T coef = ordered ? T(1) : T(1) - a * a;
            m.set(index.at(swapped->positions()), b, coef);
        }
        mod.s.push_back(std::move(m));
    }
    return mod;
}

/// Checks s_i² = 1, braid relations and distant commutation; returns a description of the first
/// failure or an empty string.
template <class T>
std::string check_symmetric_group_relations(const std::vector<exact::SparseMatrix<T>>& s, int dim) {
    const auto id = exact::SparseMatrix<T>::identity(dim);
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        if (!(s[i] * s[i] == id)) return "s_" + std::to_string(i + 1) + "^2 != 1";
        if (i + 1 < k && !(s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1]))
            return "braid relation fails at s_" + std::to_string(i + 1);
        for (int j = i + 2; j < k; ++j)
            if (!(s[i] * s[j] == s[j] * s[i]))
                return "s_" + std::to_string(i + 1) + " and s_" + std::to_string(j + 1) + " do not commute";
    }
    return {};
}

}  // namespace hikita::combinat
