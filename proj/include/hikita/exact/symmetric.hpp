#pragma once

#include <string>
#include <vector>

#include "hikita/exact/error.hpp"

namespace hikita::exact {

/// k-th elementary symmetric function of a multiset. e_0 = 1.
template <class T>
T elem_sym_eval(int k, const std::vector<T>& values) {
    if (k < 0 || k > static_cast<int>(values.size()))
        throw DomainError("elementary symmetric degree " + std::to_string(k) + " exceeds multiset size " +
                          std::to_string(values.size()));
    // e[j] after processing a prefix = e_j of that prefix.
    std::vector<T> e(k + 1);
    e[0] = T(1);
    for (const auto& x : values)
        for (int j = k; j >= 1; --j) e[j] += e[j - 1] * x;
    return e[k];
}

/// All of e_0..e_size at once.
template <class T>
std::vector<T> elem_sym_all(const std::vector<T>& values) {
    std::vector<T> e(values.size() + 1);
    e[0] = T(1);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j >= 1; --j) e[j] += e[j - 1] * values[i];
    return e;
}

}  // namespace hikita::exact
