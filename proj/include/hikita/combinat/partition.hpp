#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hikita/exact/error.hpp"

namespace hikita::combinat {

/// A cell of a Young diagram, 0-based (row, col). Content is col - row.
struct Cell {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition: weakly decreasing positive parts.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "2,1" or "∅" / "" for the empty partition.
    static Partition parse(std::string_view text);
    /// 1^{m_1} 2^{m_2} ... from multiplicities m_1, m_2, ...
    static Partition from_multiplicities(const std::vector<int>& mult);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;
    /// m_j = number of parts equal to j, for j = 1..largest part (index 0 unused and zero).
    std::vector<int> multiplicities() const;
    /// Cells in row-major order.
    std::vector<Cell> cells() const;
    bool contains(const Cell& c) const { return c.row >= 0 && c.col >= 0 && c.col < (*this)[c.row]; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

   private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in descending lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n.
long long partition_count(int n);

/// Multiset {col - row} over the cells of lambda, row-major.
std::vector<int> contents(const Partition& lambda);

struct FrobeniusHook {
    int root = 0;    // 0-based diagonal index i of the root cell (i, i)
    int size = 0;    // number of cells
    int height = 0;  // cells of the hook in the root's column, root included
    int width = 0;   // cells of the hook in the root's row, root included
    friend bool operator==(const FrobeniusHook&, const FrobeniusHook&) = default;
};

std::vector<FrobeniusHook> frobenius_hooks(const Partition& lambda);

/// Cells of the i-th Frobenius hook: the arm to the right of (i, i), the root, and the leg below.
std::vector<Cell> hook_cells(const Partition& lambda, int root);

}  // namespace hikita::combinat
