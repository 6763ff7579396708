#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hikita/combinat/partition.hpp"

namespace hikita::combinat {

/// Ordered r-tuple of partitions (components 0..r-1).
class Multipartition {
   public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);

    /// Parses "2,1|∅|1".
    static Multipartition parse(std::string_view text);

    int r() const { return static_cast<int>(components_.size()); }
    int size() const;
    int length() const;
    const std::vector<Partition>& components() const { return components_; }
    const Partition& operator[](int l) const { return components_[l]; }
    std::vector<int> size_vector() const;

    std::string to_string() const;

    friend bool operator==(const Multipartition&, const Multipartition&) = default;
    /// Position in the canonical order: true if a comes before b.
    friend bool canonical_before(const Multipartition& a, const Multipartition& b);
    friend bool operator<(const Multipartition& a, const Multipartition& b) { return canonical_before(a, b); }

   private:
    std::vector<Partition> components_;
};

bool canonical_before(const Multipartition& a, const Multipartition& b);

/// Every r-multipartition of n once, in canonical order: size vectors (|λ^0|,…,|λ^{r-1}|) in
/// descending lexicographic order, then components in descending lexicographic order.
std::vector<Multipartition> enumerate_multipartitions(int r, int n);

/// |P(r, n)| from the generating function prod_k (1 - x^k)^{-r}.
long long multipartition_count(int r, int n);

/// A cell of a multipartition diagram.
struct MultiCell {
    int component = 0;
    Cell cell;
    int content() const { return cell.content(); }
    int beta() const { return component + 1; }
    friend bool operator==(const MultiCell&, const MultiCell&) = default;
    friend auto operator<=>(const MultiCell&, const MultiCell&) = default;
};

/// Standard filling of a multipartition: entry i (1-based) sits at position(i).
class StandardMultitableau {
   public:
    StandardMultitableau(Multipartition shape, std::vector<MultiCell> positions);

    const Multipartition& shape() const { return shape_; }
    int n() const { return static_cast<int>(positions_.size()); }
    const MultiCell& position(int i) const { return positions_[i - 1]; }
    const std::vector<MultiCell>& positions() const { return positions_; }
    int content(int i) const { return position(i).content(); }
    int component(int i) const { return position(i).component; }
    int beta(int i) const { return position(i).beta(); }

    /// s_i applied to the entries i, i+1; nullopt when the result is not standard.
    std::optional<StandardMultitableau> swapped(int i) const;
    bool is_standard() const;

    std::string to_string() const;

    friend bool operator==(const StandardMultitableau& a, const StandardMultitableau& b) {
        return a.positions_ == b.positions_;
    }
    friend bool operator<(const StandardMultitableau& a, const StandardMultitableau& b) {
        return a.positions_ < b.positions_;
    }

   private:
    Multipartition shape_;
    std::vector<MultiCell> positions_;
};

/// All standard fillings, each once, in a deterministic order.
std::vector<StandardMultitableau> standard_multitableaux(const Multipartition& shape);

/// Number of standard fillings by the hook length formula.
long long standard_multitableau_count(const Multipartition& shape);

}  // namespace hikita::combinat
