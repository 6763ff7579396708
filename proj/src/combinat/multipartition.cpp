#include "hikita/combinat/multipartition.hpp"

#include <algorithm>
#include <functional>

#include "hikita/exact/error.hpp"

namespace hikita::combinat {

namespace {

void compositions_rec(int r, int remaining, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == r - 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = remaining; first >= 0; --first) {
        prefix.push_back(first);
        compositions_rec(r, remaining - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) throw DomainError("multipartition needs at least one component");
}

Multipartition Multipartition::parse(std::string_view text) {
    std::vector<Partition> comps;
    std::size_t pos = 0;
    while (true) {
        std::size_t bar = text.find('|', pos);
        std::size_t end = bar == std::string_view::npos ? text.size() : bar;
        comps.push_back(Partition::parse(text.substr(pos, end - pos)));
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    return Multipartition(comps);
}

int Multipartition::size() const {
    int s = 0;
    for (const auto& c : components_) s += c.size();
    return s;
}

int Multipartition::length() const {
    int s = 0;
    for (const auto& c : components_) s += c.length();
    return s;
}

std::vector<int> Multipartition::size_vector() const {
    std::vector<int> v;
    for (const auto& c : components_) v.push_back(c.size());
    return v;
}

std::string Multipartition::to_string() const {
    std::string s;
    for (int l = 0; l < r(); ++l) {
        if (l) s += '|';
        s += components_[l].to_string();
    }
    return s;
}

bool canonical_before(const Multipartition& a, const Multipartition& b) {
    auto sa = a.size_vector();
    auto sb = b.size_vector();
    if (sa != sb) return sa > sb;
    for (int l = 0; l < a.r(); ++l)
        if (a[l].parts() != b[l].parts()) return a[l].parts() > b[l].parts();
    return false;
}

std::vector<Multipartition> enumerate_multipartitions(int r, int n) {
    if (r < 1 || n < 0) throw DomainError("enumerate_multipartitions needs r >= 1 and n >= 0");
    std::vector<std::vector<int>> comps;
    std::vector<int> prefix;
    compositions_rec(r, n, prefix, comps);
    std::vector<Multipartition> out;
    for (const auto& sizes : comps) {
        std::vector<std::vector<Partition>> choices;
        for (int s : sizes) choices.push_back(enumerate_partitions(s));
        std::vector<Partition> current;
        std::function<void(int)> rec = [&](int l) {
            if (l == r) {
                out.emplace_back(current);
                return;
            }
            for (const auto& p : choices[l]) {
                current.push_back(p);
                rec(l + 1);
                current.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

long long multipartition_count(int r, int n) {
    if (r < 1 || n < 0) return 0;
    // Multiply the series prod_k (1 - x^k)^{-1} into itself r times.
    std::vector<long long> series(n + 1, 0);
    series[0] = 1;
    for (int copy = 0; copy < r; ++copy)
        for (int part = 1; part <= n; ++part)
            for (int m = part; m <= n; ++m) series[m] += series[m - part];
    return series[n];
}

StandardMultitableau::StandardMultitableau(Multipartition shape, std::vector<MultiCell> positions)
    : shape_(std::move(shape)), positions_(std::move(positions)) {
    if (static_cast<int>(positions_.size()) != shape_.size())
        throw DomainError("tableau filling does not match shape size");
}

bool StandardMultitableau::is_standard() const {
    std::vector<std::vector<std::vector<int>>> grid(shape_.r());
    for (int l = 0; l < shape_.r(); ++l) {
        const auto& lam = shape_[l];
        grid[l].resize(lam.length());
        for (int i = 0; i < lam.length(); ++i) grid[l][i].assign(lam[i], 0);
    }
    for (int k = 1; k <= n(); ++k) {
        const auto& p = position(k);
        if (p.component < 0 || p.component >= shape_.r() || !shape_[p.component].contains(p.cell)) return false;
        int& slot = grid[p.component][p.cell.row][p.cell.col];
        if (slot != 0) return false;
        slot = k;
    }
    for (const auto& g : grid)
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g[i].size(); ++j) {
                if (j > 0 && g[i][j - 1] > g[i][j]) return false;
                if (i > 0 && g[i - 1][j] > g[i][j]) return false;
            }
    return true;
}

std::optional<StandardMultitableau> StandardMultitableau::swapped(int i) const {
    if (i < 1 || i >= n()) throw DomainError("swap index out of range");
    auto pos = positions_;
    std::swap(pos[i - 1], pos[i]);
    StandardMultitableau t(shape_, std::move(pos));
    if (!t.is_standard()) return std::nullopt;
    return t;
}

std::string StandardMultitableau::to_string() const {
    std::string s;
    for (int l = 0; l < shape_.r(); ++l) {
        if (l) s += " | ";
        const auto& lam = shape_[l];
        std::vector<std::vector<int>> rows(lam.length());
        for (int i = 0; i < lam.length(); ++i) rows[i].assign(lam[i], 0);
        for (int k = 1; k <= n(); ++k)
            if (position(k).component == l) rows[position(k).cell.row][position(k).cell.col] = k;
        if (rows.empty()) s += "∅";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) s += '/';
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(rows[i][j]);
            }
        }
    }
    return s;
}

std::vector<StandardMultitableau> standard_multitableaux(const Multipartition& shape) {
    const int n = shape.size();
    const int r = shape.r();
    std::vector<std::vector<int>> filled(r);  // filled[l][row] = cells already used in that row
    for (int l = 0; l < r; ++l) filled[l].assign(shape[l].length(), 0);
    std::vector<MultiCell> positions;
    std::vector<StandardMultitableau> out;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(positions.size()) == n) {
            out.emplace_back(shape, positions);
            return;
        }
        for (int l = 0; l < r; ++l)
            for (int i = 0; i < shape[l].length(); ++i) {
                int j = filled[l][i];
                if (j >= shape[l][i]) continue;
                if (i > 0 && filled[l][i - 1] <= j) continue;
                filled[l][i]++;
                positions.push_back({l, {i, j}});
                rec();
                positions.pop_back();
                filled[l][i]--;
            }
    };
    rec();
    return out;
}

long long standard_multitableau_count(const Multipartition& shape) {
    // Multinomial coefficient times the hook length formula per component = n! / prod of all hooks.
    long long num = 1;
    for (int k = 2; k <= shape.size(); ++k) num *= k;
    long long den = 1;
    for (const auto& lam : shape.components()) {
        const Partition conj = lam.conjugate();
        for (const auto& c : lam.cells()) den *= (lam[c.row] - c.col) + (conj[c.col] - c.row) - 1;
    }
    return num / den;
}

}  // namespace hikita::combinat
