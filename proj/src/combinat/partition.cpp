#include "hikita/combinat/partition.hpp"

#include <algorithm>
#include <numeric>

#include "hikita/exact/error.hpp"

namespace hikita::combinat {

namespace {

constexpr std::string_view kEmptySymbol = "∅";

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    if (text.empty() || text == kEmptySymbol || text == "0" || text == "-") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view piece = text.substr(pos, comma - pos);
        if (piece.empty()) throw DomainError("malformed partition '" + std::string(text) + "'");
        int v = 0;
        for (char ch : piece) {
            if (ch < '0' || ch > '9') throw DomainError("malformed partition '" + std::string(text) + "'");
            v = v * 10 + (ch - '0');
        }
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(parts);
}

Partition Partition::from_multiplicities(const std::vector<int>& mult) {
    std::vector<int> parts;
    for (int j = static_cast<int>(mult.size()) - 1; j >= 1; --j) {
        if (mult[j] < 0) throw DomainError("negative multiplicity");
        parts.insert(parts.end(), mult[j], j);
    }
    return Partition(parts);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    for (int c = 0; c < (*this)[0]; ++c) {
        int h = 0;
        while (h < length() && parts_[h] > c) ++h;
        conj.push_back(h);
    }
    return Partition(conj);
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m((*this)[0] + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(size_);
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j) out.push_back({i, j});
    return out;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return std::string(kEmptySymbol);
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw DomainError("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

long long partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

std::vector<int> contents(const Partition& lambda) {
    std::vector<int> out;
    for (const auto& c : lambda.cells()) out.push_back(c.content());
    return out;
}

std::vector<FrobeniusHook> frobenius_hooks(const Partition& lambda) {
    if (lambda.empty()) throw DomainError("Frobenius hooks of the empty partition");
    const Partition conj = lambda.conjugate();
    std::vector<FrobeniusHook> hooks;
    for (int i = 0; i < lambda.length() && lambda[i] > i; ++i) {
        int arm = lambda[i] - i - 1;
        int leg = conj[i] - i - 1;
        hooks.push_back({i, arm + leg + 1, leg + 1, arm + 1});
    }
    return hooks;
}

std::vector<Cell> hook_cells(const Partition& lambda, int root) {
    if (root < 0 || lambda[root] <= root) throw DomainError("no diagonal cell at index " + std::to_string(root));
    const Partition conj = lambda.conjugate();
    std::vector<Cell> out;
    for (int j = root; j < lambda[root]; ++j) out.push_back({root, j});
    for (int i = root + 1; i < conj[root]; ++i) out.push_back({i, root});
    return out;
}

}  // namespace hikita::combinat
