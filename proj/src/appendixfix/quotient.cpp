#include "hikita/appendixfix/quotient.hpp"

#include <algorithm>
#include <functional>

#include "hikita/combinat/multipartition.hpp"
#include "hikita/exact/error.hpp"

namespace hikita::appendixfix {

namespace {

const Triple kLowerY{0, 1, 0};

using SparseVec = std::map<int, Rational>;

void axpy(SparseVec& v, const Rational& f, const SparseVec& row) {
    for (const auto& [j, x] : row) {
        auto [it, inserted] = v.try_emplace(j, -(f * x));
        if (inserted) continue;
        it->second -= f * x;
        if (it->second.is_zero()) v.erase(it);
    }
}

// Monomials of length <= n and polynomial degree <= cutoff, keyed by (polynomial degree, 𝕋-degree).
std::map<std::pair<int, int>, std::vector<OrbitMonomial>> monomials_by_degree(int n, int r, int cutoff) {
    std::vector<Triple> triples;
    for (int c = 0; c < r; ++c)
        for (int a = 0; poly_degree({a, 0, c}, r) <= cutoff; ++a)
            for (int b = 0; poly_degree({a, b, c}, r) <= cutoff; ++b)
                if (!Triple{a, b, c}.is_zero()) triples.push_back({a, b, c});
    std::sort(triples.begin(), triples.end(), std::greater<>());
    std::map<std::pair<int, int>, std::vector<OrbitMonomial>> out;
    std::vector<Triple> bag;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
        OrbitMonomial m(r, bag);
        out[{m.poly_degree(), m.t_degree()}].push_back(m);
        if (static_cast<int>(bag.size()) == n) return;
        for (std::size_t i = from; i < triples.size(); ++i) {
            int d = poly_degree(triples[i], r);
            if (d > budget) continue;
            bag.push_back(triples[i]);
            rec(i, budget - d);
            bag.pop_back();
        }
    };
    rec(0, cutoff);
    return out;
}

}  // namespace

OrbitMonomial canonical_monomial(const combinat::HatInput& input, int r) {
    if (input.lambda.r() != r || static_cast<int>(input.p.size()) != r - 1)
        throw DomainError("canonical_monomial: (λ, p) does not match r");
    std::vector<Triple> bag;
    for (int i = 0; i < r; ++i)
        for (int part : input.lambda[i].parts()) bag.push_back({part, 0, i});
    for (int i = 1; i < r; ++i)
        for (int k = 0; k < input.p[i - 1]; ++k) bag.push_back({0, 0, i});
    for (int k = 0; k < input.lambda.size(); ++k) bag.push_back(kLowerY);
    return OrbitMonomial(r, std::move(bag));
}

bool is_canonical(const OrbitMonomial& m) {
    if (m.t_degree() != 0) return false;
    return std::all_of(m.bag().begin(), m.bag().end(), [](const Triple& t) { return t == kLowerY || t.b == 0; });
}

std::vector<OrbitMonomial> canonical_family(int n, int r) {
    std::vector<OrbitMonomial> out;
    for (const auto& input : combinat::admissible_hat_inputs(n, r)) out.push_back(canonical_monomial(input, r));
    return out;
}

int spanning_bound(int n, int r) {
    int top = 0;
    for (const auto& m : canonical_family(n, r)) top = std::max(top, m.poly_degree());
    return top + 2;
}

std::vector<OrbitMonomial> degree_zero_monomials(int n, int r, int cutoff) {
    std::vector<OrbitMonomial> out;
    const auto groups = monomials_by_degree(n, r, cutoff);
    for (int d = 0; d <= cutoff; ++d) {
        auto it = groups.find({d, 0});
        if (it == groups.end()) continue;
        auto cols = it->second;
        std::sort(cols.begin(), cols.end(), column_before);
        out.insert(out.end(), cols.begin(), cols.end());
    }
    return out;
}

std::string grading_description(int r) {
    return "deg x' = deg y' = " + std::to_string(r) + ", deg z' = 2";
}

FixedPointQuotient::FixedPointQuotient(int n, int r, int cutoff) : n_(n), r_(r), cutoff_(cutoff) {
    if (n < 1 || r < 1) throw DomainError("fixed_point_quotient needs n, r >= 1");
    const int bound = spanning_bound(n, r);
    if (cutoff < bound)
        throw DomainError("cutoff " + std::to_string(cutoff) + " is below the spanning bound " + std::to_string(bound));
    const auto groups = monomials_by_degree(n, r, cutoff);
    auto group = [&](int d, int t) -> const std::vector<OrbitMonomial>& {
        static const std::vector<OrbitMonomial> empty;
        auto it = groups.find({d, t});
        return it == groups.end() ? empty : it->second;
    };
    slices_.resize(cutoff + 1);
    for (int d = 0; d <= cutoff; ++d) {
        Slice& s = slices_[d];
        s.columns = group(d, 0);
        std::sort(s.columns.begin(), s.columns.end(), column_before);
        for (int j = 0; j < static_cast<int>(s.columns.size()); ++j) s.index[s.columns[j]] = j;
        const std::size_t full = s.columns.size();
        // |𝕋-degree| never exceeds the polynomial degree.
        for (int t = 1; t <= d && s.rows.size() < full; ++t) {
            for (int d1 = 0; d1 <= d && s.rows.size() < full; ++d1) {
                const auto& pos = group(d1, t);
                const auto& neg = group(d - d1, -t);
                for (const auto& u : pos) {
                    if (s.rows.size() == full) break;
                    for (const auto& v : neg) {
                        SparseVec vec;
                        const InvariantElement prod = orbit_product(u, v, n);
                        for (const auto& [m, c] : prod.terms()) vec[s.index.at(m)] = c;
                        vec = reduce(s, std::move(vec));
                        if (vec.empty()) continue;
                        Rational inv = vec.begin()->second.inverse();
                        for (auto& [j, x] : vec) x *= inv;
                        s.rows.emplace(vec.begin()->first, std::move(vec));
                        if (s.rows.size() == full) break;
                    }
                }
            }
        }
    }
}

std::map<int, Rational> FixedPointQuotient::reduce(const Slice& s, SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto row = s.rows.find(it->first);
        if (row == s.rows.end()) {
            ++it;
            continue;
        }
        const int key = it->first;
        const Rational f = it->second;
        axpy(v, f, row->second);
        it = v.upper_bound(key);
    }
    return v;
}

const FixedPointQuotient::Slice& FixedPointQuotient::slice(int degree) const {
    if (degree < 0 || degree > cutoff_) throw DomainError("degree outside the computed window");
    return slices_[degree];
}

int FixedPointQuotient::dimension() const {
    int dim = 0;
    for (int d : profile()) dim += d;
    return dim;
}

long long FixedPointQuotient::expected_dimension() const { return combinat::multipartition_count(r_, n_); }

std::vector<OrbitMonomial> FixedPointQuotient::basis() const {
    std::vector<OrbitMonomial> out;
    for (const auto& s : slices_)
        for (int j = 0; j < static_cast<int>(s.columns.size()); ++j)
            if (!s.rows.count(j)) out.push_back(s.columns[j]);
    return out;
}

std::vector<int> FixedPointQuotient::profile() const {
    std::vector<int> out;
    for (const auto& s : slices_) out.push_back(static_cast<int>(s.columns.size() - s.rows.size()));
    return out;
}

bool FixedPointQuotient::vanishes_above_canonical() const {
    const auto prof = profile();
    for (int d = spanning_bound(n_, r_) - 1; d <= cutoff_; ++d)
        if (prof[d] != 0) return false;
    return true;
}

InvariantElement FixedPointQuotient::normal_form(const InvariantElement& f) const {
    if (f.n() != n_ || f.r() != r_) throw DomainError("normal_form: mismatched n or r");
    std::map<int, SparseVec> by_degree;
    for (const auto& [m, c] : f.terms()) {
        if (m.t_degree() != 0) throw DomainError("normal_form: term of nonzero 𝕋-degree " + m.to_string());
        by_degree[m.poly_degree()][slice(m.poly_degree()).index.at(m)] = c;
    }
    InvariantElement out(n_, r_);
    for (auto& [d, v] : by_degree) {
        const Slice& s = slice(d);
        for (const auto& [j, c] : reduce(s, std::move(v))) out.add(s.columns[j], c);
    }
    return out;
}

bool FixedPointQuotient::in_ideal(const InvariantElement& f) const { return normal_form(f).is_zero(); }

bool FixedPointQuotient::independent(const std::vector<OrbitMonomial>& family) const {
    std::map<int, std::map<int, SparseVec>> echelons;
    for (const auto& m : family) {
        if (m.length() > n_) return false;
        InvariantElement nf = normal_form(InvariantElement::monomial(n_, m));
        const int d = m.poly_degree();
        const Slice& s = slice(d);
        SparseVec v;
        for (const auto& [mm, c] : nf.terms()) v[s.index.at(mm)] = c;
        auto& rows = echelons[d];
        auto it = v.begin();
        while (it != v.end()) {
            auto row = rows.find(it->first);
            if (row == rows.end()) {
                ++it;
                continue;
            }
            const int key = it->first;
            const Rational f = it->second;
            axpy(v, f, row->second);
            it = v.upper_bound(key);
        }
        if (v.empty()) return false;
        Rational inv = v.begin()->second.inverse();
        for (auto& [j, x] : v) x *= inv;
        rows.emplace(v.begin()->first, std::move(v));
    }
    return true;
}

FixedPointQuotient fixed_point_quotient(int n, int r, int cutoff) { return FixedPointQuotient(n, r, cutoff); }

InvariantElement SpanningReducer::reduce(const OrbitMonomial& m) {
    if (m.r() != r_) throw DomainError("spanning_reduction: mismatched r");
    if (m.t_degree() != 0) throw DomainError("spanning_reduction needs 𝕋-degree 0, got " + m.to_string());
    if (m.length() > n_) return InvariantElement(n_, r_);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    InvariantElement out(n_, r_);
    const bool balanced_form = std::all_of(m.bag().begin(), m.bag().end(),
                                           [](const Triple& t) { return t == kLowerY || t.a >= t.b; });
    if (is_canonical(m)) {
        out = InvariantElement::monomial(n_, m);
    } else if (balanced_form) {
        out = lower_b(m);
    } else {
        out = eliminate_unbalanced(m);
    }
    memo_.emplace(m, out);
    return out;
}

InvariantElement SpanningReducer::eliminate_unbalanced(const OrbitMonomial& m) {
    auto t = std::find_if(m.bag().begin(), m.bag().end(), [](const Triple& x) { return x != kLowerY && x.a < x.b; });
    const OrbitMonomial single(r_, {*t});
    return solve_for(m, orbit_product(single, m.without(*t), n_));
}

InvariantElement SpanningReducer::lower_b(const OrbitMonomial& m) {
    auto t = std::find_if(m.bag().begin(), m.bag().end(), [](const Triple& x) { return x != kLowerY && x.b > 0; });
    const OrbitMonomial single(r_, {{t->a, t->b - 1, t->c}});
    return solve_for(m, orbit_product(single, m.without(*t).with(kLowerY), n_));
}

InvariantElement SpanningReducer::solve_for(const OrbitMonomial& target, const InvariantElement& relation) {
    const Rational k = relation.coeff(target);
    if (k.is_zero()) throw ConstructionError("spanning_reduction: relation misses " + target.to_string());
    InvariantElement out(n_, r_);
    for (const auto& [m, c] : relation.terms())
        if (m != target) out += reduce(m) * (-c / k);
    return out;
}

InvariantElement spanning_reduction(const OrbitMonomial& m, int n) { return SpanningReducer(n, m.r()).reduce(m); }

}  // namespace hikita::appendixfix
