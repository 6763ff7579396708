#include "hikita/efield/etuple.hpp"

#include <map>
#include <set>
#include <sstream>

#include "hikita/exact/error.hpp"
#include "hikita/exact/symmetric.hpp"
#include "hikita/heckecyclo/hecke.hpp"
#include "hikita/wreath/params.hpp"

namespace hikita::efield {

using exact::Var;

namespace {

void check_degree(int k, int n, int r) {
    if (n < 1 || r < 1) throw DomainError("E needs n >= 1 and r >= 1");
    if (k < 1 || k > n) throw DomainError("generator degree k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
}

template <class Poly>
BasicETuple<Poly> empty_tuple(int n, int r) {
    BasicETuple<Poly> t;
    t.n = n;
    t.r = r;
    t.shapes = combinat::enumerate_multipartitions(r, n);
    return t;
}

}  // namespace

ETuple chern_image(int k, int n, int r) {
    check_degree(k, n, r);
    auto t = empty_tuple<QPoly>(n, r);
    const QPoly kappa = QPoly::variable(Var::kappa());
    for (const auto& shape : t.shapes) {
        std::vector<QPoly> roots;
        for (int l = 0; l < r; ++l) {
            const QPoly a = exact::framing_parameter(l + 1, r);
            for (int c : combinat::contents(shape[l])) roots.push_back(kappa * Rational(c) + a);
        }
        t.values.push_back(exact::elem_sym_eval(k, roots));
    }
    return t;
}

ETuple hecke_center_image(int k, int n, int r) {
    check_degree(k, n, r);
    auto t = empty_tuple<QPoly>(n, r);
    for (const auto& shape : t.shapes)
        t.values.push_back(heckecyclo::spectral_scalar(k, heckecyclo::hecke_seminormal_module(shape)));
    return t;
}

std::vector<ETuple> hecke_center_images(int n, int r) {
    check_degree(1, n, r);
    std::vector<ETuple> out(n, empty_tuple<QPoly>(n, r));
    for (const auto& shape : out.front().shapes) {
        auto mod = heckecyclo::hecke_seminormal_module(shape);
        for (int k = 1; k <= n; ++k) out[k - 1].values.push_back(heckecyclo::spectral_scalar(k, mod));
    }
    return out;
}

CETuple dunkl_opdam_image(int k, int n, int r) {
    check_degree(k, n, r);
    auto t = empty_tuple<CPoly>(n, r);
    for (const auto& shape : t.shapes) {
        auto spectra = wreath::dunkl_opdam_spectrum(shape);
        CPoly value = exact::elem_sym_eval(k, spectra.front());
        for (const auto& s : spectra)
            if (!(exact::elem_sym_eval(k, s) == value))
                throw ConstructionError("Dunkl-Opdam e_k depends on the tableau for " + shape.to_string());
        t.values.push_back(std::move(value));
    }
    return t;
}

bool ParamSubstitution::respects_relation() const {
    CPoly total;
    for (const auto& a : a_images) total += a;
    return total.is_zero();
}

ParamSubstitution identify_parameters(int r) {
    ParamSubstitution sub{r, {}};
    for (int i = 1; i <= r; ++i) sub.a_images.push_back(wreath::p_at_eta_power(r, i - 1));
    if (!sub.respects_relation()) throw ConstructionError("parameter images violate a_1 + ... + a_r = 0");
    return sub;
}

CETuple substitute_parameters(const ETuple& t, const ParamSubstitution& sub) {
    if (sub.r != t.r) throw DomainError("substitution for r=" + std::to_string(sub.r) + " applied to r=" + std::to_string(t.r));
    CETuple out{t.n, t.r, t.shapes, {}};
    for (const auto& v : t.values) {
        for (int id : v.variable_ids()) {
            bool ok = id == Var::kappa().id();
            for (int i = 1; i < t.r && !ok; ++i) ok = id == Var::a(i).id();
            if (!ok) throw DomainError("unexpected variable in an a-parameter tuple: " + v.to_string());
        }
        CPoly c = exact::to_cyclotomic(v, t.r);
        out.values.push_back(c.substitute([&](Var var) -> std::optional<CPoly> {
            if (var.is_framing()) return sub.a_images.at(var.index() - 1);
            return std::nullopt;
        }));
    }
    return out;
}

bool MainTheoremReport::passed() const {
    for (const auto& e : entries)
        if (!e.hecke_agrees || !e.dunkl_opdam_agrees) return false;
    return !entries.empty();
}

MainTheoremReport verify_main_theorem(int n, int r, const std::function<void(ETuple&)>& mutate) {
    MainTheoremReport report{n, r, {}};
    const auto sub = identify_parameters(r);
    const auto hecke_all = hecke_center_images(n, r);
    for (int k = 1; k <= n; ++k) {
        ETuple chern = chern_image(k, n, r);
        if (mutate) mutate(chern);
        const ETuple& hecke = hecke_all[k - 1];
        const CETuple dunkl = dunkl_opdam_image(k, n, r);
        const CETuple substituted = substitute_parameters(chern, sub);
        MainTheoremEntry entry{k, true, true, {}};
        for (std::size_t i = 0; i < chern.size(); ++i) {
            if (!(chern.values[i] == hecke.values[i])) {
                if (entry.hecke_agrees)
                    entry.witness += "hecke at " + chern.shapes[i].to_string() +
                                     ": difference " + (chern.values[i] - hecke.values[i]).to_string() + "; ";
                entry.hecke_agrees = false;
            }
            if (!(substituted.values[i] == dunkl.values[i])) {
                if (entry.dunkl_opdam_agrees)
                    entry.witness += "dunkl-opdam at " + chern.shapes[i].to_string() +
                                     ": difference " + (substituted.values[i] - dunkl.values[i]).to_string() + "; ";
                entry.dunkl_opdam_agrees = false;
            }
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<Rational> ParameterPoint::framing(int r) const {
    if (static_cast<int>(a.size()) != r - 1) throw DomainError("parameter point needs r-1 framing values");
    std::vector<Rational> out = a;
    Rational last;
    for (const auto& v : a) last -= v;
    out.push_back(last);
    return out;
}

std::string ParameterPoint::to_string() const {
    std::ostringstream os;
    os << "kappa=" << kappa.to_string();
    for (std::size_t i = 0; i < a.size(); ++i) os << ",a" << i + 1 << "=" << a[i].to_string();
    return os.str();
}

ParameterPoint ParameterPoint::parse(std::string_view text, int r) {
    std::map<std::string, Rational> values;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw DomainError("point entry without '=': " + std::string(item));
        std::string key(item.substr(0, eq));
        if (!values.emplace(key, Rational::parse(item.substr(eq + 1))).second)
            throw DomainError("point key repeated: " + key);
    }
    ParameterPoint point;
    auto take = [&](const std::string& key) {
        auto it = values.find(key);
        if (it == values.end()) throw DomainError("point is missing " + key);
        Rational v = it->second;
        values.erase(it);
        return v;
    };
    point.kappa = take("kappa");
    for (int i = 1; i < r; ++i) point.a.push_back(take("a" + std::to_string(i)));
    if (!values.empty()) throw DomainError("point has unexpected key " + values.begin()->first);
    return point;
}

Rational evaluate(const QPoly& p, const ParameterPoint& point) {
    return p.evaluate<Rational>([&](Var v) -> Rational {
        if (v == Var::kappa()) return point.kappa;
        if (v.is_framing() && v.index() <= static_cast<int>(point.a.size())) return point.a[v.index() - 1];
        throw DomainError("no value for variable " + v.name());
    });
}

namespace {

// Rows in reduced echelon form; pivots[i] is the pivot column of rows[i].
struct EchelonSpan {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivots;

    bool insert(std::vector<Rational> v) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational f = v[pivots[i]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
        }
        int p = 0;
        while (p < static_cast<int>(v.size()) && v[p].is_zero()) ++p;
        if (p == static_cast<int>(v.size())) return false;
        const Rational inv = Rational(1) / v[p];
        for (auto& x : v) x *= inv;
        for (auto& row : rows) {
            const Rational f = row[p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) row[j] -= f * v[j];
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

}  // namespace

int specialize_and_dimension(const std::vector<ETuple>& generators, const ParameterPoint& point) {
    if (generators.empty()) return 1;
    const std::size_t size = generators.front().size();
    std::vector<std::vector<Rational>> gens;
    for (const auto& g : generators) {
        if (g.size() != size) throw DomainError("generators of different lengths");
        std::vector<Rational> v;
        for (const auto& p : g.values) v.push_back(evaluate(p, point));
        gens.push_back(std::move(v));
    }
    EchelonSpan span;
    std::vector<std::vector<Rational>> frontier{std::vector<Rational>(size, Rational(1))};
    span.insert(frontier.front());
    // The span of all monomials in the generators: multiply new elements by each generator until stable.
    while (!frontier.empty()) {
        std::vector<std::vector<Rational>> next;
        for (const auto& b : frontier)
            for (const auto& g : gens) {
                std::vector<Rational> prod(size);
                for (std::size_t i = 0; i < size; ++i) prod[i] = b[i] * g[i];
                if (span.insert(prod)) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return static_cast<int>(span.rows.size());
}

std::vector<ETuple> chern_generators(int n, int r) {
    std::vector<ETuple> gens;
    for (int k = 1; k <= n; ++k) gens.push_back(chern_image(k, n, r));
    return gens;
}

bool separation_check(int n, int r, const ParameterPoint& point) {
    const auto gens = chern_generators(n, r);
    std::set<std::vector<Rational>> seen;
    for (std::size_t i = 0; i < gens.front().size(); ++i) {
        std::vector<Rational> v;
        for (const auto& g : gens) v.push_back(evaluate(g.values[i], point));
        if (!seen.insert(std::move(v)).second) return false;
    }
    return true;
}

GenericPoint random_generic_point(int n, int r, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 7);
    GenericPoint out;
    for (;;) {
        ++out.attempts;
        ParameterPoint p{Rational(num(rng), den(rng)), {}};
        for (int i = 1; i < r; ++i) p.a.push_back(Rational(num(rng), den(rng)));
        if (p.kappa.is_zero()) continue;
        auto a = p.framing(r);
        if (std::set<Rational>(a.begin(), a.end()).size() != a.size()) continue;
        if (!separation_check(n, r, p)) continue;
        out.point = std::move(p);
        return out;
    }
}

}  // namespace hikita::efield
