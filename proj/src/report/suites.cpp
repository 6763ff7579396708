#include "hikita/report/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hikita/appendixfix/quotient.hpp"
#include "hikita/calogero/wilson.hpp"
#include "hikita/combinat/hat.hpp"
#include "hikita/efield/etuple.hpp"
#include "hikita/exact/charpoly.hpp"
#include "hikita/exact/error.hpp"
#include "hikita/exact/symmetric.hpp"
#include "hikita/heckecyclo/hecke.hpp"
#include "hikita/symcenter/center.hpp"
#include "hikita/symcenter/specht.hpp"
#include "hikita/wreath/irrep.hpp"
#include "hikita/wreath/rankone.hpp"

namespace hikita::report {

using combinat::Multipartition;
using combinat::Partition;
using exact::Rational;
using Witness = std::optional<std::string>;

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long long power(long long base, int e) {
    long long p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
}

std::string join(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

Witness expect_equal(long long got, long long want) {
    if (got == want) return std::nullopt;
    return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

void main_theorem(Report& rep) {
    const auto& p = rep.params;
    const auto result = efield::verify_main_theorem(p.n, p.r);
    for (const auto& e : result.entries) {
        const std::string k = "k=" + std::to_string(e.k);
        rep.run(k + " chern = hecke", [&]() -> Witness {
            if (e.hecke_agrees) return std::nullopt;
            return e.witness;
        });
        rep.run(k + " substituted chern = dunkl-opdam", [&]() -> Witness {
            if (e.dunkl_opdam_agrees) return std::nullopt;
            return e.witness;
        });
    }
}

void symmetric_center(Report& rep) {
    const int n = rep.params.n;
    const auto& theta = symcenter::theta_map(n);
    rep.run("theta is an algebra isomorphism", [&]() -> Witness {
        auto failure = theta.isomorphism_failure();
        if (failure.empty()) return std::nullopt;
        return failure;
    });
    for (int k = 1; k <= n; ++k)
        rep.run("theta(e_" + std::to_string(k) + "(JM)) = e_" + std::to_string(k) + "(contents)", [&]() -> Witness {
            auto image = theta.apply(symcenter::symmetric_jm(k, n));
            for (std::size_t l = 0; l < theta.partitions().size(); ++l) {
                std::vector<Rational> cs;
                for (int c : combinat::contents(theta.partitions()[l])) cs.emplace_back(c);
                Rational want = exact::elem_sym_eval(k, cs);
                if (image[l] != want)
                    return theta.partitions()[l].to_string() + ": " + image[l].to_string() + " vs " + want.to_string();
            }
            return std::nullopt;
        });
    rep.run("rees graded dimensions", [&]() -> Witness {
        std::vector<int> want(n, 0);
        for (const auto& lam : combinat::enumerate_partitions(n)) ++want[n - lam.length()];
        auto got = symcenter::rees_graded_dims(n);
        if (got == want) return std::nullopt;
        return "got " + join(got) + ", expected " + join(want);
    });
    rep.run("filtration generated by JM products", [&]() -> Witness {
        auto report = symcenter::filtration_generation_check(n);
        if (report.passed) return std::nullopt;
        return report.witness;
    });
}

std::vector<std::vector<std::string>> render(const calogero::Matrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j).to_string());
    return rows;
}

void calogero_suite(Report& rep) {
    for (const auto& lam : combinat::enumerate_partitions(rep.params.n)) {
        const std::string name = lam.to_string();
        std::optional<calogero::CMPair> pair;
        rep.run("rank([X,Y] - Id) = 1 for " + name, [&]() -> Witness {
            pair = calogero::cm_fixed_point(lam);
            return expect_equal(calogero::commutator_defect_rank(*pair), 1);
        });
        rep.run("charpoly(YX) = prod(t - content) for " + name, [&]() -> Witness {
            if (!pair) return "no fixed-point pair";
            std::vector<Rational> roots;
            for (int c : combinat::contents(lam)) roots.emplace_back(c);
            auto got = calogero::cm_charpoly(*pair);
            auto want = exact::polynomial_from_roots(roots);
            if (got == want) return std::nullopt;
            return got.to_string() + " vs " + want.to_string();
        });
        if (rep.params.dump_matrices && pair) {
            rep.matrices.emplace_back("X[" + name + "]", render(pair->X));
            rep.matrices.emplace_back("Y[" + name + "]", render(pair->Y));
        }
    }
}

void wreath_suite(Report& rep) {
    const int n = rep.params.n;
    const int r = rep.params.r;
    long long squares = 0;
    for (const auto& shape : combinat::enumerate_multipartitions(r, n)) {
        const std::string name = shape.to_string();
        std::optional<wreath::WreathIrrep> irrep;
        rep.run("presentation on " + name, [&]() -> Witness {
            irrep = wreath::wreath_seminormal_irrep(shape);
            squares += static_cast<long long>(irrep->dimension()) * irrep->dimension();
            auto failure = wreath::presentation_failure(*irrep);
            if (failure.empty()) return std::nullopt;
            return failure;
        });
        rep.run("JM and epsilon spectra on " + name, [&]() -> Witness {
            if (!irrep) return "no module";
            auto failure = wreath::spectrum_failure(*irrep);
            if (failure.empty()) return std::nullopt;
            return failure;
        });
    }
    rep.run("sum of squared dimensions = n! r^n",
            [&]() -> Witness { return expect_equal(squares, factorial(n) * power(r, n)); });
    rep.run("characters orthonormal", [&]() -> Witness {
        auto report = wreath::character_orthonormality(n, r);
        if (!report.orthonormal) return report.witness;
        return expect_equal(report.class_count, combinat::multipartition_count(r, n));
    });
}

void hecke_suite(Report& rep) {
    const int n = rep.params.n;
    const int r = rep.params.r;
    long long squares = 0;
    for (const auto& shape : combinat::enumerate_multipartitions(r, n)) {
        const std::string name = shape.to_string();
        std::optional<heckecyclo::HeckeModule> mod;
        rep.run("relations on " + name, [&]() -> Witness {
            mod = heckecyclo::hecke_seminormal_module(shape);
            squares += static_cast<long long>(mod->dimension()) * mod->dimension();
            auto failure = heckecyclo::relation_failure(*mod);
            if (failure.empty()) return std::nullopt;
            return failure;
        });
        rep.run("tableau-independent central scalars on " + name, [&]() -> Witness {
            if (!mod) return "no module";
            for (int k = 1; k <= n; ++k) heckecyclo::central_scalar(k, *mod);
            return std::nullopt;
        });
    }
    rep.run("sum of squared dimensions = n! r^n",
            [&]() -> Witness { return expect_equal(squares, factorial(n) * power(r, n)); });
    rep.run("e_k(z) commutes with every s_i", [&]() -> Witness {
        if (heckecyclo::centrality_check(n, r)) return std::nullopt;
        return "some e_k(z) fails to commute";
    });
    if (n >= 2 && r >= 2) {
        rep.run("control: z_1 alone is not central", [&]() -> Witness {
            if (!heckecyclo::z1_commutes_everywhere(n, r)) return std::nullopt;
            return "z_1 commuted with every s_i";
        });
    } else {
        rep.skip("control: z_1 alone is not central", "z_1 is scalar or there is no s_i when n = 1 or r = 1");
    }
}

void appendix_suite(Report& rep) {
    auto& p = rep.params;
    const int bound = appendixfix::spanning_bound(p.n, p.r);
    if (!p.cutoff) p.cutoff = bound;
    const auto q = appendixfix::fixed_point_quotient(p.n, p.r, *p.cutoff);
    rep.extra_params.emplace_back("grading", appendixfix::grading_description(p.r));
    rep.extra_params.emplace_back("spanning_bound", std::to_string(bound));
    rep.extra_params.emplace_back("profile", join(q.profile()));
    const long long expected = combinat::multipartition_count(p.r, p.n);
    rep.run("quotient dimension = |P(r,n)|", [&]() -> Witness { return expect_equal(q.dimension(), expected); });
    rep.run("graded pieces vanish above the canonical top degree", [&]() -> Witness {
        if (q.vanishes_above_canonical()) return std::nullopt;
        return "profile " + join(q.profile());
    });
    const auto family = appendixfix::canonical_family(p.n, p.r);
    rep.run("canonical family size = |P(r,n)|",
            [&]() -> Witness { return expect_equal(static_cast<long long>(family.size()), expected); });
    rep.run("canonical family is a basis", [&]() -> Witness {
        if (q.independent(family)) return std::nullopt;
        return "canonical family is linearly dependent in the quotient";
    });
    rep.run("spanning reduction agrees with the quotient", [&]() -> Witness {
        appendixfix::SpanningReducer reducer(p.n, p.r);
        for (const auto& m : appendixfix::degree_zero_monomials(p.n, p.r, *p.cutoff)) {
            auto red = reducer.reduce(m);
            for (const auto& [t, c] : red.terms())
                if (std::find(family.begin(), family.end(), t) == family.end())
                    return m.to_string() + " reduces to non-canonical " + t.to_string();
            if (!q.in_ideal(appendixfix::InvariantElement::monomial(p.n, m) - red))
                return m.to_string() + " -> " + red.to_string() + " is not a valid rewriting";
        }
        return std::nullopt;
    });
    rep.run("hat bijection round trip", [&]() -> Witness {
        std::set<std::string> image;
        for (const auto& in : combinat::admissible_hat_inputs(p.n, p.r)) {
            auto mu = combinat::hat_bijection_general(in, p.n, p.r);
            if (!(combinat::hat_inverse_general(mu) == in)) return "round trip fails at " + mu.to_string();
            image.insert(mu.to_string());
        }
        return expect_equal(static_cast<long long>(image.size()), expected);
    });
}

void coulomb_suite(Report& rep) {
    const int r = rep.params.r;
    const auto report = wreath::verify_rank_one_coulomb(r);
    rep.extra_params.emplace_back("orientation", report.orientation());
    for (const auto& rel : report.relations)
        rep.run(rel.name, [&]() -> Witness {
            if (rel.stated) return std::nullopt;
            return rel.swapped ? "holds only with r_1 and r_-1 exchanged" : "fails in both orientations";
        });
    rep.run("classical limit commutes", [&]() -> Witness {
        if (report.classical_commutative) return std::nullopt;
        return "r_1 r_-1 != r_-1 r_1 at hbar = 0";
    });
    rep.run("quantum products differ", [&]() -> Witness {
        if (report.quantum_noncommutative) return std::nullopt;
        return "r_1 r_-1 = r_-1 r_1 before specialization";
    });
    rep.run("rewriting is confluent", [&]() -> Witness {
        auto c = wreath::confluence_check(r, 200, 6, rep.params.seed);
        if (c.confluent) return std::nullopt;
        return c.witness;
    });
}

void dimensions_suite(Report& rep) {
    const int n = rep.params.n;
    const int r = rep.params.r;
    const long long expected = combinat::multipartition_count(r, n);
    rep.run("|P(r,n)| by enumeration", [&]() -> Witness {
        return expect_equal(static_cast<long long>(combinat::enumerate_multipartitions(r, n).size()), expected);
    });
    rep.run("hat bijection r=1 round trip", [&]() -> Witness {
        std::set<std::string> image;
        for (int s = 0; s <= n; ++s)
            for (const auto& lam : combinat::enumerate_partitions(s)) {
                if (lam.length() + lam.size() > n) continue;
                auto mu = combinat::hat_bijection_r1(lam, n);
                if (!(combinat::hat_inverse_r1(mu) == lam)) return "round trip fails at " + mu.to_string();
                image.insert(mu.to_string());
            }
        return expect_equal(static_cast<long long>(image.size()), combinat::partition_count(n));
    });

    const auto generators = efield::chern_generators(n, r);
    std::vector<efield::ParameterPoint> points;
    if (!rep.params.point.empty()) {
        points.push_back(efield::ParameterPoint::parse(rep.params.point, r));
    } else {
        std::mt19937_64 rng(rep.params.seed);
        for (int i = 0; i < 20; ++i) points.push_back(efield::random_generic_point(n, r, rng).point);
    }
    for (const auto& pt : points) {
        const std::string tag = " at " + pt.to_string();
        rep.run("specialized dimension = |P(r,n)|" + tag,
                [&]() -> Witness { return expect_equal(efield::specialize_and_dimension(generators, pt), expected); });
        rep.run("separation" + tag, [&]() -> Witness {
            if (efield::separation_check(n, r, pt)) return std::nullopt;
            return "two components share all generator values";
        });
    }

    if (n >= 2) {
        std::vector<Rational> spread;
        for (int i = 1; i < r; ++i) spread.emplace_back(3 * i + 1);
        const efield::ParameterPoint flat{Rational(0), spread};
        rep.run("control: separation fails at " + flat.to_string(), [&]() -> Witness {
            if (!efield::separation_check(n, r, flat)) return std::nullopt;
            return "separated at kappa = 0";
        });
    } else {
        rep.skip("control: separation fails at kappa=0", "a single box is separated by the framing alone");
    }
    if (r >= 2) {
        std::vector<Rational> coincident(r - 1, Rational(2));
        if (r == 2) coincident = {Rational(0)};
        const efield::ParameterPoint same{Rational(1), coincident};
        rep.run("control: separation fails at " + same.to_string(), [&]() -> Witness {
            if (!efield::separation_check(n, r, same)) return std::nullopt;
            return "separated with a_1 = a_2";
        });
    } else {
        rep.skip("control: separation fails at coincident framing", "r = 1 has a single framing value");
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"main-theorem", "symmetric-center", "calogero", "wreath",
                                                "hecke",        "appendix",         "coulomb-rank1", "dimensions"};
    return names;
}

Report run_suite(const std::string& suite, const Params& params) {
    if (params.n < 1) throw DomainError("--n must be at least 1");
    if (params.r < 1) throw DomainError("--r must be at least 1");
    Report rep;
    rep.command = suite;
    rep.params = params;
    if (suite == "main-theorem") {
        main_theorem(rep);
    } else if (suite == "symmetric-center") {
        symmetric_center(rep);
    } else if (suite == "calogero") {
        calogero_suite(rep);
    } else if (suite == "wreath") {
        wreath_suite(rep);
    } else if (suite == "hecke") {
        hecke_suite(rep);
    } else if (suite == "appendix") {
        appendix_suite(rep);
    } else if (suite == "coulomb-rank1") {
        coulomb_suite(rep);
    } else if (suite == "dimensions") {
        dimensions_suite(rep);
    } else {
        throw DomainError("unknown suite " + suite);
    }
    return rep;
}

}  // namespace hikita::report
