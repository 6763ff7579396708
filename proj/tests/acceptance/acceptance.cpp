// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance <path to hikita CLI> [criterion numbers...]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "hikita/appendixfix/quotient.hpp"
#include "hikita/calogero/wilson.hpp"
#include "hikita/combinat/hat.hpp"
#include "hikita/efield/etuple.hpp"
#include "hikita/report/suites.hpp"
#include "hikita/symcenter/center.hpp"
#include "hikita/wreath/params.hpp"

using namespace hikita;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

// Runs a suite and folds its failures into the outcome; returns the number of checks run.
int absorb(Outcome& out, const std::string& suite, report::Params params) {
    auto rep = report::run_suite(suite, params);
    for (const auto& c : rep.checks)
        if (c.status == report::Status::Fail)
            out.fail(suite + " n=" + std::to_string(params.n) + " r=" + std::to_string(params.r) + ": " + c.name +
                     ": " + c.witness);
    return static_cast<int>(rep.checks.size());
}

report::Params params(int n, int r) {
    report::Params p;
    p.n = n;
    p.r = r;
    return p;
}

Outcome criterion1() {
    Outcome out;
    int checks = 0;
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n) {
            auto rep = efield::verify_main_theorem(n, r);
            for (const auto& e : rep.entries) {
                checks += 2;
                if (!e.hecke_agrees || !e.dunkl_opdam_agrees)
                    out.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(e.k) +
                             ": " + e.witness);
            }
        }
    if (out.ok) out.detail = std::to_string(checks) + " generator equalities, n<=5, r<=3";
    return out;
}

Outcome criterion2() {
    Outcome out;
    int shapes = 0;
    for (int n = 1; n <= 8; ++n) {
        report::Params p = params(n, 1);
        absorb(out, "calogero", p);
        shapes += static_cast<int>(combinat::enumerate_partitions(n).size());
    }
    if (out.ok) out.detail = std::to_string(shapes) + " partitions, n<=8";
    return out;
}

Outcome criterion3() {
    Outcome out;
    for (int n = 1; n <= 6; ++n) absorb(out, "symmetric-center", params(n, 1));
    for (int n = 7; n <= 9; ++n) {
        std::vector<int> want(n, 0);
        for (const auto& lam : combinat::enumerate_partitions(n)) ++want[n - lam.length()];
        if (symcenter::rees_graded_dims(n) != want) out.fail("rees graded dimensions differ at n=" + std::to_string(n));
    }
    if (out.ok) out.detail = "theta, e_k(JM), filtration n<=6; rees dims n<=9";
    return out;
}

Outcome criterion4() {
    Outcome out;
    for (int r = 1; r <= 8; ++r) {
        if (!wreath::p_sum_vanishes(r)) out.fail("sum of p(eta^(i-1)) nonzero at r=" + std::to_string(r));
        if (!wreath::c_vs_p_identity(r)) out.fail("c(q) != r(p(eta^-1 q) - p(q)) at r=" + std::to_string(r));
    }
    if (out.ok) out.detail = "r<=8";
    return out;
}

Outcome criterion5() {
    Outcome out;
    int checks = 0;
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n) checks += absorb(out, "hecke", params(n, r));
    if (out.ok) out.detail = std::to_string(checks) + " checks, n<=5, r<=3";
    return out;
}

Outcome criterion6() {
    Outcome out;
    int checks = 0;
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 4; ++n) checks += absorb(out, "wreath", params(n, r));
    if (out.ok) out.detail = std::to_string(checks) + " checks, n<=4, r<=3";
    return out;
}

Outcome criterion7() {
    Outcome out;
    std::string orientation;
    for (int r = 1; r <= 4; ++r) {
        report::Params p = params(1, r);
        p.seed = 7;
        auto rep = report::run_suite("coulomb-rank1", p);
        for (const auto& c : rep.checks)
            if (c.status == report::Status::Fail) out.fail("r=" + std::to_string(r) + ": " + c.name + ": " + c.witness);
        for (const auto& [k, v] : rep.extra_params)
            if (k == "orientation") orientation = v;
    }
    if (out.ok) out.detail = "r<=4, orientation " + orientation;
    return out;
}

Outcome criterion8() {
    Outcome out;
    const std::vector<std::pair<int, int>> cases{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 2},
                                                 {2, 2}, {3, 2}, {1, 3}, {2, 3}};
    for (auto [n, r] : cases) absorb(out, "appendix", params(n, r));
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 5; ++n) {
            std::set<std::string> image;
            for (const auto& in : combinat::admissible_hat_inputs(n, r)) {
                auto mu = combinat::hat_bijection_general(in, n, r);
                if (!(combinat::hat_inverse_general(mu) == in)) out.fail("general hat round trip at " + mu.to_string());
                image.insert(mu.to_string());
            }
            if (static_cast<long long>(image.size()) != combinat::multipartition_count(r, n))
                out.fail("general hat map not onto at n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
    for (int n = 0; n <= 5; ++n) {
        std::set<std::string> image;
        for (int s = 0; s <= n; ++s)
            for (const auto& lam : combinat::enumerate_partitions(s)) {
                if (lam.length() + lam.size() > n) continue;
                auto mu = combinat::hat_bijection_r1(lam, n);
                if (!(combinat::hat_inverse_r1(mu) == lam)) out.fail("r=1 hat round trip at " + mu.to_string());
                image.insert(mu.to_string());
            }
        if (static_cast<long long>(image.size()) != combinat::partition_count(n))
            out.fail("r=1 hat map not onto at n=" + std::to_string(n));
    }
    if (out.ok) out.detail = "dimensions, basis and reductions on 9 (n,r); hat bijections n<=5, r<=3";
    return out;
}

Outcome criterion9() {
    Outcome out;
    int points = 0;
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 4; ++n) {
            report::Params p = params(n, r);
            p.seed = 1000 + 10 * r + n;
            auto rep = report::run_suite("dimensions", p);
            for (const auto& c : rep.checks) {
                if (c.status == report::Status::Fail)
                    out.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + c.name + ": " + c.witness);
                if (c.name.rfind("separation at", 0) == 0) ++points;
            }
        }
    if (out.ok) out.detail = std::to_string(points) + " generic points plus degenerate controls, n<=4, r<=3";
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome criterion10(const std::string& cli) {
    Outcome out;
    if (cli.empty()) {
        out.fail("no CLI path given");
        return out;
    }
    const auto dir = std::filesystem::temp_directory_path() / "hikita_acceptance";
    std::filesystem::create_directories(dir);
    const std::vector<std::string> runs{"dimensions --n 3 --r 2 --seed 42", "coulomb-rank1 --n 1 --r 3 --seed 42",
                                        "appendix --n 3 --r 2", "calogero --n 4 --dump-matrices"};
    int idx = 0;
    for (const auto& args : runs) {
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            const auto file = dir / ("run" + std::to_string(idx) + "_" + std::to_string(rep) + ".json");
            const std::string cmd = "\"" + cli + "\" verify " + args + " --out \"" + file.string() + "\" > /dev/null";
            if (std::system(cmd.c_str()) != 0) out.fail("nonzero exit: " + args);
            std::string text = slurp(file);
            if (text.empty()) out.fail("empty report: " + args);
            if (rep == 0) {
                first = text;
            } else if (text != first) {
                out.fail("reports differ: " + args);
            }
        }
        ++idx;
    }
    if (out.ok) out.detail = std::to_string(runs.size()) + " invocations, each run twice, byte-identical JSON";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    std::set<int> only;
    for (int i = 2; i < argc; ++i) only.insert(std::atoi(argv[i]));

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"main theorem on generators", criterion1},
        {"Calogero-Moser spectrum and rank", criterion2},
        {"Hilbert-case chain", criterion3},
        {"parameter identities", criterion4},
        {"cyclotomic Hecke suite", criterion5},
        {"wreath-product suite", criterion6},
        {"rank-one Coulomb relations", criterion7},
        {"appendix dimension", criterion8},
        {"generic-fiber dimension", criterion9},
        {"determinism", [&] { return criterion10(cli); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(number)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.ok;
        std::ostringstream line;
        line.precision(1);
        line << std::fixed << "criterion " << number << ": " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first
             << " (" << o.detail << ") [" << secs << " s]";
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
