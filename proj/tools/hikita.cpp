#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hikita/exact/error.hpp"
#include "hikita/report/suites.hpp"

using namespace hikita::report;

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for the Hikita-Nakajima comparison"};
    app.require_subcommand(1);
    auto* verify = app.add_subcommand("verify", "Run one verification suite");

    std::string suite;
    Params params;
    int cutoff = -1;
    std::string out_path;
    std::string format = "json";
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--n", params.n, "Number of points / boxes")->required()->check(CLI::PositiveNumber);
    verify->add_option("--r", params.r, "Cyclic order r")->check(CLI::PositiveNumber);
    verify->add_option("--cutoff", cutoff, "Polynomial-degree window for the appendix suite")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", params.seed, "Seed for sampled points and random words");
    verify->add_option("--point", params.point, "Parameter point kappa=p/q,a1=p/q,...");
    verify->add_option("--out", out_path, "Write the machine-readable report here ('-' for stdout)");
    verify->add_option("--format", format, "Format of --out")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--dump-matrices", params.dump_matrices, "Include rendered matrices in the JSON report");
    verify->add_flag("--timings", params.timings, "Record wall-clock durations (reports are then not reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (cutoff >= 0) params.cutoff = cutoff;

    Report report;
    try {
        report = run_suite(suite, params);
    } catch (const hikita::DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    const std::string machine = format == "csv" ? to_csv(report) : to_json(report);
    if (out_path == "-") {
        std::cout << machine;
    } else {
        std::cout << to_text(report);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << out_path << '\n';
                return 2;
            }
            out << machine;
        }
    }
    return report.passed() ? 0 : 1;
}
