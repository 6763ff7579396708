#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hikita::report {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string witness;  // always set for failures
    long long ms = 0;
};

struct Params {
    int n = 1;
    int r = 1;
    std::optional<int> cutoff;
    unsigned long long seed = 0;
    std::string point;  // "kappa=3/2,a1=1/3" or empty
    bool dump_matrices = false;
    bool timings = false;
};

struct Report {
    std::string command;
    Params params;
    // Suite-specific entries appended to the params object, in insertion order.
    std::vector<std::pair<std::string, std::string>> extra_params;
    std::vector<Check> checks;
    // Rendered matrices, only filled when dump_matrices is set.
    std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> matrices;
    long long total_ms = 0;

    bool passed() const;
    int count(Status s) const;

    /// Runs body and records its outcome: nullopt passes, a string fails with that witness. Exceptions
    /// become failures carrying their message. Durations are recorded only when params.timings is set.
    void run(const std::string& name, const std::function<std::optional<std::string>()>& body);
    void skip(const std::string& name, const std::string& reason);
};

/// {schema, command, params, checks, total_ms[, matrices]} with a fixed key order.
std::string to_json(const Report& report);
/// Header name,status,witness,ms followed by one line per check.
std::string to_csv(const Report& report);
/// One "PASS name" / "FAIL name: witness" / "SKIP name: reason" line per check and a summary line.
std::string to_text(const Report& report);

}  // namespace hikita::report
