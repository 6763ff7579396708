#include "hikita/report/report.hpp"

#include <chrono>
#include <exception>
#include <sstream>

#include "json.hpp"

namespace hikita::report {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::Skipped:
            return "skipped";
    }
    return "fail";
}

bool Report::passed() const { return count(Status::Fail) == 0; }

int Report::count(Status s) const {
    int c = 0;
    for (const auto& check : checks)
        if (check.status == s) ++c;
    return c;
}

void Report::run(const std::string& name, const std::function<std::optional<std::string>()>& body) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    Check check{name, Status::Pass, {}, 0};
    try {
        if (auto witness = body()) {
            check.status = Status::Fail;
            check.witness = witness->empty() ? "(no detail)" : *witness;
        }
    } catch (const std::exception& e) {
        check.status = Status::Fail;
        check.witness = std::string("exception: ") + e.what();
    }
    if (params.timings) {
        check.ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
        total_ms += check.ms;
    }
    checks.push_back(std::move(check));
}

void Report::skip(const std::string& name, const std::string& reason) {
    checks.push_back({name, Status::Skipped, reason, 0});
}

std::string to_json(const Report& report) {
    using json = nlohmann::ordered_json;
    json params;
    params["n"] = report.params.n;
    params["r"] = report.params.r;
    params["cutoff"] = report.params.cutoff ? json(*report.params.cutoff) : json(nullptr);
    params["seed"] = report.params.seed;
    params["point"] = report.params.point.empty() ? json(nullptr) : json(report.params.point);
    params["dump_matrices"] = report.params.dump_matrices;
    for (const auto& [k, v] : report.extra_params) params[k] = v;

    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry;
        entry["name"] = c.name;
        entry["status"] = to_string(c.status);
        if (!c.witness.empty()) entry["witness"] = c.witness;
        entry["ms"] = c.ms;
        checks.push_back(std::move(entry));
    }

    json out;
    out["schema"] = 1;
    out["command"] = report.command;
    out["params"] = std::move(params);
    out["checks"] = std::move(checks);
    out["total_ms"] = report.total_ms;
    if (report.params.dump_matrices) {
        json mats = json::object();
        for (const auto& [name, rows] : report.matrices) mats[name] = rows;
        out["matrices"] = std::move(mats);
    }
    return out.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << "name,status,witness,ms\n";
    for (const auto& c : report.checks)
        os << csv_field(c.name) << ',' << to_string(c.status) << ',' << csv_field(c.witness) << ',' << c.ms << '\n';
    return os.str();
}

std::string to_text(const Report& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        switch (c.status) {
            case Status::Pass:
                os << "PASS " << c.name;
                break;
            case Status::Fail:
                os << "FAIL " << c.name << ": " << c.witness;
                break;
            case Status::Skipped:
                os << "SKIP " << c.name << ": " << c.witness;
                break;
        }
        if (report.params.timings) os << " (" << c.ms << " ms)";
        os << '\n';
    }
    os << report.command << ": " << report.count(Status::Pass) << " passed, " << report.count(Status::Fail)
       << " failed, " << report.count(Status::Skipped) << " skipped\n";
    return os.str();
}

}  // namespace hikita::report
