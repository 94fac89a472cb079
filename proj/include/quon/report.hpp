#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace quon {

struct CheckResult {
    std::string id;
    bool pass = false;
    double max_error = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::string name;
    std::vector<CheckResult> checks;

    void add(std::string id, bool pass, double err, std::string detail = "") {
        checks.push_back({std::move(id), pass, err, std::move(detail)});
    }
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }
    double max_error() const {
        double m = 0.0;
        for (const auto& c : checks) m = std::max(m, c.max_error);
        return m;
    }
};

} // namespace quon
