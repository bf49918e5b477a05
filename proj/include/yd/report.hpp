#pragma once

#include <string>
#include <vector>

namespace yd {

/// One failing coordinate of a relation check: where (matrix element /
/// state pair), at which exponent tuple, and the residual value.
struct Failure {
    std::string where;
    std::string exponents;
    std::string residual;
};

/// Verdict for a single checked identity.
struct CheckReport {
    std::string tag;       // relation tag, e.g. "BCDhiej[i=2,j=1,+]"
    std::string paper_eq;  // display equation this instantiates
    std::string backend;
    std::string window;
    bool pass = true;
    bool skipped = false;  // window empty after contamination accounting
    std::string note;
    std::vector<Failure> failures;

    void fail(std::string where, std::string exps, std::string res) {
        pass = false;
        if (failures.size() < 32) failures.push_back({std::move(where), std::move(exps), std::move(res)});
    }
};

/// A named batch of check reports (one suite run).
struct SuiteReport {
    std::string suite;
    std::vector<CheckReport> checks;
    double seconds = 0.0;

    bool pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failed_count() const {
        int k = 0;
        for (auto& c : checks) k += !c.pass;
        return k;
    }
    CheckReport& add(CheckReport c) {
        checks.push_back(std::move(c));
        return checks.back();
    }
};

std::string report_to_json(const std::vector<SuiteReport>& suites, bool with_timings,
                           const std::string& config_echo);
int report_diff(const std::string& json_a, const std::string& json_b, std::string& out);

} // namespace yd
