#ifndef SUPERJET_REPORT_HPP
#define SUPERJET_REPORT_HPP

#include <string>
#include <vector>

namespace superjet {

/// One verified fact: expected vs computed, exact comparison only.
struct Check {
    std::string name;
    std::string expected;
    std::string got;
    bool exact = false;
};

/// Deterministic, machine-diffable verification report.
struct Report {
    std::string command;
    std::vector<Check> checks;

    bool pass() const {
        for (auto& c : checks)
            if (!c.exact) return false;
        return true;
    }
    void add(const std::string& name, const std::string& expected, const std::string& got) {
        checks.push_back({name, expected, got, expected == got});
    }
    void add_bool(const std::string& name, bool ok) {
        checks.push_back({name, "true", ok ? "true" : "false", ok});
    }
    void merge(const Report& o) {
        for (auto& c : o.checks) checks.push_back(c);
    }
};

} // namespace superjet

#endif
