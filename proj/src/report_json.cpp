#include "superjet/report.hpp"

#include "json.hpp"

namespace superjet {

/// Diffable body only: no timestamps, deterministic ordering.
std::string report_body_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["command"] = rep.command;
    j["status"] = rep.pass() ? "pass" : "fail";
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : rep.checks)
        j["checks"].push_back(
            {{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"exact", c.exact}});
    return j.dump(2);
}

} // namespace superjet
