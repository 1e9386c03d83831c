#include "ybx/report.hpp"

namespace ybx {

void Certificate::require(bool ok, const std::string& what) {
    if (!ok) {
        pass = false;
        if (!details.contains("failures")) details["failures"] = nlohmann::json::array();
        details["failures"].push_back(what);
    }
}

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["check"] = c.check;
    j["statement"] = c.statement;
    j["parameters"] = c.parameters;
    j["status"] = c.pass ? "pass" : "fail";
    j["details"] = c.details;
    j["degree_bound"] = c.degree_bound;
    return j;
}

nlohmann::json report_envelope(const std::string& command, unsigned long long seed,
                               const std::vector<Certificate>& certs) {
    nlohmann::json j;
    j["command"] = command;
    j["seed"] = seed;
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : certs) {
        arr.push_back(certificate_to_json(c));
        all = all && c.pass;
    }
    j["checks"] = arr;
    j["status"] = all ? "pass" : "fail";
    return j;
}

} // namespace ybx
