#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace ybx {

/// One verification outcome, JSON-serializable for the CLI reports.
struct Certificate {
    std::string check;          // short slug naming the verified statement
    std::string statement;      // human-readable claim
    nlohmann::json parameters = nlohmann::json::object();
    bool pass = false;
    nlohmann::json details = nlohmann::json::object(); // witnesses / counterexamples
    int degree_bound = 0;

    void require(bool ok, const std::string& what);
};

nlohmann::json certificate_to_json(const Certificate& c);

nlohmann::json report_envelope(const std::string& command, unsigned long long seed,
                               const std::vector<Certificate>& certs);

} // namespace ybx
