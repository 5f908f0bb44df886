#pragma once

#include <string>

#include <json.hpp>

namespace vidreq {

// A backend base URL split into the part httplib connects to and a path prefix.
struct Endpoint {
    std::string origin;  // scheme://host[:port]
    std::string prefix;  // "" or "/base" without trailing slash
};

Endpoint parse_endpoint(const std::string& url);

// GET <prefix>/healthz must answer 200; anything else is BackendUnavailable.
void check_health(const Endpoint& endpoint, int timeout_s = 10);

// POSTs a JSON body and parses the JSON reply. Transport failures and non-200
// answers are BackendUnavailable; an unparseable reply is a ContractViolation.
nlohmann::json post_json(const Endpoint& endpoint, const std::string& path, const nlohmann::json& body,
                         int timeout_s = 120);

}  // namespace vidreq
