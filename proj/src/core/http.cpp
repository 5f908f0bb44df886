#include "vidreq/core/http.hpp"

#include <httplib.h>

#include "vidreq/core/error.hpp"

namespace vidreq {

Endpoint parse_endpoint(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw Error(ErrorKind::InvalidConfig, "backend URL needs a scheme: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    Endpoint e;
    e.origin = url.substr(0, path_start);
    if (path_start != std::string::npos) {
        e.prefix = url.substr(path_start);
        while (!e.prefix.empty() && e.prefix.back() == '/') e.prefix.pop_back();
    }
    return e;
}

namespace {

httplib::Client make_client(const Endpoint& endpoint, int timeout_s) {
    httplib::Client cli(endpoint.origin);
    cli.set_connection_timeout(timeout_s, 0);
    cli.set_read_timeout(timeout_s, 0);
    cli.set_write_timeout(timeout_s, 0);
    return cli;
}

}  // namespace

void check_health(const Endpoint& endpoint, int timeout_s) {
    auto cli = make_client(endpoint, timeout_s);
    auto res = cli.Get(endpoint.prefix + "/healthz");
    if (!res) {
        throw Error(ErrorKind::BackendUnavailable,
                    endpoint.origin + ": health check failed (" + httplib::to_string(res.error()) + ")");
    }
    if (res->status != 200) {
        throw Error(ErrorKind::BackendUnavailable, endpoint.origin + ": health check returned " + std::to_string(res->status));
    }
}

nlohmann::json post_json(const Endpoint& endpoint, const std::string& path, const nlohmann::json& body, int timeout_s) {
    auto cli = make_client(endpoint, timeout_s);
    auto res = cli.Post(endpoint.prefix + path, body.dump(), "application/json");
    if (!res) {
        throw Error(ErrorKind::BackendUnavailable,
                    endpoint.origin + path + ": " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw Error(ErrorKind::BackendUnavailable, endpoint.origin + path + " returned " + std::to_string(res->status));
    }
    try {
        return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ContractViolation, endpoint.origin + path + ": " + e.what());
    }
}

}  // namespace vidreq
