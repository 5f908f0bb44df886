#include "vidreq/core/clock.hpp"

#include <chrono>
#include <cstdlib>

namespace vidreq {

std::string utc_timestamp(std::time_t t) {
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string now_timestamp() {
    return utc_timestamp(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now()));
}

std::string artifact_timestamp() {
    if (const char* s = std::getenv("SOURCE_DATE_EPOCH"); s && *s) {
        char* end = nullptr;
        const long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v >= 0) return utc_timestamp(static_cast<std::time_t>(v));
    }
    return utc_timestamp(0);
}

}  // namespace vidreq
