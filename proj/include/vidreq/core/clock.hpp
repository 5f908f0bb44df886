#pragma once

#include <ctime>
#include <string>

namespace vidreq {

// RFC 3339 UTC rendering, e.g. "2024-03-01T12:00:00Z".
std::string utc_timestamp(std::time_t t);

std::string now_timestamp();

// SOURCE_DATE_EPOCH when set, otherwise the Unix epoch. Used for artifact
// timestamps so repeated runs stay byte-identical.
std::string artifact_timestamp();

}  // namespace vidreq
