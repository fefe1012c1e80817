#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mike::util {

struct HttpOptions {
    int max_attempts = 3;
    int backoff_ms = 250;  // doubled per retry
};

// POST application/json to base_url + path. Retries transport failures and
// 429/5xx with exponential backoff; other 4xx surface immediately. Returns
// the response body; throws TransportError once attempts are exhausted.
std::string post_json_with_retry(const std::string& base_url, const std::string& path,
                                 const std::string& body,
                                 const std::vector<std::pair<std::string, std::string>>& headers,
                                 const HttpOptions& options = {});

std::string env_or_empty(const char* name);

}  // namespace mike::util
