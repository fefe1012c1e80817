#include "mike/util/http.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "mike/errors.hpp"

namespace mike::util {

std::string env_or_empty(const char* name) {
    const char* v = std::getenv(name);
    return v ? v : "";
}

std::string post_json_with_retry(const std::string& base_url, const std::string& path,
                                 const std::string& body,
                                 const std::vector<std::pair<std::string, std::string>>& headers,
                                 const HttpOptions& options) {
    httplib::Client client(base_url);
    client.set_connection_timeout(30);
    client.set_read_timeout(120);
    httplib::Headers hdrs;
    for (const auto& [k, v] : headers) hdrs.emplace(k, v);

    std::string last_error;
    int backoff = options.backoff_ms;
    int attempts = std::max(options.max_attempts, 1);
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        auto res = client.Post(path, hdrs, body, "application/json");
        if (res) {
            if (res->status >= 200 && res->status < 300) return res->body;
            if (res->status != 429 && res->status < 500)
                throw Error("HTTP " + std::to_string(res->status) + " from " + base_url + path +
                            ": " + res->body);
            last_error = "HTTP " + std::to_string(res->status);
        } else {
            last_error = "transport: " + httplib::to_string(res.error());
        }
        if (attempt < attempts) {
            std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
            backoff *= 2;
        }
    }
    throw TransportError(last_error + " from " + base_url + path, attempts);
}

}  // namespace mike::util
