/*
 * Copyright 2026 The sentisearch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Rate-limited page fetching. Include this header (rather than httplib.h
// directly) everywhere HTTP is needed so the TLS switch stays consistent
// across translation units.

#pragma once

#ifdef SENTISEARCH_WITH_TLS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif

#include <chrono>
#include <optional>
#include <string>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "sentisearch/errors.hpp"
#include "sentisearch/html.hpp"

namespace sentisearch {

/// Crawl settings. The fetch interval is the minimum spacing between the
/// starts of two consecutive fetches; pushing it to 0 risks the remote
/// blocking the client address.
struct CrawlConfig {
    double fetch_interval_seconds{2.0};
    std::string start_time; // ISO 8601, optional crawl window
    std::string end_time;
    std::string output_path;
    std::string user_agent{"sentisearch/0.1"};
    int max_retries{2};

    static CrawlConfig load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open config file: " + path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("config file ") + path + ": " + e.what());
        }
        CrawlConfig config;
        if (doc.contains("crawl")) {
            const auto& c = doc["crawl"];
            if (c.contains("interval_seconds"))
                config.fetch_interval_seconds = c["interval_seconds"].get<double>();
            if (c.contains("start")) config.start_time = c["start"].get<std::string>();
            if (c.contains("end")) config.end_time = c["end"].get<std::string>();
            if (c.contains("output")) config.output_path = c["output"].get<std::string>();
            if (c.contains("user_agent")) config.user_agent = c["user_agent"].get<std::string>();
            if (c.contains("max_retries")) config.max_retries = c["max_retries"].get<int>();
        }
        config.validate();
        return config;
    }

    void validate() const {
        if (!(fetch_interval_seconds > 0.0))
            throw ConfigError("crawl interval must be > 0 seconds");
        if (max_retries < 0) throw ConfigError("max_retries must be >= 0");
        if (!start_time.empty() && !end_time.empty() && start_time >= end_time)
            throw ConfigError("crawl start time must precede end time");
    }
};

namespace crawl_detail {

struct ParsedUrl {
    std::string origin; // scheme://host[:port]
    std::string path;
};

inline ParsedUrl parse_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw InputError("malformed url (missing scheme): " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    ParsedUrl parsed;
    if (path_start == std::string::npos) {
        parsed.origin = url;
        parsed.path = "/";
    } else {
        parsed.origin = url.substr(0, path_start);
        parsed.path = url.substr(path_start);
    }
    if (parsed.origin.size() <= scheme_end + 3)
        throw InputError("malformed url (missing host): " + url);
    return parsed;
}

}  // namespace crawl_detail

/// Sequential, globally rate-limited GET fetcher. For any sequence of n
/// fetches through one fetcher, total elapsed time is at least
/// (n - 1) * interval.
class PageFetcher {
public:
    explicit PageFetcher(CrawlConfig config) : config_(std::move(config)) {
        config_.validate();
    }

    RawPage fetch(const std::string& url) {
        const auto parsed = crawl_detail::parse_url(url);
#ifndef SENTISEARCH_WITH_TLS
        if (parsed.origin.starts_with("https://"))
            throw IoError("https requires a TLS-enabled build: " + url);
#endif
        wait_for_slot();

        httplib::Client client(parsed.origin);
        client.set_default_headers({{"User-Agent", config_.user_agent}});
        client.set_follow_location(true);

        httplib::Result result{nullptr, httplib::Error::Unknown};
        for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
            result = client.Get(parsed.path);
            if (result) break;
        }
        if (!result)
            throw IoError("fetch failed for " + url + ": " + httplib::to_string(result.error()));
        if (result->status < 200 || result->status >= 300)
            throw IoError("fetch of " + url + " returned status " +
                          std::to_string(result->status));
        if (result->body.empty()) throw IoError("fetch of " + url + " returned an empty body");

        RawPage page;
        page.url = url;
        page.html = result->body;
        page.fetched_at = std::chrono::system_clock::now();
        return page;
    }

private:
    CrawlConfig config_;
    std::optional<std::chrono::steady_clock::time_point> last_start_;

    void wait_for_slot() {
        const auto interval = std::chrono::duration<double>(config_.fetch_interval_seconds);
        if (last_start_) {
            const auto ready = *last_start_ +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(interval);
            const auto now = std::chrono::steady_clock::now();
            if (now < ready) std::this_thread::sleep_for(ready - now);
        }
        last_start_ = std::chrono::steady_clock::now();
    }
};

}  // namespace sentisearch
