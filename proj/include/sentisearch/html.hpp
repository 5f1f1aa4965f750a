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

#pragma once

#include <cctype>
#include <chrono>
#include <ctime>
#include <string>
#include <string_view>

#include "sentisearch/corpus.hpp"
#include "sentisearch/errors.hpp"

namespace sentisearch {

struct RawPage {
    std::string url;
    std::string html;
    std::chrono::system_clock::time_point fetched_at{};
};

namespace html_detail {

inline std::string lower_tag(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

inline std::string collapse_whitespace(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (const char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(ch);
        }
    }
    return out;
}

}  // namespace html_detail

/// Tolerant streaming tag scanner, not a DOM. Keeps the text of paragraph,
/// emphasis and span elements; drops script and style contents entirely;
/// tag boundaries become single spaces and whitespace is collapsed. Input
/// without any content-carrying element falls back to whole-page tag
/// stripping, so already-clean text passes through unchanged (the function
/// is idempotent). Neither '<' nor '>' can survive into the output.
inline std::string clean_html(std::string_view html) {
    std::string region_text; // text inside p/em/span
    std::string all_text;    // any text outside script/style
    int content_depth = 0;
    int suppress_depth = 0; // script/style nesting
    bool saw_content_tag = false;

    const std::size_t n = html.size();
    std::size_t i = 0;
    auto emit = [&](char c) {
        if (suppress_depth > 0) return;
        all_text.push_back(c);
        if (content_depth > 0) region_text.push_back(c);
    };
    while (i < n) {
        const char c = html[i];
        if (c != '<') {
            if (c == '>')
                emit(' '); // stray '>' never passes through
            else
                emit(c);
            ++i;
            continue;
        }
        // comment?
        if (html.compare(i, 4, "<!--") == 0) {
            const auto end = html.find("-->", i + 4);
            i = end == std::string_view::npos ? n : end + 3;
            emit(' ');
            continue;
        }
        // scan the tag, honoring quoted attribute values
        std::size_t j = i + 1;
        bool closing = false;
        if (j < n && html[j] == '/') {
            closing = true;
            ++j;
        }
        std::string name;
        while (j < n && std::isalnum(static_cast<unsigned char>(html[j])))
            name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(html[j++]))));
        char quote = '\0';
        bool self_closing = false;
        while (j < n) {
            const char t = html[j];
            if (quote != '\0') {
                if (t == quote) quote = '\0';
            } else if (t == '"' || t == '\'') {
                quote = t;
            } else if (t == '>') {
                break;
            } else if (t == '/') {
                self_closing = true;
            }
            ++j;
        }
        i = j < n ? j + 1 : n; // unterminated tag swallows the remainder

        if (name == "script" || name == "style") {
            if (closing)
                suppress_depth = suppress_depth > 0 ? suppress_depth - 1 : 0;
            else if (!self_closing)
                ++suppress_depth;
        } else if (suppress_depth > 0) {
            // markup inside script/style is data, not structure
            continue;
        } else if (name == "p" || name == "em" || name == "span") {
            saw_content_tag = true;
            if (closing)
                content_depth = content_depth > 0 ? content_depth - 1 : 0;
            else if (!self_closing)
                ++content_depth;
        }
        emit(' '); // block boundary
    }

    return html_detail::collapse_whitespace(saw_content_tag ? region_text : all_text);
}

/// Builds a Document from a fetched page. The date is the fetch date
/// (YYYY-MM-DD); title and label come from the caller's sidecar data since
/// page markup does not reliably carry them.
inline Document page_to_document(const RawPage& raw, const std::string& title,
                                 const std::string& label) {
    Document doc;
    doc.content = clean_html(raw.html);
    if (doc.content.empty())
        throw InputError("page " + raw.url + " has no article text after cleaning");
    doc.url = raw.url;
    doc.title = title;
    doc.label = label;
    const std::time_t t = std::chrono::system_clock::to_time_t(raw.fetched_at);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[16];
    std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
    doc.date = buf;
    return doc;
}

}  // namespace sentisearch
