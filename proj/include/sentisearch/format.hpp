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

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sentisearch/evaluation.hpp"

namespace sentisearch {

/// Left-aligned text table with a separator row under the header.
inline std::string text_table(const std::vector<std::string>& headers,
                              const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) widths[c] = headers[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < widths.size(); ++c) {
            const std::string& cell = c < cells.size() ? cells[c] : std::string{};
            out << std::left << std::setw(static_cast<int>(widths[c])) << cell;
            out << (c + 1 < widths.size() ? "  " : "");
        }
        out << '\n';
    };
    emit_row(headers);
    std::vector<std::string> rule;
    for (const auto w : widths) rule.push_back(std::string(w, '-'));
    emit_row(rule);
    for (const auto& row : rows) emit_row(row);
    return out.str();
}

inline std::string fixed(double value, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

/// Gold rows by predicted columns.
inline std::string render_confusion(const ConfusionMatrix& m) {
    std::vector<std::string> headers = {"gold \\ pred"};
    for (const auto& c : m.classes) headers.push_back(c);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.classes.size(); ++i) {
        std::vector<std::string> row = {m.classes[i]};
        for (std::size_t j = 0; j < m.classes.size(); ++j)
            row.push_back(std::to_string(m.counts[i][j]));
        rows.push_back(std::move(row));
    }
    return text_table(headers, rows);
}

inline nlohmann::ordered_json report_to_json(const EvalReport& r, bool with_timing = true) {
    nlohmann::ordered_json obj;
    obj["model"] = r.model;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : r.per_class) {
        nlohmann::ordered_json cj;
        cj["label"] = c.label;
        cj["precision"] = c.precision;
        cj["recall"] = c.recall;
        cj["f1"] = c.f1;
        if (c.degenerate) cj["degenerate"] = true;
        classes.push_back(std::move(cj));
    }
    obj["per_class"] = std::move(classes);
    obj["macro_precision"] = r.macro_precision;
    obj["macro_recall"] = r.macro_recall;
    obj["macro_f1"] = r.macro_f1;
    obj["accuracy"] = r.accuracy;
    obj["misclassification"] = r.misclassification;
    obj["coverage"] = r.coverage;
    if (with_timing) obj["seconds"] = r.seconds;
    return obj;
}

inline nlohmann::ordered_json matrix_to_json(const ConfusionMatrix& m) {
    nlohmann::ordered_json obj;
    obj["classes"] = m.classes;
    obj["counts"] = m.counts;
    return obj;
}

}  // namespace sentisearch
