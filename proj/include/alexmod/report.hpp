#pragma once

// Structured command reports with matching text and JSON renderings.  Every
// result is stored once, as a (key, text, value) triple; both output formats
// read from the same triple so they cannot drift apart.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "numeric.hpp"

namespace alexmod {

struct ReportItem {
    std::string key;
    std::string text;                   // canonical human-readable form
    nlohmann::ordered_json value;       // structured form
};

struct Report {
    std::string command;
    std::string inputs_digest;
    std::vector<ReportItem> results;
    std::vector<std::string> warnings;
    std::vector<std::string> hypotheses;

    void add(std::string key, std::string text, nlohmann::ordered_json value) {
        results.push_back({std::move(key), std::move(text), std::move(value)});
    }
    void add(std::string key, const std::string& text) {
        results.push_back({std::move(key), text, text});
    }
};

// FNV-1a, for reproducible input digests in reports.
inline std::string digest64(const std::string& data) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

inline std::string report_text(const Report& r) {
    std::string out = "command: " + r.command + "\n";
    if (!r.inputs_digest.empty()) out += "input: " + r.inputs_digest + "\n";
    for (const ReportItem& item : r.results) out += item.key + ": " + item.text + "\n";
    for (const std::string& h : r.hypotheses) out += "hypothesis: " + h + "\n";
    for (const std::string& w : r.warnings) out += "warning: " + w + "\n";
    return out;
}

inline nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    if (!r.inputs_digest.empty()) j["input"] = r.inputs_digest;
    nlohmann::ordered_json results;
    for (const ReportItem& item : r.results) {
        results[item.key] = {{"text", item.text}, {"value", item.value}};
    }
    j["results"] = std::move(results);
    j["hypotheses"] = r.hypotheses;
    j["warnings"] = r.warnings;
    return j;
}

} // namespace alexmod
