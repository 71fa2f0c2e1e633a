#pragma once

// JSON document format for monodromy representations.
//
// {
//   "field": {"cyclotomic_order": 3},
//   "coefficients": "field" | "integers",
//   "fiber_rank": 4,
//   "generators": [{"label": "b1", "matrix": [["1", "z", ...], ...]}, ...],
//   "distinguished": "0",
//   "metadata": {"n": 3, "h_good": true, "b_n_F": 4, "euler_MX": -2}
// }
//
// Matrix entries are strings in the scalar entry grammar.  Serialization is
// canonical: fixed key order, entries re-rendered in canonical form, so
// load/save round-trips to an identical document.

#include <optional>
#include <string>

#include <json.hpp>

#include "coinvariants.hpp"
#include "monodromy.hpp"
#include "parse.hpp"
#include "render.hpp"

namespace alexmod {

using json = nlohmann::ordered_json;

struct RepDocument {
    unsigned long cyclotomic_order = 1;
    CoeffMode mode = CoeffMode::field;
    MonodromyRep rep;
};

namespace detail {

inline const json& require_key(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string(where) + ": missing key \"" + key + "\"", 0);
    return j.at(key);
}

inline unsigned long to_count(const json& j, const char* what) {
    if (!j.is_number_unsigned() || j.get<unsigned long long>() > 1000000000ull)
        throw parse_error(std::string(what) + " must be a small nonnegative integer", 0);
    return static_cast<unsigned long>(j.get<unsigned long long>());
}

} // namespace detail

inline RepDocument rep_document_from_json(const json& j) {
    RepDocument doc;
    doc.cyclotomic_order =
        detail::to_count(detail::require_key(detail::require_key(j, "field", "document"),
                                             "cyclotomic_order", "field"),
                         "cyclotomic_order");
    if (doc.cyclotomic_order == 0) throw parse_error("cyclotomic_order must be positive", 0);

    const json& coeff = detail::require_key(j, "coefficients", "document");
    if (coeff == "field") {
        doc.mode = CoeffMode::field;
    } else if (coeff == "integers") {
        doc.mode = CoeffMode::integers;
    } else {
        throw parse_error("coefficients must be \"field\" or \"integers\"", 0);
    }

    MonodromyRep& rep = doc.rep;
    rep.fiber_rank = detail::to_count(detail::require_key(j, "fiber_rank", "document"),
                                      "fiber_rank");

    const json& gens = detail::require_key(j, "generators", "document");
    if (!gens.is_array() || gens.empty())
        throw parse_error("generators must be a nonempty array", 0);
    rep.g = gens.size();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const std::string where = "generators[" + std::to_string(gi) + "]";
        const json& label = detail::require_key(gens[gi], "label", where.c_str());
        if (!label.is_string()) throw parse_error(where + ": label must be a string", 0);
        rep.labels.push_back(label.get<std::string>());
        const json& rows = detail::require_key(gens[gi], "matrix", where.c_str());
        if (!rows.is_array() || rows.size() != rep.fiber_rank)
            throw parse_error(where + ": matrix must have fiber_rank rows", 0);
        FMatrix m(rep.fiber_rank, rep.fiber_rank);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].is_array() || rows[r].size() != rep.fiber_rank)
                throw parse_error(where + ": matrix row " + std::to_string(r) +
                                      " must have fiber_rank entries",
                                  0);
            for (std::size_t c = 0; c < rep.fiber_rank; ++c) {
                const json& cell = rows[r][c];
                if (!cell.is_string())
                    throw parse_error(where + ": entries must be entry-grammar strings", 0);
                try {
                    m.at(r, c) = parse_entry(cell.get<std::string>(), doc.cyclotomic_order);
                } catch (const parse_error& e) {
                    throw parse_error(where + " (" + std::to_string(r) + "," +
                                          std::to_string(c) + "): " + e.what(),
                                      e.position);
                }
            }
        }
        rep.matrices.push_back(std::move(m));
    }

    const json& dist = detail::require_key(j, "distinguished", "document");
    if (!dist.is_string()) throw parse_error("distinguished must be a label string", 0);
    bool found = false;
    for (std::size_t i = 0; i < rep.labels.size(); ++i) {
        if (rep.labels[i] == dist.get<std::string>()) {
            rep.distinguished = i;
            found = true;
            break;
        }
    }
    if (!found) throw parse_error("distinguished does not match any generator label", 0);

    const json& meta = detail::require_key(j, "metadata", "document");
    rep.n = detail::to_count(detail::require_key(meta, "n", "metadata"), "n");
    if (rep.n < 1) throw parse_error("metadata.n must be at least 1", 0);
    const json& hg = detail::require_key(meta, "h_good", "metadata");
    if (!hg.is_boolean()) throw parse_error("metadata.h_good must be a boolean", 0);
    rep.h_good = hg.get<bool>();
    if (meta.contains("b_n_F"))
        rep.b_n_F = detail::to_count(meta.at("b_n_F"), "metadata.b_n_F");
    if (meta.contains("euler_MX")) {
        const json& e = meta.at("euler_MX");
        if (!e.is_number_integer())
            throw parse_error("metadata.euler_MX must be an integer", 0);
        rep.euler_mx = e.get<long>();
    }

    try {
        validate_rep(rep);
    } catch (const math_error& e) {
        throw parse_error(std::string("invalid representation: ") + e.what(), 0);
    }
    return doc;
}

inline RepDocument load_rep_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), 0);
    }
    return rep_document_from_json(j);
}

inline json rep_document_to_json(const RepDocument& doc) {
    json j;
    j["field"] = {{"cyclotomic_order", doc.cyclotomic_order}};
    j["coefficients"] = doc.mode == CoeffMode::field ? "field" : "integers";
    j["fiber_rank"] = doc.rep.fiber_rank;
    json gens = json::array();
    for (std::size_t gi = 0; gi < doc.rep.g; ++gi) {
        json rows = json::array();
        for (std::size_t r = 0; r < doc.rep.fiber_rank; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < doc.rep.fiber_rank; ++c)
                row.push_back(render_field_element(doc.rep.matrices[gi].at(r, c)));
            rows.push_back(std::move(row));
        }
        gens.push_back({{"label", doc.rep.labels[gi]}, {"matrix", std::move(rows)}});
    }
    j["generators"] = std::move(gens);
    j["distinguished"] = doc.rep.labels[doc.rep.distinguished];
    json meta;
    meta["n"] = doc.rep.n;
    meta["h_good"] = doc.rep.h_good;
    if (doc.rep.b_n_F) meta["b_n_F"] = *doc.rep.b_n_F;
    if (doc.rep.euler_mx) meta["euler_MX"] = *doc.rep.euler_mx;
    j["metadata"] = std::move(meta);
    return j;
}

inline std::string save_rep_document(const RepDocument& doc) {
    return rep_document_to_json(doc).dump(2) + "\n";
}

} // namespace alexmod
