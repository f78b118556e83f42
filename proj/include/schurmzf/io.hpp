#pragma once

#include <fstream>
#include <string>

#include "json.hpp"
#include "schurmzf/partition.hpp"
#include "schurmzf/tableau.hpp"

namespace schurmzf {

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

/// {"shape":[3,2,1]}
inline Partition parse_shape_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("shape") || !j["shape"].is_array())
        throw input_error("shape JSON must look like {\"shape\":[3,2,1]}");
    std::vector<int> parts;
    for (const auto& p : j["shape"]) {
        if (!p.is_number_integer()) throw input_error("shape parts must be integers");
        parts.push_back(p.get<int>());
    }
    return Partition(parts);
}

/// {"shape":[2,1], "symbols":[["a","b"],["c"]]}
inline VarTableau parse_tableau_json(const nlohmann::json& j) {
    Partition shape = parse_shape_json(j);
    if (!j.contains("symbols") || !j["symbols"].is_array())
        throw input_error("tableau JSON needs a \"symbols\" array of rows");
    std::vector<SymbolWord> rows;
    for (const auto& row : j["symbols"]) {
        SymbolWord symbols;
        for (const auto& sym : row) {
            if (!sym.is_string()) throw input_error("tableau symbols must be strings");
            symbols.push_back(sym.get<std::string>());
        }
        rows.push_back(std::move(symbols));
    }
    return VarTableau(shape, rows);
}

/// {"s11": 2, "y1": {"re": 1.5, "im": 0.0}}; integers mean exact mode,
/// objects mean float mode, and mixing the two is an input error.
inline Assignment parse_assignment_json(const nlohmann::json& j) {
    if (!j.is_object()) throw input_error("assignment JSON must be an object");
    Assignment a;
    for (const auto& [key, value] : j.items()) {
        if (value.is_number_integer()) {
            std::int64_t v = value.get<std::int64_t>();
            if (v < 1) throw input_error("exact exponents must be positive integers");
            a[key] = Exponent::make_exact(v);
        } else if (value.is_object() && value.contains("re")) {
            double re = value["re"].get<double>();
            double im = value.value("im", 0.0);
            a[key] = Exponent::make_approx({re, im});
        } else {
            throw input_error("assignment value for '" + key +
                              "' must be an integer or {\"re\":..,\"im\":..}");
        }
    }
    assignment_is_exact(a);  // rejects mixed kinds
    return a;
}

inline nlohmann::ordered_json push_outcome_json(const Partition& shape,
                                                const std::vector<SymbolWord>& rows,
                                                const std::vector<int>& positions) {
    nlohmann::ordered_json j;
    j["shape"] = shape.parts();
    j["rows"] = rows;
    j["placement"] = positions;
    return j;
}

}  // namespace schurmzf
