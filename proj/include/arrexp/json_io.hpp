#pragma once

// Arrangement file format: {"lines": [[a, b], ...], "mults": [m, ...]} with
// integer entries. "mults" may be omitted for a simple arrangement (all
// multiplicities 1), which is what sweep skeletons use.

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrexp/core_model.hpp"
#include "arrexp/errors.hpp"

namespace arrexp {

inline Multiarrangement parse_arrangement_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
        throw InvalidConfig("expected an object with a \"lines\" array");

    std::vector<std::pair<Int, Int>> raw;
    for (const auto& l : j["lines"]) {
        if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() ||
            !l[1].is_number_integer())
            throw InvalidConfig("each line must be an integer pair [a, b]");
        raw.emplace_back(Int(l[0].get<long long>()), Int(l[1].get<long long>()));
    }

    std::vector<long long> mults(raw.size(), 1);
    if (j.contains("mults")) {
        if (!j["mults"].is_array() || j["mults"].size() != raw.size())
            throw InvalidConfig("\"mults\" must match \"lines\" in length");
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (!j["mults"][i].is_number_integer())
                throw InvalidConfig("multiplicities must be integers");
            mults[i] = j["mults"][i].get<long long>();
        }
    }
    return normalize_arrangement(raw, mults);
}

inline Multiarrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_arrangement_json(buf.str());
}

inline std::string arrangement_to_json(const Multiarrangement& A) {
    nlohmann::json j;
    j["lines"] = nlohmann::json::array();
    for (const LineForm& f : A.lines)
        j["lines"].push_back({f.a.convert_to<long long>(), f.b.convert_to<long long>()});
    j["mults"] = A.mults;
    return j.dump();
}

}  // namespace arrexp
