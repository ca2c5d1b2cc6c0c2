#pragma once

// Stable JSON interchange for coloured systems. Documents are deterministic:
// canonical blocks, sorted, fixed key order. Loading never verifies; that is
// a separate, observable step.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fourcycle/design.hpp"

namespace fourcycle {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

inline std::string to_string(const BlockOrigin& o) {
    switch (o.kind) {
        case BlockOrigin::Kind::starter: return "starter:" + std::to_string(o.index);
        case BlockOrigin::Kind::subsystem: return "sigma:" + std::to_string(o.index);
        case BlockOrigin::Kind::family:
            return "family:" + std::to_string(o.index) + "," + std::to_string(o.second);
    }
    return "?";
}

inline BlockOrigin origin_from_string(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw parse_error("provenance tag '" + text + "' has no ':'");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    try {
        if (kind == "starter") return {BlockOrigin::Kind::starter, std::stoi(rest), 0};
        if (kind == "sigma") return {BlockOrigin::Kind::subsystem, std::stoi(rest), 0};
        if (kind == "family") {
            const auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw parse_error("family tag '" + text + "' needs two indices");
            return {BlockOrigin::Kind::family, std::stoi(rest.substr(0, comma)),
                    std::stoi(rest.substr(comma + 1))};
        }
    } catch (const std::logic_error&) {
        throw parse_error("provenance tag '" + text + "' has a non-numeric index");
    }
    throw parse_error("unknown provenance kind '" + kind + "'");
}

inline ConstructionCase case_from_string(const std::string& text) {
    if (text == "base") return ConstructionCase::base;
    if (text == "splus1") return ConstructionCase::splus1;
    if (text == "mid") return ConstructionCase::mid;
    if (text == "high") return ConstructionCase::high;
    throw parse_error("unknown construction_case '" + text + "'");
}

inline std::string serialize(const ColouredSystem& cs) {
    std::vector<Cycle4> canon;
    canon.reserve(cs.system.blocks.size());
    for (const Cycle4& blk : cs.system.blocks) canon.push_back(canonicalize(blk));

    std::vector<size_t> order(canon.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&canon](size_t i, size_t j) { return canon[i] < canon[j]; });

    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["params"] = {{"s", cs.params.s},
                     {"h", cs.params.h},
                     {"k", cs.params.k},
                     {"v", cs.params.v},
                     {"c", cs.colouring.num_colours},
                     {"q", cs.params.q},
                     {"r", cs.params.r}};
    doc["construction_case"] = to_string(cs.construction_case);
    auto blocks = nlohmann::ordered_json::array();
    auto colours = nlohmann::ordered_json::array();
    for (size_t i : order) {
        blocks.push_back({canon[i].a, canon[i].b, canon[i].c, canon[i].d});
        if (i < cs.colouring.colours.size()) colours.push_back(cs.colouring.colours[i]);
    }
    doc["blocks"] = std::move(blocks);
    doc["colours"] = std::move(colours);
    if (!cs.origins.empty()) {
        auto prov = nlohmann::ordered_json::array();
        for (size_t i : order)
            if (i < cs.origins.size()) prov.push_back(to_string(cs.origins[i]));
        doc["provenance"] = std::move(prov);
    }
    return doc.dump(2) + "\n";
}

inline ColouredSystem deserialize(const std::string& bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("not valid JSON: ") + e.what());
    }
    auto require = [&doc](const char* key) -> const nlohmann::json& {
        if (!doc.is_object() || !doc.contains(key))
            throw parse_error(std::string("missing key '") + key + "'");
        return doc.at(key);
    };
    auto as_int = [](const nlohmann::json& j, const std::string& where) -> int {
        if (!j.is_number_integer())
            throw parse_error(where + " must be an integer, got " + j.dump());
        return j.get<int>();
    };

    if (as_int(require("schema_version"), "schema_version") != kSchemaVersion)
        throw parse_error("unsupported schema_version " + require("schema_version").dump());

    const auto& jp = require("params");
    ColouredSystem cs;
    for (const char* key : {"s", "h", "k", "v", "c", "q", "r"})
        if (!jp.is_object() || !jp.contains(key))
            throw parse_error(std::string("params missing key '") + key + "'");
    cs.params.s = as_int(jp.at("s"), "params.s");
    cs.params.h = as_int(jp.at("h"), "params.h");
    cs.params.k = as_int(jp.at("k"), "params.k");
    cs.params.v = as_int(jp.at("v"), "params.v");
    cs.params.q = as_int(jp.at("q"), "params.q");
    cs.params.r = as_int(jp.at("r"), "params.r");
    cs.colouring.num_colours = as_int(jp.at("c"), "params.c");
    cs.params.blocks_total = static_cast<long long>(cs.params.k) * cs.params.v;
    if (cs.params.s < 1 || cs.params.v < 1 || cs.colouring.num_colours < 1)
        throw validation_error("params s, v, c must be positive");

    const auto& jcase = require("construction_case");
    if (!jcase.is_string()) throw parse_error("construction_case must be a string");
    cs.construction_case = case_from_string(jcase.get<std::string>());

    const auto& jb = require("blocks");
    if (!jb.is_array()) throw parse_error("blocks must be an array");
    cs.system.order = cs.params.v;
    cs.system.blocks.reserve(jb.size());
    for (size_t i = 0; i < jb.size(); ++i) {
        const auto& entry = jb[i];
        if (!entry.is_array() || entry.size() != 4)
            throw parse_error("block #" + std::to_string(i) + " must have exactly 4 entries");
        Cycle4 blk{as_int(entry[0], "block label"), as_int(entry[1], "block label"),
                   as_int(entry[2], "block label"), as_int(entry[3], "block label")};
        std::set<int> distinct;
        for (int x : blk.labels()) {
            if (x < 0 || x >= cs.params.v)
                throw validation_error("block #" + std::to_string(i) + " label " +
                                       std::to_string(x) + " outside 0.." +
                                       std::to_string(cs.params.v - 1));
            if (!distinct.insert(x).second)
                throw validation_error("block #" + std::to_string(i) + " repeats label " +
                                       std::to_string(x));
        }
        cs.system.blocks.push_back(blk);
    }

    const auto& jc = require("colours");
    if (!jc.is_array()) throw parse_error("colours must be an array");
    if (jc.size() != jb.size())
        throw validation_error("colours length " + std::to_string(jc.size()) +
                               " != blocks length " + std::to_string(jb.size()));
    cs.colouring.colours.reserve(jc.size());
    for (size_t i = 0; i < jc.size(); ++i) {
        const int colour = as_int(jc[i], "colour #" + std::to_string(i));
        if (colour < 1 || colour > cs.colouring.num_colours)
            throw validation_error("colour " + std::to_string(colour) + " at block #" +
                                   std::to_string(i) + " outside 1.." +
                                   std::to_string(cs.colouring.num_colours));
        cs.colouring.colours.push_back(colour);
    }

    if (doc.contains("provenance")) {
        const auto& jo = doc.at("provenance");
        if (!jo.is_array()) throw parse_error("provenance must be an array");
        if (jo.size() != jb.size())
            throw validation_error("provenance length " + std::to_string(jo.size()) +
                                   " != blocks length " + std::to_string(jb.size()));
        for (const auto& tag : jo) {
            if (!tag.is_string()) throw parse_error("provenance tags must be strings");
            cs.origins.push_back(origin_from_string(tag.get<std::string>()));
        }
    }
    return cs;
}

}  // namespace fourcycle
