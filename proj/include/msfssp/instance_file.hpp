#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "periods.hpp"

namespace msfssp {

class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    std::optional<std::string> name;
    PeriodAssignment assignment;
    bool explicit_set = false;                 // period_set given in the file
    std::optional<Theorem1Params> provenance;  // set for generated family members
};

namespace detail {

inline std::vector<Period> periods_field(const nlohmann::json& doc, const char* field, bool allow_empty = false) {
    if (!doc.contains(field)) throw InstanceError(std::string("missing field '") + field + "'");
    const auto& v = doc.at(field);
    if (!v.is_array() || (!allow_empty && v.empty()))
        throw InstanceError(std::string("field '") + field + "' must be a non-empty array");
    std::vector<Period> out;
    for (const auto& e : v) {
        if (!e.is_number_unsigned() || e.get<Period>() == 0)
            throw InstanceError(std::string("field '") + field + "' must hold positive integers");
        out.push_back(e.get<Period>());
    }
    return out;
}

inline Period number_field(const nlohmann::json& doc, const char* field) {
    if (!doc.contains(field) || !doc.at(field).is_number_unsigned())
        throw InstanceError(std::string("provenance field '") + field + "' must be a non-negative integer");
    return doc.at(field).get<Period>();
}

inline std::string arrangement_string(const std::vector<bool>& arr) {
    std::string s;
    for (bool b : arr) s += b ? 'B' : 'A';
    return s;
}

}  // namespace detail

inline nlohmann::json provenance_to_json(const Theorem1Params& t) {
    return {{"family", "lower-bound"},
            {"period_set", t.set.members()},
            {"odd", t.odd},
            {"chosen", t.chosen},
            {"q", t.q},
            {"block_lcm", t.block_lcm},
            {"first_kind", t.first_kind},
            {"second_kind", t.second_kind},
            {"h", t.h},
            {"m", t.m},
            {"head", t.head},
            {"arrangement", detail::arrangement_string(t.arrangement)}};
}

inline Theorem1Params provenance_from_json(const nlohmann::json& p) {
    using detail::number_field;
    if (!p.is_object()) throw InstanceError("field 'provenance' must be an object");
    Theorem1Params t;
    try {
        t.set = PeriodSet(detail::periods_field(p, "period_set"));
    } catch (const std::invalid_argument& e) {
        throw InstanceError(std::string("provenance field 'period_set': ") + e.what());
    }
    t.odd = detail::periods_field(p, "odd", true);
    t.chosen = detail::periods_field(p, "chosen");
    t.q = number_field(p, "q");
    t.block_lcm = number_field(p, "block_lcm");
    t.first_kind = number_field(p, "first_kind");
    t.second_kind = number_field(p, "second_kind");
    t.h = number_field(p, "h");
    t.m = number_field(p, "m");
    t.head = number_field(p, "head");
    if (!p.contains("arrangement") || !p.at("arrangement").is_string())
        throw InstanceError("provenance field 'arrangement' must be a string of A/B");
    for (char c : p.at("arrangement").get<std::string>()) {
        if (c != 'A' && c != 'B') throw InstanceError("provenance field 'arrangement' must be a string of A/B");
        t.arrangement.push_back(c == 'B');
    }
    for (Period q : {t.q, t.first_kind, t.second_kind, t.block_lcm, t.head})
        if (q == 0) throw InstanceError("provenance periods must be positive");
    try {
        check_params(t);
    } catch (const ConstructionError& e) {
        throw InstanceError(std::string("provenance: ") + e.what());
    }
    return t;
}

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json doc;
    if (inst.name) doc["name"] = *inst.name;
    const auto ps = inst.assignment.periods();
    doc["periods"] = std::vector<Period>(ps.begin(), ps.end());
    if (inst.explicit_set) doc["period_set"] = inst.assignment.period_set().members();
    if (inst.provenance) doc["provenance"] = provenance_to_json(*inst.provenance);
    return doc;
}

inline Instance instance_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InstanceError("instance document must be an object");
    Instance inst{std::nullopt, PeriodAssignment{1}, false, std::nullopt};
    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) throw InstanceError("field 'name' must be a string");
        inst.name = doc.at("name").get<std::string>();
    }
    auto periods = detail::periods_field(doc, "periods");
    std::optional<PeriodSet> set;
    if (doc.contains("period_set")) {
        set = PeriodSet(detail::periods_field(doc, "period_set"));
        inst.explicit_set = true;
    }
    try {
        inst.assignment = PeriodAssignment(std::move(periods), std::move(set));
    } catch (const std::invalid_argument& e) {
        throw InstanceError(std::string("field 'periods': ") + e.what());
    }
    if (doc.contains("provenance")) inst.provenance = provenance_from_json(doc.at("provenance"));
    return inst;
}

inline Instance parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InstanceError(std::string("malformed instance document: ") + e.what());
    }
    return instance_from_json(doc);
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError("cannot open instance file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

inline std::string dump_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

}  // namespace msfssp
