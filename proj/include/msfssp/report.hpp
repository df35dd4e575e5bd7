#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "instance_file.hpp"
#include "wrapper.hpp"

namespace msfssp {

inline std::string periods_string(const PeriodAssignment& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::to_string(a[i]);
    return s;
}

inline nlohmann::json sync_report_to_json(const SyncReport& r, bool with_cycles = false) {
    nlohmann::json doc{{"fire_time", r.fire_time ? nlohmann::json(*r.fire_time) : nlohmann::json(nullptr)},
                       {"predicted", r.predicted},
                       {"k", r.k},
                       {"t_c", r.t_c},
                       {"bound_2k_plus_tc", r.bound},
                       {"horizon", r.horizon},
                       {"simultaneous", r.simultaneous()},
                       {"early_fire", r.early_fire()},
                       {"exact", r.fire_time && *r.fire_time == r.predicted},
                       {"within_bound", r.fire_time && *r.fire_time <= r.bound},
                       {"collect_ok", r.collect_ok},
                       {"collect_checks", r.collect_checks}};
    if (!r.failure.empty()) doc["failure"] = r.failure;
    if (with_cycles) {
        auto cycles = nlohmann::json::array();
        for (const auto& c : r.cycles) cycles.push_back({{"time", c.time}, {"x_len", c.x_len}, {"z_len", c.z_len}});
        doc["cycles"] = cycles;
    }
    return doc;
}

// One line of a sweep: a single instance run through the whole battery.
struct SweepRecord {
    std::size_t index = 0;
    std::string instance;        // periods, space separated
    std::string arrangement;     // family members only
    std::uint64_t k = 0;
    Time t_c = 0;
    std::optional<Time> fire_time;
    Time predicted = 0;
    Time round_trip = 0;
    Time upper = 0;              // 2k + t_c
    Time mu = 0;
    std::optional<Time> closed_form;
    bool simultaneous = false;
    bool early_fire = false;
    bool exact = false;
    bool within_bound = false;
    bool above_lower = false;
    bool collect_ok = false;
    std::optional<bool> oracle_ok;
    bool upper_applies = true;   // the 2k + t_c bound is only claimed for a minimal-time baseline

    bool pass() const {
        return simultaneous && !early_fire && exact && (within_bound || !upper_applies) && above_lower && collect_ok &&
               oracle_ok.value_or(true);
    }
};

struct EvaluateOptions {
    bool check_oracle = true;
    std::optional<Time> horizon;
};

// Compares the wrapper's v-chain at each common update with the plain run of
// the baseline on I_k.
inline bool oracle_matches(const SyncReport& r, const BaselineSolver& solver) {
    if (r.snapshots.empty()) return false;
    LineConfig c = make_instance(static_cast<std::size_t>(r.k));
    for (std::size_t j = 0; j < r.snapshots.size(); ++j) {
        if (j > 0)
            for (Time s = 0; s < r.t_c; ++s) c = apply_rule(solver.rule, c);
        if (r.snapshots[j] != c) return false;
    }
    return true;
}

inline SweepRecord evaluate_instance(const PeriodAssignment& a, const BaselineSolver& solver,
                                     const EvaluateOptions& opt = {}) {
    WrapperOptions wo;
    wo.horizon = opt.horizon;
    wo.record_snapshots = opt.check_oracle;
    const SyncReport r = run_msfssp(a, solver, wo);

    SweepRecord s;
    s.instance = periods_string(a);
    s.k = r.k;
    s.t_c = r.t_c;
    s.fire_time = r.fire_time;
    s.predicted = r.predicted;
    s.round_trip = a.size() >= 2 ? round_trip(a).round_trip() : 0;
    s.upper = r.bound;
    s.mu = mu_reference(a);
    s.simultaneous = r.simultaneous();
    s.early_fire = r.early_fire();
    s.exact = r.fire_time && *r.fire_time == r.predicted;
    s.within_bound = r.fire_time && *r.fire_time <= r.bound;
    s.above_lower = r.fire_time && *r.fire_time >= s.round_trip;
    s.collect_ok = r.collect_ok;
    s.upper_applies = solver.time_optimal;
    if (opt.check_oracle) s.oracle_ok = r.fire_time && oracle_matches(r, solver);
    return s;
}

inline void write_sweep_table(std::ostream& out, const std::vector<SweepRecord>& recs) {
    auto opt = [](const std::optional<Time>& v) { return v ? std::to_string(*v) : std::string("-"); };
    auto flag = [](bool b) { return b ? "1" : "0"; };
    out << "index\tperiods\tarrangement\tk\tt_c\tfire_time\tpredicted\tround_trip\tclosed_form\tupper_2k_tc\tmu_"
           "reference\tsimultaneous\texact\twithin_bound\tabove_lower\tcollect_ok\toracle_ok\tpass\n";
    for (const auto& r : recs)
        out << r.index << '\t' << r.instance << '\t' << (r.arrangement.empty() ? "-" : r.arrangement) << '\t' << r.k
            << '\t' << r.t_c << '\t' << opt(r.fire_time) << '\t' << r.predicted << '\t' << r.round_trip << '\t'
            << opt(r.closed_form) << '\t' << r.upper << '\t' << r.mu << '\t' << flag(r.simultaneous) << '\t'
            << flag(r.exact) << '\t' << flag(r.within_bound) << '\t' << flag(r.above_lower) << '\t'
            << flag(r.collect_ok) << '\t' << (r.oracle_ok ? flag(*r.oracle_ok) : "-") << '\t' << flag(r.pass())
            << '\n';
}

inline nlohmann::json sweep_to_json(const std::vector<SweepRecord>& recs) {
    auto arr = nlohmann::json::array();
    for (const auto& r : recs) {
        nlohmann::json j{{"index", r.index},
                         {"periods", r.instance},
                         {"k", r.k},
                         {"t_c", r.t_c},
                         {"fire_time", r.fire_time ? nlohmann::json(*r.fire_time) : nlohmann::json(nullptr)},
                         {"predicted", r.predicted},
                         {"round_trip", r.round_trip},
                         {"upper_2k_tc", r.upper},
                         {"mu_reference", r.mu},
                         {"simultaneous", r.simultaneous},
                         {"early_fire", r.early_fire},
                         {"exact", r.exact},
                         {"within_bound", r.within_bound},
                         {"above_lower", r.above_lower},
                         {"collect_ok", r.collect_ok},
                         {"pass", r.pass()}};
        if (!r.arrangement.empty()) j["arrangement"] = r.arrangement;
        if (r.closed_form) j["closed_form"] = *r.closed_form;
        if (r.oracle_ok) j["oracle_ok"] = *r.oracle_ok;
        arr.push_back(std::move(j));
    }
    return {{"records", arr}};
}

}  // namespace msfssp
