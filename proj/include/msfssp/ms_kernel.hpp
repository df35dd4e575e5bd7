#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "periods.hpp"

namespace msfssp {

inline bool is_active(Period p, Time t) noexcept { return t % p == 0; }

inline std::vector<std::size_t> active_set(const PeriodAssignment& a, Time t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (is_active(a[i], t)) out.push_back(i);
    return out;
}

// One step of the multi-speed schedule. `update(left, self, right)` receives
// null for a border neighbor; inactive cells are copied unchanged.
template <class State, class Update>
std::vector<State> ms_step(const Update& update, std::span<const State> config, const PeriodAssignment& a, Time t) {
    if (config.size() != a.size()) throw std::invalid_argument("configuration and assignment differ in length");
    const std::size_t n = config.size();
    std::vector<State> next;
    next.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_active(a[i], t)) {
            next.push_back(config[i]);
            continue;
        }
        const State* l = i == 0 ? nullptr : &config[i - 1];
        const State* r = i + 1 == n ? nullptr : &config[i + 1];
        next.push_back(update(l, config[i], r));
    }
    return next;
}

enum class Recording { full, streaming };

template <class State>
struct MsTrajectory {
    std::vector<std::vector<State>> configs;          // c_0.. (only the last one when streaming)
    std::vector<std::vector<std::size_t>> active;   // A_0.. (full recording only)
    Time steps = 0;                                 // index of the last configuration
    bool truncated = false;                         // horizon reached before the stop predicate

    const std::vector<State>& last() const { return configs.back(); }
};

// Runs until `stop(config, t)` holds or `horizon` steps have been taken.
template <class State, class Update, class Stop>
MsTrajectory<State> run_trajectory(const Update& update, std::vector<State> init, const PeriodAssignment& a,
                                   Time horizon, const Stop& stop, Recording mode = Recording::full) {
    MsTrajectory<State> tr;
    tr.configs.push_back(std::move(init));
    for (Time t = 0;; ++t) {
        if (stop(tr.configs.back(), t)) return tr;
        if (t == horizon) break;
        auto next = ms_step<State>(update, std::span<const State>(tr.configs.back()), a, t);
        if (mode == Recording::full) {
            tr.active.push_back(active_set(a, t));
            tr.configs.push_back(std::move(next));
        } else {
            tr.configs.back() = std::move(next);
        }
        tr.steps = t + 1;
    }
    tr.truncated = true;
    return tr;
}

template <class State, class Update>
MsTrajectory<State> run_trajectory(const Update& update, std::vector<State> init, const PeriodAssignment& a,
                                   Time horizon, Recording mode = Recording::full) {
    auto tr = run_trajectory(update, std::move(init), a, horizon,
                             [&](const std::vector<State>&, Time t) { return t == horizon; }, mode);
    tr.truncated = false;
    return tr;
}

}  // namespace msfssp
