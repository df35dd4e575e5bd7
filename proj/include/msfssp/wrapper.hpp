#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ms_kernel.hpp"
#include "std_ca.hpp"

namespace msfssp {

// One multi-speed cell simulating `p` cells of a standard CA.
struct HostState {
    Period p = 1;
    Time tau = 0;       // phase within the cycle at the next activation
    Word x;             // collected v-states to the left, nearest last
    Word y;             // own v-cells
    Word z;             // collected v-states to the right, nearest first
    bool fired = false;
    bool started = false;  // false until the first activation at time 0

    friend bool operator==(const HostState&, const HostState&) = default;
};

class CollectShortfall : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct WrapperConfig {
    std::vector<HostState> hosts;
    Time clock = 0;
    std::uint64_t k = 0;  // total number of v-cells
};

inline Word vchain(std::span<const HostState> hosts) {
    Word out;
    for (const auto& h : hosts) out.insert(out.end(), h.y.begin(), h.y.end());
    return out;
}

inline WrapperConfig init_wrapper(const PeriodAssignment& a) {
    WrapperConfig w;
    for (std::size_t i = 0; i < a.size(); ++i) {
        HostState h;
        h.p = a[i];
        h.y.assign(a[i], Symbol::quiescent);
        if (i == 0) h.y.front() = Symbol::general;
        w.hosts.push_back(std::move(h));
        w.k += a[i];
    }
    return w;
}

// Observer for the collection lengths at each activation. `index` is the
// 1-based activation count inside the current cycle; the activation at the
// common update closing the cycle has index t_c / p and is `final`.
struct CollectObservation {
    std::size_t host;
    Time index;
    std::size_t x_len, z_len;
    bool final;
};

// Transition of an active host. A cycle runs from one common update to the
// next: in between, hosts only widen their view of the neighboring v-cells;
// at the common update closing the cycle every host advances its own v-cells
// by t_c steps and checks for F.
template <class Observer>
HostState host_transition(const HostState* left, const HostState& self, const HostState* right, const RuleTable& rule,
                          Period t_c, Observer&& observe) {
    if (self.fired) return self;
    HostState n = self;
    const auto cap = static_cast<std::size_t>(t_c);

    Word lw = left ? left->x : Word(cap, Symbol::border);
    if (left) lw.insert(lw.end(), left->y.begin(), left->y.end());
    if (lw.size() > cap) lw.erase(lw.begin(), lw.end() - static_cast<std::ptrdiff_t>(cap));
    Word rw = right ? right->y : Word(cap, Symbol::border);
    if (right) rw.insert(rw.end(), right->z.begin(), right->z.end());
    if (rw.size() > cap) rw.resize(cap);
    n.x = std::move(lw);
    n.z = std::move(rw);

    const bool common = self.tau == 0;
    n.tau = (self.tau + self.p) % t_c;
    if (self.started) observe(common ? t_c / self.p : self.tau / self.p, n.x.size(), n.z.size(), common);
    n.started = true;
    if (!common) return n;

    if (self.started) {
        if (n.x.size() != cap || n.z.size() != cap)
            throw CollectShortfall("context " + std::to_string(n.x.size()) + "/" + std::to_string(n.z.size()) +
                                   " shorter than cycle " + std::to_string(t_c));
        n.y = cone_advance(rule, n.x, n.y, n.z, t_c).core;
    }
    n.x.clear();
    n.z.clear();
    if (all_fire(n.y)) n.fired = true;
    return n;
}

inline HostState host_transition(const HostState* left, const HostState& self, const HostState* right,
                                 const RuleTable& rule, Period t_c) {
    return host_transition(left, self, right, rule, t_c, [](Time, std::size_t, std::size_t, bool) {});
}

inline Time predicted_fire_time(std::uint64_t k, Time t_c, const BaselineSolver& solver) {
    const Time T = solver.fire_time(static_cast<std::size_t>(k));
    return t_c * ((T + t_c - 1) / t_c) + 1;
}

inline Time predicted_fire_time(const PeriodAssignment& a, const BaselineSolver& solver) {
    return predicted_fire_time(a.total(), a.cycle(), solver);
}

struct CycleRecord {
    Time time;                        // the common update closing the cycle
    std::vector<std::size_t> x_len;   // per host, at that activation
    std::vector<std::size_t> z_len;
};

struct WrapperOptions {
    std::optional<Time> horizon;      // default 4k + 4 t_c
    bool record_cycles = false;
    bool record_snapshots = false;    // v-chain right after each common update
    bool record_hosts = false;        // every configuration, for tracing
};

struct SyncReport {
    std::optional<Time> fire_time;
    Time predicted = 0;
    std::uint64_t k = 0;
    Time t_c = 0;
    Time bound = 0;                   // 2k + t_c
    Time horizon = 0;
    std::optional<Time> first_partial_fire;
    bool collect_ok = true;           // inductive collection bound held at every activation
    std::uint64_t collect_checks = 0;
    std::string failure;              // empty on success
    std::vector<CycleRecord> cycles;
    std::vector<Word> snapshots;      // snapshots[j] = v-chain at cycle j
    std::vector<std::vector<HostState>> configs;

    bool early_fire() const noexcept { return first_partial_fire.has_value(); }
    bool simultaneous() const noexcept { return fire_time.has_value() && !early_fire(); }
    bool timed_out() const noexcept { return !fire_time && failure == "horizon"; }
};

inline SyncReport run_msfssp(const PeriodAssignment& a, const BaselineSolver& solver, const WrapperOptions& opt = {}) {
    SyncReport rep;
    const Time t_c = a.cycle();
    WrapperConfig w = init_wrapper(a);
    rep.k = w.k;
    rep.t_c = t_c;
    rep.bound = 2 * w.k + t_c;
    rep.predicted = predicted_fire_time(a, solver);
    rep.horizon = opt.horizon.value_or(4 * w.k + 4 * t_c);

    const std::size_t n = a.size();
    std::vector<HostState>* current = &w.hosts;
    CycleRecord pending;
    auto observe_for = [&](std::size_t host) {
        return [&, host](Time index, std::size_t xl, std::size_t zl, bool final) {
            ++rep.collect_checks;
            const std::size_t need = static_cast<std::size_t>(std::min(index * a[host], t_c));
            if (xl < need || zl < need || (final && (xl != t_c || zl != t_c))) rep.collect_ok = false;
            if (final && opt.record_cycles) {
                pending.x_len[host] = xl;
                pending.z_len[host] = zl;
            }
        };
    };
    auto update = [&](const HostState* l, const HostState& self, const HostState* r) {
        const auto idx = static_cast<std::size_t>(&self - current->data());
        return host_transition(l, self, r, solver.rule, t_c, observe_for(idx));
    };

    if (opt.record_hosts) rep.configs.push_back(w.hosts);
    try {
        for (Time t = 0; t < rep.horizon; ++t) {
            const bool common = t % t_c == 0;
            if (common && opt.record_cycles) pending = CycleRecord{t, std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
            auto next = ms_step<HostState>(update, std::span<const HostState>(w.hosts), a, t);
            w.hosts = std::move(next);
            w.clock = t + 1;
            if (opt.record_hosts) rep.configs.push_back(w.hosts);
            if (common && t > 0 && opt.record_cycles) rep.cycles.push_back(pending);
            if (common && opt.record_snapshots) rep.snapshots.push_back(vchain(w.hosts));

            const auto fired = std::count_if(w.hosts.begin(), w.hosts.end(), [](const auto& h) { return h.fired; });
            if (fired == static_cast<std::ptrdiff_t>(n)) {
                rep.fire_time = t + 1;
                return rep;
            }
            if (fired > 0 && !rep.first_partial_fire) rep.first_partial_fire = t + 1;
        }
        rep.failure = "horizon";
    } catch (const CollectShortfall& e) {
        rep.collect_ok = false;
        rep.failure = e.what();
    }
    return rep;
}

}  // namespace msfssp
