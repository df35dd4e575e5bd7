#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rule_table.hpp"

namespace msfssp {

// Cells 1..n of a line; everything outside is implicitly border.
using LineConfig = std::vector<Symbol>;

inline LineConfig make_instance(std::size_t n) {
    if (n == 0) throw std::invalid_argument("instance size must be positive");
    LineConfig c(n, Symbol::quiescent);
    c.front() = Symbol::general;
    return c;
}

inline LineConfig apply_rule(const RuleTable& rule, std::span<const Symbol> config) {
    const auto& ab = rule.alphabet();
    for (Symbol s : config)
        if (!ab.contains(s))
            throw AlphabetMismatch("configuration symbol id " + std::to_string(index_of(s)) +
                                   " not in alphabet of size " + std::to_string(ab.size()));
    const std::size_t n = config.size();
    LineConfig next(n);
    for (std::size_t i = 0; i < n; ++i) {
        Symbol l = i == 0 ? Symbol::border : config[i - 1];
        Symbol r = i + 1 == n ? Symbol::border : config[i + 1];
        next[i] = rule(l, config[i], r);
    }
    return next;
}

inline bool all_fire(std::span<const Symbol> c) {
    return !c.empty() && std::all_of(c.begin(), c.end(), [](Symbol s) { return s == Symbol::fire; });
}

inline bool any_fire(std::span<const Symbol> c) {
    return std::any_of(c.begin(), c.end(), [](Symbol s) { return s == Symbol::fire; });
}

// Configurations at steps 0..steps of the synchronous run from `init`.
inline std::vector<LineConfig> run_steps(const RuleTable& rule, LineConfig init, std::uint64_t steps) {
    std::vector<LineConfig> out;
    out.reserve(steps + 1);
    out.push_back(std::move(init));
    for (std::uint64_t t = 0; t < steps; ++t) out.push_back(apply_rule(rule, out.back()));
    return out;
}

struct BaselineSolver {
    std::string name;
    RuleTable rule;
    std::function<std::uint64_t(std::size_t)> fire_time;  // declared T(n)
    bool time_optimal = false;
};

struct FireReport {
    std::optional<std::uint64_t> fire_step;        // first step with every cell in F
    std::optional<std::uint64_t> first_partial_fire;  // first step with some but not all cells in F
    bool timed_out = false;

    bool early_fire() const noexcept { return first_partial_fire.has_value(); }
    bool simultaneous() const noexcept { return fire_step.has_value() && !early_fire(); }
};

inline FireReport run_until_fire(const RuleTable& rule, std::size_t n, std::uint64_t max_steps) {
    FireReport rep;
    LineConfig c = make_instance(n);
    for (std::uint64_t t = 0;; ++t) {
        if (all_fire(c)) {
            rep.fire_step = t;
            return rep;
        }
        if (!rep.first_partial_fire && any_fire(c)) rep.first_partial_fire = t;
        if (t == max_steps) break;
        c = apply_rule(rule, c);
    }
    rep.timed_out = true;
    return rep;
}

inline FireReport run_until_fire(const BaselineSolver& solver, std::size_t n, std::uint64_t max_steps) {
    return run_until_fire(solver.rule, n, max_steps);
}

class ConeTooNarrow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ConeResult {
    Word core;
    std::optional<std::uint64_t> fire_step;  // first step at which a core cell was F
};

// Advance `core` by `steps` synchronous steps given enough context on both
// sides. The valid region shrinks by one cell per side per step; only the
// core is returned. Once F shows up in the core, the core stops changing.
inline ConeResult cone_advance(const RuleTable& rule, std::span<const Symbol> left_ctx,
                               std::span<const Symbol> core, std::span<const Symbol> right_ctx,
                               std::uint64_t steps) {
    if (left_ctx.size() < steps || right_ctx.size() < steps)
        throw ConeTooNarrow("cone advance of " + std::to_string(steps) + " steps needs that much context, got " +
                            std::to_string(left_ctx.size()) + "/" + std::to_string(right_ctx.size()));
    ConeResult res;
    if (any_fire(core)) {
        res.core.assign(core.begin(), core.end());
        res.fire_step = 0;
        return res;
    }
    const auto s = static_cast<std::size_t>(steps);
    Word w;
    w.reserve(core.size() + 2 * s);
    w.insert(w.end(), left_ctx.end() - static_cast<std::ptrdiff_t>(s), left_ctx.end());
    w.insert(w.end(), core.begin(), core.end());
    w.insert(w.end(), right_ctx.begin(), right_ctx.begin() + static_cast<std::ptrdiff_t>(s));

    Word next;
    for (std::size_t step = 1; step <= s; ++step) {
        next.resize(w.size() - 2);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = rule(w[i], w[i + 1], w[i + 2]);
        w.swap(next);
        const std::size_t off = s - step;
        auto first = w.begin() + static_cast<std::ptrdiff_t>(off);
        auto last = first + static_cast<std::ptrdiff_t>(core.size());
        if (std::any_of(first, last, [](Symbol x) { return x == Symbol::fire; })) {
            res.core.assign(first, last);
            res.fire_step = step;
            return res;
        }
    }
    res.core = std::move(w);
    return res;
}

// Table constraints plus a dynamic check of the declared firing times for
// small sizes.
inline std::vector<RuleViolation> validate_rule(const BaselineSolver& solver, std::size_t check_up_to = 12) {
    auto out = validate_table(solver.rule);
    if (!out.empty() || !solver.fire_time) return out;
    for (std::size_t n = 1; n <= check_up_to; ++n) {
        const auto expected = solver.fire_time(n);
        auto rep = run_until_fire(solver.rule, n, expected);
        if (rep.early_fire())
            out.push_back({"early-fire", "n=" + std::to_string(n) + " partial F at step " +
                                             std::to_string(*rep.first_partial_fire)});
        else if (!rep.fire_step || *rep.fire_step != expected)
            out.push_back({"fire-time", "n=" + std::to_string(n) + " expected step " + std::to_string(expected)});
    }
    return out;
}

}  // namespace msfssp
