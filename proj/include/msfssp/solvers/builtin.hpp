#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "halving.hpp"
#include "optimal.hpp"

namespace msfssp {

// Sizes explored when compiling the built-in designs into rule tables. Both
// designs stop producing new triples long before this (see the saturation
// tests).
inline constexpr std::size_t kExploreSize = 160;

inline std::uint64_t optimal_time(std::size_t n) { return n <= 1 ? 1 : 2 * std::uint64_t{n} - 2; }

// Firing time of the halving design: a segment of length L whose far wall is
// already a general splits after 3(L-1)/2 steps (odd L, one new general) or
// (3L-2)/2 steps (even L, two new generals) into halves of length (L+1)/2 or
// L/2; segments of length <= 2 are fully split.
inline std::uint64_t halving_time(std::size_t n) {
    if (n <= 2) return n;
    std::uint64_t t = 1;
    for (std::uint64_t len = n; len > 2;) {
        if (len % 2 == 1) {
            t += 3 * (len - 1) / 2;
            len = (len + 1) / 2;
        } else {
            t += (3 * len - 2) / 2;
            len /= 2;
        }
    }
    return t;
}

namespace detail {
template <class Design>
RuleTable compile_builtin(const char* prefix, std::uint64_t (*fire_time)(std::size_t)) {
    DesignCompiler<Design> c(prefix);
    for (std::size_t n = 1; n <= kExploreSize; ++n)
        if (c.explore(n, fire_time(n)) != fire_time(n))
            throw std::logic_error(std::string(prefix) + " design misses its firing time at n=" + std::to_string(n));
    return c.table();
}
}  // namespace detail

inline const BaselineSolver& optimal_solver() {
    static const BaselineSolver s{"optimal", detail::compile_builtin<detail::OptimalDesign>("o", optimal_time),
                                  optimal_time, true};
    return s;
}

inline const BaselineSolver& halving_solver() {
    static const BaselineSolver s{"halving", detail::compile_builtin<detail::HalvingDesign>("h", halving_time),
                                  halving_time, false};
    return s;
}

inline std::vector<std::string> builtin_solver_names() { return {"optimal", "halving"}; }

inline const BaselineSolver& builtin_solver(std::string_view name) {
    if (name == "optimal") return optimal_solver();
    if (name == "halving") return halving_solver();
    throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

}  // namespace msfssp
