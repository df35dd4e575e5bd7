#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "periods.hpp"
#include "report.hpp"

namespace msfssp {

// Applies `fn` to 0..count-1 on a small worker pool. Results are stored by
// index, so the output order never depends on scheduling.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, const Fn& fn, unsigned workers = 0) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    std::vector<std::optional<Result>> slots(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    pool.clear();
    if (error) std::rethrow_exception(error);
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("sweep needs " + std::to_string(required) + " instances, budget is " +
                             std::to_string(budget)),
          required_(required) {}
    std::uint64_t required() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

// Number of assignments over `set` for every size in [n_min, n_max],
// saturating at the maximum value.
inline std::uint64_t sweep_size(const PeriodSet& set, std::size_t n_min, std::size_t n_max) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (c > cap / set.size()) return cap;
            c *= set.size();
        }
        if (total > cap - c) return cap;
        total += c;
    }
    return total;
}

// All |P|^n assignments for n in [n_min, n_max], by size and then in
// lexicographic order of the period sequence.
inline std::vector<PeriodAssignment> enumerate_assignments(const PeriodSet& set, std::size_t n_min, std::size_t n_max,
                                                           std::uint64_t budget) {
    if (n_min == 0 || n_min > n_max) throw std::invalid_argument("size range must satisfy 1 <= min <= max");
    const auto need = sweep_size(set, n_min, n_max);
    if (need > budget) throw BudgetExceeded(need, budget);
    std::vector<PeriodAssignment> out;
    out.reserve(need);
    const auto& members = set.members();
    for (std::size_t n = n_min; n <= n_max; ++n) {
        std::vector<std::size_t> digits(n, 0);
        for (;;) {
            std::vector<Period> ps(n);
            for (std::size_t i = 0; i < n; ++i) ps[i] = members[digits[i]];
            out.emplace_back(std::move(ps), set);
            std::size_t pos = n;
            while (pos > 0 && ++digits[pos - 1] == members.size()) digits[--pos] = 0;
            if (pos == 0) break;
        }
    }
    return out;
}

inline std::vector<SweepRecord> sweep(const std::vector<PeriodAssignment>& instances, const BaselineSolver& solver,
                                      const EvaluateOptions& opt = {}, unsigned workers = 0) {
    auto recs = parallel_map<SweepRecord>(
        instances.size(), [&](std::size_t i) { return evaluate_instance(instances[i], solver, opt); }, workers);
    for (std::size_t i = 0; i < recs.size(); ++i) recs[i].index = i;
    return recs;
}

}  // namespace msfssp
