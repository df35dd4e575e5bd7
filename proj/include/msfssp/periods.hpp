#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace msfssp {

using Period = std::uint64_t;
using Time = std::uint64_t;

inline Period checked_lcm(Period a, Period b) {
    const Period g = std::gcd(a, b);
    const Period f = a / g;
    if (f != 0 && b > std::numeric_limits<Period>::max() / f) throw std::overflow_error("lcm overflows 64 bits");
    return f * b;
}

class PeriodSet {
public:
    PeriodSet(std::initializer_list<Period> ps) : PeriodSet(std::vector<Period>(ps)) {}

    explicit PeriodSet(std::vector<Period> ps) : members_(std::move(ps)) {
        if (members_.empty()) throw std::invalid_argument("period set must be non-empty");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.front() == 0) throw std::invalid_argument("periods must be positive");
        gcd_ = 0;
        lcm_ = 1;
        for (Period p : members_) {
            gcd_ = std::gcd(gcd_, p);
            lcm_ = checked_lcm(lcm_, p);
        }
    }

    const std::vector<Period>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Period p) const { return std::binary_search(members_.begin(), members_.end(), p); }
    Period gcd() const noexcept { return gcd_; }
    Period lcm() const noexcept { return lcm_; }  // the cycle length t_c
    Period max() const noexcept { return members_.back(); }
    bool interesting() const noexcept { return members_.size() >= 2 && gcd_ == 1; }

    friend bool operator==(const PeriodSet&, const PeriodSet&) = default;

private:
    std::vector<Period> members_;
    Period gcd_ = 1;
    Period lcm_ = 1;
};

// Periods p_1..p_n of the support cells. The border cells conceptually carry
// p_1; they never change, so nothing here depends on that.
class PeriodAssignment {
public:
    PeriodAssignment(std::initializer_list<Period> ps) : PeriodAssignment(std::vector<Period>(ps)) {}

    explicit PeriodAssignment(std::vector<Period> periods, std::optional<PeriodSet> set = std::nullopt)
        : periods_(std::move(periods)), set_(set ? std::move(*set) : distinct(periods_)) {
        for (Period p : periods_)
            if (!set_.contains(p))
                throw std::invalid_argument("period " + std::to_string(p) + " is not a member of the period set");
    }

    std::size_t size() const noexcept { return periods_.size(); }
    Period operator[](std::size_t i) const { return periods_[i]; }
    std::span<const Period> periods() const noexcept { return periods_; }
    const PeriodSet& period_set() const noexcept { return set_; }

    Period gcd() const noexcept { return set_.gcd(); }
    Period cycle() const noexcept { return set_.lcm(); }
    Period max() const { return *std::max_element(periods_.begin(), periods_.end()); }
    std::uint64_t total() const { return std::accumulate(periods_.begin(), periods_.end(), std::uint64_t{0}); }

    friend bool operator==(const PeriodAssignment&, const PeriodAssignment&) = default;

private:
    static PeriodSet distinct(const std::vector<Period>& ps) {
        if (ps.empty()) throw std::invalid_argument("assignment must have at least one cell");
        return PeriodSet(ps);
    }

    std::vector<Period> periods_;
    PeriodSet set_;
};

inline PeriodAssignment quotient_assignment(const PeriodAssignment& a) {
    const Period g = a.gcd();
    std::vector<Period> ps(a.periods().begin(), a.periods().end());
    for (auto& p : ps) p /= g;
    std::vector<Period> members = a.period_set().members();
    for (auto& p : members) p /= g;
    return PeriodAssignment(std::move(ps), PeriodSet(std::move(members)));
}

}  // namespace msfssp
