#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "periods.hpp"

namespace msfssp {

// First step t' >= t at which a cell of period p is active.
inline Time next_activation(Time t, Period p) { return (t + p - 1) / p * p; }

// Times at which a fastest right-moving signal started in cell 1 at time 0
// is first present in each cell. A cell picks the signal up at its next
// activation after the left neighbor holds it.
inline std::vector<Time> earliest_arrival(const PeriodAssignment& a) {
    std::vector<Time> out(a.size());
    for (std::size_t i = 1; i < a.size(); ++i) out[i] = 1 + next_activation(out[i - 1], a[i]);
    return out;
}

struct SignalSchedule {
    std::vector<Time> arrival;  // a_1..a_n
    std::vector<Time> ret;      // r_1..r_n, with r_n = a_n
    Time round_trip() const { return ret.front(); }
};

// The reflection at cell n happens inside its arrival transition, so the
// return leg starts at a_n.
inline SignalSchedule round_trip(const PeriodAssignment& a) {
    if (a.size() < 2) throw std::invalid_argument("round trip needs at least two cells");
    SignalSchedule s;
    s.arrival = earliest_arrival(a);
    s.ret.assign(a.size(), 0);
    s.ret.back() = s.arrival.back();
    for (std::size_t i = a.size() - 1; i-- > 0;) s.ret[i] = 1 + next_activation(s.ret[i + 1], a[i]);
    return s;
}

inline Time mu_reference(const PeriodAssignment& a) { return a.size() * a.max(); }

struct ArrangementCount {
    std::uint64_t value;
    bool saturated;  // true when C(2m, m) does not fit in 64 bits
};

inline ArrangementCount arrangement_count(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("block count must be positive");
    // C(2m, m) built as C(m+i, i) for i = 1..m, each step exact.
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        c = c * (m + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max())
            return {std::numeric_limits<std::uint64_t>::max(), true};
    }
    return {static_cast<std::uint64_t>(c), false};
}

// Parameters of the lower-bound family: two cells of period `head`, then 2m
// blocks (m of each kind, order given by `arrangement`), then 1 + h cells of
// period q.
struct Theorem1Params {
    PeriodSet set{1};
    std::vector<Period> odd;          // odd members of the set
    std::vector<Period> chosen;       // the set M the blocks are drawn from
    Period q = 1;
    Period block_lcm = 1;             // m_c = lcm M
    Period first_kind = 1;            // period of blocks marked false
    Period second_kind = 1;           // period of blocks marked true
    std::uint64_t h = 0;
    std::uint64_t m = 1;
    Period head = 1;
    std::vector<bool> arrangement;    // 2m entries, m of each

    std::uint64_t block_length(Period p) const { return block_lcm / p; }
    std::uint64_t size() const {
        return 2 + m * (block_length(first_kind) + block_length(second_kind)) + 1 + h;
    }
};

class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Builds the family parameters for `set` and block count m. The two block
// kinds default to the two largest members of M; the head period defaults to
// q. The arrangement is left at its first element (all first-kind blocks,
// then all second-kind blocks).
inline Theorem1Params theorem1_params(const PeriodSet& set, std::uint64_t m, std::optional<Period> head = std::nullopt) {
    if (set.size() < 2) throw ConstructionError("period set needs at least two members");
    if (set.gcd() != 1) throw ConstructionError("period set must have gcd 1");
    if (m == 0) throw ConstructionError("block count must be positive");
    Theorem1Params t;
    t.set = set;
    t.m = m;
    for (Period p : set.members())
        if (p % 2 == 1) t.odd.push_back(p);
    if (t.odd.empty()) throw ConstructionError("period set has no odd member");
    t.chosen = t.odd;
    if (t.odd.size() >= 2) {
        t.q = t.odd.back();
    } else {
        Period even_max = 0;
        for (Period p : set.members())
            if (p % 2 == 0) even_max = std::max(even_max, p);
        t.q = even_max;
        t.chosen.push_back(even_max);
        std::sort(t.chosen.begin(), t.chosen.end());
    }
    t.block_lcm = 1;
    for (Period p : t.chosen) t.block_lcm = checked_lcm(t.block_lcm, p);
    t.first_kind = t.chosen.back();
    t.second_kind = t.chosen[t.chosen.size() - 2];
    const auto bq = t.block_length(t.q);
    if (bq % 2 == 0) throw ConstructionError("block length of q must be odd");
    t.h = bq / 2;
    t.head = head.value_or(t.q);
    if (!set.contains(t.head)) throw ConstructionError("head period is not in the period set");
    t.arrangement.assign(2 * m, false);
    std::fill(t.arrangement.begin() + static_cast<std::ptrdiff_t>(m), t.arrangement.end(), true);
    return t;
}

inline void check_params(const Theorem1Params& t) {
    if (t.arrangement.size() != 2 * t.m) throw ConstructionError("arrangement must have 2m blocks");
    const auto seconds = static_cast<std::uint64_t>(std::count(t.arrangement.begin(), t.arrangement.end(), true));
    if (seconds != t.m) throw ConstructionError("arrangement must have m blocks of each kind");
    if (t.block_length(t.q) % 2 == 0 || 2 * t.h + 1 != t.block_length(t.q))
        throw ConstructionError("tail length must satisfy 2h+1 = b_q");
    if (t.first_kind == t.second_kind || t.block_length(t.first_kind) == t.block_length(t.second_kind))
        throw ConstructionError("block kinds must have distinct lengths");
    for (Period p : {t.first_kind, t.second_kind, t.q, t.head})
        if (!t.set.contains(p)) throw ConstructionError("period " + std::to_string(p) + " is not in the period set");
}

inline PeriodAssignment theorem1_instance(const Theorem1Params& t) {
    check_params(t);
    std::vector<Period> ps{t.head, t.head};
    for (bool second : t.arrangement) {
        const Period p = second ? t.second_kind : t.first_kind;
        ps.insert(ps.end(), t.block_length(p), p);
    }
    ps.insert(ps.end(), 1 + t.h, t.q);
    return PeriodAssignment(std::move(ps), t.set);
}

// Only meaningful for instances built by theorem1_instance.
inline Time closed_form_roundtrip(const PeriodAssignment& a) {
    return 2 * a.total() - 2 * a[0] - a[1] - a[a.size() - 1] + 2;
}

// Enumerates arrangements in lexicographic order (false < true).
inline bool next_arrangement(std::vector<bool>& arr) { return std::next_permutation(arr.begin(), arr.end()); }

inline std::vector<std::vector<bool>> all_arrangements(std::uint64_t m) {
    std::vector<bool> arr(2 * m, false);
    std::fill(arr.begin() + static_cast<std::ptrdiff_t>(m), arr.end(), true);
    std::vector<std::vector<bool>> out;
    do out.push_back(arr);
    while (next_arrangement(arr));
    return out;
}

inline std::vector<bool> arrangement_at(std::uint64_t m, std::uint64_t index) {
    // Unranks index in lexicographic order of words with m falses and m trues.
    const auto total = arrangement_count(m);
    if (total.saturated) throw std::overflow_error("arrangement index space exceeds 64 bits");
    if (index >= total.value) throw std::out_of_range("arrangement index out of range");
    std::vector<bool> arr;
    std::uint64_t zeros = m, ones = m;
    auto binom = [](std::uint64_t n, std::uint64_t k) {
        unsigned __int128 c = 1;
        for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
        return static_cast<std::uint64_t>(c);
    };
    while (zeros + ones > 0) {
        const std::uint64_t with_zero = zeros == 0 ? 0 : binom(zeros + ones - 1, ones);
        if (index < with_zero) {
            arr.push_back(false);
            --zeros;
        } else {
            index -= with_zero;
            arr.push_back(true);
            --ones;
        }
    }
    return arr;
}

inline std::vector<bool> random_arrangement(std::uint64_t m, std::mt19937_64& rng) {
    std::vector<bool> arr(2 * m, false);
    std::fill(arr.begin() + static_cast<std::ptrdiff_t>(m), arr.end(), true);
    std::shuffle(arr.begin(), arr.end(), rng);
    return arr;
}

}  // namespace msfssp
