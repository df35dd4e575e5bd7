#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "../std_ca.hpp"

namespace msfssp::detail {

// Turns a structured cell design into a plain rule table by running the
// design on I_1..I_explore and interning every state it reaches. Triples the
// runs never produce fall back to the identity default.
//
// A Design provides:
//   using Cell;
//   static Cell border(), general(), quiescent(), fire();
//   static Cell step(const Cell& l, const Cell& c, const Cell& r);
//   static std::uint64_t pack(const Cell&);
template <class Design>
class DesignCompiler {
public:
    using Cell = typename Design::Cell;

    explicit DesignCompiler(std::string prefix) : prefix_(std::move(prefix)) {
        for (const Cell& c : {Design::border(), Design::general(), Design::quiescent(), Design::fire()}) intern(c);
    }

    // Runs I_n to completion; returns the fire step.
    std::uint64_t explore(std::size_t n, std::uint64_t max_steps) {
        std::vector<Symbol> cfg(n, Symbol::quiescent), next(n);
        cfg[0] = Symbol::general;
        for (std::uint64_t t = 0; t <= max_steps; ++t) {
            if (all_fire(cfg)) return t;
            for (std::size_t i = 0; i < n; ++i) {
                Symbol l = i == 0 ? Symbol::border : cfg[i - 1];
                Symbol r = i + 1 == n ? Symbol::border : cfg[i + 1];
                next[i] = transition(l, cfg[i], r);
            }
            cfg.swap(next);
        }
        throw std::logic_error(prefix_ + " design did not fire on n=" + std::to_string(n));
    }

    std::size_t state_count() const noexcept { return cells_.size(); }
    std::size_t triple_count() const noexcept { return memo_.size(); }

    RuleTable table() const {
        std::vector<std::string> extra;
        for (std::size_t i = 4; i < cells_.size(); ++i) extra.push_back(prefix_ + std::to_string(i));
        RuleTable t{Alphabet(std::move(extra))};
        for (auto [k, next] : memo_) {
            auto l = static_cast<Symbol>(k >> 42), c = static_cast<Symbol>((k >> 21) & 0x1FFFFF),
                 r = static_cast<Symbol>(k & 0x1FFFFF);
            t.set(l, c, r, next);
        }
        return t;
    }

private:
    Symbol intern(const Cell& c) {
        auto [it, fresh] = ids_.try_emplace(Design::pack(c), static_cast<std::uint32_t>(cells_.size()));
        if (fresh) cells_.push_back(c);
        return static_cast<Symbol>(it->second);
    }

    Symbol transition(Symbol l, Symbol c, Symbol r) {
        const std::uint64_t k =
            (std::uint64_t{index_of(l)} << 42) | (std::uint64_t{index_of(c)} << 21) | index_of(r);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        Cell next = Design::step(cells_[index_of(l)], cells_[index_of(c)], cells_[index_of(r)]);
        Symbol s = intern(next);
        memo_.emplace(k, s);
        return s;
    }

    std::string prefix_;
    std::vector<Cell> cells_;
    std::unordered_map<std::uint64_t, std::uint32_t> ids_;
    std::unordered_map<std::uint64_t, Symbol> memo_;
};

}  // namespace msfssp::detail
