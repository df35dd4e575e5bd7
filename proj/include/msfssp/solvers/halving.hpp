#pragma once

#include <array>
#include <cstdint>

#include "compile.hpp"

namespace msfssp::detail {

// Classical divide-and-conquer design. A general sends a speed-1 signal and a
// speed-1/3 signal into its segment; the fast one bounces off the far wall and
// meets the slow one in the middle, which becomes one general (odd length) or
// two adjacent generals (even length). Every sub-segment repeats this, and a
// general whose neighbors are all generals or border fires.
struct HalvingDesign {
    enum Kind : std::uint8_t { quiet_kind, border_kind, fire_kind };

    struct Cell {
        Kind kind = quiet_kind;
        bool gen = false;
        std::array<bool, 2> fast{};      // outgoing fast signal, by direction
        std::array<bool, 2> back{};      // fast signal after reflection
        std::array<std::uint8_t, 2> slow{};  // 0 none, else 1 + counter (0..2)
    };

    static Cell border() { return Cell{.kind = border_kind}; }
    static Cell quiescent() { return Cell{}; }
    static Cell fire() { return Cell{.kind = fire_kind}; }
    static Cell general() {
        Cell c;
        c.gen = true;
        c.fast[0] = true;
        c.slow[0] = 1;
        return c;
    }

    static std::uint64_t pack(const Cell& c) {
        std::uint64_t v = c.kind;
        v = v << 1 | c.gen;
        for (int k = 0; k < 2; ++k) {
            v = v << 1 | c.fast[k];
            v = v << 1 | c.back[k];
            v = v << 2 | c.slow[k];
        }
        return v;
    }

    static Cell step(const Cell& L, const Cell& C, const Cell& Rn) {
        if (C.kind != quiet_kind) return C;
        auto settled = [](const Cell& x) { return x.gen || x.kind == border_kind; };
        if (C.gen && settled(L) && settled(Rn)) return fire();

        const Cell* behind[2] = {&L, &Rn};
        const Cell* ahead[2] = {&Rn, &L};
        Cell n;
        n.gen = C.gen;
        std::array<bool, 2> launch{};

        for (int k = 0; k < 2; ++k) {
            const int ko = 1 - k;
            const Cell& src = *behind[k];
            if (src.kind == quiet_kind) {
                if (src.fast[k]) {
                    if (n.gen || ahead[k]->kind == border_kind) {
                        n.back[ko] = true;
                        n.gen = true;
                    } else {
                        n.fast[k] = true;
                    }
                }
                if (src.back[k]) n.back[k] = true;
                if (src.slow[k] == 3) n.slow[k] = 1;
            }
            if (C.slow[k] != 0 && C.slow[k] < 3) n.slow[k] = C.slow[k] + 1;
        }

        // even split: slow signal at counter 1 here, returning signal just ahead
        for (int k = 0; k < 2; ++k) {
            const int ko = 1 - k;
            const Cell& a = *ahead[k];
            if (C.slow[k] == 2 && a.kind == quiet_kind && a.back[ko]) {
                n.slow[k] = 0;
                n.back[ko] = false;
                n.gen = true;
                launch[ko] = true;
            }
        }
        for (int k = 0; k < 2; ++k) {
            const int ko = 1 - k;
            const Cell& a = *ahead[k];
            if (C.back[k] && a.kind == quiet_kind && a.slow[ko] == 2) {
                n.back[k] = false;
                n.gen = true;
                launch[ko] = true;
            }
            // odd split: both signals arrive in this cell together
            if (n.slow[k] == 1 && n.back[ko] && C.slow[k] == 0) {
                n.slow[k] = 0;
                n.back[ko] = false;
                n.gen = true;
                launch = {true, true};
            }
        }
        for (int k = 0; k < 2; ++k)
            if (launch[k]) {
                n.fast[k] = true;
                n.slow[k] = 1;
            }
        return n;
    }
};

}  // namespace msfssp::detail
