#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "compile.hpp"

namespace msfssp::detail {

// Minimal-time design built from recursive midpoint splitting.
//
// Every general sends a speed-1 reflector R and a family of markers toward
// the unsynchronized side. Marker j of a family moves at speed 1/(2^j - 1):
// it waits for a tick, and ticks are produced by halving the tick stream of
// the previous marker. A returning R meets the markers at the 1/2, 1/4, ...
// points, each meeting creating a new general. Odd distances are handled by
// tracking the parity of R and of each marker; an odd meeting delays the
// new general's reflector by one step and sends a probe with the undelayed
// timing so that the wall role is still taken by the right cell.
//
// Direction index 0 means moving right, 1 moving left.
struct OptimalDesign {
    enum Kind : std::uint8_t { quiet_kind, border_kind, fire_kind };

    struct Signal {  // used for both R and markers
        bool present = false;
        std::uint8_t parity = 0;
        bool flag = false;  // R: probe; marker: armed
    };

    struct Cell {
        Kind kind = quiet_kind;
        bool gen = false;
        std::array<Signal, 2> R{}, M{};
        std::array<bool, 2> tick{};     // free tick of family k (travels against k)
        std::array<std::uint8_t, 2> fam{};  // 0 none, 1 present, 2 armed
        std::array<bool, 2> pend{};     // delayed emission of R
    };

    static Cell border() { return Cell{.kind = border_kind}; }
    static Cell quiescent() { return Cell{}; }
    static Cell fire() { return Cell{.kind = fire_kind}; }
    static Cell general() {
        Cell c;
        c.gen = true;
        c.R[0] = {true, 0, false};
        c.fam[0] = 1;
        return c;
    }

    static std::uint64_t pack(const Cell& c) {
        std::uint64_t v = c.kind;
        v = v << 1 | c.gen;
        for (int k = 0; k < 2; ++k) {
            auto sig = [](const Signal& s) { return s.present ? 1u + s.parity + 2u * s.flag : 0u; };
            v = v << 3 | sig(c.R[k]);
            v = v << 3 | sig(c.M[k]);
            v = v << 1 | c.tick[k];
            v = v << 2 | c.fam[k];
            v = v << 1 | c.pend[k];
        }
        return v;
    }

    static void require(bool ok, const char* what) {
        if (!ok) throw std::logic_error(what);
    }

    // Emit a fresh reflector in direction k; an odd delay sends a probe now
    // and the real reflector one step later.
    static void emit(Cell& c, int k, int delay) {
        if (delay == 0) {
            c.R[k] = {true, 0, false};
        } else {
            c.R[k] = {true, 0, true};
            c.pend[k] = true;
        }
    }

    static Cell step(const Cell& L, const Cell& C, const Cell& Rn) {
        if (C.kind != quiet_kind) return C;
        auto settled = [](const Cell& x) { return x.gen || x.kind == border_kind; };
        if (C.gen && settled(L) && settled(Rn)) return fire();

        const Cell* behind[2] = {&L, &Rn};
        const Cell* ahead[2] = {&Rn, &L};
        Cell n;
        n.gen = C.gen;
        n.fam = C.fam;

        for (int k = 0; k < 2; ++k) {
            const Cell& src = *behind[k];
            if (C.pend[k]) n.R[k] = {true, 0, false};
            if (src.R[k].present) n.R[k] = {true, static_cast<std::uint8_t>(1 - src.R[k].parity), src.R[k].flag};

            const bool inc_tick = ahead[k]->tick[k];
            int mk = -1;
            if (src.M[k].present && src.M[k].flag) mk = 1 - src.M[k].parity;
            if (src.fam[k] == 2) {
                require(mk < 0, "marker launched onto moving marker");
                mk = 1;
            }
            if (C.M[k].present && !C.M[k].flag) {
                require(mk < 0, "marker overlap");
                mk = C.M[k].parity;
            }
            if (n.fam[k] == 2) n.fam[k] = 1;
            if (mk >= 0) {
                n.M[k] = {true, static_cast<std::uint8_t>(mk), inc_tick};
                if (inc_tick && mk == 1) n.tick[k] = true;
            } else if (inc_tick) {
                if (n.fam[k])
                    n.fam[k] = 2;
                else if (!n.gen)
                    n.tick[k] = true;
            }
        }

        for (int k = 0; k < 2; ++k)
            if (n.R[k].present && n.R[k].parity == 1 && !n.R[k].flag) n.tick[k] = true;

        // a reflector meets a waiting marker of the opposite family
        for (int k = 0; k < 2; ++k) {
            const int ko = 1 - k;
            const Signal& in = behind[k]->R[k];
            if (!in.present || !n.M[ko].present) continue;
            const int pm = n.M[ko].parity;
            n.M[ko] = {};
            n.tick[ko] = false;
            n.gen = true;
            n.fam[k] = std::max<std::uint8_t>(n.fam[k], 1);
            emit(n, k, pm);
            n.tick[k] = false;
            if (!in.flag) {
                n.fam[ko] = std::max<std::uint8_t>(n.fam[ko], 1);
                emit(n, ko, pm);
            }
        }

        // a probe one cell short of the marker: this cell takes the wall role
        for (int k = 0; k < 2; ++k) {
            const int ko = 1 - k;
            const Signal& m = ahead[k]->M[ko];
            if (!(C.R[k].present && C.R[k].flag && m.present && !m.flag)) continue;
            const Signal& in = behind[k]->R[k];
            require(in.present && !in.flag, "probe without trailing reflector");
            n.R[k] = {};
            n.tick[k] = false;
            n.gen = true;
            n.fam[ko] = std::max<std::uint8_t>(n.fam[ko], 1);
            emit(n, ko, m.parity);
        }

        // reflection at the end of the line
        for (int k = 0; k < 2; ++k) {
            const int ko = 1 - k;
            const Signal& in = behind[k]->R[k];
            if (!(ahead[k]->kind == border_kind && in.present && n.R[k].present && !n.gen)) continue;
            require(!in.flag, "probe reached the border");
            n.R[k] = {};
            n.tick[k] = false;
            n.gen = true;
            n.fam[ko] = std::max<std::uint8_t>(n.fam[ko], 1);
            emit(n, ko, 1 - in.parity);
        }

        if (C.gen)
            for (int k = 0; k < 2; ++k)
                if (behind[k]->R[k].present) {
                    n.R[k] = {};
                    n.tick[k] = false;
                }
        return n;
    }
};

}  // namespace msfssp::detail
