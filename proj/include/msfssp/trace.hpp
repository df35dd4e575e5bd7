#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ms_kernel.hpp"
#include "rule_table.hpp"
#include "wrapper.hpp"

namespace msfssp {

// A space-time diagram: one row of glyphs per step, activation marks between
// consecutive rows, and a flag for rows that sit on a common update.
struct TraceDocument {
    std::vector<Period> periods;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::vector<bool>> active;  // active[t][i]: cell i moved from row t to row t+1
    std::vector<bool> common;               // per row
};

inline TraceDocument make_trace(const PeriodAssignment& a) {
    TraceDocument d;
    d.periods.assign(a.periods().begin(), a.periods().end());
    return d;
}

inline void append_row(TraceDocument& d, const PeriodAssignment& a, std::vector<std::string> glyphs) {
    const Time t = d.rows.size();
    if (t > 0) {
        std::vector<bool> marks(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) marks[i] = is_active(a[i], t - 1);
        d.active.push_back(std::move(marks));
    }
    d.common.push_back(t % a.cycle() == 0);
    d.rows.push_back(std::move(glyphs));
}

template <class State, class Glyph>
TraceDocument trace_from_trajectory(const MsTrajectory<State>& tr, const PeriodAssignment& a, const Glyph& glyph) {
    TraceDocument d = make_trace(a);
    for (const auto& cfg : tr.configs) {
        std::vector<std::string> g;
        for (const auto& s : cfg) g.push_back(glyph(s));
        append_row(d, a, std::move(g));
    }
    return d;
}

// A host shows its v-cells, one character each; auxiliary states collapse
// to '*'. A fired host shows "F".
inline std::string host_glyph(const HostState& h, const Alphabet& ab) {
    if (h.fired) return "F";
    std::string s;
    for (Symbol v : h.y) {
        const auto& name = ab.name(v);
        s += name.size() == 1 ? name : "*";
    }
    return s;
}

inline TraceDocument trace_from_report(const SyncReport& r, const PeriodAssignment& a, const Alphabet& ab) {
    TraceDocument d = make_trace(a);
    for (const auto& hosts : r.configs) {
        std::vector<std::string> g;
        for (const auto& h : hosts) g.push_back(host_glyph(h, ab));
        append_row(d, a, std::move(g));
    }
    return d;
}

// Fastest-signal experiment: '>' once the outbound signal has reached a
// cell, '<' once the reflected one has.
enum class SignalMark : std::uint8_t { none, out, back };

inline SignalMark signal_update(const SignalMark* l, SignalMark self, const SignalMark* r) {
    if (self == SignalMark::none && l && *l != SignalMark::none) return r ? SignalMark::out : SignalMark::back;
    if (self == SignalMark::out && r && *r == SignalMark::back) return SignalMark::back;
    return self;
}

inline std::string signal_glyph(SignalMark m) {
    switch (m) {
        case SignalMark::out: return ">";
        case SignalMark::back: return "<";
        default: return ".";
    }
}

inline MsTrajectory<SignalMark> signal_trajectory(const PeriodAssignment& a, Time horizon) {
    std::vector<SignalMark> init(a.size(), SignalMark::none);
    init[0] = a.size() == 1 ? SignalMark::back : SignalMark::out;
    auto update = [](const SignalMark* l, const SignalMark& s, const SignalMark* r) { return signal_update(l, s, r); };
    return run_trajectory(update, std::move(init), a, horizon,
                          [](const std::vector<SignalMark>& c, Time) { return c.front() == SignalMark::back; });
}

struct RenderLimits {
    std::size_t max_cells = 80;
    std::size_t max_rows = 400;
};

inline std::string render_text(const TraceDocument& d, const RenderLimits& lim = {}) {
    const std::size_t cells = std::min(d.periods.size(), lim.max_cells);
    const bool cut_cols = cells < d.periods.size();
    const std::size_t rows = std::min(d.rows.size(), lim.max_rows);
    const bool cut_rows = rows < d.rows.size();

    std::size_t w = 1;
    for (std::size_t i = 0; i < cells; ++i) w = std::max(w, std::to_string(d.periods[i]).size());
    for (std::size_t t = 0; t < rows; ++t)
        for (std::size_t i = 0; i < cells; ++i) w = std::max(w, d.rows[t][i].size());
    const std::size_t tw = std::max<std::size_t>(1, std::to_string(d.rows.empty() ? 0 : d.rows.size() - 1).size());

    std::ostringstream o;
    auto cell = [&](const std::string& s) { o << ' ' << std::setw(static_cast<int>(w)) << s; };
    o << std::setw(static_cast<int>(tw)) << "p" << " |";
    for (std::size_t i = 0; i < cells; ++i) cell(std::to_string(d.periods[i]));
    if (cut_cols) o << " ...";
    o << '\n';
    for (std::size_t t = 0; t < rows; ++t) {
        if (t > 0) {
            o << std::setw(static_cast<int>(tw)) << "" << " |";
            for (std::size_t i = 0; i < cells; ++i) cell(d.active[t - 1][i] ? "v" : "");
            o << '\n';
        }
        o << std::setw(static_cast<int>(tw)) << t << " |";
        for (std::size_t i = 0; i < cells; ++i) cell(d.rows[t][i]);
        if (cut_cols) o << " ...";
        if (d.common[t]) o << "   <- common update";
        o << '\n';
    }
    if (cut_rows) o << "... truncated: " << d.rows.size() - rows << " more rows\n";
    if (cut_cols) o << "... truncated: " << d.periods.size() - cells << " more cells\n";
    return o.str();
}

inline std::string render_svg(const TraceDocument& d, const RenderLimits& lim = {}) {
    const std::size_t cells = std::min(d.periods.size(), lim.max_cells);
    const std::size_t rows = std::min(d.rows.size(), lim.max_rows);
    std::size_t glyph = 1;
    for (std::size_t t = 0; t < rows; ++t)
        for (std::size_t i = 0; i < cells; ++i) glyph = std::max(glyph, d.rows[t][i].size());
    const int cw = static_cast<int>(std::max<std::size_t>(20, 8 * glyph + 8)), ch = 18, gap = 8, left = 48, top = 28;
    const int width = left + static_cast<int>(cells) * cw + 120;
    const int height = top + static_cast<int>(rows) * (ch + gap) + 40;

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < cells; ++i)
        o << "<text x=\"" << left + static_cast<int>(i) * cw + cw / 2 << "\" y=\"16\" text-anchor=\"middle\">"
          << d.periods[i] << "</text>\n";
    for (std::size_t t = 0; t < rows; ++t) {
        const int y = top + static_cast<int>(t) * (ch + gap);
        o << "<text x=\"" << left - 6 << "\" y=\"" << y + 13 << "\" text-anchor=\"end\">" << t << "</text>\n";
        for (std::size_t i = 0; i < cells; ++i) {
            const int x = left + static_cast<int>(i) * cw;
            const auto& g = d.rows[t][i];
            const bool blank = g == "_" || g == ".";
            o << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw << "\" height=\"" << ch
              << "\" fill=\"" << (blank ? "#ffffff" : "#d8e4f0") << "\" stroke=\"#888\"/>\n";
            o << "<text x=\"" << x + cw / 2 << "\" y=\"" << y + 13 << "\" text-anchor=\"middle\">" << g << "</text>\n";
            if (t + 1 < rows && d.active[t][i]) {
                const int cx = x + cw / 2, ty = y + ch + 1;
                o << "<polygon points=\"" << cx - 4 << ',' << ty << ' ' << cx + 4 << ',' << ty << ' ' << cx << ','
                  << ty + gap - 2 << "\" fill=\"#333\"/>\n";
            }
        }
        if (d.common[t])
            o << "<text x=\"" << left + static_cast<int>(cells) * cw + 8 << "\" y=\"" << y + 13
              << "\">common</text>\n";
    }
    if (rows < d.rows.size() || cells < d.periods.size())
        o << "<text x=\"" << left << "\" y=\"" << height - 10 << "\">... truncated</text>\n";
    o << "</svg>\n";
    return o.str();
}

inline nlohmann::json trace_to_json(const TraceDocument& d) {
    return {{"periods", d.periods}, {"rows", d.rows}, {"active", d.active}, {"common", d.common}};
}

inline TraceDocument trace_from_json(const nlohmann::json& j) {
    TraceDocument d;
    d.periods = j.at("periods").get<std::vector<Period>>();
    d.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    d.active = j.at("active").get<std::vector<std::vector<bool>>>();
    d.common = j.at("common").get<std::vector<bool>>();
    if (d.common.size() != d.rows.size() || (d.rows.size() > 0 && d.active.size() + 1 != d.rows.size()))
        throw std::invalid_argument("trace capture is inconsistent");
    for (const auto& r : d.rows)
        if (r.size() != d.periods.size()) throw std::invalid_argument("trace row width differs from header");
    return d;
}

}  // namespace msfssp
