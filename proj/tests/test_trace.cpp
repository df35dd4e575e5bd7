#include <random>

#include <gtest/gtest.h>

#include "msfssp/bounds.hpp"
#include "msfssp/solvers/builtin.hpp"
#include "msfssp/trace.hpp"

using namespace msfssp;

namespace {

// First row index at which cell i shows `glyph`.
std::vector<Time> first_rows(const TraceDocument& d, const std::string& glyph) {
    std::vector<Time> out(d.periods.size(), 0);
    for (std::size_t i = 0; i < d.periods.size(); ++i)
        for (std::size_t t = 0; t < d.rows.size(); ++t)
            if (d.rows[t][i] == glyph) {
                out[i] = t;
                break;
            }
    return out;
}

}  // namespace

TEST(Trace, SignalDiagramMatchesArrivalTimes) {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 100; ++it) {
        std::vector<Period> p(2 + rng() % 12);
        for (auto& v : p) v = 1 + rng() % 4;
        PeriodAssignment a(p);
        auto tr = signal_trajectory(a, 10000);
        ASSERT_FALSE(tr.truncated);
        auto d = trace_from_trajectory(tr, a, signal_glyph);
        auto s = round_trip(a);
        auto out = first_rows(d, ">");
        auto back = first_rows(d, "<");
        for (std::size_t i = 1; i + 1 < p.size(); ++i) ASSERT_EQ(out[i], s.arrival[i]);
        ASSERT_EQ(back, s.ret);
        ASSERT_EQ(d.rows.size(), s.round_trip() + 1);
    }
}

TEST(Trace, ActivationMarksFollowPeriods) {
    PeriodAssignment a{1, 2, 3};
    auto d = trace_from_trajectory(signal_trajectory(a, 100), a, signal_glyph);
    ASSERT_EQ(d.active.size() + 1, d.rows.size());
    for (std::size_t t = 0; t < d.active.size(); ++t)
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(d.active[t][i], t % a[i] == 0);
    for (std::size_t t = 0; t < d.rows.size(); ++t) EXPECT_EQ(d.common[t], t % 6 == 0);
}

TEST(Trace, TextRendering) {
    PeriodAssignment a{1, 2};
    auto d = trace_from_trajectory(signal_trajectory(a, 100), a, signal_glyph);
    auto text = render_text(d);
    EXPECT_EQ(text.rfind("p | 1 2\n", 0), 0u) << text;
    EXPECT_NE(text.find("0 | > .   <- common update"), std::string::npos) << text;
    EXPECT_NE(text.find("  | v v"), std::string::npos);
    EXPECT_EQ(text.find("truncated"), std::string::npos);
}

TEST(Trace, TruncationIsReported) {
    PeriodAssignment a(std::vector<Period>(12, 1));
    auto d = trace_from_trajectory(signal_trajectory(a, 100), a, signal_glyph);
    auto text = render_text(d, {5, 4});
    EXPECT_NE(text.find("... truncated: " + std::to_string(d.rows.size() - 4) + " more rows"), std::string::npos);
    EXPECT_NE(text.find("... truncated: 7 more cells"), std::string::npos);
}

TEST(Trace, EmptyDocument) {
    TraceDocument d = make_trace(PeriodAssignment{1, 2});
    EXPECT_EQ(render_text(d), "p | 1 2\n");
    EXPECT_NE(render_svg(d).find("</svg>"), std::string::npos);
}

TEST(Trace, WrapperHostsRender) {
    WrapperOptions opt;
    opt.record_hosts = true;
    PeriodAssignment a{1, 2};
    auto r = run_msfssp(a, optimal_solver(), opt);
    auto d = trace_from_report(r, a, optimal_solver().rule.alphabet());
    ASSERT_EQ(d.rows.size(), *r.fire_time + 1);
    EXPECT_EQ(d.rows.front(), (std::vector<std::string>{"G", "__"}));
    EXPECT_EQ(d.rows.back(), (std::vector<std::string>{"F", "F"}));
    EXPECT_EQ(d.rows[d.rows.size() - 2][1].size(), 2u);
}

TEST(Trace, JsonRoundTripAndValidation) {
    PeriodAssignment a{2, 3};
    auto d = trace_from_trajectory(signal_trajectory(a, 100), a, signal_glyph);
    auto j = trace_to_json(d);
    auto back = trace_from_json(j);
    EXPECT_EQ(render_text(back), render_text(d));
    j["common"].push_back(true);
    EXPECT_THROW(trace_from_json(j), std::invalid_argument);
}

TEST(Trace, SvgHasOneRectPerCell) {
    PeriodAssignment a{1, 1, 1};
    auto d = trace_from_trajectory(signal_trajectory(a, 100), a, signal_glyph);
    auto svg = render_svg(d);
    std::size_t rects = 0;
    for (auto p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++rects;
    EXPECT_EQ(rects, d.rows.size() * 3);
}
