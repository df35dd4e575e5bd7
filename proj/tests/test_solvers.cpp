#include <gtest/gtest.h>

#include "msfssp/solvers/builtin.hpp"

using namespace msfssp;

namespace {

void expect_contract(const BaselineSolver& s, std::size_t n_max) {
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto T = s.fire_time(n);
        auto rep = run_until_fire(s, n, T + 2);
        ASSERT_FALSE(rep.early_fire()) << s.name << " n=" << n;
        ASSERT_TRUE(rep.fire_step) << s.name << " n=" << n;
        ASSERT_EQ(*rep.fire_step, T) << s.name << " n=" << n;
    }
}

// Halving time measured by direct recursion over segment lengths, written
// independently of the closed loop in the library.
std::uint64_t halving_reference(std::uint64_t len) {
    if (len <= 2) return len;
    std::uint64_t split = len % 2 ? 3 * (len - 1) / 2 : (3 * len - 2) / 2;
    std::uint64_t half = len % 2 ? (len + 1) / 2 : len / 2;
    return split + (half <= 2 ? 1 : halving_reference(half));
}

}  // namespace

TEST(OptimalSolver, FiresAtTwoNMinusTwo) {
    const auto& s = optimal_solver();
    EXPECT_TRUE(s.time_optimal);
    expect_contract(s, 300);
    EXPECT_EQ(s.fire_time(1), 1u);
    EXPECT_EQ(s.fire_time(2), 2u);
    EXPECT_EQ(s.fire_time(10), 18u);
}

TEST(HalvingSolver, FiresAtDeclaredTime) {
    const auto& s = halving_solver();
    EXPECT_FALSE(s.time_optimal);
    expect_contract(s, 300);
}

TEST(HalvingSolver, NeverFasterThanOptimal) {
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(halving_time(n), optimal_time(n)) << n;
    for (std::size_t n = 5; n <= 300; ++n) EXPECT_GT(halving_time(n), optimal_time(n)) << n;
}

TEST(HalvingSolver, DeclaredTimeMatchesRecursion) {
    const std::uint64_t measured[] = {1, 2, 4, 6, 10, 12, 15, 17, 22};
    for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(halving_time(n), measured[n - 1]) << n;
    for (std::size_t n = 3; n <= 5000; ++n) ASSERT_EQ(halving_time(n), halving_reference(n)) << n;
}

TEST(BuiltinSolvers, AlphabetsAreSmall) {
    EXPECT_EQ(optimal_solver().rule.alphabet().size(), 33u);
    EXPECT_EQ(halving_solver().rule.alphabet().size(), 26u);
    EXPECT_TRUE(validate_table(optimal_solver().rule).empty());
    EXPECT_TRUE(validate_table(halving_solver().rule).empty());
}

TEST(BuiltinSolvers, LookupByName) {
    EXPECT_EQ(&builtin_solver("optimal"), &optimal_solver());
    EXPECT_EQ(&builtin_solver("halving"), &halving_solver());
    EXPECT_THROW(builtin_solver("mazoyer"), std::invalid_argument);
    EXPECT_EQ(builtin_solver_names().size(), 2u);
}

// Exploring well past the compile size reaches no new states or triples, so
// the compiled tables are complete for every size.
TEST(BuiltinSolvers, CompiledTablesSaturate) {
    detail::DesignCompiler<detail::OptimalDesign> opt("o");
    std::size_t opt_triples_at_60 = 0;
    for (std::size_t n = 1; n <= 400; ++n) {
        opt.explore(n, optimal_time(n));
        if (n == 60) opt_triples_at_60 = opt.triple_count();
    }
    EXPECT_EQ(opt.triple_count(), opt_triples_at_60);
    EXPECT_EQ(opt.state_count(), 33u);

    detail::DesignCompiler<detail::HalvingDesign> hal("h");
    std::size_t hal_triples_at_30 = 0;
    for (std::size_t n = 1; n <= 400; ++n) {
        hal.explore(n, halving_time(n));
        if (n == 30) hal_triples_at_30 = hal.triple_count();
    }
    EXPECT_EQ(hal.triple_count(), hal_triples_at_30);
    EXPECT_EQ(hal.state_count(), 26u);
}
