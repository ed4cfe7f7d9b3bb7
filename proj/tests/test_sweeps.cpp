#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "rootnum/error.hpp"
#include "rootnum/sweeps.hpp"

using namespace rootnum;
using namespace rootnum::verify;

namespace {

void expect_same(const SuiteResult& a, const SuiteResult& b) {
    EXPECT_EQ(a.suite, b.suite);
    EXPECT_EQ(a.checked, b.checked);
    EXPECT_EQ(a.mismatches, b.mismatches);
}

} // namespace

TEST(Kernels, ReferenceAndParallelAgree) {
    const int degrees[] = {1, 2};
    expect_same(verify_abelian(13, degrees, Kernel::Reference), verify_abelian(13, degrees, Kernel::Parallel));
    expect_same(verify_induced(11, Kernel::Reference), verify_induced(11, Kernel::Parallel));
    expect_same(verify_froehlich_queyrut(11, Kernel::Reference), verify_froehlich_queyrut(11, Kernel::Parallel));
    expect_same(verify_sp2(50, Kernel::Reference), verify_sp2(50, Kernel::Parallel));
    expect_same(verify_gauss(32, Kernel::Reference), verify_gauss(32, Kernel::Parallel));
    expect_same(verify_squareness(100, Kernel::Reference), verify_squareness(100, Kernel::Parallel));
    const std::int64_t dims[] = {2};
    expect_same(verify_even_dimension(30, dims, 1, 20, Kernel::Reference),
                verify_even_dimension(30, dims, 1, 20, Kernel::Parallel));
}

TEST(Suites, CountsAtSmallBounds) {
    // odd q <= 100: 24 primes and 9, 25, 27, 49, 81
    EXPECT_EQ(verify_sp2(100).checked, 3 * 29);
    // q = 5: e in {2, 4} -> 1 + 2 characters; q = 3: e = 2 -> 1
    const int f1[] = {1};
    EXPECT_EQ(verify_abelian(5, f1).checked, 4);
    // q = 3: 3 nontrivial xi; q = 5: 5 nontrivial xi
    EXPECT_EQ(verify_induced(5).checked, 8);
}

TEST(Suites, AllPassAtModerateBounds) {
    const int degrees[] = {1, 2, 3};
    EXPECT_TRUE(verify_abelian(11, degrees).passed());
    EXPECT_TRUE(verify_induced(13).passed());
    EXPECT_TRUE(verify_gauss(64).passed());
    const std::int64_t dims[] = {2, 4};
    EXPECT_TRUE(verify_even_dimension(50, dims, 42, 50).passed());
}

TEST(Suites, BoundsEnforced) {
    EXPECT_THROW(verify_induced(Limits::induced_qmax + 1), Error);
    const int f2[] = {2};
    EXPECT_THROW(verify_abelian(101, f2), Error);
    EXPECT_THROW(verify_gauss(Limits::gauss_qmax + 1), Error);
    const std::int64_t odd[] = {3};
    EXPECT_THROW(verify_even_dimension(20, odd, 1, 1), Error);
}

TEST(AdmissiblePlaces, AllValidateAndCoverCases) {
    for (std::int64_t g : {1, 2, 4})
        for (std::int64_t q : {3, 5, 7, 9, 25, 49}) {
            const auto places = admissible_places(g, q);
            std::set<std::string> labels;
            for (const auto& p : places) {
                EXPECT_TRUE(validate_place(p, g).passed()) << p.label;
                EXPECT_TRUE(labels.insert(p.label).second) << p.label;
            }
            EXPECT_GE(places.size(), 4u); // good and the three toric subtypes at least
        }
}

TEST(Sweep, AbelianRowsMatchFormula) {
    SweepGrid grid;
    grid.g = 1;
    grid.cases = {SweepCase::Abelian};
    grid.qs = {5, 7, 11, 13};
    const auto rows = sweep_signs(grid);
    ASSERT_FALSE(rows.empty());
    for (const auto& row : rows) {
        ASSERT_TRUE(row.e && row.r);
        EXPECT_EQ(row.w_iota, Sign::from_parity((row.q - 1) / *row.e));
        EXPECT_EQ(row.w, row.w_iota);
    }
    EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.q, a.sweep_case, a.e, a.r) < std::tie(b.q, b.sweep_case, b.e, b.r);
    }));
}

TEST(Sweep, EvenDimensionColumnIsPlusOne) {
    SweepGrid grid;
    grid.g = 2;
    grid.cases = {SweepCase::Good,  SweepCase::Abelian,  SweepCase::Induced,
                  SweepCase::Split, SweepCase::NonSplit, SweepCase::Additive};
    grid.qs = prime_powers_up_to(60, true);
    grid.rs = {0, 1};
    grid.a_iota = 2;
    const auto rows = sweep_signs(grid);
    ASSERT_FALSE(rows.empty());
    for (const auto& row : rows)
        EXPECT_EQ(row.w, Sign::plus());
}

TEST(Sweep, EmptyAdmissibleSet) {
    SweepGrid grid;
    grid.cases = {SweepCase::Abelian};
    grid.qs = {5};
    grid.es = std::vector<std::int64_t>{7};
    EXPECT_TRUE(sweep_signs(grid).empty());
}

TEST(Sweep, InvalidGrid) {
    SweepGrid grid;
    grid.cases = {SweepCase::Good};
    grid.qs = {12};
    EXPECT_THROW(sweep_signs(grid), Error);
    grid.qs = {5};
    grid.g = 0;
    EXPECT_THROW(sweep_signs(grid), Error);
}

TEST(SweepCaseNames, RoundTrip) {
    for (const auto c : {SweepCase::Good, SweepCase::Abelian, SweepCase::Induced, SweepCase::Split, SweepCase::NonSplit,
                         SweepCase::Additive})
        EXPECT_EQ(parse_sweep_case(to_string(c)), c);
    EXPECT_FALSE(parse_sweep_case("toric"));
}
