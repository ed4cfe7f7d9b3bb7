#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rootnum/local_data.hpp"
#include "support.hpp"

using namespace rootnum;
using namespace rootnum::testing;

TEST(ValidatePlace, WildPartNeedsDivisibility) {
    const auto report = validate_place(abelian("v5", 5, 1, 4, 1), 1);
    EXPECT_FALSE(report.passed());
    EXPECT_TRUE(report.has(ViolationCode::WildPhiNotDividing2g));
    EXPECT_TRUE(report.has(ViolationCode::WildPrimeNot3Mod4));
}

TEST(ValidatePlace, AdmissibleAbelian) {
    EXPECT_TRUE(validate_place(abelian("v7", 7, 1, 3), 1).passed());
    EXPECT_TRUE(validate_place(abelian("v7", 7, 1, 6), 1).passed());
    EXPECT_TRUE(validate_place(abelian("v13", 13, 1, 4), 1).passed());
}

TEST(ValidatePlace, ForbiddenTameShape) {
    const auto report = validate_place(abelian("v5", 5, 1, 8), 1);
    EXPECT_TRUE(report.has(ViolationCode::ForbiddenTameShape));
    // 5 = 1 mod 4 is not an allowed s
    EXPECT_TRUE(validate_place(abelian("v11", 11, 1, 5), 1).has(ViolationCode::ForbiddenTameShape));
    // allowed for even g once phi(e) | 2g
    EXPECT_FALSE(validate_place(abelian("v11", 11, 1, 5), 2).has(ViolationCode::ForbiddenTameShape));
}

TEST(ValidatePlace, TameOrderRouting) {
    EXPECT_TRUE(validate_place(abelian("v", 5, 1, 3), 1).has(ViolationCode::TameNotDividingQMinus1));
    EXPECT_TRUE(validate_place(induced("v", 5, 1, 3, 2), 1).passed());
    EXPECT_TRUE(validate_place(induced("v", 7, 1, 3, 2), 1).has(ViolationCode::TameNotDividingQPlus1));
}

TEST(ValidatePlace, Conductor) {
    EXPECT_TRUE(validate_place(induced("v", 5, 1, 3, 3), 1).has(ViolationCode::ConductorNotDivisibleBy2g));
    EXPECT_TRUE(validate_place(induced("v", 5, 1, 3, 0), 1).has(ViolationCode::ConductorTooSmall));
    EXPECT_TRUE(validate_place(induced("v", 5, 1, 3, 2), 2).has(ViolationCode::ConductorNotDivisibleBy2g));
    EXPECT_TRUE(validate_place(induced("v", 5, 1, 3, 4), 2).passed());
}

TEST(ValidatePlace, PDividesTameOrder) {
    EXPECT_TRUE(validate_place(abelian("v", 3, 2, 4), 1).passed());
    EXPECT_TRUE(validate_place(abelian("v", 3, 2, 6), 2).has(ViolationCode::PDividesTameOrder));
}

TEST(ValidatePlace, InertiaFlags) {
    PlaceData nonab{"v", PrimePower(5, 1), PotentiallyGood{3, 0, false, false, 2}};
    EXPECT_TRUE(validate_place(nonab, 1).has(ViolationCode::NonAbelianInertia));
    PlaceData bad{"v", PrimePower(7, 1), PotentiallyGood{3, 0, true, false, 0}};
    EXPECT_TRUE(validate_place(bad, 1).has(ViolationCode::InconsistentFlags));
    PlaceData neg{"v", PrimePower(7, 1), PotentiallyGood{0, 0, true, true, 0}};
    EXPECT_TRUE(validate_place(neg, 1).has(ViolationCode::MalformedData));
}

TEST(ValidatePlace, CharacteristicTwoPolicy) {
    EXPECT_TRUE(validate_place(good("v2", 2), 1).passed());
    EXPECT_TRUE(validate_place(toric("v2", 2, 1, ToricSubtype::Additive), 1).has(ViolationCode::EvenCharacteristic));
    EXPECT_TRUE(
        validate_place(toric("v2", 2, 1, ToricSubtype::SplitMultiplicative), 1).has(ViolationCode::EvenCharacteristic));
    EXPECT_TRUE(validate_place(abelian("v2", 2, 2, 3), 1).has(ViolationCode::EvenCharacteristic));

    const ValidationOptions allow{true};
    const auto split = validate_place(toric("v2", 2, 1, ToricSubtype::SplitMultiplicative), 1, allow);
    EXPECT_TRUE(split.passed());
    EXPECT_EQ(split.outside_hypotheses, std::vector<std::string>{"v2"});
    EXPECT_TRUE(validate_place(toric("v2", 2, 1, ToricSubtype::Additive), 1, allow).has(ViolationCode::EvenCharacteristic));
}

TEST(ValidateVariety, Aggregation) {
    EXPECT_TRUE(validate_variety({2, {}, 0}).passed());

    const auto dup = validate_variety({1, {good("a", 3), good("a", 5)}, 0});
    EXPECT_TRUE(dup.has(ViolationCode::DuplicateLabel));

    const auto mixed = validate_variety({1, {abelian("ok", 7, 1, 3), abelian("bad", 5, 1, 8)}, 0});
    ASSERT_FALSE(mixed.passed());
    for (const auto& v : mixed.violations)
        EXPECT_EQ(v.label, "bad");

    EXPECT_TRUE(validate_variety({0, {}, 0}).has(ViolationCode::MalformedData));
    EXPECT_TRUE(validate_variety({1, {}, -1}).has(ViolationCode::MalformedData));
}

TEST(ValidatePlace, FlagRoutingIsExclusive) {
    for (std::int64_t p : {3, 5, 7, 11, 13})
        for (std::int64_t e = 2; e <= 24; ++e)
            for (std::int64_t g : {1, 2, 3}) {
                const auto ab = validate_place(abelian("v", p, 1, e), g);
                const auto na = validate_place(induced("v", p, 1, e, 2 * g), g);
                EXPECT_FALSE(ab.has(ViolationCode::TameNotDividingQPlus1));
                EXPECT_FALSE(na.has(ViolationCode::TameNotDividingQMinus1));
                EXPECT_EQ(ab.has(ViolationCode::TameNotDividingQMinus1), (p - 1) % e != 0);
                EXPECT_EQ(na.has(ViolationCode::TameNotDividingQPlus1), (p + 1) % e != 0);
            }
}

TEST(ValidatePlace, WildPassesOnlyAtThreeModFour) {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23})
        for (std::int64_t r = 1; r <= 3; ++r)
            for (std::int64_t g : {1, 3, 5, 9, 11})
                for (std::int64_t e : divisors(p - 1)) {
                    const auto rep = validate_place(abelian("v", p, 1, e, r), g);
                    if (rep.passed())
                        EXPECT_EQ(p % 4, 3) << p << " r=" << r << " g=" << g;
                }
}

TEST(ValidateVariety, PassesIffPlacesPassAndLabelsUnique) {
    std::mt19937_64 rng(3);
    const std::vector<PlaceData> pool = {abelian("a", 7, 1, 3),   abelian("b", 5, 1, 8),
                                         induced("c", 5, 1, 3, 2), induced("d", 7, 1, 4, 3),
                                         good("e", 11),           toric("f", 2, 1, ToricSubtype::Additive),
                                         toric("g", 3, 1, ToricSubtype::NonSplitMultiplicative)};
    for (int trial = 0; trial < 300; ++trial) {
        RmVarietyData data{1, {}, 0};
        const int n = static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i)
            data.places.push_back(pool[rng() % pool.size()]);
        bool expect = true;
        std::set<std::string> seen;
        for (const auto& pl : data.places) {
            expect = expect && validate_place(pl, 1).passed();
            expect = expect && seen.insert(pl.label).second;
        }
        EXPECT_EQ(validate_variety(data).passed(), expect);
    }
}

TEST(AdmissibleTameOrder, Shapes) {
    EXPECT_TRUE(admissible_odd_dimension_tame_order(4, 5));
    EXPECT_TRUE(admissible_odd_dimension_tame_order(3, 5));
    EXPECT_TRUE(admissible_odd_dimension_tame_order(6, 5));
    EXPECT_TRUE(admissible_odd_dimension_tame_order(9, 5));
    EXPECT_TRUE(admissible_odd_dimension_tame_order(14, 5));
    EXPECT_FALSE(admissible_odd_dimension_tame_order(3, 3));
    EXPECT_FALSE(admissible_odd_dimension_tame_order(5, 3));
    EXPECT_FALSE(admissible_odd_dimension_tame_order(8, 3));
    EXPECT_FALSE(admissible_odd_dimension_tame_order(12, 5));
}
