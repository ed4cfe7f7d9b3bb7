#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rootnum/epsilon_oracle.hpp"
#include "rootnum/error.hpp"
#include "rootnum/root_engine.hpp"

using namespace rootnum;
using namespace rootnum::oracle;

namespace {

const Sign plus = Sign::plus();
const Sign minus = Sign::minus();

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& ex) {
        return ex.code();
    }
    ADD_FAILURE() << "no exception";
    return ErrorCode::InternalError;
}

// Float summation of tau(chi) from the definition; shares no code with gauss_sum.
std::complex<double> numeric_tau(const ResidueField& k, std::int64_t index) {
    std::complex<double> s{0.0, 0.0};
    const std::int64_t n = k.order() - 1;
    for (std::int64_t j = 0; j < n; ++j) {
        const double a = static_cast<double>((index * j) % n) / static_cast<double>(n);
        const double b = static_cast<double>(trace_to_prime_field(k.generator_power(j))) / static_cast<double>(k.p());
        s += std::polar(1.0, 2.0 * std::numbers::pi * (a + b));
    }
    return s;
}

TameCharacterDatum datum(std::int64_t p, int f, std::int64_t index) {
    return TameCharacterDatum(MultiplicativeCharacter(ResidueField(PrimePower(p, f)), index));
}

} // namespace

TEST(OracleAbelian, Examples) {
    const ResidueField f5(PrimePower(5, 1));
    for (const auto& chi : characters_of_exact_order(f5, 4))
        EXPECT_EQ(oracle_abelian_pair(TameCharacterDatum(chi)), minus);
    const ResidueField f7(PrimePower(7, 1));
    for (const auto& chi : characters_of_exact_order(f7, 3))
        EXPECT_EQ(oracle_abelian_pair(TameCharacterDatum(chi)), plus);
    for (std::int64_t q : {3, 5, 7, 9, 11, 13, 25, 27}) {
        const ResidueField k(PrimePower::from_order(q));
        const auto quad = characters_of_exact_order(k, 2).at(0);
        EXPECT_EQ(oracle_abelian_pair(TameCharacterDatum(quad)), Sign::from_parity((q - 1) / 2)) << q;
    }
}

TEST(OracleAbelian, Errors) {
    EXPECT_EQ(code_of([] { oracle_abelian_pair(datum(7, 1, 0)); }), ErrorCode::TrivialCharacter);
    EXPECT_EQ(code_of([] { oracle_abelian_pair(datum(2, 3, 1)); }), ErrorCode::EvenCharacteristic);
}

TEST(OracleInduced, WorkedExamplesOverF9) {
    const ResidueField f9(PrimePower(3, 2));
    const MultiplicativeCharacter order2(f9, 4);
    EXPECT_EQ(gauss_sum(order2.conjugate()).as_integer(), 3);
    EXPECT_EQ(oracle_induced(TameCharacterDatum(order2)), minus);
    EXPECT_EQ(oracle_induced(TameCharacterDatum(order2)), sign_pot_good_induced(3, 2, 2));

    const MultiplicativeCharacter order4(f9, 2);
    ASSERT_EQ(order4.order(), 4);
    EXPECT_EQ(oracle_induced(TameCharacterDatum(order4)), plus);
    EXPECT_EQ(oracle_induced(TameCharacterDatum(order4)), sign_pot_good_induced(3, 4, 2));
}

TEST(OracleInduced, F25OrderThree) {
    const ResidueField f25(PrimePower(5, 2));
    for (const std::int64_t idx : {8, 16}) {
        const MultiplicativeCharacter xi(f25, idx);
        ASSERT_EQ(xi.order(), 3);
        EXPECT_EQ(oracle_induced(TameCharacterDatum(xi)), minus);
    }
}

TEST(OracleInduced, Errors) {
    EXPECT_EQ(code_of([] { oracle_induced(datum(3, 2, 1)); }), ErrorCode::NotTrivialOnSubfield);
    EXPECT_EQ(code_of([] { oracle_induced(datum(3, 2, 0)); }), ErrorCode::TrivialCharacter);
    EXPECT_EQ(code_of([] { oracle_induced(datum(7, 1, 2)); }), ErrorCode::InvalidArgument);
}

// The exact oracle value against -tau(conj xi)/q summed in floating point.
TEST(OracleInduced, MatchesNumericGaussSum) {
    for (std::int64_t q : {3, 5, 7, 11}) {
        const ResidueField k(PrimePower(q, 2));
        const std::int64_t n = k.order() - 1;
        for (std::int64_t j = 1; j <= q; ++j) {
            const std::int64_t idx = (q - 1) * j;
            const std::complex<double> t = numeric_tau(k, (n - idx) % n) / static_cast<double>(q);
            ASSERT_LT(std::abs(t.imag()), 1e-9);
            ASSERT_LT(std::abs(std::abs(t.real()) - 1.0), 1e-9);
            const Sign numeric = t.real() < 0 ? plus : minus;
            EXPECT_EQ(oracle_induced(TameCharacterDatum(MultiplicativeCharacter(k, idx))), numeric) << q << " " << idx;
        }
    }
}

TEST(FroehlichQueyrut, Examples) {
    const ResidueField f9(PrimePower(3, 2));
    const auto a = froehlich_queyrut_check(TameCharacterDatum(MultiplicativeCharacter(f9, 4)));
    EXPECT_EQ(a.lhs, plus);
    EXPECT_EQ(a.rhs, plus);
    const auto b = froehlich_queyrut_check(TameCharacterDatum(MultiplicativeCharacter(f9, 2)));
    EXPECT_EQ(b.rhs, minus);
    EXPECT_EQ(b.lhs, minus);
}

TEST(FroehlichQueyrut, FullFamilyOverF49) {
    const ResidueField f49(PrimePower(7, 2));
    int count = 0;
    for (std::int64_t idx = 6; idx < 48; idx += 6) {
        const auto fq = froehlich_queyrut_check(TameCharacterDatum(MultiplicativeCharacter(f49, idx)));
        EXPECT_EQ(fq.lhs, fq.rhs) << idx;
        ++count;
    }
    EXPECT_EQ(count, 7); // the nontrivial characters trivial on F_7^x
}

TEST(OracleSp2, Examples) {
    const ResidueField f7(PrimePower(7, 1)), f9(PrimePower(3, 2)), f5(PrimePower(5, 1));
    EXPECT_EQ(oracle_sp2(EtaClass::Trivial, f7), minus);
    EXPECT_EQ(oracle_sp2(EtaClass::UnramifiedQuadratic, f9), plus);
    EXPECT_EQ(oracle_sp2(EtaClass::RamifiedQuadraticTame, f7), minus);
    EXPECT_EQ(oracle_sp2(EtaClass::RamifiedQuadraticTame, f5), plus);
    EXPECT_EQ(oracle_sp2(EtaClass::RamifiedQuadraticTame, f9), plus);
    EXPECT_EQ(code_of([] { oracle_sp2(EtaClass::RamifiedQuadraticTame, ResidueField(PrimePower(2, 2))); }),
              ErrorCode::EvenCharacteristic);
}

TEST(MinusOneSquare, SmallFields) {
    EXPECT_FALSE(minus_one_is_square(ResidueField(PrimePower(7, 1))));
    EXPECT_TRUE(minus_one_is_square(ResidueField(PrimePower(13, 1))));
    EXPECT_TRUE(minus_one_is_square(ResidueField(PrimePower(3, 2))));
    EXPECT_FALSE(minus_one_is_square(ResidueField(PrimePower(3, 3))));
}

TEST(Helpers, TwistShiftAndConductor) {
    EXPECT_EQ(unramified_twist_epsilon_shift(1, 0, 1, minus), minus);
    EXPECT_EQ(unramified_twist_epsilon_shift(0, 0, 5, minus), plus);
    EXPECT_EQ(unramified_twist_epsilon_shift(2, 1, 2, minus), plus);
    EXPECT_EQ(unramified_twist_epsilon_shift(3, 1, 2, plus), plus);
    EXPECT_EQ(artin_conductor_tame(2, 0), 2);
    EXPECT_EQ(artin_conductor_tame(1, 1), 0);
    EXPECT_EQ(artin_conductor_tame(2, 0), 2 * datum(5, 1, 1).conductor_exponent());
    EXPECT_THROW(artin_conductor_tame(1, 2), Error);
    EXPECT_EQ(quadratic_subfield_order(ResidueField(PrimePower(5, 2))), 5);
    EXPECT_THROW(quadratic_subfield_order(ResidueField(PrimePower(5, 1))), Error);
}
