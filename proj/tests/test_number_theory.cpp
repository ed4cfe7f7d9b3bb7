#include <gtest/gtest.h>

#include <numeric>

#include "rootnum/error.hpp"
#include "rootnum/number_theory.hpp"
#include "rootnum/prime_power.hpp"
#include "rootnum/sign.hpp"

using namespace rootnum;

namespace {

std::int64_t phi_by_counting(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1)
            ++count;
    return count;
}

} // namespace

TEST(EulerPhi, SmallValues) {
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(12), 4);
    EXPECT_EQ(euler_phi(125), 100); // p^{r-1}(p-1)
    EXPECT_EQ(euler_phi(49), 42);
}

TEST(EulerPhi, MatchesCoprimeCount) {
    for (std::int64_t n = 1; n <= 500; ++n)
        ASSERT_EQ(euler_phi(n), phi_by_counting(n)) << n;
}

TEST(EulerPhi, RejectsNonPositive) {
    EXPECT_THROW(euler_phi(0), Error);
    EXPECT_THROW(factorize(-3), Error);
}

TEST(Factorize, RebuildsN) {
    for (std::int64_t n = 1; n <= 2000; ++n) {
        std::int64_t prod = 1;
        std::int64_t last = 1;
        for (const auto& [p, k] : factorize(n)) {
            ASSERT_TRUE(is_prime(p));
            ASSERT_GT(p, last);
            last = p;
            prod *= checked_pow(p, k);
        }
        ASSERT_EQ(prod, n);
    }
}

TEST(Divisors, AscendingAndComplete) {
    const auto d = divisors(36);
    EXPECT_EQ(d, (std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
    EXPECT_EQ(divisors(1), std::vector<std::int64_t>{1});
}

TEST(PrimePower, Decomposition) {
    EXPECT_EQ(prime_power_decomposition(9), (std::pair<std::int64_t, int>{3, 2}));
    EXPECT_EQ(prime_power_decomposition(2209), (std::pair<std::int64_t, int>{47, 2}));
    EXPECT_FALSE(prime_power_decomposition(12));
    EXPECT_FALSE(prime_power_decomposition(1));
    EXPECT_EQ(PrimePower::from_order(125).f(), 3);
    EXPECT_THROW(PrimePower(4, 1), Error);
    EXPECT_THROW(PrimePower(5, 0), Error);
}

TEST(ModularArithmetic, InverseAndPow) {
    EXPECT_EQ(mod_floor(-7, 5), 3);
    EXPECT_EQ(pow_mod(3, 6, 7), 1);
    EXPECT_EQ(inverse_mod(3, 7), 5);
    EXPECT_FALSE(inverse_mod(4, 8));
    EXPECT_THROW(checked_pow(10, 30), Error);
}

TEST(SignType, Arithmetic) {
    const Sign m = Sign::minus();
    EXPECT_EQ(m * m, Sign::plus());
    EXPECT_EQ(m.pow(3), m);
    EXPECT_EQ(m.pow(0), Sign::plus());
    EXPECT_EQ(Sign::from_parity(5), m);
    EXPECT_EQ(Sign::from_parity(-2), Sign::plus());
    EXPECT_EQ(Sign::from_int(-1), m);
    EXPECT_THROW(Sign::from_int(2), Error);
}
