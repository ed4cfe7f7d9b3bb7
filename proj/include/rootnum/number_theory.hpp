#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rootnum {

struct PrimeFactor {
    std::int64_t prime;
    int exponent;
    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

bool is_prime(std::int64_t n);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimeFactor> factorize(std::int64_t n);

/// Euler's totient. Requires n >= 1.
std::int64_t euler_phi(std::int64_t n);

/// All positive divisors, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Non-negative residue of a mod m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// b^e for small results; throws on overflow past 2^62.
std::int64_t checked_pow(std::int64_t b, int e);

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m);

/// a * b mod m without overflow, result in [0, m).
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

/// Inverse of a mod m; nullopt if gcd(a, m) != 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

/// (p, f) with q = p^f, or nullopt when q is not a prime power.
std::optional<std::pair<std::int64_t, int>> prime_power_decomposition(std::int64_t q);

} // namespace rootnum
