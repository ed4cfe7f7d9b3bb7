#include "rootnum/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "rootnum/error.hpp"
#include "rootnum/prime_power.hpp"

namespace rootnum {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::OddConductor: return "OddConductor";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::TrivialCharacter: return "TrivialCharacter";
    case ErrorCode::NotTrivialOnSubfield: return "NotTrivialOnSubfield";
    case ErrorCode::NonSignValue: return "NonSignValue";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<PrimeFactor> factorize(std::int64_t n) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "factorize needs n >= 1, got " + std::to_string(n));
    std::vector<PrimeFactor> out;
    for (std::int64_t d = 2; d <= n / d; ++d) {
        if (n % d != 0)
            continue;
        int k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        out.push_back({d, k});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = n;
    for (const auto& [prime, k] : factorize(n))
        phi = phi / prime * (prime - 1);
    return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [prime, k] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= k; ++i) {
            pk *= prime;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t checked_pow(std::int64_t b, int e) {
    constexpr std::int64_t limit = std::int64_t{1} << 62;
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > limit / (b < 0 ? -b : b))
            throw Error(ErrorCode::BoundExceeded, "integer power overflow");
        r *= b;
    }
    return r;
}

__extension__ using wide = __int128;

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    const wide r = static_cast<wide>(mod_floor(a, m)) * mod_floor(b, m) % m;
    return static_cast<std::int64_t>(r);
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    wide result = 1 % m;
    wide base = mod_floor(b, m);
    while (e > 0) {
        if (e & 1)
            result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = mod_floor(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    if (old_r != 1)
        return std::nullopt;
    return mod_floor(old_s, m);
}

std::optional<std::pair<std::int64_t, int>> prime_power_decomposition(std::int64_t q) {
    if (q < 2)
        return std::nullopt;
    const auto fs = factorize(q);
    if (fs.size() != 1)
        return std::nullopt;
    return std::pair{fs[0].prime, fs[0].exponent};
}

PrimePower::PrimePower(std::int64_t p, int f) : p_(p), f_(f), q_(0) {
    if (!is_prime(p))
        throw Error(ErrorCode::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
    if (f < 1)
        throw Error(ErrorCode::InvalidArgument, "f must be >= 1, got " + std::to_string(f));
    q_ = checked_pow(p, f);
}

PrimePower PrimePower::from_order(std::int64_t q) {
    const auto pf = prime_power_decomposition(q);
    if (!pf)
        throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    return PrimePower(pf->first, pf->second);
}

} // namespace rootnum
