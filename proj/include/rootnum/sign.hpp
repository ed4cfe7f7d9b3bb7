#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "rootnum/error.hpp"

namespace rootnum {

/// An element of {+1, -1}. Root numbers of self-dual objects always land here.
class Sign {
public:
    constexpr Sign() = default;

    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }

    /// (-1)^exponent. Negative exponents are fine.
    static constexpr Sign from_parity(std::int64_t exponent) { return Sign(exponent % 2 != 0); }

    static Sign from_int(std::int64_t v) {
        if (v != 1 && v != -1)
            throw Error(ErrorCode::NonSignValue, "expected +1 or -1, got " + std::to_string(v));
        return Sign(v < 0);
    }

    constexpr int value() const { return negative_ ? -1 : 1; }
    constexpr bool is_plus() const { return !negative_; }
    constexpr bool is_minus() const { return negative_; }

    constexpr Sign operator*(Sign o) const { return Sign(negative_ != o.negative_); }
    constexpr Sign& operator*=(Sign o) {
        negative_ = negative_ != o.negative_;
        return *this;
    }
    constexpr Sign operator-() const { return Sign(!negative_); }

    constexpr Sign pow(std::int64_t n) const { return Sign(negative_ && (n % 2 != 0)); }

    friend constexpr bool operator==(Sign a, Sign b) = default;

private:
    constexpr explicit Sign(bool negative) : negative_(negative) {}
    bool negative_ = false;
};

inline std::ostream& operator<<(std::ostream& os, Sign s) { return os << (s.is_plus() ? "+1" : "-1"); }

} // namespace rootnum
