#pragma once

#include <cstdint>

namespace rootnum {

/// q = p^f with p prime and f >= 1.
class PrimePower {
public:
    /// Throws Error(InvalidArgument) when p is not prime, f < 1, or q overflows.
    PrimePower(std::int64_t p, int f);

    /// Throws Error(InvalidArgument) when q is not a prime power.
    static PrimePower from_order(std::int64_t q);

    std::int64_t p() const { return p_; }
    int f() const { return f_; }
    std::int64_t q() const { return q_; }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;

private:
    std::int64_t p_;
    int f_;
    std::int64_t q_;
};

} // namespace rootnum
