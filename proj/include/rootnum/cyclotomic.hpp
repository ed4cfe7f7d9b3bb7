#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rootnum/sign.hpp"

namespace rootnum {

/// An exact element of Z[zeta_m]: sum of c_j * zeta_m^j over exponent classes j mod m.
///
/// Terms are kept sorted by exponent with zero coefficients dropped, so the raw
/// representation is unique for a given multiset of terms. It is *not* unique as a
/// number (1 + zeta_2 == 0); use canonical() or operator== for value comparisons.
///
/// canonical() rewrites the value in the tensor-product power basis of
/// Z[zeta_m] = (x) Z[zeta_{l^k}] over the prime powers l^k || m, which is a Z-basis.
/// Consequently a value is an integer c iff its canonical form is the single term c*zeta^0.
class CyclotomicValue {
public:
    using Term = std::pair<std::int64_t, std::int64_t>; // (exponent mod m, coefficient)

    /// Zero in Z[zeta_1] = Z.
    CyclotomicValue() = default;

    /// Zero of the given order.
    explicit CyclotomicValue(std::int64_t order);

    static CyclotomicValue integer(std::int64_t c, std::int64_t order = 1);
    static CyclotomicValue root_of_unity(std::int64_t order, std::int64_t exponent, std::int64_t coeff = 1);

    /// Accumulates possibly repeated, unreduced exponents.
    static CyclotomicValue from_terms(std::int64_t order, std::span<const Term> terms);

    std::int64_t order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::int64_t coefficient(std::int64_t exponent) const;
    bool is_raw_zero() const { return terms_.empty(); }

    /// Same value expressed over zeta_{new_order}; new_order must be a multiple of order().
    CyclotomicValue lift(std::int64_t new_order) const;

    /// Same value over the smallest order that still carries every exponent.
    CyclotomicValue compressed() const;

    /// Complex conjugation, zeta -> zeta^{-1}.
    CyclotomicValue conjugate() const;

    /// Galois action zeta_m -> zeta_m^j; requires gcd(j, m) = 1.
    CyclotomicValue galois(std::int64_t j) const;

    /// Unique representative in the tensor power basis (see class comment).
    CyclotomicValue canonical() const;

    std::optional<std::int64_t> as_integer() const;
    std::optional<Sign> as_sign() const;

    /// The value divided by d when the quotient is still in Z[zeta_m].
    std::optional<CyclotomicValue> divide_exact(std::int64_t d) const;

    bool is_zero() const;

    std::complex<double> evaluate() const;

    CyclotomicValue operator-() const;
    friend CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b);
    friend CyclotomicValue operator-(const CyclotomicValue& a, const CyclotomicValue& b);
    friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
    friend CyclotomicValue operator*(std::int64_t c, const CyclotomicValue& a);

    /// Value equality (exact).
    friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);

    /// Term-by-term equality of the stored representation, without reduction.
    bool same_representation(const CyclotomicValue& o) const {
        return order_ == o.order_ && terms_ == o.terms_;
    }

private:
    // Tensor-basis rewrite at the current order, without changing the order.
    CyclotomicValue reduced_basis() const;

    CyclotomicValue(std::int64_t order, std::vector<Term> sorted_terms)
        : order_(order), terms_(std::move(sorted_terms)) {}

    std::int64_t order_ = 1;
    std::vector<Term> terms_;
};

} // namespace rootnum
