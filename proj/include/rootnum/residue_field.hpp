#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rootnum/prime_power.hpp"

namespace rootnum {

class FieldElement;

namespace detail {
struct FieldTables;

/// Coefficient vectors over F_p, lowest degree first.
using Poly = std::vector<std::int64_t>;

/// a * b reduced by the monic `modulus` (full coefficient vector, leading 1 last).
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::int64_t p);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const Poly& monic, std::int64_t p);
} // namespace detail

/// The finite field F_q, q = p^f, modelled as F_p[x]/(modulus).
///
/// Construction is deterministic: the modulus is the first monic irreducible of
/// degree f and the generator is the first element of multiplicative order q - 1,
/// both in the order of the integer encoding sum c_i p^i (c_0 least significant).
/// Elements are addressed by that encoding ("index") in the fast paths.
///
/// The object is a cheap handle to immutable shared tables (exp/log/trace), sized
/// q; construction is limited to q <= 10^6.
class ResidueField {
public:
    static constexpr std::int64_t max_order = 1'000'000;

    explicit ResidueField(PrimePower pp);

    const PrimePower& prime_power() const;
    std::int64_t p() const { return prime_power().p(); }
    int degree() const { return prime_power().f(); }
    std::int64_t order() const { return prime_power().q(); }

    /// Monic modulus, coefficients c_0 .. c_f with c_f = 1.
    const std::vector<std::int64_t>& modulus() const;

    FieldElement generator() const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(std::int64_t n) const;
    FieldElement element(std::span<const std::int64_t> coeffs) const;
    FieldElement from_index(std::int64_t index) const;
    FieldElement generator_power(std::int64_t j) const;

    // Index-level kernels. Indices are in [0, q); 0 is the zero element.
    std::int64_t add_index(std::int64_t a, std::int64_t b) const;
    std::int64_t neg_index(std::int64_t a) const;
    std::int64_t mul_index(std::int64_t a, std::int64_t b) const;
    /// Discrete log to the generator base; requires a != 0.
    std::int64_t log_index(std::int64_t a) const;
    std::int64_t exp_index(std::int64_t j) const;
    std::int64_t trace_index(std::int64_t a) const;
    std::int64_t minus_one_index() const;

    friend bool operator==(const ResidueField& a, const ResidueField& b) { return a.tables_ == b.tables_; }

private:
    std::shared_ptr<const detail::FieldTables> tables_;
};

class FieldElement {
public:
    FieldElement(ResidueField owner, std::int64_t index) : owner_(std::move(owner)), index_(index) {}

    const ResidueField& owner() const { return owner_; }
    std::int64_t index() const { return index_; }
    std::vector<std::int64_t> coeffs() const;
    bool is_zero() const { return index_ == 0; }

    FieldElement pow(std::int64_t n) const;
    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.owner_ == b.owner_ && a.index_ == b.index_;
    }

private:
    ResidueField owner_;
    std::int64_t index_;
};

/// Discrete log of a nonzero element; Error(ZeroArgument) for zero.
std::int64_t discrete_log(const FieldElement& x);

/// Absolute trace x + x^p + ... + x^{p^{f-1}}, as an integer in [0, p).
std::int64_t trace_to_prime_field(const FieldElement& x);

} // namespace rootnum
