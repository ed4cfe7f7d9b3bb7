#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rootnum/number_theory.hpp"
#include "rootnum/prime_power.hpp"

namespace rootnum {

struct GoodReduction {
    friend bool operator==(const GoodReduction&, const GoodReduction&) = default;
};

/// Potentially good reduction: the inertia image has order e * p^r with p not dividing e.
struct PotentiallyGood {
    std::int64_t e = 1;
    std::int64_t r = 0;
    bool galois_abelian = true;
    bool inertia_abelian = true;
    std::int64_t artin_conductor = 0; // a(A/K), summed over all embeddings
    friend bool operator==(const PotentiallyGood&, const PotentiallyGood&) = default;
};

enum class ToricSubtype { SplitMultiplicative, NonSplitMultiplicative, Additive };

struct PotentiallyToric {
    ToricSubtype subtype = ToricSubtype::SplitMultiplicative;
    friend bool operator==(const PotentiallyToric&, const PotentiallyToric&) = default;
};

using ReductionClass = std::variant<GoodReduction, PotentiallyGood, PotentiallyToric>;

struct PlaceData {
    std::string label;
    PrimePower pp;
    ReductionClass reduction;
    friend bool operator==(const PlaceData&, const PlaceData&) = default;
};

struct RmVarietyData {
    std::int64_t dimension = 1; // g = [F : Q]
    std::vector<PlaceData> places;
    std::int64_t infinite_places = 0;
    friend bool operator==(const RmVarietyData&, const RmVarietyData&) = default;
};

enum class ViolationCode {
    MalformedData,           // e < 1, r < 0, a < 0, g < 1, ...
    PDividesTameOrder,       // p | e
    TamePhiNotDividing2g,    // phi(e) does not divide 2g
    WildPhiNotDividing2g,    // p^{r-1}(p-1) does not divide 2g
    WildPrimeNot3Mod4,       // r >= 1, g odd, p = 1 mod 4
    ForbiddenTameShape,      // g odd, e not in {s^m, 2 s^m, 4}
    TameNotDividingQMinus1,  // abelian Galois image, e does not divide q - 1
    TameNotDividingQPlus1,   // non-abelian Galois image, e does not divide q + 1
    ConductorNotDivisibleBy2g,
    ConductorTooSmall,       // non-abelian case needs a >= 2g
    NonAbelianInertia,       // no formula: rejected
    InconsistentFlags,       // abelian Galois image with non-abelian inertia
    EvenCharacteristic,      // p = 2 outside the override
    DuplicateLabel,
};

std::string_view to_string(ViolationCode code);

struct Violation {
    std::string label;
    ViolationCode code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    /// Labels of places admitted only through an explicit override (p = 2 multiplicative).
    std::vector<std::string> outside_hypotheses;

    bool passed() const { return violations.empty(); }
    bool has(ViolationCode code) const;
    void merge(const ValidationReport& other);
};

struct ValidationOptions {
    bool allow_p2_multiplicative = false;
};

/// Every structural constraint on a single place, for an RM variety of dimension g.
ValidationReport validate_place(const PlaceData& place, std::int64_t g, const ValidationOptions& options = {});

/// validate_place over all places plus label uniqueness.
ValidationReport validate_variety(const RmVarietyData& data, const ValidationOptions& options = {});

/// True when e has the form s^m, 2 s^m (m >= 0, s = 3 mod 4 prime, s != p) or e = 4.
bool admissible_odd_dimension_tame_order(std::int64_t e, std::int64_t p);

} // namespace rootnum
