#include "rootnum/local_data.hpp"

#include <algorithm>
#include <map>

namespace rootnum {

std::string_view to_string(ViolationCode code) {
    switch (code) {
    case ViolationCode::MalformedData: return "MalformedData";
    case ViolationCode::PDividesTameOrder: return "PDividesTameOrder";
    case ViolationCode::TamePhiNotDividing2g: return "TamePhiNotDividing2g";
    case ViolationCode::WildPhiNotDividing2g: return "WildPhiNotDividing2g";
    case ViolationCode::WildPrimeNot3Mod4: return "WildPrimeNot3Mod4";
    case ViolationCode::ForbiddenTameShape: return "ForbiddenTameShape";
    case ViolationCode::TameNotDividingQMinus1: return "TameNotDividingQMinus1";
    case ViolationCode::TameNotDividingQPlus1: return "TameNotDividingQPlus1";
    case ViolationCode::ConductorNotDivisibleBy2g: return "ConductorNotDivisibleBy2g";
    case ViolationCode::ConductorTooSmall: return "ConductorTooSmall";
    case ViolationCode::NonAbelianInertia: return "NonAbelianInertia";
    case ViolationCode::InconsistentFlags: return "InconsistentFlags";
    case ViolationCode::EvenCharacteristic: return "EvenCharacteristic";
    case ViolationCode::DuplicateLabel: return "DuplicateLabel";
    }
    return "Unknown";
}

bool ValidationReport::has(ViolationCode code) const {
    return std::any_of(violations.begin(), violations.end(), [code](const Violation& v) { return v.code == code; });
}

void ValidationReport::merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    outside_hypotheses.insert(outside_hypotheses.end(), other.outside_hypotheses.begin(),
                              other.outside_hypotheses.end());
}

bool admissible_odd_dimension_tame_order(std::int64_t e, std::int64_t p) {
    if (e == 4)
        return true;
    if (e < 1)
        return false;
    std::int64_t odd = (e % 2 == 0) ? e / 2 : e;
    if (odd % 2 == 0)
        return false;
    if (odd == 1)
        return true;
    const auto fs = factorize(odd);
    return fs.size() == 1 && fs[0].prime % 4 == 3 && fs[0].prime != p;
}

namespace {

struct Checker {
    const PlaceData& place;
    ValidationReport report;

    void fail(ViolationCode code, std::string detail) {
        report.violations.push_back({place.label, code, std::move(detail)});
    }
};

void check_potentially_good(Checker& c, const PotentiallyGood& d, std::int64_t g) {
    const std::int64_t p = c.place.pp.p(), q = c.place.pp.q();
    const std::int64_t two_g = 2 * g;
    if (d.e < 1 || d.r < 0 || d.artin_conductor < 0) {
        c.fail(ViolationCode::MalformedData, "need e >= 1, r >= 0, a >= 0");
        return;
    }
    if (d.e % p == 0)
        c.fail(ViolationCode::PDividesTameOrder, "p = " + std::to_string(p) + " divides e = " + std::to_string(d.e));
    if (const auto phi = euler_phi(d.e); two_g % phi != 0)
        c.fail(ViolationCode::TamePhiNotDividing2g,
               "phi(e) = " + std::to_string(phi) + " does not divide 2g = " + std::to_string(two_g));
    if (d.r >= 1) {
        // phi(p^r) = p^{r-1}(p-1); grows fast, so test divisibility step by step.
        std::int64_t phi = p - 1;
        bool divides = two_g % phi == 0;
        for (std::int64_t i = 1; i < d.r && divides; ++i) {
            divides = (two_g / phi) % p == 0;
            phi *= p;
        }
        if (!divides)
            c.fail(ViolationCode::WildPhiNotDividing2g,
                   "p^(r-1)(p-1) with p = " + std::to_string(p) + ", r = " + std::to_string(d.r) +
                       " does not divide 2g = " + std::to_string(two_g));
        if (g % 2 == 1 && p % 4 != 3)
            c.fail(ViolationCode::WildPrimeNot3Mod4, "wild inertia with g odd needs p = 3 mod 4, p = " +
                                                         std::to_string(p));
    }
    if (g % 2 == 1 && !admissible_odd_dimension_tame_order(d.e, p))
        c.fail(ViolationCode::ForbiddenTameShape,
               "e = " + std::to_string(d.e) + " is not s^m, 2s^m or 4 with s = 3 mod 4 prime, s != p");

    if (d.galois_abelian) {
        if (!d.inertia_abelian)
            c.fail(ViolationCode::InconsistentFlags, "abelian Galois image with non-abelian inertia image");
        if ((q - 1) % d.e != 0)
            c.fail(ViolationCode::TameNotDividingQMinus1,
                   "e = " + std::to_string(d.e) + " does not divide q - 1 = " + std::to_string(q - 1));
        return;
    }
    if (!d.inertia_abelian) {
        c.fail(ViolationCode::NonAbelianInertia, "non-abelian inertia image is not covered");
        return;
    }
    if ((q + 1) % d.e != 0)
        c.fail(ViolationCode::TameNotDividingQPlus1,
               "e = " + std::to_string(d.e) + " does not divide q + 1 = " + std::to_string(q + 1));
    if (d.artin_conductor % two_g != 0)
        c.fail(ViolationCode::ConductorNotDivisibleBy2g,
               "a = " + std::to_string(d.artin_conductor) + " is not a multiple of 2g = " + std::to_string(two_g));
    else if (d.artin_conductor < two_g)
        c.fail(ViolationCode::ConductorTooSmall,
               "a = " + std::to_string(d.artin_conductor) + " < 2g for an irreducible induced representation");
}

} // namespace

ValidationReport validate_place(const PlaceData& place, std::int64_t g, const ValidationOptions& options) {
    Checker c{place, {}};
    if (g < 1) {
        c.fail(ViolationCode::MalformedData, "dimension must be >= 1");
        return c.report;
    }
    const bool even_char = place.pp.p() == 2;

    std::visit(
        [&](const auto& red) {
            using T = std::decay_t<decltype(red)>;
            if constexpr (std::is_same_v<T, GoodReduction>) {
                // No constraints; good reduction is allowed in every characteristic.
            } else if constexpr (std::is_same_v<T, PotentiallyGood>) {
                if (even_char)
                    c.fail(ViolationCode::EvenCharacteristic, "potentially good reduction needs p != 2");
                check_potentially_good(c, red, g);
            } else {
                if (!even_char)
                    return;
                const bool multiplicative = red.subtype != ToricSubtype::Additive;
                if (multiplicative && options.allow_p2_multiplicative)
                    c.report.outside_hypotheses.push_back(place.label);
                else
                    c.fail(ViolationCode::EvenCharacteristic,
                           multiplicative ? "p = 2 multiplicative reduction needs the explicit override"
                                          : "additive potentially multiplicative reduction needs p != 2");
            }
        },
        place.reduction);
    return c.report;
}

ValidationReport validate_variety(const RmVarietyData& data, const ValidationOptions& options) {
    ValidationReport report;
    if (data.dimension < 1 || data.infinite_places < 0)
        report.violations.push_back({"", ViolationCode::MalformedData, "need dimension >= 1, infinite_places >= 0"});
    std::map<std::string, int> seen;
    for (const auto& place : data.places)
        if (++seen[place.label] == 2)
            report.violations.push_back({place.label, ViolationCode::DuplicateLabel, "label used more than once"});
    if (data.dimension >= 1)
        for (const auto& place : data.places)
            report.merge(validate_place(place, data.dimension, options));
    return report;
}

} // namespace rootnum
