#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rootnum/local_data.hpp"
#include "rootnum/sign.hpp"

namespace rootnum {

enum class CaseTag { GoodRed, PotGoodAbelian, PotGoodInduced, SplitMult, NonSplitMult, AdditiveMult };

std::string_view to_string(CaseTag tag);

/// Local signs at one finite place: w = w(A/K) and w_iota = w(rho_iota) for one embedding.
struct PlaceSign {
    std::string label;
    Sign w;
    Sign w_iota;
    CaseTag case_tag = CaseTag::GoodRed;
    /// Set for even g once the case formula has been cross-checked against w = +1.
    bool even_dim_shortcut = false;
    bool outside_hypotheses = false;
};

struct ToricSigns {
    Sign w;
    Sign w_iota;
};

struct RootNumberReport {
    std::int64_t dimension = 1;
    std::int64_t infinite_places = 0;
    std::vector<PlaceSign> per_place;
    Sign global_w;
    Sign global_w_iota;
    ValidationReport validation;
};

/// (-1)^{(q-1)/e}; requires e | q - 1 and q odd.
Sign sign_pot_good_abelian(std::int64_t q, std::int64_t e);

/// (-1)^{a_iota/2 + (q+1)/e}; requires e | q + 1, a_iota even and >= 2, q odd.
Sign sign_pot_good_induced(std::int64_t q, std::int64_t e, std::int64_t a_iota);

/// Potentially totally toric reduction. Additive needs q odd.
ToricSigns sign_toric(ToricSubtype subtype, std::int64_t q, std::int64_t g);

/// Signs at a single place. Throws Error(ValidationFailed) unless validate_place passes.
PlaceSign sign_place(const PlaceData& place, std::int64_t g, const ValidationOptions& options = {});

/// Per-place signs and the global products, including (-1) per infinite place and embedding.
/// Throws Error(ValidationFailed) unless validate_variety passes.
RootNumberReport sign_global(const RmVarietyData& data, const ValidationOptions& options = {});

} // namespace rootnum
