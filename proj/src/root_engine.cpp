#include "rootnum/root_engine.hpp"

#include <string>

#include "rootnum/error.hpp"

namespace rootnum {

std::string_view to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::GoodRed: return "GoodRed";
    case CaseTag::PotGoodAbelian: return "PotGoodAbelian";
    case CaseTag::PotGoodInduced: return "PotGoodInduced";
    case CaseTag::SplitMult: return "SplitMult";
    case CaseTag::NonSplitMult: return "NonSplitMult";
    case CaseTag::AdditiveMult: return "AdditiveMult";
    }
    return "Unknown";
}

namespace {

void require_odd(std::int64_t q) {
    if (q % 2 == 0)
        throw Error(ErrorCode::EvenCharacteristic, "q = " + std::to_string(q) + " is even");
}

std::string first_violation(const ValidationReport& report) {
    const auto& v = report.violations.front();
    return (v.label.empty() ? std::string() : v.label + ": ") + std::string(to_string(v.code)) + " (" + v.detail + ")";
}

} // namespace

Sign sign_pot_good_abelian(std::int64_t q, std::int64_t e) {
    require_odd(q);
    if (e < 1 || (q - 1) % e != 0)
        throw Error(ErrorCode::DivisibilityViolation,
                    "e = " + std::to_string(e) + " does not divide q - 1 = " + std::to_string(q - 1));
    return Sign::from_parity((q - 1) / e);
}

Sign sign_pot_good_induced(std::int64_t q, std::int64_t e, std::int64_t a_iota) {
    require_odd(q);
    if (e < 1 || (q + 1) % e != 0)
        throw Error(ErrorCode::DivisibilityViolation,
                    "e = " + std::to_string(e) + " does not divide q + 1 = " + std::to_string(q + 1));
    if (a_iota % 2 != 0 || a_iota < 2)
        throw Error(ErrorCode::OddConductor, "a(rho_iota) = " + std::to_string(a_iota) + " must be even and >= 2");
    return Sign::from_parity(a_iota / 2 + (q + 1) / e);
}

ToricSigns sign_toric(ToricSubtype subtype, std::int64_t q, std::int64_t g) {
    switch (subtype) {
    case ToricSubtype::SplitMultiplicative: return {Sign::minus().pow(g), Sign::minus()};
    case ToricSubtype::NonSplitMultiplicative: return {Sign::plus(), Sign::plus()};
    case ToricSubtype::Additive: {
        if (q % 2 == 0)
            throw Error(ErrorCode::UnsupportedCase, "additive potentially multiplicative reduction with p = 2");
        const Sign w_iota = Sign::from_parity((q - 1) / 2);
        return {w_iota.pow(g), w_iota};
    }
    }
    throw Error(ErrorCode::InternalError, "unknown toric subtype");
}

PlaceSign sign_place(const PlaceData& place, std::int64_t g, const ValidationOptions& options) {
    const ValidationReport report = validate_place(place, g, options);
    if (!report.passed())
        throw Error(ErrorCode::ValidationFailed, first_violation(report));

    const std::int64_t q = place.pp.q();
    PlaceSign out;
    out.label = place.label;
    out.outside_hypotheses = !report.outside_hypotheses.empty();

    std::visit(
        [&](const auto& red) {
            using T = std::decay_t<decltype(red)>;
            if constexpr (std::is_same_v<T, GoodReduction>) {
                out.case_tag = CaseTag::GoodRed;
                out.w_iota = Sign::plus();
                out.w = Sign::plus();
            } else if constexpr (std::is_same_v<T, PotentiallyGood>) {
                if (red.galois_abelian) {
                    out.case_tag = CaseTag::PotGoodAbelian;
                    out.w_iota = sign_pot_good_abelian(q, red.e);
                    out.w = out.w_iota.pow(g);
                } else {
                    // a(A/K) = g * a(rho_iota): all embeddings carry the same conductor.
                    out.case_tag = CaseTag::PotGoodInduced;
                    const std::int64_t a_iota = red.artin_conductor / g;
                    out.w_iota = sign_pot_good_induced(q, red.e, a_iota);
                    out.w = out.w_iota.pow(g);
                    const Sign direct = Sign::from_parity(red.artin_conductor / 2 + g * ((q + 1) / red.e));
                    if (direct != out.w)
                        throw Error(ErrorCode::InternalError, "per-embedding and global conductor forms disagree");
                }
            } else {
                const ToricSigns t = sign_toric(red.subtype, q, g);
                out.w = t.w;
                out.w_iota = t.w_iota;
                switch (red.subtype) {
                case ToricSubtype::SplitMultiplicative: out.case_tag = CaseTag::SplitMult; break;
                case ToricSubtype::NonSplitMultiplicative: out.case_tag = CaseTag::NonSplitMult; break;
                case ToricSubtype::Additive: out.case_tag = CaseTag::AdditiveMult; break;
                }
            }
        },
        place.reduction);

    if (g % 2 == 0) {
        if (out.w != Sign::plus())
            throw Error(ErrorCode::InternalError,
                        "even dimension but the " + std::string(to_string(out.case_tag)) + " formula gave -1");
        out.even_dim_shortcut = true;
    }
    return out;
}

RootNumberReport sign_global(const RmVarietyData& data, const ValidationOptions& options) {
    RootNumberReport report;
    report.dimension = data.dimension;
    report.infinite_places = data.infinite_places;
    report.validation = validate_variety(data, options);
    if (!report.validation.passed())
        throw Error(ErrorCode::ValidationFailed, first_violation(report.validation));

    Sign w, w_iota;
    for (const auto& place : data.places) {
        PlaceSign s = sign_place(place, data.dimension, options);
        w *= s.w;
        w_iota *= s.w_iota;
        report.per_place.push_back(std::move(s));
    }
    // Each infinite place contributes (-1)^g to w and -1 to w_iota.
    w *= Sign::minus().pow(data.dimension * data.infinite_places);
    w_iota *= Sign::minus().pow(data.infinite_places);
    if (w != w_iota.pow(data.dimension))
        throw Error(ErrorCode::InternalError, "global w differs from w_iota^g");
    if (data.dimension % 2 == 0 && w != Sign::plus())
        throw Error(ErrorCode::InternalError, "even dimension with global w = -1");
    report.global_w = w;
    report.global_w_iota = w_iota;
    return report;
}

} // namespace rootnum
