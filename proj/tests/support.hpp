#pragma once

#include <string>

#include "rootnum/local_data.hpp"

namespace rootnum::testing {

inline PlaceData good(std::string label, std::int64_t p, int f = 1) {
    return {std::move(label), PrimePower(p, f), GoodReduction{}};
}

inline PlaceData abelian(std::string label, std::int64_t p, int f, std::int64_t e, std::int64_t r = 0) {
    return {std::move(label), PrimePower(p, f), PotentiallyGood{e, r, true, true, 0}};
}

inline PlaceData induced(std::string label, std::int64_t p, int f, std::int64_t e, std::int64_t a,
                         std::int64_t r = 0) {
    return {std::move(label), PrimePower(p, f), PotentiallyGood{e, r, false, true, a}};
}

inline PlaceData toric(std::string label, std::int64_t p, int f, ToricSubtype t) {
    return {std::move(label), PrimePower(p, f), PotentiallyToric{t}};
}

} // namespace rootnum::testing
