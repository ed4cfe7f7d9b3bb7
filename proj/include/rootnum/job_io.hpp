#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rootnum/local_data.hpp"
#include "rootnum/root_engine.hpp"

namespace rootnum::io {

/// Malformed job: carries the JSON path of the offending value, e.g. "$.places[1].reduction.kind".
class JobParseError : public std::runtime_error {
public:
    JobParseError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Job file schema:
//   { "dimension": g, "infinite_places": n,
//     "places": [ { "label": "...", "p": 7, "f": 1,
//                   "reduction": { "kind": "good" }
//                              | { "kind": "potentially_good", "e": 6, "r": 0,
//                                  "galois_abelian": true, "inertia_abelian": true,
//                                  "artin_conductor": 2 }
//                              | { "kind": "potentially_toric",
//                                  "subtype": "split" | "nonsplit" | "additive" } } ] }
// "f" defaults to 1, "infinite_places" to 0, "r" to 0, "inertia_abelian" to true and
// "artin_conductor" to 0. Unknown keys and kinds are errors.

RmVarietyData parse_job(std::string_view text);
RmVarietyData job_from_json(const nlohmann::json& j);
nlohmann::json job_to_json(const RmVarietyData& data);

std::string_view to_string(ToricSubtype subtype);

nlohmann::json validation_to_json(const ValidationReport& report);
nlohmann::json report_to_json(const RootNumberReport& report);

/// Aligned human-readable table with the same sign data as report_to_json.
std::string report_to_table(const RootNumberReport& report);
std::string validation_to_table(const ValidationReport& report);

} // namespace rootnum::io
