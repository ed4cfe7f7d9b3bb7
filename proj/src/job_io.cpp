#include "rootnum/job_io.hpp"

#include <algorithm>
#include <iomanip>
#include <initializer_list>
#include <sstream>

#include "rootnum/error.hpp"

namespace rootnum::io {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& path) {
    if (!j.is_object())
        throw JobParseError(path, "expected an object");
}

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& path) {
    for (const auto& [key, value] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw JobParseError(path + "." + key, "unknown key");
}

std::int64_t get_int(const json& j, const std::string& key, const std::string& path,
                     std::optional<std::int64_t> fallback = std::nullopt) {
    const auto it = j.find(key);
    if (it == j.end()) {
        if (fallback)
            return *fallback;
        throw JobParseError(path + "." + key, "missing required integer");
    }
    if (!it->is_number_integer())
        throw JobParseError(path + "." + key, "expected an integer");
    return it->get<std::int64_t>();
}

bool get_bool(const json& j, const std::string& key, const std::string& path, std::optional<bool> fallback) {
    const auto it = j.find(key);
    if (it == j.end()) {
        if (fallback)
            return *fallback;
        throw JobParseError(path + "." + key, "missing required boolean");
    }
    if (!it->is_boolean())
        throw JobParseError(path + "." + key, "expected a boolean");
    return it->get<bool>();
}

std::string get_string(const json& j, const std::string& key, const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end())
        throw JobParseError(path + "." + key, "missing required string");
    if (!it->is_string())
        throw JobParseError(path + "." + key, "expected a string");
    return it->get<std::string>();
}

ReductionClass parse_reduction(const json& j, const std::string& path) {
    require_object(j, path);
    const std::string kind = get_string(j, "kind", path);
    if (kind == "good") {
        check_keys(j, {"kind"}, path);
        return GoodReduction{};
    }
    if (kind == "potentially_good") {
        check_keys(j, {"kind", "e", "r", "galois_abelian", "inertia_abelian", "artin_conductor"}, path);
        PotentiallyGood d;
        d.e = get_int(j, "e", path);
        d.r = get_int(j, "r", path, 0);
        d.galois_abelian = get_bool(j, "galois_abelian", path, std::nullopt);
        d.inertia_abelian = get_bool(j, "inertia_abelian", path, true);
        d.artin_conductor = get_int(j, "artin_conductor", path, 0);
        return d;
    }
    if (kind == "potentially_toric") {
        check_keys(j, {"kind", "subtype"}, path);
        const std::string s = get_string(j, "subtype", path);
        for (const ToricSubtype t :
             {ToricSubtype::SplitMultiplicative, ToricSubtype::NonSplitMultiplicative, ToricSubtype::Additive})
            if (s == to_string(t))
                return PotentiallyToric{t};
        throw JobParseError(path + ".subtype", "unknown subtype '" + s + "'");
    }
    throw JobParseError(path + ".kind", "unknown kind '" + kind + "'");
}

json reduction_to_json(const ReductionClass& red) {
    return std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, GoodReduction>) {
                return {{"kind", "good"}};
            } else if constexpr (std::is_same_v<T, PotentiallyGood>) {
                return {{"kind", "potentially_good"},     {"e", r.e},
                        {"r", r.r},                       {"galois_abelian", r.galois_abelian},
                        {"inertia_abelian", r.inertia_abelian}, {"artin_conductor", r.artin_conductor}};
            } else {
                return {{"kind", "potentially_toric"}, {"subtype", to_string(r.subtype)}};
            }
        },
        red);
}

} // namespace

std::string_view to_string(ToricSubtype subtype) {
    switch (subtype) {
    case ToricSubtype::SplitMultiplicative: return "split";
    case ToricSubtype::NonSplitMultiplicative: return "nonsplit";
    case ToricSubtype::Additive: return "additive";
    }
    return "unknown";
}

RmVarietyData parse_job(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw JobParseError("$", std::string("invalid JSON: ") + ex.what());
    }
    return job_from_json(j);
}

RmVarietyData job_from_json(const json& j) {
    require_object(j, "$");
    check_keys(j, {"dimension", "infinite_places", "places"}, "$");
    RmVarietyData data;
    data.dimension = get_int(j, "dimension", "$");
    data.infinite_places = get_int(j, "infinite_places", "$", 0);
    const auto it = j.find("places");
    if (it == j.end())
        return data;
    if (!it->is_array())
        throw JobParseError("$.places", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string path = "$.places[" + std::to_string(i) + "]";
        const json& pj = (*it)[i];
        require_object(pj, path);
        check_keys(pj, {"label", "p", "f", "reduction"}, path);
        const std::string label = get_string(pj, "label", path);
        const std::int64_t p = get_int(pj, "p", path);
        const std::int64_t f = get_int(pj, "f", path, 1);
        std::optional<PrimePower> pp;
        try {
            pp.emplace(p, static_cast<int>(f));
        } catch (const Error& ex) {
            throw JobParseError(path, ex.what());
        }
        const auto rit = pj.find("reduction");
        if (rit == pj.end())
            throw JobParseError(path + ".reduction", "missing reduction object");
        data.places.push_back({label, *pp, parse_reduction(*rit, path + ".reduction")});
    }
    return data;
}

json job_to_json(const RmVarietyData& data) {
    json places = json::array();
    for (const auto& place : data.places)
        places.push_back({{"label", place.label},
                          {"p", place.pp.p()},
                          {"f", place.pp.f()},
                          {"reduction", reduction_to_json(place.reduction)}});
    return {{"dimension", data.dimension}, {"infinite_places", data.infinite_places}, {"places", places}};
}

json validation_to_json(const ValidationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"label", v.label}, {"code", to_string(v.code)}, {"detail", v.detail}});
    return {{"passed", report.passed()}, {"violations", violations}, {"outside_hypotheses", report.outside_hypotheses}};
}

json report_to_json(const RootNumberReport& report) {
    json places = json::array();
    for (const auto& s : report.per_place)
        places.push_back({{"label", s.label},
                          {"case", to_string(s.case_tag)},
                          {"w", s.w.value()},
                          {"w_iota", s.w_iota.value()},
                          {"even_dim_shortcut", s.even_dim_shortcut},
                          {"outside_hypotheses", s.outside_hypotheses}});
    return {{"dimension", report.dimension},
            {"infinite_places", report.infinite_places},
            {"places", places},
            {"global_w", report.global_w.value()},
            {"global_w_iota", report.global_w_iota.value()},
            {"validation", validation_to_json(report.validation)}};
}

std::string report_to_table(const RootNumberReport& report) {
    std::size_t width = 5;
    for (const auto& s : report.per_place)
        width = std::max(width, s.label.size());
    std::ostringstream os;
    os << "dimension " << report.dimension << ", infinite places " << report.infinite_places << "\n";
    os << std::left << std::setw(static_cast<int>(width)) << "label" << "  " << std::setw(15) << "case"
       << std::right << std::setw(4) << "w" << std::setw(8) << "w_iota" << "\n";
    for (const auto& s : report.per_place) {
        os << std::left << std::setw(static_cast<int>(width)) << s.label << "  " << std::setw(15)
           << to_string(s.case_tag) << std::right << std::setw(4) << s.w.value() << std::setw(8) << s.w_iota.value();
        if (s.outside_hypotheses)
            os << "  (p=2 override)";
        os << "\n";
    }
    os << "global w = " << report.global_w.value() << ", global w_iota = " << report.global_w_iota.value() << "\n";
    return os.str();
}

std::string validation_to_table(const ValidationReport& report) {
    std::ostringstream os;
    if (report.passed()) {
        os << "validation passed\n";
        return os.str();
    }
    os << "validation failed (" << report.violations.size() << " violation"
       << (report.violations.size() == 1 ? "" : "s") << ")\n";
    for (const auto& v : report.violations)
        os << "  " << (v.label.empty() ? "<job>" : v.label) << ": " << to_string(v.code) << ": " << v.detail << "\n";
    return os.str();
}

} // namespace rootnum::io
