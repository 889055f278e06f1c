#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "regdist/orbit.hpp"
#include "regdist/partition.hpp"
#include "regdist/qseries.hpp"

namespace regdist {

inline nlohmann::json to_json(const Partition& p) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& e : p.entries()) parts.push_back({e.size, e.freq});
    return nlohmann::json{{"parts", std::move(parts)}};
}

inline Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array())
        throw std::invalid_argument("partition json must be an object with a \"parts\" array");
    std::vector<Partition::Entry> parts;
    for (const auto& item : j["parts"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw std::invalid_argument("each part must be a [size, frequency] pair");
        parts.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
    }
    return Partition::from_sorted(std::move(parts));
}

// Coefficients that fit in 64 bits stay numbers; anything larger becomes a
// decimal string.
inline nlohmann::json coefficient_json(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

inline nlohmann::json coefficients_json(const Series& a) {
    nlohmann::json out = nlohmann::json::array();
    for (std::int64_t n = 0; n <= a.degree(); ++n) out.push_back(coefficient_json(a[n]));
    return out;
}

inline nlohmann::json to_json(const OrbitReport& report) {
    nlohmann::json j;
    j["start"] = to_json(report.start);
    j["s"] = report.s;
    j["t"] = report.t;
    j["max_iter"] = report.max_iter;
    nlohmann::json trajectory = nlohmann::json::array();
    for (const auto& state : report.trajectory) trajectory.push_back(to_json(state));
    j["trajectory"] = std::move(trajectory);
    switch (report.outcome) {
        case OrbitReport::Outcome::Success:
            j["outcome"] = {{"type", "success"}, {"ell", report.ell}};
            break;
        case OrbitReport::Outcome::Cycle:
            j["outcome"] = {{"type", "cycle"},
                            {"length", report.cycle_length},
                            {"entry_index", report.cycle_entry}};
            break;
        case OrbitReport::Outcome::Exhausted:
            j["outcome"] = {{"type", "exhausted"}, {"max_iter", report.max_iter}};
            break;
    }
    j["half_step_hits"] = report.half_step_hits;
    j["start_in_domain"] = report.start_in_domain;
    j["intervening_domain_hit"] = report.intervening_domain_hit;
    return j;
}

inline nlohmann::json to_json(const Census& c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["s"] = c.s;
    j["t"] = c.t;
    j["max_iter"] = c.max_iter;
    j["total"] = c.total;
    nlohmann::json ells = nlohmann::json::object();
    for (const auto& [ell, count] : c.ell_histogram) ells[std::to_string(ell)] = count;
    j["ell_histogram"] = std::move(ells);
    nlohmann::json cycles = nlohmann::json::object();
    for (const auto& [length, count] : c.cycle_histogram) cycles[std::to_string(length)] = count;
    j["cycle_histogram"] = std::move(cycles);
    j["exhausted"] = c.exhausted;
    j["half_step_hits"] = c.half_step_hits;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& p : c.failures) failures.push_back(to_json(p));
    j["failures"] = std::move(failures);
    if (c.ell0_expected) {
        j["ell0_expected"] = *c.ell0_expected;
        j["ell0_matches"] = c.ell0_matches;
    }
    return j;
}

}  // namespace regdist
