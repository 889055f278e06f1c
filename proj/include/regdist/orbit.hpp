#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "regdist/glaisher.hpp"
#include "regdist/partition.hpp"
#include "regdist/qseries.hpp"

namespace regdist {

// One step of the iterated map: phi base t first, then phi base s.
inline Partition step_T(const Partition& p, std::int64_t s, std::int64_t t) {
    detail::check_modulus(s);
    detail::check_modulus(t);
    return phi(phi(p, t), s);
}

// What happens when step_T is iterated from a starting partition, looking
// for a state that is t-regular and s-distinct (the target set).
struct OrbitReport {
    enum class Outcome { Success, Cycle, Exhausted };

    Partition start;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t max_iter = 0;
    // trajectory[i] is the i-th iterate of start (index 0 is start itself).
    // On a cycle the final element repeats trajectory[cycle_entry].
    std::vector<Partition> trajectory;
    Outcome outcome = Outcome::Exhausted;
    std::int64_t ell = -1;          // Success: first index landing in the target set
    std::int64_t cycle_length = 0;  // Cycle
    std::int64_t cycle_entry = 0;   // Cycle: index where the cycle is entered
    // Step indices i whose intermediate phi-base-t image of trajectory[i] is
    // already in the target set.
    std::vector<std::int64_t> half_step_hits;
    // Whether start itself is s-regular and t-distinct.  Starting outside
    // that set is allowed; the flag lets callers warn about it.
    bool start_in_domain = true;
    // Whether some state strictly between start and the final state is
    // s-regular and t-distinct again.
    bool intervening_domain_hit = false;
};

inline OrbitReport classify_orbit(const Partition& p, std::int64_t s, std::int64_t t,
                                  std::int64_t max_iter) {
    detail::check_modulus(s);
    detail::check_modulus(t);
    if (max_iter < 0) throw std::invalid_argument("max_iter must be nonnegative");
    OrbitReport report;
    report.start = p;
    report.s = s;
    report.t = t;
    report.max_iter = max_iter;
    report.start_in_domain = is_regular(p, s) && is_distinct(p, t);
    const auto in_target = [&](const Partition& q) {
        return is_regular(q, t) && is_distinct(q, s);
    };
    report.trajectory.push_back(p);
    if (in_target(p)) {
        report.outcome = OrbitReport::Outcome::Success;
        report.ell = 0;
        return report;
    }
    std::map<Partition, std::int64_t> first_seen;
    first_seen.emplace(p, 0);
    for (std::int64_t iter = 1; iter <= max_iter; ++iter) {
        const Partition half = phi(report.trajectory.back(), t);
        if (in_target(half)) report.half_step_hits.push_back(iter - 1);
        Partition next = phi(half, s);
        report.trajectory.push_back(next);
        if (in_target(next)) {
            report.outcome = OrbitReport::Outcome::Success;
            report.ell = iter;
            break;
        }
        const auto [it, inserted] = first_seen.emplace(std::move(next), iter);
        if (!inserted) {
            report.outcome = OrbitReport::Outcome::Cycle;
            report.cycle_entry = it->second;
            report.cycle_length = iter - it->second;
            break;
        }
    }
    for (std::size_t i = 1; i + 1 < report.trajectory.size(); ++i) {
        if (is_regular(report.trajectory[i], s) && is_distinct(report.trajectory[i], t)) {
            report.intervening_domain_hit = true;
            break;
        }
    }
    return report;
}

inline std::string describe(const OrbitReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.trajectory.size(); ++i) {
        const std::string text = format_partition(report.trajectory[i]);
        out << i << ": " << (text.empty() ? "(empty)" : text) << "\n";
    }
    switch (report.outcome) {
        case OrbitReport::Outcome::Success:
            out << "outcome: success (ell = " << report.ell << ")\n";
            break;
        case OrbitReport::Outcome::Cycle:
            out << "outcome: cycle (length " << report.cycle_length << ", entered at step "
                << report.cycle_entry << ")\n";
            break;
        case OrbitReport::Outcome::Exhausted:
            out << "outcome: exhausted (max_iter = " << report.max_iter << ")\n";
            break;
    }
    if (!report.half_step_hits.empty()) {
        out << "half-step hits at steps:";
        for (const std::int64_t i : report.half_step_hits) out << ' ' << i;
        out << "\n";
    }
    if (report.intervening_domain_hit)
        out << "note: an intermediate state is " << report.s << "-regular and " << report.t
            << "-distinct again\n";
    return out.str();
}

// Orbit statistics over every s-regular t-distinct partition of n.
struct Census {
    std::int64_t n = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t max_iter = 0;
    std::int64_t total = 0;  // number of starting partitions
    std::map<std::int64_t, std::int64_t> ell_histogram;
    std::map<std::int64_t, std::int64_t> cycle_histogram;
    std::int64_t exhausted = 0;
    std::int64_t half_step_hits = 0;
    std::vector<Partition> failures;  // starts that fall into a cycle
    // For s < t, the count of immediate successes predicted by the
    // three-condition generating function.
    std::optional<std::int64_t> ell0_expected;
    bool ell0_matches = true;
};

// max_iter <= 0 picks p(n) + 1 automatically, which is always enough to
// reach a success or close a cycle.
inline Census census(std::int64_t n, std::int64_t s, std::int64_t t, std::int64_t max_iter = 0,
                     std::int64_t bound = kEnumerationBound) {
    detail::check_modulus(s);
    detail::check_modulus(t);
    Census result;
    result.n = n;
    result.s = s;
    result.t = t;
    if (max_iter <= 0) {
        if (n < 0) throw std::invalid_argument("cannot census partitions of a negative integer");
        if (n > bound)
            throw std::invalid_argument("enumeration bound exceeded: n = " + std::to_string(n) +
                                        " > " + std::to_string(bound));
        max_iter = to_int64(eta_quotient({}, {1}, n)[n]) + 1;
    }
    result.max_iter = max_iter;
    for_each_partition(
        n,
        [&](const Partition& p) {
            if (!is_regular(p, s) || !is_distinct(p, t)) return;
            ++result.total;
            const OrbitReport report = classify_orbit(p, s, t, max_iter);
            result.half_step_hits += static_cast<std::int64_t>(report.half_step_hits.size());
            switch (report.outcome) {
                case OrbitReport::Outcome::Success:
                    ++result.ell_histogram[report.ell];
                    break;
                case OrbitReport::Outcome::Cycle:
                    ++result.cycle_histogram[report.cycle_length];
                    result.failures.push_back(p);
                    break;
                case OrbitReport::Outcome::Exhausted:
                    ++result.exhausted;
                    break;
            }
        },
        bound);
    if (s < t) {
        result.ell0_expected = to_int64(gf_regular_regular_distinct(s, t, n)[n]);
        const auto it = result.ell_histogram.find(0);
        const std::int64_t got = it == result.ell_histogram.end() ? 0 : it->second;
        result.ell0_matches = got == *result.ell0_expected;
    }
    return result;
}

inline std::string to_table(const Census& c) {
    std::ostringstream out;
    out << "census  n=" << c.n << "  s=" << c.s << "  t=" << c.t << "  max_iter=" << c.max_iter
        << "\n";
    out << "starting partitions: " << c.total << "\n";
    if (!c.ell_histogram.empty()) {
        out << "   ell  count\n";
        for (const auto& [ell, count] : c.ell_histogram)
            out << std::setw(6) << ell << "  " << count << "\n";
    }
    if (!c.cycle_histogram.empty()) {
        out << "  cycle  count\n";
        for (const auto& [length, count] : c.cycle_histogram)
            out << std::setw(6) << length << "  " << count << "\n";
    }
    if (c.exhausted > 0) out << "exhausted: " << c.exhausted << "\n";
    out << "half-step hits: " << c.half_step_hits << "\n";
    if (!c.failures.empty()) {
        out << "cycling starts:\n";
        for (const auto& p : c.failures) out << "  " << format_partition(p) << "\n";
    }
    if (c.ell0_expected)
        out << "ell=0 cross-check: " << (c.ell0_matches ? "ok" : "MISMATCH") << " (expected "
            << *c.ell0_expected << ")\n";
    return out.str();
}

}  // namespace regdist
