#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "regdist/bijection.hpp"
#include "regdist/glaisher.hpp"
#include "regdist/jsonio.hpp"
#include "regdist/orbit.hpp"
#include "regdist/partition.hpp"
#include "regdist/qseries.hpp"

namespace regdist {

struct SelftestResult {
    std::string name;
    bool pass = false;
};

// Recomputes the documented worked examples and checks them against their
// frozen expected values.
inline std::vector<SelftestResult> run_selftest() {
    std::vector<SelftestResult> results;
    const auto add = [&](std::string name, bool pass) {
        results.push_back({std::move(name), pass});
    };

    {
        const Partition x = parse_partition("108,18^4");
        const Partition y = parse_partition("3^60");
        add("phi-base-6-involution-pair", phi(x, 6) == y && phi(y, 6) == x);
    }
    {
        const PartFrequencyMatrixFamily fam = to_matrices(parse_partition("20,5^2,4,2^2,1^5"), 2);
        const std::int64_t m1[3][3] = {{1, 0, 1}, {0, 1, 0}, {1, 0, 0}};
        const std::int64_t m5[3][3] = {{0, 1, 0}, {0, 0, 0}, {1, 0, 0}};
        bool ok = fam.matrices.size() == 2;
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) {
                ok = ok && fam.entry(1, r, c) == m1[r][c];
                ok = ok && fam.entry(3, r, c) == 0;
                ok = ok && fam.entry(5, r, c) == m5[r][c];
            }
        }
        add("part-frequency-matrices-base-2", ok);
    }
    {
        const Partition x = parse_partition("10^4,5^7,3^5,1^2");
        const Partition y = parse_partition("25,18^2,9,5^3,3,2^2");
        add("map-9-15-worked-example", forward(x, 9, 15) == y && inverse(y, 9, 15) == x);
    }
    {
        BijectionConfig three_first, two_first;
        three_first.prime_order = {3, 2};
        two_first.prime_order = {2, 3};
        const Partition nine = parse_partition("9");
        add("map-18-30-prime-order",
            forward(nine, 18, 30, three_first) == parse_partition("1^9") &&
                forward(nine, 18, 30, two_first) == nine);
    }
    {
        const OrbitReport r = classify_orbit(parse_partition("50"), 6, 10, 10);
        const std::vector<Partition> expected = {parse_partition("50"), parse_partition("30,5^4"),
                                                 parse_partition("18,5^4,3^4")};
        add("orbit-50-succeeds-after-two-steps",
            r.outcome == OrbitReport::Outcome::Success && r.ell == 2 && r.trajectory == expected);
    }
    {
        const OrbitReport r = classify_orbit(parse_partition("108,18^4"), 10, 6, 50);
        bool ok = r.outcome == OrbitReport::Outcome::Cycle && r.cycle_length == 3 &&
                  r.cycle_entry == 0 && r.trajectory.size() == 4 &&
                  r.trajectory[1] == parse_partition("30^6") &&
                  r.trajectory[2] == parse_partition("3^60");
        for (const Partition& state : r.trajectory)
            ok = ok && !(is_regular(state, 6) && is_distinct(state, 10));
        add("orbit-108-18^4-cycles", ok);
    }
    return results;
}

namespace detail {

inline std::int64_t parse_cli_int(const std::string& text, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
    return value;
}

}  // namespace detail

// Dispatches one invocation.  Exit codes: 0 on success, 1 when an input
// fails a domain predicate, 2 on usage errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"regular/distinct partition bijections, Glaisher maps and q-series checks"};
    app.name("regdist");
    app.require_subcommand(1);

    struct MapOptions {
        std::int64_t s = 0;
        std::int64_t t = 0;
        std::string partition;
        std::vector<std::int64_t> order;
        std::string variant = "prime";
        bool json = false;
    };
    MapOptions map_opts, invert_opts;
    const auto add_map_options = [](CLI::App* sub, MapOptions& o) {
        sub->add_option("--s", o.s, "modulus whose regularity constrains the input")->required();
        sub->add_option("--t", o.t, "modulus whose distinctness constrains the input")->required();
        sub->add_option("--order", o.order, "processing order of the shared primes, e.g. 3,2")
            ->delimiter(',');
        sub->add_option("--variant", o.variant, "a-branch variant")
            ->check(CLI::IsMember({"prime", "primepower"}));
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_option("partition", o.partition, "partition text, e.g. \"10^4,5^7,3^5,1^2\"")
            ->required();
    };
    CLI::App* map_cmd =
        app.add_subcommand("map", "send an s-regular t-distinct partition to its image");
    add_map_options(map_cmd, map_opts);
    CLI::App* invert_cmd =
        app.add_subcommand("invert", "send a t-regular s-distinct partition to its preimage");
    add_map_options(invert_cmd, invert_opts);

    struct OrbitOptions {
        std::int64_t s = 0;
        std::int64_t t = 0;
        std::int64_t max_iter = 1000;
        std::string partition;
        bool json = false;
    } orbit_opts;
    CLI::App* orbit_cmd = app.add_subcommand("orbit", "iterate the double map until it lands or cycles");
    orbit_cmd->add_option("--s", orbit_opts.s, "first modulus")->required();
    orbit_cmd->add_option("--t", orbit_opts.t, "second modulus")->required();
    orbit_cmd->add_option("--max-iter", orbit_opts.max_iter, "iteration cap");
    orbit_cmd->add_flag("--json", orbit_opts.json, "emit JSON");
    orbit_cmd->add_option("partition", orbit_opts.partition, "starting partition")->required();

    struct CensusOptions {
        std::int64_t s = 0;
        std::int64_t t = 0;
        std::int64_t n = 0;
        std::int64_t max_iter = 0;
        bool json = false;
    } census_opts;
    CLI::App* census_cmd =
        app.add_subcommand("census", "classify every s-regular t-distinct partition of n");
    census_cmd->add_option("--s", census_opts.s, "first modulus")->required();
    census_cmd->add_option("--t", census_opts.t, "second modulus")->required();
    census_cmd->add_option("--n", census_opts.n, "weight to enumerate")->required();
    census_cmd->add_option("--max-iter", census_opts.max_iter,
                           "iteration cap per orbit, 0 = p(n) + 1");
    census_cmd->add_flag("--json", census_opts.json, "emit JSON");

    struct CountOptions {
        std::int64_t n = 0;
        std::vector<std::int64_t> regular;
        std::vector<std::int64_t> distinct;
        bool json = false;
    } count_opts;
    CLI::App* count_cmd = app.add_subcommand("count", "count partitions satisfying predicates");
    count_cmd->add_option("--n", count_opts.n, "weight to enumerate")->required();
    count_cmd->add_option("--regular", count_opts.regular, "require m-regularity (repeatable)");
    count_cmd->add_option("--distinct", count_opts.distinct, "require m-distinctness (repeatable)");
    count_cmd->add_flag("--json", count_opts.json, "emit JSON");

    struct GfOptions {
        std::string spec;
        std::int64_t degree = 100;
        bool json = false;
    } gf_opts;
    CLI::App* gf_cmd = app.add_subcommand("gf", "expand a counting generating function");
    gf_cmd->add_option("--spec", gf_opts.spec,
                       "\"KIND S T\" with KIND one of regular-distinct, regular-regular, "
                       "theorem9 (alias regular-regular-distinct)")
        ->required();
    gf_cmd->add_option("--N", gf_opts.degree, "truncation degree");
    gf_cmd->add_flag("--json", gf_opts.json, "emit JSON");

    bool selftest_json = false;
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "re-run the built-in worked examples");
    selftest_cmd->add_flag("--json", selftest_json, "emit JSON");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*map_cmd || *invert_cmd) {
            const bool forward_direction = static_cast<bool>(*map_cmd);
            const MapOptions& o = forward_direction ? map_opts : invert_opts;
            BijectionConfig cfg;
            cfg.prime_order = o.order;
            cfg.variant = o.variant == "primepower" ? ABranchVariant::PrimePowerBase
                                                    : ABranchVariant::PrimeBase;
            const Partition input = parse_partition(o.partition);
            const Partition result = forward_direction ? forward(input, o.s, o.t, cfg)
                                                       : inverse(input, o.s, o.t, cfg);
            const std::vector<SharedPrime> order = resolve_prime_order(analyze(o.s, o.t), cfg);
            if (o.json) {
                nlohmann::json j;
                j["command"] = forward_direction ? "map" : "invert";
                j["s"] = o.s;
                j["t"] = o.t;
                nlohmann::json order_json = nlohmann::json::array();
                for (const SharedPrime& sp : order) order_json.push_back(sp.prime);
                j["order"] = std::move(order_json);
                j["variant"] = o.variant;
                j["input"] = to_json(input);
                j["result"] = to_json(result);
                out << j.dump(2) << "\n";
            } else {
                if (!order.empty()) {
                    err << "note: prime order";
                    for (const SharedPrime& sp : order) err << ' ' << sp.prime;
                    err << ", variant " << o.variant << "\n";
                }
                out << format_partition(result) << "\n";
            }
            return 0;
        }
        if (*orbit_cmd) {
            const Partition start = parse_partition(orbit_opts.partition);
            const OrbitReport report =
                classify_orbit(start, orbit_opts.s, orbit_opts.t, orbit_opts.max_iter);
            if (!report.start_in_domain)
                err << "warning: start is not " << orbit_opts.s << "-regular and " << orbit_opts.t
                    << "-distinct\n";
            if (orbit_opts.json) {
                nlohmann::json j = to_json(report);
                j["command"] = "orbit";
                out << j.dump(2) << "\n";
            } else {
                out << describe(report);
            }
            return 0;
        }
        if (*census_cmd) {
            const Census result =
                census(census_opts.n, census_opts.s, census_opts.t, census_opts.max_iter);
            if (census_opts.json) {
                nlohmann::json j = to_json(result);
                j["command"] = "census";
                out << j.dump(2) << "\n";
            } else {
                out << to_table(result);
            }
            return 0;
        }
        if (*count_cmd) {
            for (const std::int64_t m : count_opts.regular) detail::check_modulus(m);
            for (const std::int64_t m : count_opts.distinct) detail::check_modulus(m);
            std::int64_t total = 0;
            for_each_partition(count_opts.n, [&](const Partition& p) {
                for (const std::int64_t m : count_opts.regular)
                    if (!is_regular(p, m)) return;
                for (const std::int64_t m : count_opts.distinct)
                    if (!is_distinct(p, m)) return;
                ++total;
            });
            if (count_opts.json) {
                nlohmann::json j;
                j["command"] = "count";
                j["n"] = count_opts.n;
                j["regular"] = count_opts.regular;
                j["distinct"] = count_opts.distinct;
                j["count"] = total;
                out << j.dump(2) << "\n";
            } else {
                out << total << "\n";
            }
            return 0;
        }
        if (*gf_cmd) {
            std::istringstream iss(gf_opts.spec);
            std::vector<std::string> tokens;
            std::string token;
            while (iss >> token) tokens.push_back(token);
            if (tokens.size() != 3)
                throw std::invalid_argument("gf spec must be \"KIND S T\"");
            const std::string& kind = tokens[0];
            const std::int64_t s = detail::parse_cli_int(tokens[1], "modulus");
            const std::int64_t t = detail::parse_cli_int(tokens[2], "modulus");
            Series series = Series::one(0);
            if (kind == "regular-distinct") {
                series = gf_regular_distinct(s, t, gf_opts.degree);
            } else if (kind == "regular-regular") {
                series = gf_regular_regular(s, t, gf_opts.degree);
            } else if (kind == "theorem9" || kind == "regular-regular-distinct") {
                series = gf_regular_regular_distinct(s, t, gf_opts.degree);
            } else {
                throw std::invalid_argument("unknown generating function kind '" + kind + "'");
            }
            if (gf_opts.json) {
                nlohmann::json j;
                j["command"] = "gf";
                j["kind"] = kind;
                j["s"] = s;
                j["t"] = t;
                j["N"] = gf_opts.degree;
                j["coefficients"] = coefficients_json(series);
                out << j.dump(2) << "\n";
            } else {
                out << render_coefficients(series);
            }
            return 0;
        }
        if (*selftest_cmd) {
            const std::vector<SelftestResult> results = run_selftest();
            bool all_pass = true;
            for (const SelftestResult& r : results) all_pass = all_pass && r.pass;
            if (selftest_json) {
                nlohmann::json j;
                j["command"] = "selftest";
                nlohmann::json items = nlohmann::json::array();
                for (const SelftestResult& r : results)
                    items.push_back({{"name", r.name}, {"pass", r.pass}});
                j["results"] = std::move(items);
                j["all_pass"] = all_pass;
                out << j.dump(2) << "\n";
            } else {
                for (const SelftestResult& r : results)
                    out << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
                out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace regdist
