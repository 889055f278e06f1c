#include <catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "regdist/glaisher.hpp"

using namespace regdist;

namespace {

// Independent statement of the diagonal shift on matrices: every entry moves
// from (row, col) to (row + 1, col - 1).  Used to cross-check the
// partition-level wrap_shift.
PartFrequencyMatrixFamily diagonal_shift(const PartFrequencyMatrixFamily& family) {
    PartFrequencyMatrixFamily out;
    out.base = family.base;
    for (const auto& [core, mat] : family.matrices) {
        PartFrequencyMatrixFamily::Matrix shifted(mat.size() + 1);
        for (std::size_t r = 0; r < mat.size(); ++r) {
            for (std::size_t c = 1; c < mat[r].size(); ++c) {
                if (mat[r][c] == 0) continue;
                auto& row = shifted[r + 1];
                if (row.size() < c) row.resize(c, 0);
                row[c - 1] = mat[r][c];
            }
        }
        while (!shifted.empty() && shifted.back().empty()) shifted.pop_back();
        if (!shifted.empty()) out.matrices.emplace(core, std::move(shifted));
    }
    return out;
}

}  // namespace

TEST_CASE("matrix family of the base-2 example") {
    const PartFrequencyMatrixFamily fam = to_matrices(parse_partition("20,5^2,4,2^2,1^5"), 2);
    REQUIRE(fam.base == 2);
    const std::int64_t m1[3][3] = {{1, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    const std::int64_t m5[3][3] = {{0, 1, 0}, {0, 0, 0}, {1, 0, 0}};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            REQUIRE(fam.entry(1, r, c) == (r < 3 && c < 3 ? m1[r][c] : 0));
            REQUIRE(fam.entry(3, r, c) == 0);
            REQUIRE(fam.entry(5, r, c) == (r < 3 && c < 3 ? m5[r][c] : 0));
        }
    }
    REQUIRE(fam.matrices.size() == 2);
    REQUIRE(from_matrices(fam) == parse_partition("20,5^2,4,2^2,1^5"));
}

TEST_CASE("matrix round trip for every partition up to 20") {
    for (std::int64_t n = 0; n <= 20; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            for (const std::int64_t m : {2, 3, 6, 10}) {
                REQUIRE(from_matrices(to_matrices(p, m)) == p);
            }
        });
    }
}

TEST_CASE("matrix family rejects bad input") {
    REQUIRE_THROWS_AS(to_matrices(parse_partition("5"), 1), std::invalid_argument);
    PartFrequencyMatrixFamily bad_core;
    bad_core.base = 2;
    bad_core.matrices[4] = {{1}};
    REQUIRE_THROWS_AS(from_matrices(bad_core), std::invalid_argument);
    PartFrequencyMatrixFamily bad_digit;
    bad_digit.base = 2;
    bad_digit.matrices[3] = {{2}};
    REQUIRE_THROWS_AS(from_matrices(bad_digit), std::invalid_argument);
}

TEST_CASE("phi on the documented base-6 pair") {
    const Partition x = parse_partition("108,18^4");
    const Partition y = parse_partition("3^60");
    REQUIRE(phi(x, 6) == y);
    REQUIRE(phi(y, 6) == x);
}

TEST_CASE("phi on small handworked cases") {
    REQUIRE(phi(parse_partition("15"), 3) == parse_partition("5^3"));
    REQUIRE(phi(parse_partition("5^3"), 3) == parse_partition("15"));
    REQUIRE(phi(parse_partition("50"), 10) == parse_partition("5^10"));
    REQUIRE(phi(parse_partition("25"), 3) == parse_partition("25"));
    REQUIRE(phi(Partition{}, 2) == Partition{});
}

TEST_CASE("phi is a weight-preserving involution") {
    for (std::int64_t n = 0; n <= 15; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            for (std::int64_t m = 2; m <= 12; ++m) {
                const Partition image = phi(p, m);
                REQUIRE(image.weight() == n);
                REQUIRE(phi(image, m) == p);
            }
        });
    }
}

TEST_CASE("phi exchanges m-distinct and m-regular partitions") {
    for (std::int64_t n = 0; n <= 18; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            for (const std::int64_t m : {2, 3, 4, 6}) {
                const Partition image = phi(p, m);
                if (is_distinct(p, m)) REQUIRE(is_regular(image, m));
                if (is_regular(p, m)) REQUIRE(is_distinct(image, m));
                if (is_regular(p, m) && is_distinct(p, m)) REQUIRE(image == p);
            }
        });
    }
}

TEST_CASE("phi restricted to m-distinct partitions is onto the m-regular ones") {
    for (std::int64_t n = 0; n <= 16; ++n) {
        for (const std::int64_t m : {2, 3, 5}) {
            std::set<Partition> images, regular;
            for_each_partition(n, [&](const Partition& p) {
                if (is_distinct(p, m)) images.insert(phi(p, m));
                if (is_regular(p, m)) regular.insert(p);
            });
            REQUIRE(images == regular);
        }
    }
}

TEST_CASE("phi transports divisibility by numbers coprime to the base") {
    const std::vector<std::pair<std::int64_t, std::int64_t>> cases = {
        {3, 2}, {5, 3}, {2, 9}, {5, 6}};
    for (std::int64_t n = 0; n <= 18; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            for (const auto& [c, m] : cases) {
                const Partition image = phi(p, m);
                const auto divisible = [&](const Partition& q) {
                    std::int64_t total = 0;
                    for (const auto& e : q.entries())
                        if (e.size % c == 0) total += e.size * e.freq;
                    return total;
                };
                REQUIRE(divisible(p) == divisible(image));
                REQUIRE(is_regular(p, c) == is_regular(image, c));
            }
        });
    }
}

TEST_CASE("wrap_shift scales sizes up and frequencies down") {
    REQUIRE(wrap_shift(parse_partition("5^5,3^5"), 5) == parse_partition("25,15"));
    REQUIRE(unwrap_shift(parse_partition("25,15"), 5) == parse_partition("5^5,3^5"));
    REQUIRE(wrap_shift(Partition{}, 3) == Partition{});
    REQUIRE_THROWS_AS(wrap_shift(parse_partition("5^4"), 3), std::domain_error);
    REQUIRE_THROWS_AS(unwrap_shift(parse_partition("5^3"), 3), std::domain_error);
    REQUIRE_THROWS_AS(wrap_shift(parse_partition("5^3"), 1), std::invalid_argument);
}

TEST_CASE("wrap_shift round-trips and preserves weight") {
    for (std::int64_t n = 0; n <= 12; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            for (const std::int64_t m : {2, 3, 5}) {
                const Partition q = scale_freqs(p, m);
                const Partition wrapped = wrap_shift(q, m);
                REQUIRE(wrapped == scale_sizes(p, m));
                REQUIRE(wrapped.weight() == q.weight());
                REQUIRE(unwrap_shift(wrapped, m) == q);
            }
        });
    }
}

TEST_CASE("wrap_shift agrees with the diagonal shift on matrices") {
    for (std::int64_t n = 0; n <= 12; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            for (const std::int64_t m : {2, 3, 5}) {
                const Partition q = scale_freqs(p, m);
                const PartFrequencyMatrixFamily shifted = diagonal_shift(to_matrices(q, m));
                REQUIRE(from_matrices(shifted) == wrap_shift(q, m));
            }
        });
    }
}

TEST_CASE("double_glaisher maps the coprime worked example") {
    REQUIRE(double_glaisher(parse_partition("1^2"), 3, 5) == parse_partition("1^2"));
    REQUIRE(double_glaisher(parse_partition("10^4,5^2,1^2"), 3, 5) ==
            phi(phi(parse_partition("10^4,5^2,1^2"), 5), 3));
}

TEST_CASE("double_glaisher validates its arguments") {
    REQUIRE_THROWS_AS(double_glaisher(parse_partition("1"), 6, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(double_glaisher(parse_partition("3"), 3, 5), std::domain_error);
    REQUIRE_THROWS_AS(double_glaisher(parse_partition("1^5"), 3, 5), std::domain_error);
}

TEST_CASE("double_glaisher is a bijection onto the swapped domain") {
    const std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {
        {2, 3}, {3, 5}, {9, 5}, {4, 9}};
    for (const auto& [s, t] : pairs) {
        for (std::int64_t n = 0; n <= 25; ++n) {
            std::set<Partition> images, target;
            for_each_partition(n, [&](const Partition& p) {
                if (is_regular(p, s) && is_distinct(p, t)) {
                    const Partition image = double_glaisher(p, s, t);
                    REQUIRE(image.weight() == n);
                    REQUIRE(double_glaisher(image, t, s) == p);
                    images.insert(image);
                }
                if (is_regular(p, t) && is_distinct(p, s)) target.insert(p);
            });
            REQUIRE(images == target);
        }
    }
}
