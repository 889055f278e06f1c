#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regdist {

// A partition of a nonnegative integer, stored sparsely as (size, frequency)
// pairs with sizes strictly decreasing.  The empty partition is the unique
// partition of 0.
class Partition {
public:
    struct Entry {
        std::int64_t size = 0;
        std::int64_t freq = 0;
        auto operator<=>(const Entry&) const = default;
    };

    Partition() = default;

    Partition(std::initializer_list<Entry> parts)
        : Partition(from_pairs(std::vector<Entry>(parts))) {}

    // Builds a partition from arbitrary (size, frequency) pairs: duplicate
    // sizes are summed and zero frequencies dropped.
    static Partition from_pairs(std::vector<Entry> parts) {
        for (const Entry& e : parts) {
            if (e.size < 1)
                throw std::invalid_argument("part size must be positive");
            if (e.freq < 0)
                throw std::invalid_argument("part frequency must be nonnegative");
        }
        std::sort(parts.begin(), parts.end(),
                  [](const Entry& a, const Entry& b) { return a.size > b.size; });
        std::vector<Entry> merged;
        for (const Entry& e : parts) {
            if (!merged.empty() && merged.back().size == e.size)
                merged.back().freq += e.freq;
            else
                merged.push_back(e);
        }
        std::erase_if(merged, [](const Entry& e) { return e.freq == 0; });
        Partition p;
        p.entries_ = std::move(merged);
        return p;
    }

    // Adopts entries that are already canonical: sizes strictly decreasing,
    // every frequency positive.
    static Partition from_sorted(std::vector<Entry> parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].size < 1 || parts[i].freq < 1 ||
                (i > 0 && parts[i - 1].size <= parts[i].size))
                throw std::invalid_argument("entries are not in canonical partition order");
        }
        Partition p;
        p.entries_ = std::move(parts);
        return p;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::int64_t weight() const {
        std::int64_t n = 0;
        for (const Entry& e : entries_) n += e.size * e.freq;
        return n;
    }

    std::int64_t freq_of(std::int64_t size) const {
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), size,
            [](const Entry& e, std::int64_t s) { return e.size > s; });
        return (it != entries_.end() && it->size == size) ? it->freq : 0;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Entry> entries_;
};

namespace detail {

inline void check_modulus(std::int64_t m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(m));
}

}  // namespace detail

// No part size divisible by m.
inline bool is_regular(const Partition& p, std::int64_t m) {
    detail::check_modulus(m);
    for (const auto& e : p.entries())
        if (e.size % m == 0) return false;
    return true;
}

// Every frequency strictly below m.
inline bool is_distinct(const Partition& p, std::int64_t m) {
    detail::check_modulus(m);
    for (const auto& e : p.entries())
        if (e.freq >= m) return false;
    return true;
}

// Multiset union: frequencies of equal sizes add.
inline Partition merge(const Partition& a, const Partition& b) {
    std::vector<Partition::Entry> out;
    auto ia = a.entries().begin(), ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() || (ia != a.entries().end() && ia->size > ib->size)) {
            out.push_back(*ia++);
        } else if (ia == a.entries().end() || ib->size > ia->size) {
            out.push_back(*ib++);
        } else {
            out.push_back({ia->size, ia->freq + ib->freq});
            ++ia;
            ++ib;
        }
    }
    return Partition::from_sorted(std::move(out));
}

// Splits into (parts whose size satisfies pred, the rest).
template <typename SizePredicate>
std::pair<Partition, Partition> split_by_size(const Partition& p, SizePredicate pred) {
    std::vector<Partition::Entry> yes, no;
    for (const auto& e : p.entries())
        (pred(e.size) ? yes : no).push_back(e);
    return {Partition::from_sorted(std::move(yes)), Partition::from_sorted(std::move(no))};
}

// Splits each frequency f into f mod modulus and f - (f mod modulus), so the
// first half has all frequencies below the modulus and the second all
// frequencies divisible by it.  Merging the halves restores the input.
inline std::pair<Partition, Partition> split_frequency_residue(const Partition& p,
                                                               std::int64_t modulus) {
    if (modulus < 1)
        throw std::invalid_argument("frequency modulus must be positive");
    std::vector<Partition::Entry> low, high;
    for (const auto& e : p.entries()) {
        const std::int64_t r = e.freq % modulus;
        if (r > 0) low.push_back({e.size, r});
        if (e.freq - r > 0) high.push_back({e.size, e.freq - r});
    }
    return {Partition::from_sorted(std::move(low)), Partition::from_sorted(std::move(high))};
}

inline Partition scale_sizes(const Partition& p, std::int64_t c) {
    if (c < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<Partition::Entry> out;
    for (const auto& e : p.entries()) out.push_back({e.size * c, e.freq});
    return Partition::from_sorted(std::move(out));
}

inline Partition divide_sizes(const Partition& p, std::int64_t c) {
    if (c < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<Partition::Entry> out;
    for (const auto& e : p.entries()) {
        if (e.size % c != 0)
            throw std::domain_error("part size " + std::to_string(e.size) +
                                    " is not divisible by " + std::to_string(c));
        out.push_back({e.size / c, e.freq});
    }
    return Partition::from_sorted(std::move(out));
}

inline Partition scale_freqs(const Partition& p, std::int64_t c) {
    if (c < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<Partition::Entry> out;
    for (const auto& e : p.entries()) out.push_back({e.size, e.freq * c});
    return Partition::from_sorted(std::move(out));
}

inline Partition divide_freqs(const Partition& p, std::int64_t c) {
    if (c < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<Partition::Entry> out;
    for (const auto& e : p.entries()) {
        if (e.freq % c != 0)
            throw std::domain_error("frequency " + std::to_string(e.freq) + " of part " +
                                    std::to_string(e.size) + " is not divisible by " +
                                    std::to_string(c));
        out.push_back({e.size, e.freq / c});
    }
    return Partition::from_sorted(std::move(out));
}

// Safety bound for exhaustive enumeration; p(80) is about 1.6e7.
inline constexpr std::int64_t kEnumerationBound = 80;

// Visits every partition of n exactly once, largest parts first (so the part
// sequences appear in decreasing lexicographic order).
template <typename Visitor>
void for_each_partition(std::int64_t n, Visitor&& visit,
                        std::int64_t bound = kEnumerationBound) {
    if (n < 0)
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    if (n > bound)
        throw std::invalid_argument("enumeration bound exceeded: n = " + std::to_string(n) +
                                    " > " + std::to_string(bound));
    std::vector<Partition::Entry> stack;
    auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t largest) -> void {
        if (remaining == 0) {
            visit(Partition::from_sorted(stack));
            return;
        }
        for (std::int64_t part = std::min(remaining, largest); part >= 1; --part) {
            if (!stack.empty() && stack.back().size == part)
                ++stack.back().freq;
            else
                stack.push_back({part, 1});
            self(self, remaining - part, part);
            if (stack.back().freq > 1)
                --stack.back().freq;
            else
                stack.pop_back();
        }
    };
    rec(rec, n, n);
}

inline std::vector<Partition> enumerate_partitions(std::int64_t n,
                                                   std::int64_t bound = kEnumerationBound) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, bound);
    return out;
}

// Text grammar: comma-separated "SIZE" or "SIZE^FREQ" tokens with sizes
// strictly decreasing, e.g. "25,18^2,9,5^3,3,2^2".  The empty string is the
// empty partition.
inline Partition parse_partition(std::string_view text) {
    const auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    const auto read_int = [](std::string_view s) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("malformed partition: bad integer '" + std::string(s) +
                                        "'");
        return value;
    };
    text = trim(text);
    if (text.empty()) return {};
    std::vector<Partition::Entry> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                  : comma - pos));
        const std::size_t caret = token.find('^');
        const std::int64_t size = read_int(token.substr(0, caret));
        const std::int64_t freq =
            caret == std::string_view::npos ? 1 : read_int(token.substr(caret + 1));
        if (size < 1) throw std::invalid_argument("part size must be positive");
        if (freq < 1) throw std::invalid_argument("part frequency must be positive");
        if (!parts.empty()) {
            if (parts.back().size == size)
                throw std::invalid_argument("repeated part size " + std::to_string(size));
            if (parts.back().size < size)
                throw std::invalid_argument("part sizes must be strictly decreasing");
        }
        parts.push_back({size, freq});
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition::from_sorted(std::move(parts));
}

inline std::string format_partition(const Partition& p) {
    std::string out;
    for (const auto& e : p.entries()) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.size);
        if (e.freq != 1) {
            out += '^';
            out += std::to_string(e.freq);
        }
    }
    return out;
}

}  // namespace regdist
