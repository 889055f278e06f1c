#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "regdist/partition.hpp"

namespace regdist {

// Base-m digit matrices of a partition.  For each core j not divisible by m
// there is one matrix M_j whose row k holds the ascending base-m digits of
// the frequency of the part j*m^k.  Missing rows, columns and matrices stand
// for zero entries.
struct PartFrequencyMatrixFamily {
    using Matrix = std::vector<std::vector<std::int64_t>>;

    std::int64_t base = 2;
    std::map<std::int64_t, Matrix> matrices;

    std::int64_t entry(std::int64_t core, std::size_t row, std::size_t col) const {
        const auto it = matrices.find(core);
        if (it == matrices.end() || row >= it->second.size() || col >= it->second[row].size())
            return 0;
        return it->second[row][col];
    }

    std::string to_text() const {
        std::string out;
        for (const auto& [core, mat] : matrices) {
            std::size_t cols = 1;
            for (const auto& row : mat) cols = std::max(cols, row.size());
            out += "M_" + std::to_string(core) + ":\n";
            for (const auto& row : mat) {
                for (std::size_t c = 0; c < cols; ++c) {
                    out += c == 0 ? "  " : " ";
                    out += std::to_string(c < row.size() ? row[c] : 0);
                }
                out += "\n";
            }
        }
        return out;
    }
};

inline PartFrequencyMatrixFamily to_matrices(const Partition& p, std::int64_t m) {
    detail::check_modulus(m);
    PartFrequencyMatrixFamily family;
    family.base = m;
    for (const auto& e : p.entries()) {
        std::int64_t core = e.size;
        std::size_t row = 0;
        while (core % m == 0) {
            core /= m;
            ++row;
        }
        auto& mat = family.matrices[core];
        if (mat.size() <= row) mat.resize(row + 1);
        std::vector<std::int64_t> digits;
        for (std::int64_t f = e.freq; f > 0; f /= m) digits.push_back(f % m);
        mat[row] = std::move(digits);
    }
    return family;
}

inline Partition from_matrices(const PartFrequencyMatrixFamily& family) {
    detail::check_modulus(family.base);
    const std::int64_t m = family.base;
    std::vector<Partition::Entry> parts;
    for (const auto& [core, mat] : family.matrices) {
        if (core < 1 || core % m == 0)
            throw std::invalid_argument("matrix core " + std::to_string(core) +
                                        " must be positive and not divisible by the base");
        std::int64_t part = core;
        for (const auto& row : mat) {
            std::int64_t freq = 0, place = 1;
            for (const std::int64_t digit : row) {
                if (digit < 0 || digit >= m)
                    throw std::invalid_argument("matrix digit " + std::to_string(digit) +
                                                " is out of range for base " + std::to_string(m));
                freq += digit * place;
                place *= m;
            }
            if (freq > 0) parts.push_back({part, freq});
            part *= m;
        }
    }
    return Partition::from_pairs(std::move(parts));
}

inline PartFrequencyMatrixFamily transposed(const PartFrequencyMatrixFamily& family) {
    PartFrequencyMatrixFamily out;
    out.base = family.base;
    for (const auto& [core, mat] : family.matrices) {
        std::size_t cols = 0;
        for (const auto& row : mat) cols = std::max(cols, row.size());
        PartFrequencyMatrixFamily::Matrix t(cols);
        for (std::size_t r = 0; r < mat.size(); ++r) {
            for (std::size_t c = 0; c < mat[r].size(); ++c) {
                if (mat[r][c] == 0) continue;
                auto& row = t[c];
                if (row.size() <= r) row.resize(r + 1, 0);
                row[r] = mat[r][c];
            }
        }
        while (!t.empty() && t.back().empty()) t.pop_back();
        if (!t.empty()) out.matrices.emplace(core, std::move(t));
    }
    return out;
}

// Glaisher's map in base m, extended to all partitions: transpose every
// part-frequency matrix.  An involution that preserves weight; on m-distinct
// partitions it produces m-regular ones and vice versa.
inline Partition phi(const Partition& p, std::int64_t m) {
    return from_matrices(transposed(to_matrices(p, m)));
}

// Defined when every frequency is divisible by m: multiplies each size by m
// and divides its frequency by m.  On matrices this moves every entry one
// step down its diagonal (row + 1, column - 1), which is why it needs all
// first-column digits of the frequencies to vanish.
inline Partition wrap_shift(const Partition& p, std::int64_t m) {
    detail::check_modulus(m);
    std::vector<Partition::Entry> parts;
    for (const auto& e : p.entries()) {
        if (e.freq % m != 0)
            throw std::domain_error("frequency " + std::to_string(e.freq) + " of part " +
                                    std::to_string(e.size) + " is not divisible by " +
                                    std::to_string(m));
        parts.push_back({e.size * m, e.freq / m});
    }
    return Partition::from_sorted(std::move(parts));
}

// Inverse of wrap_shift, defined when every size is divisible by m.
inline Partition unwrap_shift(const Partition& p, std::int64_t m) {
    detail::check_modulus(m);
    std::vector<Partition::Entry> parts;
    for (const auto& e : p.entries()) {
        if (e.size % m != 0)
            throw std::domain_error("part size " + std::to_string(e.size) +
                                    " is not divisible by " + std::to_string(m));
        parts.push_back({e.size / m, e.freq * m});
    }
    return Partition::from_sorted(std::move(parts));
}

// For coprime moduli, maps s-regular t-distinct partitions onto t-regular
// s-distinct ones: apply phi base t first, then phi base s.
inline Partition double_glaisher(const Partition& p, std::int64_t s, std::int64_t t) {
    detail::check_modulus(s);
    detail::check_modulus(t);
    if (std::gcd(s, t) != 1)
        throw std::invalid_argument("moduli " + std::to_string(s) + " and " + std::to_string(t) +
                                    " are not coprime");
    if (!is_regular(p, s))
        throw std::domain_error("input is not " + std::to_string(s) + "-regular");
    if (!is_distinct(p, t))
        throw std::domain_error("input is not " + std::to_string(t) + "-distinct");
    return phi(phi(p, t), s);
}

}  // namespace regdist
