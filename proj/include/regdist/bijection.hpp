#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "regdist/glaisher.hpp"
#include "regdist/partition.hpp"

namespace regdist {

namespace detail {

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> factorize(std::int64_t x) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t p = 2; p * p <= x; ++p) {
        if (x % p != 0) continue;
        std::int64_t e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

}  // namespace detail

// One prime shared by both moduli: prime^s_exponent exactly divides s,
// prime^t_exponent exactly divides t, and complement = t / prime^t_exponent
// is coprime to the prime.
struct SharedPrime {
    std::int64_t prime = 0;
    std::int64_t s_exponent = 0;
    std::int64_t t_exponent = 0;
    std::int64_t complement = 0;
    auto operator<=>(const SharedPrime&) const = default;
};

// Factored structure of a modulus pair (s, t).
struct ModulusPair {
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::vector<SharedPrime> shared;  // ascending by prime
    std::int64_t s_exclusive = 1;     // product of prime powers in s whose primes miss t
    std::int64_t t_exclusive = 1;     // likewise for t
};

inline ModulusPair analyze(std::int64_t s, std::int64_t t) {
    detail::check_modulus(s);
    detail::check_modulus(t);
    ModulusPair mp;
    mp.s = s;
    mp.t = t;
    for (const auto& [p, e] : detail::factorize(s)) {
        if (t % p == 0) {
            std::int64_t b = 0, k = t;
            while (k % p == 0) {
                k /= p;
                ++b;
            }
            mp.shared.push_back({p, e, b, k});
        } else {
            mp.s_exclusive *= detail::ipow(p, e);
        }
    }
    for (const auto& [p, e] : detail::factorize(t))
        if (s % p != 0) mp.t_exclusive *= detail::ipow(p, e);
    return mp;
}

// How the a branch of a prime step finishes: with phi base prime, or with
// phi base prime^e.  Both choices invert; they give different maps.
enum class ABranchVariant {
    PrimeBase,
    PrimePowerBase,
};

struct BijectionConfig {
    // Order in which the shared primes are processed; empty means ascending.
    // Different orders give different (all valid) maps, so the order is part
    // of the map's identity.
    std::vector<std::int64_t> prime_order;
    ABranchVariant variant = ABranchVariant::PrimeBase;
};

inline std::vector<SharedPrime> resolve_prime_order(const ModulusPair& mp,
                                                    const BijectionConfig& cfg) {
    if (cfg.prime_order.empty()) return mp.shared;
    if (cfg.prime_order.size() != mp.shared.size())
        throw std::invalid_argument("prime order must be a permutation of the shared primes");
    std::vector<SharedPrime> out;
    for (const std::int64_t p : cfg.prime_order) {
        const auto it = std::find_if(mp.shared.begin(), mp.shared.end(),
                                     [&](const SharedPrime& sp) { return sp.prime == p; });
        if (it == mp.shared.end())
            throw std::invalid_argument(std::to_string(p) + " is not a prime shared by both moduli");
        out.push_back(*it);
    }
    std::vector<std::int64_t> sorted = cfg.prime_order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("prime order must be a permutation of the shared primes");
    return out;
}

// Maps the parts of p whose sizes are not divisible by prime^e, assuming
// every frequency is below t = prime^b * k.  Such parts split into those
// with frequency not divisible by k (the a branch: phi base k, then phi base
// prime or prime^e) and those with frequency divisible by k (the Ck branch:
// wrap_shift by k, then phi base prime).  Returns the mapped image and the
// untouched remainder whose sizes are divisible by prime^e.
inline std::pair<Partition, Partition> prime_step(const Partition& p, std::int64_t prime,
                                                  std::int64_t e, std::int64_t b, std::int64_t k,
                                                  ABranchVariant variant = ABranchVariant::PrimeBase) {
    detail::check_modulus(prime);
    if (e < 1 || b < 1 || k < 1)
        throw std::invalid_argument("prime step exponents and complement must be positive");
    if (k % prime == 0)
        throw std::invalid_argument("complement must be coprime to the prime");
    const std::int64_t pe = detail::ipow(prime, e);
    const std::int64_t t = detail::ipow(prime, b) * k;
    for (const auto& entry : p.entries())
        if (entry.freq >= t)
            throw std::domain_error("input is not " + std::to_string(t) + "-distinct");
    auto [rho, remainder] = split_by_size(p, [&](std::int64_t size) { return size % pe != 0; });
    auto [a_part, ck_part] = split_frequency_residue(rho, k);
    Partition a_image;
    if (!a_part.empty())
        a_image = phi(phi(a_part, k), variant == ABranchVariant::PrimeBase ? prime : pe);
    Partition ck_image;
    if (!ck_part.empty())
        ck_image = phi(k == 1 ? ck_part : wrap_shift(ck_part, k), prime);
    return {merge(a_image, ck_image), std::move(remainder)};
}

// Exact inverse of prime_step on its image.  The two branches are recovered
// by size divisibility: a-branch sizes are never divisible by k, Ck-branch
// sizes always are.
inline Partition invert_prime_step(const Partition& image, std::int64_t prime, std::int64_t e,
                                   std::int64_t k,
                                   ABranchVariant variant = ABranchVariant::PrimeBase) {
    detail::check_modulus(prime);
    if (e < 1 || k < 1)
        throw std::invalid_argument("prime step exponents and complement must be positive");
    if (k % prime == 0)
        throw std::invalid_argument("complement must be coprime to the prime");
    const std::int64_t pe = detail::ipow(prime, e);
    auto [a_image, ck_image] = split_by_size(image, [&](std::int64_t size) { return size % k != 0; });
    Partition a_part;
    if (!a_image.empty())
        a_part = phi(phi(a_image, variant == ABranchVariant::PrimeBase ? prime : pe), k);
    Partition ck_part;
    if (!ck_image.empty()) {
        ck_part = phi(ck_image, prime);
        if (k > 1) ck_part = scale_freqs(divide_sizes(ck_part, k), k);
    }
    return merge(a_part, ck_part);
}

// Bijection from s-regular t-distinct partitions onto t-regular s-distinct
// ones, for arbitrary moduli s, t >= 2.  Parts whose sizes avoid the part of
// s coprime to t go through the coprime double-Glaisher map; the rest are
// divided down and processed one shared prime at a time, with the
// accumulated divisor restored on the frequency side, which is what makes
// the image s-distinct.
inline Partition forward(const Partition& p, std::int64_t s, std::int64_t t,
                         const BijectionConfig& cfg = {}) {
    const ModulusPair mp = analyze(s, t);
    const std::vector<SharedPrime> order = resolve_prime_order(mp, cfg);
    if (!is_regular(p, s))
        throw std::domain_error("input is not " + std::to_string(s) + "-regular");
    if (!is_distinct(p, t))
        throw std::domain_error("input is not " + std::to_string(t) + "-distinct");
    auto [coprime_part, rest] =
        split_by_size(p, [&](std::int64_t size) { return size % mp.s_exclusive != 0; });
    Partition out;
    if (!coprime_part.empty()) out = double_glaisher(coprime_part, mp.s_exclusive, t);
    Partition work = mp.s_exclusive > 1 ? divide_sizes(rest, mp.s_exclusive) : std::move(rest);
    std::int64_t wrap = mp.s_exclusive;
    for (const SharedPrime& sp : order) {
        auto [image, remainder] =
            prime_step(work, sp.prime, sp.s_exponent, sp.t_exponent, sp.complement, cfg.variant);
        if (!image.empty()) out = merge(out, wrap > 1 ? scale_freqs(image, wrap) : image);
        const std::int64_t pe = detail::ipow(sp.prime, sp.s_exponent);
        work = divide_sizes(remainder, pe);
        wrap *= pe;
    }
    // s-regularity forces every part to be consumed by some stage.
    if (!work.empty()) throw std::logic_error("map left unprocessed parts");
    return out;
}

// Inverse bijection.  Stage contributions are recovered from the frequency
// side: frequencies not divisible by the accumulated divisor belong to the
// current stage, exactly mirroring forward.
inline Partition inverse(const Partition& p, std::int64_t s, std::int64_t t,
                         const BijectionConfig& cfg = {}) {
    const ModulusPair mp = analyze(s, t);
    const std::vector<SharedPrime> order = resolve_prime_order(mp, cfg);
    if (!is_regular(p, t))
        throw std::domain_error("input is not " + std::to_string(t) + "-regular");
    if (!is_distinct(p, s))
        throw std::domain_error("input is not " + std::to_string(s) + "-distinct");
    auto [residue, rest] = split_frequency_residue(p, mp.s_exclusive);
    Partition out;
    if (!residue.empty()) out = phi(phi(residue, mp.s_exclusive), t);
    Partition work = mp.s_exclusive > 1 ? divide_freqs(rest, mp.s_exclusive) : std::move(rest);
    std::int64_t wrap = mp.s_exclusive;
    for (const SharedPrime& sp : order) {
        const std::int64_t pe = detail::ipow(sp.prime, sp.s_exponent);
        auto [image, deeper] = split_frequency_residue(work, pe);
        if (!image.empty()) {
            const Partition rho =
                invert_prime_step(image, sp.prime, sp.s_exponent, sp.complement, cfg.variant);
            out = merge(out, wrap > 1 ? scale_sizes(rho, wrap) : rho);
        }
        work = divide_freqs(deeper, pe);
        wrap *= pe;
    }
    // s-distinctness forces every frequency residue to be consumed.
    if (!work.empty()) throw std::logic_error("inverse left unprocessed parts");
    return out;
}

}  // namespace regdist
