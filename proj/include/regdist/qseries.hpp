#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace regdist {

// A formal power series with exact integer coefficients, truncated at a
// fixed degree.  Coefficients are indexed 0..degree().
class Series {
public:
    explicit Series(std::int64_t degree) {
        if (degree < 0) throw std::invalid_argument("series degree must be nonnegative");
        coeff_.assign(static_cast<std::size_t>(degree) + 1, mpz_class(0));
    }

    static Series one(std::int64_t degree) {
        Series s(degree);
        s.coeff_[0] = 1;
        return s;
    }

    std::int64_t degree() const { return static_cast<std::int64_t>(coeff_.size()) - 1; }

    const mpz_class& operator[](std::int64_t n) const { return coeff_.at(static_cast<std::size_t>(n)); }
    mpz_class& operator[](std::int64_t n) { return coeff_.at(static_cast<std::size_t>(n)); }

    bool operator==(const Series&) const = default;

private:
    std::vector<mpz_class> coeff_;
};

inline std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("coefficient " + v.get_str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v.get_si());
}

// Truncated product over i >= 1 of (1 - q^{ik}).
inline Series f(std::int64_t k, std::int64_t degree) {
    if (k < 1) throw std::invalid_argument("product step must be positive");
    Series out = Series::one(degree);
    for (std::int64_t step = k; step <= degree; step += k)
        for (std::int64_t j = degree; j >= step; --j)
            out[j] -= out[j - step];
    return out;
}

inline Series mul(const Series& a, const Series& b) {
    const std::int64_t n = std::min(a.degree(), b.degree());
    Series out(n);
    for (std::int64_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::int64_t j = 0; i + j <= n; ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Direct power-series inversion.  With a0 = 1/a0 = +-1 the reciprocal has
// integer coefficients b_n = -a0 * sum_{k=1..n} a_k b_{n-k}.
inline Series inv(const Series& a) {
    if (a[0] != 1 && a[0] != -1)
        throw std::invalid_argument("series is invertible only when its constant term is +1 or -1");
    Series out(a.degree());
    out[0] = a[0];
    for (std::int64_t n = 1; n <= a.degree(); ++n) {
        mpz_class acc = 0;
        for (std::int64_t k = 1; k <= n; ++k)
            if (a[k] != 0) acc += a[k] * out[n - k];
        out[n] = -a[0] * acc;
    }
    return out;
}

// Product of f(k) over the numerator indices divided by the product over the
// denominator indices.
inline Series eta_quotient(const std::vector<std::int64_t>& numerators,
                           const std::vector<std::int64_t>& denominators,
                           std::int64_t degree) {
    Series num = Series::one(degree);
    for (const std::int64_t k : numerators) num = mul(num, f(k, degree));
    Series den = Series::one(degree);
    for (const std::int64_t k : denominators) den = mul(den, f(k, degree));
    return mul(num, inv(den));
}

namespace detail {

inline void check_gf_moduli(std::int64_t s, std::int64_t t) {
    if (s < 2 || t < 2)
        throw std::invalid_argument("generating function moduli must be at least 2");
}

}  // namespace detail

// Counts partitions that are s-regular and t-distinct.  Symmetric in s and t.
inline Series gf_regular_distinct(std::int64_t s, std::int64_t t, std::int64_t degree) {
    detail::check_gf_moduli(s, t);
    return eta_quotient({s, t}, {1, s * t}, degree);
}

// Counts partitions that are both s-regular and t-regular.
inline Series gf_regular_regular(std::int64_t s, std::int64_t t, std::int64_t degree) {
    detail::check_gf_moduli(s, t);
    return eta_quotient({s, t}, {1, std::lcm(s, t)}, degree);
}

// Counts partitions that are s-regular, t-regular and s-distinct at once;
// needs s < t.
inline Series gf_regular_regular_distinct(std::int64_t s, std::int64_t t, std::int64_t degree) {
    detail::check_gf_moduli(s, t);
    if (s >= t)
        throw std::invalid_argument("the first modulus must be smaller than the second");
    const std::int64_t l = std::lcm(s, t);
    return eta_quotient({s, t, s, s * l}, {1, l, s * s, s * t}, degree);
}

// The two eta quotients that bridge counting s-regular t-distinct partitions
// through an intermediate divisor d of s.  Returns whether they agree up to
// the given degree.
inline bool check_intermediate_identity(std::int64_t s, std::int64_t d, std::int64_t t,
                                        std::int64_t degree) {
    detail::check_gf_moduli(s, t);
    if (d < 1 || s % d != 0)
        throw std::invalid_argument("intermediate modulus must divide the first modulus");
    const Series lhs = eta_quotient({t, d, d * t, s}, {1, t * d, d, s * t}, degree);
    const Series rhs = eta_quotient({t, s}, {1, s * t}, degree);
    return lhs == rhs;
}

inline std::string render_coefficients(const Series& a) {
    std::string out;
    for (std::int64_t n = 0; n <= a.degree(); ++n)
        out += std::to_string(n) + ": " + a[n].get_str() + "\n";
    return out;
}

}  // namespace regdist
