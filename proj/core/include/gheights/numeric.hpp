#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gheights/errors.hpp"

namespace gheights {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e);

/// Floor of log2(|a|) for a != 0, i.e. bit length minus one.
inline long bit_length(const Int& a) { return static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)); }

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// Exact square root of a nonnegative rational, or nullopt if it is not a rational square.
std::optional<Rat> exact_sqrt(const Rat& q);

/// gcd over Q: the positive generator of the fractional Z-ideal spanned by the inputs.
/// Zero for an empty or all-zero input.
Rat rational_content(const std::vector<Rat>& xs);

/// Parse "p/q", "p" or "-p/q" with q > 0 after normalization.
Rat parse_rat(const std::string& s);

/// Render as "p/q", or "p" when the denominator is one.
std::string format_rat(const Rat& q);

/// Decimal string with the given number of fractional digits, rounded toward zero.
std::string decimal_string(const Rat& q, int digits);

/// Trial division; input must fit the desk-scale cap |n| <= 10^12.
std::vector<Int> prime_factors(Int n);

}  // namespace gheights
