#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbcoh {

using Integer = mpz_class;
using Rational = mpq_class;

/// p/q in lowest terms (q != 0).
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalisation). Anything else,
/// including "1//2", "1/0", blanks or trailing junk, throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, else "p/q"; always lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

std::size_t hash_value(const Integer& value) noexcept;
std::size_t hash_value(const Rational& value) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

Integer lcm(const Integer& a, const Integer& b);
long long lcm(long long a, long long b);

}  // namespace orbcoh
