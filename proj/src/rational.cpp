#include "orbcoh/rational.hpp"

#include <cctype>
#include <numeric>

#include "orbcoh/error.hpp"

namespace orbcoh {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IncompatibleConductor: return "IncompatibleConductor";
    case ErrorKind::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::NonInvertibleGenerator: return "NonInvertibleGenerator";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::ProductNotIdentity: return "ProductNotIdentity";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ModelViolation: return "ModelViolation";
    case ErrorKind::InvalidNikulinTriple: return "InvalidNikulinTriple";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotSL: return "NotSL";
    case ErrorKind::PairingUndefined: return "PairingUndefined";
    case ErrorKind::ExponentRange: return "ExponentRange";
    case ErrorKind::CongruenceViolation: return "CongruenceViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw Error(ErrorKind::ParseError, "malformed rational \"" + std::string(text) + "\""); };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) fail();
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) fail();
  Rational r(p, q);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::size_t hash_value(const Integer& value) noexcept {
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(value.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(value.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i)
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(value.get_mpz_t(), static_cast<mp_size_t>(i))));
  return seed;
}

std::size_t hash_value(const Rational& value) noexcept {
  std::size_t seed = hash_value(value.get_num());
  hash_combine(seed, hash_value(value.get_den()));
  return seed;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long long lcm(long long a, long long b) { return std::lcm(a, b); }

}  // namespace orbcoh
