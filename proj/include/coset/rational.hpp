// rational.hpp - exact rational scalars (GMP) plus parse/format helpers.
#ifndef COSET_RATIONAL_HPP
#define COSET_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "coset/errors.hpp"

namespace coset {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_integer(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_den() == 1;
}

// Parses "p" or "p/q" with optional leading minus.  Returns nullopt on any
// malformed input (empty, trailing junk, zero denominator).
inline std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t slash = s.find('/');
  auto digits_ok = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && (t[0] == '-')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!digits_ok(s, true)) return std::nullopt;
      return Rational(mpz_class(s), 1);
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Truncation toward minus infinity / plus infinity of an exact rational.
inline Integer floor_rat(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Integer ceil_rat(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

}  // namespace coset

#endif
