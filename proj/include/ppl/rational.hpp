#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "ppl/errors.hpp"

namespace ppl {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  if (s.empty()) throw InputError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(long n, unsigned long k) {
  BigInt out;
  if (n < 0) {
    // C(n, k) for negative n via the upper-negation identity.
    mpz_bin_ui(out.get_mpz_t(), BigInt(k - n - 1).get_mpz_t(), k);
    if (k % 2 == 1) out = -out;
    return out;
  }
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), k);
  return out;
}

inline Rational pow(const Rational& base, long e) {
  Rational result = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  while (k) {
    if (k & 1U) result *= b;
    b *= b;
    k >>= 1U;
  }
  return result;
}

inline std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw InternalError("integer overflow converting " + z.get_str());
  return z.get_si();
}

}  // namespace ppl
