#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace treecross {

using BigInt = mpz_class;
/// Canonical fraction (reduced, positive denominator) backed by GMP.
using Rational = mpq_class;

inline BigInt big_pow(std::int64_t base, unsigned long exponent) {
  BigInt b(static_cast<long>(base));
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

}  // namespace treecross
