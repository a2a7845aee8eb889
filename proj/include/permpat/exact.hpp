#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace permpat {

// Exact arbitrary-precision arithmetic, GMP-backed. Nothing in this library
// ever touches floating point; every count and coefficient is exact.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Parses a decimal string; throws std::invalid_argument on malformed input.
inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s); }

// num/den reduced to lowest terms, denominator > 0.
inline BigRational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  BigRational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

// Exact conversion; throws std::logic_error if r is not an integer.
inline BigInt to_integer(const BigRational& r) {
  if (!is_integer(r))
    throw std::logic_error("to_integer: " + r.get_str() + " is not an integer");
  return r.get_num();
}

// Exact quotient; throws std::logic_error if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

BigInt factorial(long n);

// C(n, k) with the extended convention: 0 whenever k < 0, k > n, or n < 0.
// The closed forms downstream rely on out-of-range binomials vanishing.
BigInt binomial(long long n, long long k);

}  // namespace permpat
