#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "permpat/exact.hpp"

namespace permpat {

// Univariate polynomial over BigRational, coefficients stored ascending in
// the variable (conventionally n). Trailing zero coefficients are stripped;
// the zero polynomial is the empty coefficient list with degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs);

  // Convenience constructor from integer coefficients, ascending powers.
  static UniPoly of(std::initializer_list<long> coeffs);
  static UniPoly of_ints(const std::vector<BigInt>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^k; zero beyond the degree.
  BigRational coeff(int k) const;
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  BigRational eval(const BigInt& x) const;  // exact Horner
  BigRational eval(long x) const { return eval(BigInt(x)); }

  // Exact evaluation for integer-coefficient polynomials at an integer point.
  BigInt eval_int(const BigInt& x) const;

  bool integer_coeffs() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const BigRational& c) const;

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  // Descending-power rendering, e.g. "10n^2+42n+41", "-n", "0".
  std::string to_string(const std::string& var = "n") const;

 private:
  void strip();
  std::vector<BigRational> coeffs_;
};

// Exact Horner evaluation of p at integer n.
inline BigRational poly_eval(const UniPoly& p, const BigInt& n) { return p.eval(n); }
inline BigRational poly_eval(const UniPoly& p, long n) { return p.eval(n); }

}  // namespace permpat
