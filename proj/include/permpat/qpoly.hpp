#pragma once

#include <map>
#include <string>
#include <vector>

#include "permpat/exact.hpp"

namespace permpat {

// Sparse polynomial with BigInt coefficients over a fixed list of variables,
// keyed by exponent vector. Variable 0 is conventionally q; the meaning of
// the remaining slots is fixed by whoever builds the polynomial. Zero
// coefficients are never stored.
class QPolynomial {
 public:
  using Expo = std::vector<int>;

  explicit QPolynomial(int nvars) : nvars_(nvars) {}

  static QPolynomial constant(int nvars, BigInt c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Expo, BigInt>& terms() const { return terms_; }

  void add_term(const Expo& e, const BigInt& c);
  QPolynomial& operator+=(const QPolynomial& o);

  BigInt coeff(const Expo& e) const;
  BigInt coeff_sum() const;

  // Univariate view: coefficient of q^k (requires nvars == 1).
  BigInt coeff_univar(int k) const;
  int degree_univar() const;
  std::vector<BigInt> coeffs_univar() const;  // ascending, constant term first

  // Multiplies every term by the monomial with the given exponent vector.
  QPolynomial times_monomial(const Expo& e) const;

  // Substitutes each variable by a monomial of a target variable space:
  // images[v] is the exponent vector (length target_nvars) of the image of
  // variable v. Exponents transform linearly.
  QPolynomial substituted(const std::vector<Expo>& images, int target_nvars) const;

  bool operator==(const QPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  int nvars_;
  std::map<Expo, BigInt> terms_;
};

}  // namespace permpat
