#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permpat/exact.hpp"
#include "permpat/unipoly.hpp"

namespace permpat::guesser {

// Raised by apply() when the leading coefficient vanishes at an extension index.
struct singularity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by apply() when an extension term is not an integer (the recurrence
// does not fit an integer sequence).
struct integrality_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear recurrence  sum_{i=0..r} p_i(n) a(n+i) = 0  with polynomial
// coefficients in n. Always stored normalized: integer coefficients with
// overall content 1, p_r nonzero, and the leading coefficient of p_r positive.
class PRecurrence {
 public:
  // Normalizes arbitrary rational-coefficient polynomials p_0..p_r.
  // Throws std::invalid_argument when fewer than two polynomials are given
  // or the leading polynomial is zero.
  static PRecurrence normalized(std::vector<UniPoly> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree() const;  // max degree over the p_i
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }

  // "(p_r)*a(n+r) + ... + (p_0)*a(n) = 0"
  std::string to_string() const;
  // {order, degree, coeffs: [[c0, c1, ...], ...]} with p_0 first and every
  // coefficient a decimal string padded to degree+1 entries.
  nlohmann::json to_json() const;
  static PRecurrence from_json(const nlohmann::json& j);

  bool operator==(const PRecurrence& o) const { return coeffs_ == o.coeffs_; }

 private:
  explicit PRecurrence(std::vector<UniPoly> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<UniPoly> coeffs_;
};

// True iff the two recurrences agree after normalization (both are stored
// normalized, so this is coefficient-list equality).
bool equivalent(const PRecurrence& r1, const PRecurrence& r2);

struct GuessReport {
  std::size_t input_length = 0;
  int max_order = 0;
  int max_degree = 0;
  int holdout = 0;
  std::optional<PRecurrence> found;
  int validated_terms = 0;  // holdout equations satisfied by the result
};

// Fits the minimal (order-major, then degree) recurrence annihilating
// seq[start_index ...], holding out the final `holdout` terms as validation.
// Exact arithmetic throughout; the linear systems are solved by fraction-free
// (Bareiss) elimination over the integers. Throws std::length_error when the
// sequence is shorter than (max_order+1)(max_degree+1) + max_order + holdout.
GuessReport guess(const std::vector<BigInt>& seq, long start_index, int max_order, int max_degree,
                  int holdout = 4);

// Extends `initial` (= a(start_index) .. a(start_index+order-1)) by `count`
// further terms, returning the full sequence. Exact rational extension;
// raises singularity_error / integrality_error as appropriate.
std::vector<BigInt> apply(const PRecurrence& rec, std::vector<BigInt> initial, int count,
                          long start_index = 0);

namespace detail {

// Right-nullspace basis of an integer matrix via fraction-free (Bareiss)
// elimination: one primitive integer vector per free column, in ascending
// column order, each with value 0 at every other free column.
std::vector<std::vector<BigInt>> integer_nullspace(std::vector<std::vector<BigInt>> m, int ncols);

}  // namespace detail

}  // namespace permpat::guesser
