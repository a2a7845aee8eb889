#pragma once

#include <stdexcept>
#include <vector>

#include "permpat/permutation.hpp"
#include "permpat/profile.hpp"
#include "permpat/qpoly.hpp"

namespace permpat {

// Raised when a brute-force request exceeds its configured ceiling.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default ceilings: full S_n scans are O(n! * n^2), so generating-function
// sweeps stop at 10!, routine oracle equality suites at 8!, and the
// multivariate functional-equation checks at 7!.
inline constexpr int kGenPolyCeiling = 10;
inline constexpr int kOracleCeiling = 8;
inline constexpr int kFunctionalEqCeiling = 7;

// F_n^pi(q): coefficient of q^i counts the sigma in S_n with exactly i
// occurrences of pi. Coefficients sum to n!.
QPolynomial gen_poly(int n, const Pattern& pi, int ceiling = kGenPolyCeiling);

// b_i such that f(q) = sum b_i (q-1)^i, for univariate f.
std::vector<BigInt> expand_at_one(const QPolynomial& f);

// Exact counts of sigma in S_n with the prescribed main-pattern occurrence
// count and no forbidden auxiliary pattern up to the threshold(s).
BigInt brute_count_abc(int n, long long r, int I, int ceiling = kGenPolyCeiling);
BigInt brute_count_cab(int n, long long r, int I, int ceiling = kGenPolyCeiling);
BigInt brute_count_abcd(int n, long long r, int I1, int I2, int ceiling = kGenPolyCeiling);
BigInt brute_count_abc_bac(int n, long long r_abc, long long r_bac, int I, int ceiling = kGenPolyCeiling);

// One-pass sweep variants feeding the oracle-equivalence suites: a single
// scan of S_n buckets every permutation, then suffix sums produce the whole
// table at once.
//
// abc/cab: result[r][I] for r = 0..r_max, I = 0..n.
std::vector<std::vector<BigInt>> brute_table_main(PatternFamily family, int n, int r_max,
                                                  int ceiling = kOracleCeiling);
// abcd with r = 0: result[I1][I2] for I1, I2 = 0..n.
std::vector<std::vector<BigInt>> brute_table_abcd(int n, int ceiling = kOracleCeiling);
// abc+bac with zero occurrences of both: result[I] for I = 0..n.
std::vector<BigInt> brute_table_abc_bac(int n, int ceiling = kOracleCeiling);

// The recursive identities satisfied by the weight-monomial sums P_n when
// the last (or first) entry of a permutation is deleted. Checked as exact
// multivariate polynomial identities, both sides built by brute force.
enum class FunctionalEq { AbcLastEntry, CabFirstEntry, AbcdLastEntry };

bool check_functional_equation(int n, FunctionalEq which, int ceiling = kFunctionalEqCeiling);

// Brute-force weight-monomial sums over S_n (exposed for tests).
QPolynomial brute_weight_poly(int n, PatternFamily family);

}  // namespace permpat
