#pragma once

#include <vector>

#include "permpat/exact.hpp"
#include "permpat/permutation.hpp"

namespace permpat {

// The pattern families the recurrence engines know about. Each family fixes
// which occurrence counts enter the weight monomial.
enum class PatternFamily { Abc, Cab, Abcd, AbcBac };

// Exponent vector of a permutation's weight monomial.
//
// phi_aj[j]  = pairs i < k with sigma(i) < sigma(k) = j         (j = 2..n)
// phi_abj[j] = increasing triples ending at value j             (j = 3..n, Abcd)
// phi_ja[j]  = pairs i < k with sigma(i) = j > sigma(k)         (j = 2..n, AbcBac)
//
// Note phi_aj(sigma) + phi_ja(sigma) = j - 1 for every j: the values below j
// split into those placed before j (aj pairs) and after j (ja pairs).
struct OccurrenceProfile {
  BigInt phi_main;       // abc / cab / abcd occurrences
  BigInt phi_secondary;  // bac occurrences (AbcBac only), else 0
  std::vector<BigInt> phi_aj;   // indexed by j; [0], [1] unused
  std::vector<BigInt> phi_abj;  // Abcd only
  std::vector<BigInt> phi_ja;   // AbcBac only
};

OccurrenceProfile occurrence_profile(const Permutation& sigma, PatternFamily family);

namespace detail {

// Plain-int kernels used by the brute-force sweeps; counts at brute scales
// fit comfortably in 64 bits.
std::vector<long long> aj_counts(const std::vector<int>& s);   // [j], j = 2..n
std::vector<long long> ja_counts(const std::vector<int>& s);   // [j], j = 2..n
std::vector<long long> abj_counts(const std::vector<int>& s);  // [j], j = 3..n
long long count_increasing_ll(const std::vector<int>& s, int r);

// Largest I such that sigma has no aj pattern for any j <= I: one less than
// the smallest violated j, or n when no aj pattern exists at all.
int max_clear_threshold(const std::vector<long long>& counts, int n, int first_j);

}  // namespace detail

}  // namespace permpat
