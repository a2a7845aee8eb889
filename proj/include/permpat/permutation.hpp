#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "permpat/exact.hpp"

namespace permpat {

// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  // Validates that entries are exactly a rearrangement of {1..n};
  // throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  // 0-based position access: entry(i) = sigma(i+1).
  int entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const Permutation& o) const = default;

  Permutation reversed() const;
  Permutation complemented() const;

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

// A pattern is a permutation of {1..r} matched against subsequences.
class Pattern {
 public:
  explicit Pattern(Permutation p) : perm_(std::move(p)) {}

  // Accepts both alphabetic ("abc", "cab", "bac", "abcd", "ba") and digit
  // ("123", "312", "21") spellings.
  static Pattern parse(const std::string& text);

  int size() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  int entry(int i) const { return perm_.entry(i); }

  bool operator==(const Pattern& o) const = default;

 private:
  Permutation perm_;
};

// Order-isomorphic relabeling of a word of distinct integers onto {1..r}.
// Throws std::invalid_argument on duplicate entries.
Pattern reduce(std::span<const int> word);
Pattern reduce(const std::vector<int>& word);

// Number of index subsequences of sigma whose reduction equals pi; 0 when
// pi is longer than sigma. Monotone patterns go through a layered
// prefix-count DP, other length-3 patterns through an outer-pair prefix
// count; anything else falls back to subsequence enumeration.
long long count_pattern_ll(const Permutation& sigma, const Pattern& pi);
inline BigInt count_pattern(const Permutation& sigma, const Pattern& pi) {
  return BigInt(static_cast<long>(count_pattern_ll(sigma, pi)));
}

// Streams all permutations of {1..n} in lexicographic order without
// materializing S_n. n = 0 yields the single empty permutation.
template <typename F>
void for_each_permutation(int n, F&& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(const_cast<const std::vector<int>&>(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace permpat
