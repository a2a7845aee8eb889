#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "permpat/exact.hpp"

namespace permpat::engines {

// One grid per recurrence family: avoiders (r = 0) and the one- and
// two-occurrence counts, all further constrained by the aj-threshold
// index (or the (abj, aj) threshold pair for abcd).
enum class GridFamily { Abc, AbcOne, AbcTwo, Cab, CabOne, Abcd, AbcBac };

std::string family_name(GridFamily f);
GridFamily family_from_name(const std::string& name);

// P(n, I): sigma in S_n with no abc pattern and no aj pattern for j <= I.
// Boundary P(n, n) = 1 (the decreasing permutation), convention P(n,0) = P(n,1).
BigInt abc_P(int n, int I);

// Exactly one abc occurrence; 0 above the I = n-2 diagonal.
BigInt abc_P1(int n, int I);

// Exactly two abc occurrences; 0 for n <= 3 and above the diagonal.
BigInt abc_P2(int n, int I);

// cab avoiders satisfy the same recurrence and boundaries as abc avoiders;
// the values coincide even though the permutations counted differ.
BigInt cab_P(int n, int I);

// Exactly one cab occurrence.
BigInt cab_P1(int n, int I);

// abcd avoiders with no abj pattern for j <= I1 and no aj pattern for
// j <= I2; P(n,n,n) = 1 and P(0,0,0) = 1 (the empty permutation).
BigInt abcd_P(int n, int I1, int I2);

// Permutations avoiding both abc and bac: doubles at each size, 2^(n-1).
BigInt abc_bac_P(int n);

// Fully memoized grid for a family, all thresholds up to n_max. Immutable
// once built; each thread memoizes independently, so families may build in
// parallel from different threads.
class TableGrid {
 public:
  GridFamily family() const { return family_; }
  int n_max() const { return n_max_; }
  int n_min() const { return n_min_; }
  int arity() const { return arity_; }

  const BigInt& at(int n, int I) const;
  const BigInt& at(int n, int I1, int I2) const;

  // RFC-style CSV: header row, first column n, remaining columns I = 0..n_max,
  // decimal values, blank out-of-domain cells (the tables are ragged).
  std::string to_csv() const;

  nlohmann::json to_json() const;
  static TableGrid from_json(const nlohmann::json& j);

  bool operator==(const TableGrid& o) const;

 private:
  friend TableGrid build_table(GridFamily, int);
  TableGrid() = default;

  GridFamily family_ = GridFamily::Abc;
  int n_max_ = 0;
  int n_min_ = 0;
  int arity_ = 2;
  std::vector<std::vector<BigInt>> rows_;               // rows_[n - n_min][I]
  std::vector<std::vector<std::vector<BigInt>>> cube_;  // cube_[n][I1][I2]
};

TableGrid build_table(GridFamily family, int n_max);

}  // namespace permpat::engines
