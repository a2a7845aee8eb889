#pragma once

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "permpat/engines.hpp"
#include "permpat/exact.hpp"

namespace permpat::closed_forms {

// Ballot numbers: (I+1)/(n+1) * C(2n-I, n). Counts abc avoiders with no aj
// pattern for j <= I; at I = 1 these are the Catalan numbers. The formula
// already satisfies the I = 0 convention (P(n,0) = P(n,1)), so it is
// evaluated directly.
BigInt ballot(int n, int I);

// Six-binomial expression equal to the one-abc-occurrence count P1(n,I);
// out-of-range binomials vanish, which supplies all the boundary zeros.
BigInt g(int n, int I);

// (3/n) C(2n, n+3): permutations with exactly one abc occurrence.
BigInt a1_abc(int n);

// (59n^2+117n+100) / (2n(2n-1)(n+5)) * C(2n, n-4): exactly two abc
// occurrences (conjectured identity, verified against the engine).
BigInt a2_abc(int n);

// (n-2)/(2n) * C(2n-2, n-1): exactly one cab occurrence (conjectured).
BigInt a1_cab(int n);

// Checks that the abcd avoider column a(n) = abcd_P(n,1,1) satisfies
//   a(n+2) = -9 (n+1)^2/(n+4)^2 a(n) + (10n^2+42n+41)/(n+4)^2 a(n+1)
// exactly in rationals for 0 <= n <= n_max-2, with a(0) = a(1) = 1.
bool a1234_recurrence_check(int n_max);
bool a1234_recurrence_check_seq(const std::vector<BigInt>& a);

// A formula paired with the engine family it must reproduce.
struct ClosedForm {
  std::string name;
  bool proved;  // proved identity vs conjecture
  engines::GridFamily family;
  bool column_only;  // compare only the I = 1 column
  std::function<BigInt(int n, int I)> eval;
};

struct VerifyReport {
  struct Mismatch {
    int n = 0;
    int I = 0;
    BigInt expected;  // closed form
    BigInt actual;    // engine
  };
  std::string form;
  std::string family;
  int n_max = 0;
  bool proved = false;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  nlohmann::json to_json() const;
};

// Compares the form against its engine on every in-domain cell (or the I = 1
// column) up to n_max.
VerifyReport verify(const ClosedForm& form, int n_max);

// ballot, g, a1_abc (proved) and a2_abc, a1_cab (conjectured).
const std::vector<ClosedForm>& standard_forms();

}  // namespace permpat::closed_forms
