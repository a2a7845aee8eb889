#include <doctest.h>

#include <random>

#include "permpat/closed_forms.hpp"
#include "permpat/engines.hpp"
#include "permpat/guesser.hpp"

using namespace permpat;
using namespace permpat::guesser;

namespace {

std::vector<BigInt> catalan_column(int n_max) {
  std::vector<BigInt> seq;
  for (int n = 0; n <= n_max; ++n) seq.push_back(engines::abc_P(n, std::min(n, 1)));
  return seq;
}

std::vector<BigInt> abcd_column(int n_max) {
  std::vector<BigInt> seq;
  for (int n = 0; n <= n_max; ++n) seq.push_back(engines::abcd_P(n, std::min(n, 1), std::min(n, 1)));
  return seq;
}

PRecurrence paper_abcd_recurrence() {
  // (n+4)^2 a(n+2) - (10n^2+42n+41) a(n+1) + 9(n+1)^2 a(n) = 0
  return PRecurrence::normalized({UniPoly::of({9, 18, 9}), UniPoly::of({-41, -42, -10}), UniPoly::of({16, 8, 1})});
}

PRecurrence catalan_recurrence() {
  // (n+2) a(n+1) - (4n+2) a(n) = 0
  return PRecurrence::normalized({UniPoly::of({-2, -4}), UniPoly::of({2, 1})});
}

}  // namespace

TEST_CASE("guess finds the Catalan recurrence at order 1, degree 1") {
  const auto report = guess(catalan_column(20), 0, 1, 1, 4);
  REQUIRE(report.found.has_value());
  CHECK(equivalent(*report.found, catalan_recurrence()));
  CHECK(report.found->order() == 1);
  CHECK(report.found->degree() == 1);
  CHECK(report.validated_terms == 4);
  // Direct ratio check of the recurrence on engine output.
  for (int n = 0; n < 20; ++n)
    CHECK(BigInt(n + 2) * engines::abc_P(n + 1, 1) == BigInt(4 * n + 2) * engines::abc_P(n, std::min(n, 1)));
}

TEST_CASE("guess recovers the abcd avoider recurrence") {
  const auto report = guess(abcd_column(24), 0, 2, 2, 4);
  REQUIRE(report.found.has_value());
  CHECK(equivalent(*report.found, paper_abcd_recurrence()));
  CHECK(report.found->to_string() ==
        "(n^2+8n+16)*a(n+2) + (-10n^2-42n-41)*a(n+1) + (9n^2+18n+9)*a(n) = 0");
}

TEST_CASE("search is order-major: a first-order fit wins even with slack") {
  // Catalan admits order-2 annihilators too; the (1,1) cell must be taken first.
  const auto report = guess(catalan_column(20), 0, 2, 2, 4);
  REQUIRE(report.found.has_value());
  CHECK(report.found->order() == 1);
  CHECK(equivalent(*report.found, catalan_recurrence()));
}

TEST_CASE("guess on the abc+bac doubling column") {
  std::vector<BigInt> seq;
  for (int n = 1; n <= 16; ++n) seq.push_back(engines::abc_bac_P(n));
  const auto report = guess(seq, 1, 1, 1, 4);
  REQUIRE(report.found.has_value());
  CHECK(equivalent(*report.found, PRecurrence::normalized({UniPoly::of({-2}), UniPoly::of({1})})));
}

TEST_CASE("guess on a constant sequence") {
  const std::vector<BigInt> ones(12, BigInt(1));
  const auto report = guess(ones, 0, 1, 1, 4);
  REQUIRE(report.found.has_value());
  CHECK(equivalent(*report.found, PRecurrence::normalized({UniPoly::of({-1}), UniPoly::of({1})})));
  CHECK(report.found->to_string() == "(1)*a(n+1) + (-1)*a(n) = 0");
}

TEST_CASE("guess handles a first-order recurrence of degree 4") {
  // The two-occurrence column is hypergeometric: its term ratio reduces to
  // degree-4 polynomials, which the (order 1, degree <= 6) search must find
  // at degree exactly 4.
  std::vector<BigInt> seq;
  for (int n = 4; n <= 40; ++n) seq.push_back(closed_forms::a2_abc(n));
  const auto report = guess(seq, 4, 1, 6, 4);
  REQUIRE(report.found.has_value());
  CHECK(report.found->order() == 1);
  CHECK(report.found->degree() == 4);
  const auto rebuilt = apply(*report.found, {seq.front()}, static_cast<int>(seq.size()) - 1, 4);
  CHECK(rebuilt == seq);
}

TEST_CASE("apply honors a nonzero start index") {
  // Catalan recurrence started from a(1) = 1.
  const auto tail = apply(catalan_recurrence(), {BigInt(1)}, 5, 1);
  CHECK(tail == std::vector<BigInt>{1, 2, 5, 14, 42, 132});
}

TEST_CASE("degenerate kernel: the zero sequence picks a deterministic annihilator") {
  // Every coefficient vector annihilates the zero sequence, so the kernel is
  // full-dimensional; the sparsest vector with a nonzero leading polynomial
  // must win.
  const std::vector<BigInt> zeros(12, BigInt(0));
  const auto report = guess(zeros, 0, 1, 1, 4);
  REQUIRE(report.found.has_value());
  CHECK(report.found->to_string() == "(1)*a(n+1) + (0)*a(n) = 0");
  const auto again = guess(zeros, 0, 1, 1, 4);
  CHECK(equivalent(*report.found, *again.found));
}

TEST_CASE("guess reports nothing for a sequence without a small recurrence") {
  const std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  std::vector<BigInt> seq;
  for (long p : primes) seq.push_back(BigInt(p));
  const auto report = guess(seq, 0, 2, 2, 4);
  CHECK_FALSE(report.found.has_value());
}

TEST_CASE("holdout rejects a window-only fit") {
  // Constant on the window, two jumps confined to the holdout: the constant
  // recurrence fits the window but no degree-1 repair can absorb both jumps.
  std::vector<BigInt> seq(16, BigInt(5));
  seq[12] = 9;
  seq[13] = 9;
  seq[14] = 12;
  seq[15] = 12;
  const auto report = guess(seq, 0, 1, 1, 4);
  CHECK_FALSE(report.found.has_value());
}

TEST_CASE("guess enforces the input-length precondition") {
  CHECK_THROWS_AS(guess(std::vector<BigInt>(8, BigInt(1)), 0, 1, 1, 4), std::length_error);
  CHECK_NOTHROW(guess(std::vector<BigInt>(9, BigInt(1)), 0, 1, 1, 4));
}

TEST_CASE("apply extends sequences exactly") {
  const auto abcd = apply(paper_abcd_recurrence(), {BigInt(1), BigInt(1)}, 9);
  const std::vector<long> expect = {1, 1, 2, 6, 23, 103, 513, 2761, 15767, 94359, 586590};
  REQUIRE(abcd.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(abcd[i] == expect[i]);

  const auto cats = apply(catalan_recurrence(), {BigInt(1)}, 10);
  const std::vector<long> cexp = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  REQUIRE(cats.size() == cexp.size());
  for (std::size_t i = 0; i < cexp.size(); ++i) CHECK(cats[i] == cexp[i]);

  const auto sevens = apply(PRecurrence::normalized({UniPoly::of({-1}), UniPoly::of({1})}), {BigInt(7)}, 3);
  CHECK(sevens == std::vector<BigInt>{7, 7, 7, 7});
}

TEST_CASE("apply raises on singularities and non-integer extensions") {
  // (n-2) a(n+1) - 2(n-2) a(n) = 0 doubles until the lead vanishes at n = 2
  const PRecurrence sing = PRecurrence::normalized({UniPoly::of({4, -2}), UniPoly::of({-2, 1})});
  CHECK(apply(sing, {BigInt(1)}, 2) == std::vector<BigInt>{1, 2, 4});
  CHECK_THROWS_AS(apply(sing, {BigInt(1)}, 5), singularity_error);
  // 2 a(n+1) - a(n) = 0 forces halving
  const PRecurrence halves = PRecurrence::normalized({UniPoly::of({-1}), UniPoly::of({2})});
  CHECK_THROWS_AS(apply(halves, {BigInt(1)}, 1), integrality_error);
  CHECK_THROWS_AS(apply(halves, {BigInt(1), BigInt(1)}, 1), std::invalid_argument);
}

TEST_CASE("round trip: apply(guess(S)) reproduces S") {
  const auto seq = catalan_column(20);
  const auto report = guess(seq, 0, 1, 1, 4);
  REQUIRE(report.found.has_value());
  const int r = report.found->order();
  const std::vector<BigInt> initial(seq.begin(), seq.begin() + r);
  const auto rebuilt = apply(*report.found, initial, static_cast<int>(seq.size()) - r);
  CHECK(rebuilt == seq);
}

TEST_CASE("soundness: a found recurrence annihilates every supplied term") {
  const auto seq = abcd_column(24);
  const auto report = guess(seq, 0, 2, 2, 4);
  REQUIRE(report.found.has_value());
  const auto& polys = report.found->coeffs();
  const int r = report.found->order();
  for (std::size_t t = 0; t + static_cast<std::size_t>(r) < seq.size(); ++t) {
    BigInt acc(0);
    for (int i = 0; i <= r; ++i)
      acc += polys[static_cast<std::size_t>(i)].eval_int(BigInt(static_cast<long>(t))) * seq[t + static_cast<std::size_t>(i)];
    CHECK(acc == 0);
  }
}

TEST_CASE("scaling invariance: guess(c*S) is equivalent to guess(S)") {
  auto seq = abcd_column(24);
  const auto base = guess(seq, 0, 2, 2, 4);
  for (auto& v : seq) v *= 3;
  const auto scaled = guess(seq, 0, 2, 2, 4);
  REQUIRE(base.found.has_value());
  REQUIRE(scaled.found.has_value());
  CHECK(equivalent(*base.found, *scaled.found));
}

TEST_CASE("equivalent handles scaling and denominator clearing") {
  const PRecurrence a = catalan_recurrence();
  const PRecurrence scaled = PRecurrence::normalized({UniPoly::of({-6, -12}), UniPoly::of({6, 3})});
  CHECK(equivalent(a, scaled));

  // The abcd recurrence scaled through by the rational 3/7 normalizes back
  // to the same primitive integer form.
  const BigRational s = make_rational(BigInt(3), BigInt(7));
  const PRecurrence rational = PRecurrence::normalized({
      UniPoly::of({9, 18, 9}).scaled(s),
      UniPoly::of({-41, -42, -10}).scaled(s),
      UniPoly::of({16, 8, 1}).scaled(s),
  });
  CHECK(equivalent(rational, paper_abcd_recurrence()));
  CHECK_FALSE(equivalent(a, paper_abcd_recurrence()));
}

TEST_CASE("integer_nullspace against a rational-arithmetic rank oracle") {
  // Test-side oracle: plain Gaussian elimination over BigRational gives the
  // rank; the basis must annihilate every row, have size ncols - rank, be
  // primitive, and carry the reduced-echelon sign convention.
  auto rational_rank = [](std::vector<std::vector<BigInt>> m, int ncols) {
    std::vector<std::vector<BigRational>> a;
    for (const auto& row : m) {
      std::vector<BigRational> r;
      for (const auto& v : row) r.emplace_back(v);
      a.push_back(std::move(r));
    }
    int rank = 0;
    for (int c = 0; c < ncols && rank < static_cast<int>(a.size()); ++c) {
      int p = -1;
      for (int i = rank; i < static_cast<int>(a.size()); ++i)
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(p)]);
      for (int i = rank + 1; i < static_cast<int>(a.size()); ++i) {
        const BigRational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                              a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        for (int j = c; j < ncols; ++j)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
              f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
      }
      ++rank;
    }
    return rank;
  };

  std::mt19937 rng(987654u);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 2 + static_cast<int>(rng() % 7);
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(rows),
                                       std::vector<BigInt>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
      for (auto& v : row) v = BigInt(static_cast<long>(rng() % 19) - 9);
    // every third trial: force rank deficiency by duplicating a row
    if (rows >= 2 && trial % 3 == 0) m[static_cast<std::size_t>(rows - 1)] = m[0];

    const auto basis = detail::integer_nullspace(m, cols);
    CHECK(static_cast<int>(basis.size()) == cols - rational_rank(m, cols));
    for (const auto& vec : basis) {
      REQUIRE(static_cast<int>(vec.size()) == cols);
      for (const auto& row : m) {
        BigInt dot(0);
        for (int j = 0; j < cols; ++j) dot += row[static_cast<std::size_t>(j)] * vec[static_cast<std::size_t>(j)];
        CHECK(dot == 0);
      }
      BigInt content(0);
      for (const auto& v : vec) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      CHECK(content == 1);  // primitive, in particular nonzero
    }
  }
}

TEST_CASE("PRecurrence normalization and serialization") {
  CHECK_THROWS_AS(PRecurrence::normalized({UniPoly::of({1})}), std::invalid_argument);
  CHECK_THROWS_AS(PRecurrence::normalized({UniPoly::of({1}), UniPoly()}), std::invalid_argument);

  // Content removal and sign normalization.
  const PRecurrence rec = PRecurrence::normalized({UniPoly::of({4}), UniPoly::of({-8})});
  CHECK(rec.to_string() == "(2)*a(n+1) + (-1)*a(n) = 0");

  const PRecurrence abcd = paper_abcd_recurrence();
  const auto j = abcd.to_json();
  CHECK(j.at("order") == 2);
  CHECK(j.at("degree") == 2);
  CHECK(j.at("coeffs")[0] == nlohmann::json({"9", "18", "9"}));
  CHECK(j.at("coeffs")[2] == nlohmann::json({"16", "8", "1"}));
  CHECK(equivalent(PRecurrence::from_json(j), abcd));

  // Rational input scales to the primitive integer form.
  const PRecurrence frac = PRecurrence::normalized(
      {UniPoly({make_rational(BigInt(-1), BigInt(2)), make_rational(BigInt(-1), BigInt(1))}),
       UniPoly({make_rational(BigInt(1), BigInt(4)), make_rational(BigInt(1), BigInt(8))})});
  CHECK(frac.to_string() == "(n+2)*a(n+1) + (-8n-4)*a(n) = 0");
}
