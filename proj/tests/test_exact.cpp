#include <doctest.h>

#include "permpat/exact.hpp"
#include "permpat/unipoly.hpp"

using namespace permpat;

TEST_CASE("binomial small values and conventions") {
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(2 * 4 - 2, 4) == 15);  // feeds the (n=4, I=2) ballot value 9
  CHECK(binomial(5, 9) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -2) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial Pascal identity, exhaustive to n = 200") {
  for (long n = 1; n <= 200; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial symmetry") {
  for (long n = 0; n <= 120; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("rationals are exact and reduced") {
  BigRational half = make_rational(BigInt(3), BigInt(6));
  CHECK(half.get_num() == 1);
  CHECK(half.get_den() == 2);
  // (a/b)*(b/a) == 1 for a grid of nonzero pairs
  for (long a = -9; a <= 9; ++a)
    for (long b = 1; b <= 9; ++b) {
      if (a == 0) continue;
      BigRational r = make_rational(BigInt(a), BigInt(b));
      BigRational s = make_rational(BigInt(b), BigInt(a));
      CHECK(r * s == 1);
    }
  CHECK(make_rational(BigInt(5), BigInt(-10)).get_den() == 2);
  CHECK(make_rational(BigInt(5), BigInt(-10)).get_num() == -1);
  CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("decimal round trip") {
  BigInt big = factorial(40);
  CHECK(bigint_from_decimal(to_decimal(big)) == big);
  CHECK(to_decimal(BigInt(0)) == "0");
  CHECK_THROWS(bigint_from_decimal("12x"));
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(UniPoly::of({1, 1}), 3) == 4);                 // n+1 at 3
  CHECK(poly_eval(UniPoly::of({41, 42, 10}), 0) == 41);          // 10n^2+42n+41 at 0
  CHECK(poly_eval(UniPoly(), 12345) == 0);                       // zero polynomial
  CHECK(poly_eval(UniPoly::of({41, 42, 10}), -1) == 9);
}

TEST_CASE("UniPoly basics") {
  UniPoly zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.is_zero());
  UniPoly p({BigRational(0), BigRational(1), BigRational(0)});  // trailing zero stripped
  CHECK(p.degree() == 1);
  CHECK(UniPoly::of({41, 42, 10}).to_string() == "10n^2+42n+41");
  CHECK(UniPoly::of({-41, -42, -10}).to_string() == "-10n^2-42n-41");
  CHECK(UniPoly::of({2, 1}).to_string() == "n+2");
  CHECK(UniPoly::of({0, -1}).to_string() == "-n");
  CHECK(zero.to_string() == "0");
  CHECK((UniPoly::of({1, 1}) * UniPoly::of({1, 1})).to_string() == "n^2+2n+1");
  CHECK((UniPoly::of({3, 1}) + UniPoly::of({-3, -1})).is_zero());
}
