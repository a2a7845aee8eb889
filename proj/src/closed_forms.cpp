#include "permpat/closed_forms.hpp"

#include <stdexcept>

namespace permpat::closed_forms {

namespace {

// Exact rational evaluation; throws std::logic_error if the result is not an
// integer (which on the claimed domains must never happen).
BigInt integral(const BigRational& r, const char* what) {
  if (!is_integer(r)) throw std::logic_error(std::string(what) + ": non-integer value " + r.get_str());
  return r.get_num();
}

}  // namespace

BigInt ballot(int n, int I) {
  if (n < 0 || I < 0 || I > n) throw std::domain_error("ballot: need 0 <= I <= n");
  BigRational r = make_rational(BigInt(I + 1) * binomial(2L * n - I, n), BigInt(n + 1));
  return integral(r, "ballot");
}

BigInt g(int n, int I) {
  if (n < 0 || I < 0) throw std::domain_error("g: need n, I >= 0");
  const long long N = n, J = I;
  return binomial(2 * N - J - 1, N) - binomial(2 * N - J - 1, N + 3) + binomial(2 * N - 2 * J - 2, N - J - 4) -
         binomial(2 * N - 2 * J - 2, N - J - 1) + binomial(2 * N - 2 * J - 3, N - J - 4) -
         binomial(2 * N - 2 * J - 3, N - J - 2);
}

BigInt a1_abc(int n) {
  if (n < 1) throw std::domain_error("a1_abc: n must be >= 1");
  return integral(make_rational(BigInt(3) * binomial(2L * n, n + 3L), BigInt(n)), "a1_abc");
}

BigInt a2_abc(int n) {
  if (n < 1) throw std::domain_error("a2_abc: n must be >= 1");
  const BigInt num = BigInt(59) * n * n + BigInt(117) * n + 100;
  const BigInt den = BigInt(2) * n * (2 * BigInt(n) - 1) * (BigInt(n) + 5);
  return integral(make_rational(num * binomial(2L * n, n - 4L), den), "a2_abc");
}

BigInt a1_cab(int n) {
  if (n < 1) throw std::domain_error("a1_cab: n must be >= 1");
  // C(0,0) = 1 does not vanish, so the formula would give -1/2 at n = 1;
  // a single entry cannot hold a cab.
  if (n == 1) return BigInt(0);
  return integral(make_rational(BigInt(n - 2) * binomial(2L * n - 2, n - 1L), BigInt(2) * n), "a1_cab");
}

bool a1234_recurrence_check_seq(const std::vector<BigInt>& a) {
  if (a.size() < 3) throw std::domain_error("a1234_recurrence_check: need at least three terms");
  for (std::size_t k = 0; k + 2 < a.size(); ++k) {
    const long n = static_cast<long>(k);
    const BigRational den = make_rational(BigInt(1), (BigInt(n) + 4) * (BigInt(n) + 4));
    BigRational rhs = BigRational(-9) * (BigInt(n) + 1) * (BigInt(n) + 1) * den * BigRational(a[k]);
    rhs += (BigRational(10) * n * n + BigRational(42) * n + 41) * den * BigRational(a[k + 1]);
    if (BigRational(a[k + 2]) != rhs) return false;
  }
  return true;
}

bool a1234_recurrence_check(int n_max) {
  if (n_max < 2) throw std::domain_error("a1234_recurrence_check: n_max must be >= 2");
  std::vector<BigInt> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) a.push_back(engines::abcd_P(n, std::min(n, 1), std::min(n, 1)));
  if (a[0] != 1 || a[1] != 1) return false;
  return a1234_recurrence_check_seq(a);
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& m : mismatches)
    ms.push_back({{"n", m.n}, {"I", m.I}, {"expected", to_decimal(m.expected)}, {"actual", to_decimal(m.actual)}});
  return {{"form", form},
          {"family", family},
          {"n_max", n_max},
          {"status", proved ? "proved" : "conjecture"},
          {"mismatches", ms}};
}

VerifyReport verify(const ClosedForm& form, int n_max) {
  VerifyReport rep;
  rep.form = form.name;
  rep.family = engines::family_name(form.family);
  rep.n_max = n_max;
  rep.proved = form.proved;

  auto engine_value = [&](int n, int I) -> BigInt {
    switch (form.family) {
      case engines::GridFamily::Abc: return engines::abc_P(n, I);
      case engines::GridFamily::AbcOne: return engines::abc_P1(n, I);
      case engines::GridFamily::AbcTwo: return engines::abc_P2(n, I);
      case engines::GridFamily::Cab: return engines::cab_P(n, I);
      case engines::GridFamily::CabOne: return engines::cab_P1(n, I);
      default: throw std::logic_error("verify: unsupported engine family");
    }
  };

  for (int n = 0; n <= n_max; ++n) {
    if (form.column_only) {
      if (n < 1) continue;  // the column formulas start at n = 1
      BigInt want = form.eval(n, 1);
      BigInt got = engine_value(n, 1);
      if (want != got) rep.mismatches.push_back({n, 1, want, got});
    } else {
      for (int I = 0; I <= n; ++I) {
        BigInt want = form.eval(n, I);
        BigInt got = engine_value(n, I);
        if (want != got) rep.mismatches.push_back({n, I, want, got});
      }
    }
  }
  return rep;
}

const std::vector<ClosedForm>& standard_forms() {
  static const std::vector<ClosedForm> forms = {
      {"ballot", true, engines::GridFamily::Abc, false, [](int n, int I) { return ballot(n, I); }},
      {"g", true, engines::GridFamily::AbcOne, false, [](int n, int I) { return g(n, I); }},
      {"a1_abc", true, engines::GridFamily::AbcOne, true, [](int n, int) { return a1_abc(n); }},
      {"a2_abc", false, engines::GridFamily::AbcTwo, true, [](int n, int) { return a2_abc(n); }},
      {"a1_cab", false, engines::GridFamily::CabOne, true, [](int n, int) { return a1_cab(n); }},
  };
  return forms;
}

}  // namespace permpat::closed_forms
