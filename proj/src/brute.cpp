#include "permpat/brute.hpp"

#include <string>

namespace permpat {

namespace {

void check_ceiling(int n, int ceiling, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": negative n");
  if (n > ceiling)
    throw resource_limit_error(std::string(what) + ": n = " + std::to_string(n) +
                               " exceeds brute-force ceiling " + std::to_string(ceiling));
}

// Variable layout for the abc/cab weight polynomials: [q, q_2 .. q_m].
int main_nvars(int m) { return m <= 1 ? 1 : m; }
int q_index(int j) { return j - 1; }  // j >= 2

// Variable layout for the abcd weight polynomial: [q, q_3 .. q_m, xi_2 .. xi_m].
int abcd_nvars(int m) { return 1 + std::max(0, m - 2) + std::max(0, m - 1); }
int abcd_q_index(int j) { return j - 2; }            // j >= 3
int abcd_xi_index(int j, int m) { return m + j - 3; }  // j >= 2

QPolynomial::Expo unit(int nvars, int idx, int e = 1) {
  QPolynomial::Expo v(static_cast<std::size_t>(nvars), 0);
  v[static_cast<std::size_t>(idx)] = e;
  return v;
}

}  // namespace

QPolynomial gen_poly(int n, const Pattern& pi, int ceiling) {
  check_ceiling(n, ceiling, "gen_poly");
  QPolynomial f(1);
  for_each_permutation(n, [&](const std::vector<int>& v) {
    Permutation sigma(v);
    const long long k = count_pattern_ll(sigma, pi);
    f.add_term({static_cast<int>(k)}, BigInt(1));
  });
  return f;
}

std::vector<BigInt> expand_at_one(const QPolynomial& f) {
  const std::vector<BigInt> c = f.coeffs_univar();
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<BigInt> b(static_cast<std::size_t>(deg) + 1, BigInt(0));
  for (int i = 0; i <= deg; ++i)
    for (int k = i; k <= deg; ++k) b[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(k)] * binomial(k, i);
  return b;
}

namespace {

// Suffix sums over the clear-threshold buckets turn one S_n scan into the
// whole table: a permutation with clear threshold v contributes to every
// cell I <= v.
std::vector<BigInt> suffix_sums(std::vector<BigInt> buckets) {
  for (int v = static_cast<int>(buckets.size()) - 2; v >= 0; --v)
    buckets[static_cast<std::size_t>(v)] += buckets[static_cast<std::size_t>(v) + 1];
  return buckets;
}

}  // namespace

std::vector<std::vector<BigInt>> brute_table_main(PatternFamily family, int n, int r_max, int ceiling) {
  check_ceiling(n, ceiling, "brute_table_main");
  const Pattern cab = Pattern::parse("cab");
  std::vector<std::vector<BigInt>> buckets(static_cast<std::size_t>(r_max) + 1,
                                           std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0)));
  for_each_permutation(n, [&](const std::vector<int>& v) {
    long long r;
    if (family == PatternFamily::Abc) {
      r = detail::count_increasing_ll(v, 3);
    } else {
      r = count_pattern_ll(Permutation(v), cab);
    }
    if (r > r_max) return;
    const int clear = detail::max_clear_threshold(detail::aj_counts(v), n, 2);
    buckets[static_cast<std::size_t>(r)][static_cast<std::size_t>(clear)] += 1;
  });
  for (auto& row : buckets) row = suffix_sums(std::move(row));
  return buckets;
}

std::vector<std::vector<BigInt>> brute_table_abcd(int n, int ceiling) {
  check_ceiling(n, ceiling, "brute_table_abcd");
  std::vector<std::vector<BigInt>> buckets(static_cast<std::size_t>(n) + 1,
                                           std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0)));
  for_each_permutation(n, [&](const std::vector<int>& v) {
    if (detail::count_increasing_ll(v, 4) != 0) return;
    const int v1 = detail::max_clear_threshold(detail::abj_counts(v), n, 3);
    const int v2 = detail::max_clear_threshold(detail::aj_counts(v), n, 2);
    buckets[static_cast<std::size_t>(v1)][static_cast<std::size_t>(v2)] += 1;
  });
  // 2-D suffix sums: cell (I1, I2) counts permutations with v1 >= I1, v2 >= I2.
  for (auto& row : buckets) row = suffix_sums(std::move(row));
  for (int v2 = 0; v2 <= n; ++v2)
    for (int v1 = n - 1; v1 >= 0; --v1)
      buckets[static_cast<std::size_t>(v1)][static_cast<std::size_t>(v2)] +=
          buckets[static_cast<std::size_t>(v1) + 1][static_cast<std::size_t>(v2)];
  return buckets;
}

std::vector<BigInt> brute_table_abc_bac(int n, int ceiling) {
  check_ceiling(n, ceiling, "brute_table_abc_bac");
  const Pattern bac = Pattern::parse("bac");
  std::vector<BigInt> buckets(static_cast<std::size_t>(n) + 1, BigInt(0));
  for_each_permutation(n, [&](const std::vector<int>& v) {
    if (detail::count_increasing_ll(v, 3) != 0) return;
    if (count_pattern_ll(Permutation(v), bac) != 0) return;
    const int clear = std::min(detail::max_clear_threshold(detail::aj_counts(v), n, 2),
                               detail::max_clear_threshold(detail::ja_counts(v), n, 2));
    buckets[static_cast<std::size_t>(clear)] += 1;
  });
  return suffix_sums(std::move(buckets));
}

BigInt brute_count_abc(int n, long long r, int I, int ceiling) {
  check_ceiling(n, ceiling, "brute_count_abc");
  if (I < 0) throw std::domain_error("brute_count_abc: negative threshold");
  const int eff = std::min(I, n);
  BigInt total(0);
  for_each_permutation(n, [&](const std::vector<int>& v) {
    if (detail::count_increasing_ll(v, 3) != r) return;
    if (detail::max_clear_threshold(detail::aj_counts(v), n, 2) >= eff) total += 1;
  });
  return total;
}

BigInt brute_count_cab(int n, long long r, int I, int ceiling) {
  check_ceiling(n, ceiling, "brute_count_cab");
  if (I < 0) throw std::domain_error("brute_count_cab: negative threshold");
  const Pattern cab = Pattern::parse("cab");
  const int eff = std::min(I, n);
  BigInt total(0);
  for_each_permutation(n, [&](const std::vector<int>& v) {
    if (count_pattern_ll(Permutation(v), cab) != r) return;
    if (detail::max_clear_threshold(detail::aj_counts(v), n, 2) >= eff) total += 1;
  });
  return total;
}

BigInt brute_count_abcd(int n, long long r, int I1, int I2, int ceiling) {
  check_ceiling(n, ceiling, "brute_count_abcd");
  if (I1 < 0 || I2 < 0) throw std::domain_error("brute_count_abcd: negative threshold");
  const int e1 = std::min(I1, n), e2 = std::min(I2, n);
  BigInt total(0);
  for_each_permutation(n, [&](const std::vector<int>& v) {
    if (detail::count_increasing_ll(v, 4) != r) return;
    if (detail::max_clear_threshold(detail::abj_counts(v), n, 3) < e1) return;
    if (detail::max_clear_threshold(detail::aj_counts(v), n, 2) >= e2) total += 1;
  });
  return total;
}

BigInt brute_count_abc_bac(int n, long long r_abc, long long r_bac, int I, int ceiling) {
  check_ceiling(n, ceiling, "brute_count_abc_bac");
  if (I < 0) throw std::domain_error("brute_count_abc_bac: negative threshold");
  const Pattern bac = Pattern::parse("bac");
  const int eff = std::min(I, n);
  BigInt total(0);
  for_each_permutation(n, [&](const std::vector<int>& v) {
    if (detail::count_increasing_ll(v, 3) != r_abc) return;
    if (count_pattern_ll(Permutation(v), bac) != r_bac) return;
    if (detail::max_clear_threshold(detail::aj_counts(v), n, 2) < eff) return;
    if (detail::max_clear_threshold(detail::ja_counts(v), n, 2) >= eff) total += 1;
  });
  return total;
}

QPolynomial brute_weight_poly(int n, PatternFamily family) {
  if (n < 0) throw std::domain_error("brute_weight_poly: negative n");
  if (family == PatternFamily::AbcBac)
    throw std::invalid_argument("brute_weight_poly: abc+bac weights are not needed by any identity check");
  const bool abcd = family == PatternFamily::Abcd;
  const int nv = abcd ? abcd_nvars(n) : main_nvars(n);
  const Pattern cab = Pattern::parse("cab");
  QPolynomial p(nv);
  for_each_permutation(n, [&](const std::vector<int>& v) {
    QPolynomial::Expo e(static_cast<std::size_t>(nv), 0);
    if (abcd) {
      e[0] = static_cast<int>(detail::count_increasing_ll(v, 4));
      const auto abj = detail::abj_counts(v);
      const auto aj = detail::aj_counts(v);
      for (int j = 3; j <= n; ++j) e[static_cast<std::size_t>(abcd_q_index(j))] = static_cast<int>(abj[static_cast<std::size_t>(j)]);
      for (int j = 2; j <= n; ++j) e[static_cast<std::size_t>(abcd_xi_index(j, n))] = static_cast<int>(aj[static_cast<std::size_t>(j)]);
    } else {
      e[0] = static_cast<int>(family == PatternFamily::Abc ? detail::count_increasing_ll(v, 3)
                                                           : count_pattern_ll(Permutation(v), cab));
      const auto aj = detail::aj_counts(v);
      for (int j = 2; j <= n; ++j) e[static_cast<std::size_t>(q_index(j))] = static_cast<int>(aj[static_cast<std::size_t>(j)]);
    }
    p.add_term(e, BigInt(1));
  });
  return p;
}

namespace {

// Right-hand side of the last-entry deletion identity for the abc weights:
// appending value i turns every aj pattern with j < i into an abc pattern
// (q_j -> q*q_j), shifts the labels above i (q_j -> q_{j+1}), and creates
// i-1 new ai patterns (the q_i^{i-1} prefactor).
QPolynomial rhs_eq2(int n) {
  const int m = n - 1;
  const int nv_src = main_nvars(m), nv_dst = main_nvars(n);
  const QPolynomial pm = brute_weight_poly(m, PatternFamily::Abc);
  QPolynomial rhs(nv_dst);
  {
    std::vector<QPolynomial::Expo> images(static_cast<std::size_t>(nv_src));
    images[0] = unit(nv_dst, 0);
    for (int j = 2; j <= m; ++j) images[static_cast<std::size_t>(q_index(j))] = unit(nv_dst, q_index(j + 1));
    rhs += pm.substituted(images, nv_dst);
  }
  for (int i = 2; i <= n; ++i) {
    std::vector<QPolynomial::Expo> images(static_cast<std::size_t>(nv_src));
    images[0] = unit(nv_dst, 0);
    for (int j = 2; j <= m; ++j) {
      if (j < i) {
        auto img = unit(nv_dst, 0);
        img[static_cast<std::size_t>(q_index(j))] = 1;
        images[static_cast<std::size_t>(q_index(j))] = std::move(img);
      } else {
        images[static_cast<std::size_t>(q_index(j))] = unit(nv_dst, q_index(j + 1));
      }
    }
    rhs += pm.substituted(images, nv_dst).times_monomial(unit(nv_dst, q_index(i), i - 1));
  }
  return rhs;
}

// First-entry deletion identity for the cab weights: prepending value i as a
// new head turns every ab pair below i into a cab (q exponent), and starts
// one new aj pattern for every j > i (the product prefactor).
QPolynomial rhs_eq18(int n) {
  const int m = n - 1;
  const int nv_src = main_nvars(m), nv_dst = main_nvars(n);
  const QPolynomial pm = brute_weight_poly(m, PatternFamily::Cab);
  QPolynomial rhs(nv_dst);
  for (int i = 1; i <= n; ++i) {
    std::vector<QPolynomial::Expo> images(static_cast<std::size_t>(nv_src));
    images[0] = unit(nv_dst, 0);
    for (int j = 2; j <= m; ++j) {
      if (j < i) {
        auto img = unit(nv_dst, 0);
        img[static_cast<std::size_t>(q_index(j))] = 1;
        images[static_cast<std::size_t>(q_index(j))] = std::move(img);
      } else {
        images[static_cast<std::size_t>(q_index(j))] = unit(nv_dst, q_index(j + 1));
      }
    }
    QPolynomial::Expo prefactor(static_cast<std::size_t>(nv_dst), 0);
    for (int j = std::max(2, i + 1); j <= n; ++j) prefactor[static_cast<std::size_t>(q_index(j))] = 1;
    rhs += pm.substituted(images, nv_dst).times_monomial(prefactor);
  }
  return rhs;
}

// Last-entry deletion identity for the abcd weights: appending value i makes
// abj patterns below i into abcd's (q_j -> q*q_j), aj pairs below i into
// ab-i triples (xi_j -> q_i*xi_j), and i-1 new ai pairs (xi_i^{i-1}).
QPolynomial rhs_eq20(int n) {
  const int m = n - 1;
  const int nv_src = abcd_nvars(m), nv_dst = abcd_nvars(n);
  const QPolynomial pm = brute_weight_poly(m, PatternFamily::Abcd);
  QPolynomial rhs(nv_dst);
  for (int i = 1; i <= n; ++i) {
    std::vector<QPolynomial::Expo> images(static_cast<std::size_t>(nv_src));
    images[0] = unit(nv_dst, 0);
    for (int j = 3; j <= m; ++j) {
      if (j < i) {
        auto img = unit(nv_dst, 0);
        img[static_cast<std::size_t>(abcd_q_index(j))] = 1;
        images[static_cast<std::size_t>(abcd_q_index(j))] = std::move(img);
      } else {
        images[static_cast<std::size_t>(abcd_q_index(j))] = unit(nv_dst, abcd_q_index(j + 1));
      }
    }
    for (int j = 2; j <= m; ++j) {
      if (j < i) {
        QPolynomial::Expo img(static_cast<std::size_t>(nv_dst), 0);
        img[static_cast<std::size_t>(abcd_q_index(i))] = 1;  // i >= 3 whenever j < i here
        img[static_cast<std::size_t>(abcd_xi_index(j, n))] = 1;
        images[static_cast<std::size_t>(abcd_xi_index(j, m))] = std::move(img);
      } else {
        images[static_cast<std::size_t>(abcd_xi_index(j, m))] = unit(nv_dst, abcd_xi_index(j + 1, n));
      }
    }
    QPolynomial::Expo prefactor(static_cast<std::size_t>(nv_dst), 0);
    if (i >= 2) prefactor[static_cast<std::size_t>(abcd_xi_index(i, n))] = i - 1;
    rhs += pm.substituted(images, nv_dst).times_monomial(prefactor);
  }
  return rhs;
}

}  // namespace

bool check_functional_equation(int n, FunctionalEq which, int ceiling) {
  if (n < 1) throw std::domain_error("check_functional_equation: n must be >= 1");
  check_ceiling(n, ceiling, "check_functional_equation");
  switch (which) {
    case FunctionalEq::AbcLastEntry:
      return brute_weight_poly(n, PatternFamily::Abc) == rhs_eq2(n);
    case FunctionalEq::CabFirstEntry:
      return brute_weight_poly(n, PatternFamily::Cab) == rhs_eq18(n);
    case FunctionalEq::AbcdLastEntry:
      return brute_weight_poly(n, PatternFamily::Abcd) == rhs_eq20(n);
  }
  throw std::logic_error("check_functional_equation: unknown equation tag");
}

}  // namespace permpat
