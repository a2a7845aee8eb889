#include "permpat/profile.hpp"

namespace permpat {
namespace detail {

std::vector<long long> aj_counts(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    const int j = s[static_cast<std::size_t>(k)];
    long long smaller_before = 0;
    for (int i = 0; i < k; ++i)
      if (s[static_cast<std::size_t>(i)] < j) ++smaller_before;
    if (j >= 2) out[static_cast<std::size_t>(j)] = smaller_before;
  }
  return out;
}

std::vector<long long> ja_counts(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    const int j = s[static_cast<std::size_t>(k)];
    long long smaller_after = 0;
    for (int i = k + 1; i < n; ++i)
      if (s[static_cast<std::size_t>(i)] < j) ++smaller_after;
    if (j >= 2) out[static_cast<std::size_t>(j)] = smaller_after;
  }
  return out;
}

std::vector<long long> abj_counts(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  // inc2[k] = increasing pairs ending at position k
  std::vector<long long> inc2(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < k; ++i)
      if (s[static_cast<std::size_t>(i)] < s[static_cast<std::size_t>(k)]) ++inc2[static_cast<std::size_t>(k)];
  std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    const int j = s[static_cast<std::size_t>(k)];
    if (j < 3) continue;
    long long triples = 0;
    for (int i = 0; i < k; ++i)
      if (s[static_cast<std::size_t>(i)] < j) triples += inc2[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(j)] = triples;
  }
  return out;
}

long long count_increasing_ll(const std::vector<int>& s, int r) {
  const int n = static_cast<int>(s.size());
  if (r > n) return 0;
  std::vector<long long> dp(static_cast<std::size_t>(n), 1);
  for (int t = 2; t <= r; ++t) {
    std::vector<long long> next(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (s[static_cast<std::size_t>(j)] < s[static_cast<std::size_t>(i)]) next[static_cast<std::size_t>(i)] += dp[static_cast<std::size_t>(j)];
    dp.swap(next);
  }
  long long total = 0;
  for (long long v : dp) total += v;
  return total;
}

int max_clear_threshold(const std::vector<long long>& counts, int n, int first_j) {
  for (int j = first_j; j <= n; ++j)
    if (counts[static_cast<std::size_t>(j)] > 0) return j - 1;
  return n;
}

}  // namespace detail

OccurrenceProfile occurrence_profile(const Permutation& sigma, PatternFamily family) {
  const auto& s = sigma.entries();
  const int n = sigma.size();
  OccurrenceProfile p;
  p.phi_secondary = 0;

  auto lift = [n](const std::vector<long long>& v) {
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = BigInt(static_cast<long>(v[j]));
    return out;
  };

  switch (family) {
    case PatternFamily::Abc:
      p.phi_main = BigInt(static_cast<long>(detail::count_increasing_ll(s, 3)));
      p.phi_aj = lift(detail::aj_counts(s));
      break;
    case PatternFamily::Cab:
      p.phi_main = count_pattern(sigma, Pattern::parse("cab"));
      p.phi_aj = lift(detail::aj_counts(s));
      break;
    case PatternFamily::Abcd:
      p.phi_main = BigInt(static_cast<long>(detail::count_increasing_ll(s, 4)));
      p.phi_abj = lift(detail::abj_counts(s));
      p.phi_aj = lift(detail::aj_counts(s));
      break;
    case PatternFamily::AbcBac:
      p.phi_main = BigInt(static_cast<long>(detail::count_increasing_ll(s, 3)));
      p.phi_secondary = count_pattern(sigma, Pattern::parse("bac"));
      p.phi_aj = lift(detail::aj_counts(s));
      p.phi_ja = lift(detail::ja_counts(s));
      break;
  }
  return p;
}

}  // namespace permpat
