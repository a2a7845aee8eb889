#include "permpat/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace permpat {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: entries must be a rearrangement of {1..n}");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
  std::vector<int> v(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
  const int n = size();
  std::vector<int> v(entries_);
  for (auto& x : v) x = n + 1 - x;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ' ';
    out << entry(i);
  }
  return out.str();
}

Pattern Pattern::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Pattern::parse: empty pattern");
  std::vector<int> word;
  word.reserve(text.size());
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z')
      word.push_back(ch - 'a' + 1);
    else if (ch >= '1' && ch <= '9')
      word.push_back(ch - '0');
    else
      throw std::invalid_argument(std::string("Pattern::parse: bad character '") + ch + "'");
  }
  return reduce(word);
}

Pattern reduce(std::span<const int> word) {
  const int r = static_cast<int>(word.size());
  std::vector<int> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[static_cast<std::size_t>(a)] < word[static_cast<std::size_t>(b)]; });
  std::vector<int> out(static_cast<std::size_t>(r));
  for (int rank = 0; rank < r; ++rank) {
    if (rank > 0 && word[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] == word[static_cast<std::size_t>(order[static_cast<std::size_t>(rank - 1)])])
      throw std::invalid_argument("reduce: duplicate entries");
    out[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;
  }
  return Pattern(Permutation(std::move(out)));
}

Pattern reduce(const std::vector<int>& word) { return reduce(std::span<const int>(word)); }

namespace {

bool is_increasing(const Pattern& pi) {
  for (int i = 0; i < pi.size(); ++i)
    if (pi.entry(i) != i + 1) return false;
  return true;
}

bool is_decreasing(const Pattern& pi) {
  for (int i = 0; i < pi.size(); ++i)
    if (pi.entry(i) != pi.size() - i) return false;
  return true;
}

// Layered DP: dp[i] = number of increasing subsequences of length t ending
// at position i, lifted one layer at a time.
long long count_increasing(const std::vector<int>& s, int r) {
  const int n = static_cast<int>(s.size());
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

// Any length-3 pattern: enumerate the outer index pair, count admissible
// middle values with a prefix-count table.
long long count_three(const std::vector<int>& s, const Pattern& pi) {
  const int n = static_cast<int>(s.size());
  if (n < 3) return 0;
  // pc[r][v] = number of positions < r holding a value <= v.
  std::vector<std::vector<int>> pc(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (int r = 1; r <= n; ++r) {
    pc[static_cast<std::size_t>(r)] = pc[static_cast<std::size_t>(r - 1)];
    for (int v = s[static_cast<std::size_t>(r - 1)]; v <= n; ++v) ++pc[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)];
  }
  const int u = pi.entry(0), v = pi.entry(1), w = pi.entry(2);
  const bool outer_incr = u < w;
  long long total = 0;
  for (int p1 = 0; p1 < n; ++p1) {
    for (int p3 = p1 + 2; p3 < n; ++p3) {
      const int a = s[static_cast<std::size_t>(p1)], c = s[static_cast<std::size_t>(p3)];
      if ((a < c) != outer_incr) continue;
      int lo, hi;  // admissible middle values are the open interval (lo, hi)
      if (v < u && v < w) {
        lo = 0;
        hi = std::min(a, c);
      } else if (v > u && v > w) {
        lo = std::max(a, c);
        hi = n + 1;
      } else {
        lo = std::min(a, c);
        hi = std::max(a, c);
      }
      if (hi - lo < 2) continue;
      const auto& right = pc[static_cast<std::size_t>(p3)];
      const auto& left = pc[static_cast<std::size_t>(p1 + 1)];
      total += (right[static_cast<std::size_t>(hi - 1)] - right[static_cast<std::size_t>(lo)]) -
               (left[static_cast<std::size_t>(hi - 1)] - left[static_cast<std::size_t>(lo)]);
    }
  }
  return total;
}

// Subsequence enumeration with incremental order-isomorphism pruning.
long long count_enumerate(const std::vector<int>& s, const Pattern& pi) {
  const int n = static_cast<int>(s.size());
  const int r = pi.size();
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(r));
  long long total = 0;
  auto rec = [&](auto&& self, int start) -> void {
    const int t = static_cast<int>(idx.size());
    if (t == r) {
      ++total;
      return;
    }
    for (int i = start; i <= n - (r - t); ++i) {
      bool ok = true;
      for (int sprev = 0; sprev < t && ok; ++sprev) {
        const bool want = pi.entry(sprev) < pi.entry(t);
        const bool have = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(sprev)])] < s[static_cast<std::size_t>(i)];
        ok = (want == have);
      }
      if (!ok) continue;
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

long long count_pattern_ll(const Permutation& sigma, const Pattern& pi) {
  const int n = sigma.size();
  const int r = pi.size();
  if (r == 0) return 1;
  if (r > n) return 0;
  if (r == 1) return n;
  const auto& s = sigma.entries();
  if (is_increasing(pi)) return count_increasing(s, r);
  if (is_decreasing(pi)) {
    std::vector<int> rev(s.rbegin(), s.rend());
    return count_increasing(rev, r);
  }
  if (r == 3) return count_three(s, pi);
  return count_enumerate(s, pi);
}

}  // namespace permpat
