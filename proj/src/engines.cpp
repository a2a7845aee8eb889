#include "permpat/engines.hpp"

#include <map>
#include <stdexcept>

namespace permpat::engines {

std::string family_name(GridFamily f) {
  switch (f) {
    case GridFamily::Abc: return "abc";
    case GridFamily::AbcOne: return "abc-one";
    case GridFamily::AbcTwo: return "abc-two";
    case GridFamily::Cab: return "cab";
    case GridFamily::CabOne: return "cab-one";
    case GridFamily::Abcd: return "abcd";
    case GridFamily::AbcBac: return "abc+bac";
  }
  throw std::logic_error("family_name: unknown family");
}

GridFamily family_from_name(const std::string& name) {
  static const std::map<std::string, GridFamily> table = {
      {"abc", GridFamily::Abc},       {"abc-one", GridFamily::AbcOne}, {"abc-two", GridFamily::AbcTwo},
      {"cab", GridFamily::Cab},       {"cab-one", GridFamily::CabOne}, {"abcd", GridFamily::Abcd},
      {"abc+bac", GridFamily::AbcBac}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown family: " + name);
  return it->second;
}

namespace {

struct AbcdLayer {
  std::vector<std::vector<BigInt>> v;      // full (n+1)x(n+1) square
  std::vector<std::vector<BigInt>> pref3;  // pref3[a][k] = sum_{t=1..k} v[a][t]
  std::vector<std::vector<BigInt>> pref2;  // pref2[b][k] = sum_{t=1..k} v[t][b]
};

// Per-thread memo; completed rows are never mutated again.
struct Cache {
  std::vector<std::vector<BigInt>> abc;   // also serves cab: identical recurrence
  std::vector<std::vector<BigInt>> abc1;
  std::vector<std::vector<BigInt>> abc2;
  std::vector<std::vector<BigInt>> cab1;
  std::vector<BigInt> abcbac;             // [n] = P(n,1), n >= 1
  std::vector<AbcdLayer> abcd;
};

thread_local Cache tls;

// P(n,I) = 1 if n = I; P(n,1) if I = 0; else P(n,I+1) + P(n-1,I-1).
// Rows fill with I descending so (n, I+1) is already present.
void ensure_abc(int N) {
  auto& g = tls.abc;
  while (static_cast<int>(g.size()) <= N) {
    const int n = static_cast<int>(g.size());
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[static_cast<std::size_t>(n)] = 1;
    for (int I = n - 1; I >= 1; --I)
      row[static_cast<std::size_t>(I)] = row[static_cast<std::size_t>(I) + 1] + g[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(I) - 1];
    if (n >= 1) row[0] = row[1];
    g.push_back(std::move(row));
  }
}

const BigInt& abc_at(int n, int I) { return tls.abc[static_cast<std::size_t>(n)][static_cast<std::size_t>(I)]; }

// P1(n,I) = n-2 on the I = n-2 diagonal, 0 above it,
// else P1(n,I+1) + P1(n-1,I-1) + P(n-I,2), with P1(n,0) = P1(n,1).
void ensure_abc1(int N) {
  ensure_abc(N);
  auto& g = tls.abc1;
  while (static_cast<int>(g.size()) <= N) {
    const int n = static_cast<int>(g.size());
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    for (int I = n; I >= 0; --I) {
      BigInt val;
      if (I > n - 2)
        val = 0;
      else if (I == n - 2)
        val = n - 2;
      else if (I == 0)
        val = row[1];
      else
        val = row[static_cast<std::size_t>(I) + 1] + g[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(I) - 1] + abc_at(n - I, 2);
      row[static_cast<std::size_t>(I)] = std::move(val);
    }
    g.push_back(std::move(row));
  }
}

const BigInt& abc1_at(int n, int I) { return tls.abc1[static_cast<std::size_t>(n)][static_cast<std::size_t>(I)]; }

// P2(n,I) = n-3 on the I = n-2 diagonal, 0 above it and for all n <= 3, else
// P2(n-1,I-1) + P2(n,I+1) + P1(n-I,2) + P(n-I-1,2) + I*P(n-I,3) + [I>1] P(n-I+1,3).
void ensure_abc2(int N) {
  ensure_abc1(N);
  auto& g = tls.abc2;
  while (static_cast<int>(g.size()) <= N) {
    const int n = static_cast<int>(g.size());
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    if (n > 3) {
      for (int I = n; I >= 0; --I) {
        BigInt val;
        if (I > n - 2)
          val = 0;
        else if (I == n - 2)
          val = n - 3;
        else if (I == 0)
          val = row[1];
        else {
          val = g[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(I) - 1] + row[static_cast<std::size_t>(I) + 1] +
                abc1_at(n - I, 2) + abc_at(n - I - 1, 2) + BigInt(I) * abc_at(n - I, 3);
          if (I > 1) val += abc_at(n - I + 1, 3);
        }
        row[static_cast<std::size_t>(I)] = std::move(val);
      }
    }
    g.push_back(std::move(row));
  }
}

// cab P1(n,I) = I on the I = n-2 diagonal, 0 above it,
// else P1(n,I+1) + P1(n-1,I-1) + P(n-2,I), with P1(n,0) = P1(n,1).
void ensure_cab1(int N) {
  ensure_abc(N);
  auto& g = tls.cab1;
  while (static_cast<int>(g.size()) <= N) {
    const int n = static_cast<int>(g.size());
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    for (int I = n; I >= 0; --I) {
      BigInt val;
      if (I > n - 2)
        val = 0;
      else if (I == n - 2)
        val = I;
      else if (I == 0)
        val = row[1];
      else
        val = row[static_cast<std::size_t>(I) + 1] + g[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(I) - 1] + abc_at(n - 2, I);
      row[static_cast<std::size_t>(I)] = std::move(val);
    }
    g.push_back(std::move(row));
  }
}

void ensure_abcbac(int N) {
  auto& g = tls.abcbac;
  if (g.empty()) g = {BigInt(0), BigInt(1)};
  while (static_cast<int>(g.size()) <= N) g.push_back(2 * g.back());
}

// abcd five-case recurrence. Canonical cells have n >= I1 >= I2 >= 1; the
// I1 < I2 cells collapse onto the diagonal and the index-0 conventions copy
// index 1. Segment sums over the previous layer come from its prefix arrays,
// keeping the whole build at O(n^3).
void ensure_abcd(int N) {
  auto& layers = tls.abcd;
  while (static_cast<int>(layers.size()) <= N) {
    const int n = static_cast<int>(layers.size());
    AbcdLayer layer;
    layer.v.assign(static_cast<std::size_t>(n) + 1, std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
    if (n == 0) {
      layer.v[0][0] = 1;
    } else {
      const AbcdLayer& prev = layers[static_cast<std::size_t>(n) - 1];
      for (int I1 = n; I1 >= 1; --I1) {
        for (int I2 = I1; I2 >= 1; --I2) {
          BigInt val;
          if (I1 == n && I2 == n) {
            val = 1;
          } else {
            // sum_{i=I2+1}^{I1} P(n-1, I1-1, i-1)
            val = prev.pref3[static_cast<std::size_t>(I1) - 1][static_cast<std::size_t>(I1) - 1] -
                  prev.pref3[static_cast<std::size_t>(I1) - 1][static_cast<std::size_t>(I2) - 1];
            // sum_{i=I1+1}^{n} P(n-1, i-1, I2)
            val += prev.pref2[static_cast<std::size_t>(I2)][static_cast<std::size_t>(n) - 1] -
                   prev.pref2[static_cast<std::size_t>(I2)][static_cast<std::size_t>(I1) - 1];
            val += prev.v[static_cast<std::size_t>(I1) - 1][static_cast<std::size_t>(I2) - 1];
          }
          layer.v[static_cast<std::size_t>(I1)][static_cast<std::size_t>(I2)] = std::move(val);
        }
      }
      for (int I1 = 1; I1 <= n; ++I1)
        for (int I2 = I1 + 1; I2 <= n; ++I2)
          layer.v[static_cast<std::size_t>(I1)][static_cast<std::size_t>(I2)] = layer.v[static_cast<std::size_t>(I2)][static_cast<std::size_t>(I2)];
      for (int a = 1; a <= n; ++a) layer.v[static_cast<std::size_t>(a)][0] = layer.v[static_cast<std::size_t>(a)][1];
      layer.v[0] = layer.v[1];
    }
    layer.pref3.assign(static_cast<std::size_t>(n) + 1, std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0)));
    layer.pref2.assign(static_cast<std::size_t>(n) + 1, std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0)));
    for (int a = 0; a <= n; ++a)
      for (int k = 1; k <= n; ++k) {
        layer.pref3[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] =
            layer.pref3[static_cast<std::size_t>(a)][static_cast<std::size_t>(k) - 1] + layer.v[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
        layer.pref2[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] =
            layer.pref2[static_cast<std::size_t>(a)][static_cast<std::size_t>(k) - 1] + layer.v[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
      }
    layers.push_back(std::move(layer));
  }
}

void check_domain(int n, int I, const char* what) {
  if (n < 0 || I < 0 || I > n)
    throw std::domain_error(std::string(what) + ": (n, I) = (" + std::to_string(n) + ", " + std::to_string(I) +
                            ") outside 0 <= I <= n");
}

}  // namespace

BigInt abc_P(int n, int I) {
  check_domain(n, I, "abc_P");
  ensure_abc(n);
  return abc_at(n, I);
}

BigInt abc_P1(int n, int I) {
  check_domain(n, I, "abc_P1");
  ensure_abc1(n);
  return abc1_at(n, I);
}

BigInt abc_P2(int n, int I) {
  check_domain(n, I, "abc_P2");
  ensure_abc2(n);
  return tls.abc2[static_cast<std::size_t>(n)][static_cast<std::size_t>(I)];
}

BigInt cab_P(int n, int I) {
  check_domain(n, I, "cab_P");
  ensure_abc(n);
  return abc_at(n, I);
}

BigInt cab_P1(int n, int I) {
  check_domain(n, I, "cab_P1");
  ensure_cab1(n);
  return tls.cab1[static_cast<std::size_t>(n)][static_cast<std::size_t>(I)];
}

BigInt abcd_P(int n, int I1, int I2) {
  if (n < 0 || I1 < 0 || I2 < 0 || I1 > n || I2 > n)
    throw std::domain_error("abcd_P: (n, I1, I2) = (" + std::to_string(n) + ", " + std::to_string(I1) + ", " +
                            std::to_string(I2) + ") outside 0 <= I1, I2 <= n");
  ensure_abcd(n);
  return tls.abcd[static_cast<std::size_t>(n)].v[static_cast<std::size_t>(I1)][static_cast<std::size_t>(I2)];
}

BigInt abc_bac_P(int n) {
  if (n <= 0) throw std::domain_error("abc_bac_P: n must be >= 1");
  ensure_abcbac(n);
  return tls.abcbac[static_cast<std::size_t>(n)];
}

const BigInt& TableGrid::at(int n, int I) const {
  if (arity_ != 2) throw std::logic_error("TableGrid::at: grid is three-indexed");
  if (n < n_min_ || n > n_max_ || I < 0 || I > n) throw std::domain_error("TableGrid::at: cell out of domain");
  return rows_[static_cast<std::size_t>(n - n_min_)][static_cast<std::size_t>(I)];
}

const BigInt& TableGrid::at(int n, int I1, int I2) const {
  if (arity_ != 3) throw std::logic_error("TableGrid::at: grid is two-indexed");
  if (n < 0 || n > n_max_ || I1 < 0 || I2 < 0 || I1 > n || I2 > n)
    throw std::domain_error("TableGrid::at: cell out of domain");
  return cube_[static_cast<std::size_t>(n)][static_cast<std::size_t>(I1)][static_cast<std::size_t>(I2)];
}

std::string TableGrid::to_csv() const {
  if (arity_ != 3) {
    std::string out = "n";
    for (int I = 0; I <= n_max_; ++I) out += ",I=" + std::to_string(I);
    out += "\n";
    for (int n = n_min_; n <= n_max_; ++n) {
      out += std::to_string(n);
      for (int I = 0; I <= n_max_; ++I) {
        out += ",";
        if (I <= n) out += to_decimal(at(n, I));
      }
      out += "\n";
    }
    return out;
  }
  throw std::logic_error("TableGrid::to_csv: export a two-indexed slice of the abcd grid instead");
}

nlohmann::json TableGrid::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  if (arity_ == 2) {
    for (int n = n_min_; n <= n_max_; ++n)
      for (int I = 0; I <= n; ++I) cells.push_back({{"n", n}, {"I", I}, {"value", to_decimal(at(n, I))}});
  } else {
    for (int n = 0; n <= n_max_; ++n)
      for (int I1 = 0; I1 <= n; ++I1)
        for (int I2 = 0; I2 <= n; ++I2)
          cells.push_back({{"n", n}, {"I", {I1, I2}}, {"value", to_decimal(at(n, I1, I2))}});
  }
  return {{"family", family_name(family_)}, {"n_max", n_max_}, {"cells", cells}};
}

TableGrid TableGrid::from_json(const nlohmann::json& j) {
  TableGrid g;
  g.family_ = family_from_name(j.at("family").get<std::string>());
  g.n_max_ = j.at("n_max").get<int>();
  g.n_min_ = g.family_ == GridFamily::AbcBac ? 1 : 0;
  g.arity_ = g.family_ == GridFamily::Abcd ? 3 : 2;
  if (g.arity_ == 2) {
    for (int n = g.n_min_; n <= g.n_max_; ++n) g.rows_.emplace_back(static_cast<std::size_t>(n) + 1);
  } else {
    for (int n = 0; n <= g.n_max_; ++n)
      g.cube_.emplace_back(static_cast<std::size_t>(n) + 1, std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
  }
  for (const auto& cell : j.at("cells")) {
    const int n = cell.at("n").get<int>();
    const BigInt value = bigint_from_decimal(cell.at("value").get<std::string>());
    if (g.arity_ == 2) {
      const int I = cell.at("I").get<int>();
      g.rows_.at(static_cast<std::size_t>(n - g.n_min_)).at(static_cast<std::size_t>(I)) = value;
    } else {
      const auto idx = cell.at("I");
      g.cube_.at(static_cast<std::size_t>(n)).at(idx.at(0).get<std::size_t>()).at(idx.at(1).get<std::size_t>()) = value;
    }
  }
  return g;
}

bool TableGrid::operator==(const TableGrid& o) const {
  return family_ == o.family_ && n_max_ == o.n_max_ && n_min_ == o.n_min_ && arity_ == o.arity_ && rows_ == o.rows_ &&
         cube_ == o.cube_;
}

TableGrid build_table(GridFamily family, int n_max) {
  if (n_max < 0) throw std::domain_error("build_table: n_max must be >= 0");
  TableGrid g;
  g.family_ = family;
  g.n_max_ = n_max;
  g.n_min_ = family == GridFamily::AbcBac ? 1 : 0;
  g.arity_ = family == GridFamily::Abcd ? 3 : 2;

  auto snapshot = [&](const std::vector<std::vector<BigInt>>& cache) {
    g.rows_.assign(cache.begin(), cache.begin() + n_max + 1);
  };

  switch (family) {
    case GridFamily::Abc:
    case GridFamily::Cab:
      ensure_abc(n_max);
      snapshot(tls.abc);
      break;
    case GridFamily::AbcOne:
      ensure_abc1(n_max);
      snapshot(tls.abc1);
      break;
    case GridFamily::AbcTwo:
      ensure_abc2(n_max);
      snapshot(tls.abc2);
      break;
    case GridFamily::CabOne:
      ensure_cab1(n_max);
      snapshot(tls.cab1);
      break;
    case GridFamily::AbcBac:
      ensure_abcbac(std::max(n_max, 1));
      for (int n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(0));
        row[1] = tls.abcbac[static_cast<std::size_t>(n)];
        row[0] = row[1];
        g.rows_.push_back(std::move(row));
      }
      break;
    case GridFamily::Abcd:
      ensure_abcd(n_max);
      for (int n = 0; n <= n_max; ++n) g.cube_.push_back(tls.abcd[static_cast<std::size_t>(n)].v);
      break;
  }
  return g;
}

}  // namespace permpat::engines
