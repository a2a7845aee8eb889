#include "permpat/guesser.hpp"

#include <algorithm>

namespace permpat::guesser {

namespace detail {

// Fraction-free (Bareiss) elimination to row echelon form, then rational
// back-substitution per free column.
std::vector<std::vector<BigInt>> integer_nullspace(std::vector<std::vector<BigInt>> m, int ncols) {
  const int nrows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  BigInt prev(1);
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(p)]);
    for (int i = r + 1; i < nrows; ++i) {
      for (int j = c + 1; j < ncols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            exact_div(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                      prev);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
    }
    prev = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<BigInt>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<BigRational> x(static_cast<std::size_t>(ncols), BigRational(0));
    x[static_cast<std::size_t>(f)] = 1;
    for (int row = static_cast<int>(pivot_col.size()) - 1; row >= 0; --row) {
      const int c = pivot_col[static_cast<std::size_t>(row)];
      BigRational acc(0);
      for (int j = c + 1; j < ncols; ++j)
        if (x[static_cast<std::size_t>(j)] != 0)
          acc += BigRational(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(c)] = -acc / BigRational(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]);
    }
    // Scale to a primitive integer vector; x[f] = 1 keeps the sign positive.
    BigInt l(1);
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<BigInt> iv;
    iv.reserve(x.size());
    BigInt content(0);
    for (const auto& v : x) {
      BigInt scaled = v.get_num() * exact_div(l, v.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
      iv.push_back(std::move(scaled));
    }
    if (content > 1)
      for (auto& v : iv) v = exact_div(v, content);
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace detail

namespace {

BigInt int_pow(long base, int e) {
  BigInt b(base), out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

std::vector<BigInt> flatten_padded(const PRecurrence& rec) {
  const int d = rec.degree();
  std::vector<BigInt> out;
  for (const auto& p : rec.coeffs())
    for (int k = 0; k <= d; ++k) out.push_back(to_integer(p.coeff(k)));
  return out;
}

bool lex_less(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const BigInt& x, const BigInt& y) { return x < y; });
}

}  // namespace

PRecurrence PRecurrence::normalized(std::vector<UniPoly> coeffs) {
  if (coeffs.size() < 2) throw std::invalid_argument("PRecurrence: order must be at least 1");
  if (coeffs.back().is_zero()) throw std::invalid_argument("PRecurrence: leading polynomial is zero");

  BigInt den_lcm(1);
  for (const auto& p : coeffs)
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());

  BigInt content(0);
  std::vector<std::vector<BigInt>> ints;
  ints.reserve(coeffs.size());
  for (const auto& p : coeffs) {
    std::vector<BigInt> row;
    for (const auto& c : p.coeffs()) {
      BigInt v = c.get_num() * exact_div(den_lcm, c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      row.push_back(std::move(v));
    }
    ints.push_back(std::move(row));
  }
  if (content == 0) content = 1;

  const bool flip = ints.back().back() < 0;
  std::vector<UniPoly> out;
  out.reserve(ints.size());
  for (auto& row : ints) {
    for (auto& v : row) {
      v = exact_div(v, content);
      if (flip) v = -v;
    }
    out.push_back(UniPoly::of_ints(row));
  }
  return PRecurrence(std::move(out));
}

int PRecurrence::degree() const {
  int d = 0;
  for (const auto& p : coeffs_) d = std::max(d, p.degree());
  return d;
}

std::string PRecurrence::to_string() const {
  std::string out;
  for (int i = order(); i >= 0; --i) {
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[static_cast<std::size_t>(i)].to_string() + ")*a(n";
    if (i > 0) out += "+" + std::to_string(i);
    out += ")";
  }
  return out + " = 0";
}

nlohmann::json PRecurrence::to_json() const {
  const int d = degree();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& p : coeffs_) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k <= d; ++k) row.push_back(to_decimal(to_integer(p.coeff(k))));
    cs.push_back(row);
  }
  return {{"order", order()}, {"degree", d}, {"coeffs", cs}};
}

PRecurrence PRecurrence::from_json(const nlohmann::json& j) {
  std::vector<UniPoly> polys;
  for (const auto& row : j.at("coeffs")) {
    std::vector<BigInt> c;
    for (const auto& v : row) c.push_back(bigint_from_decimal(v.get<std::string>()));
    polys.push_back(UniPoly::of_ints(c));
  }
  return normalized(std::move(polys));
}

bool equivalent(const PRecurrence& r1, const PRecurrence& r2) {
  // Stored form is already canonical.
  return r1.coeffs() == r2.coeffs();
}

GuessReport guess(const std::vector<BigInt>& seq, long start_index, int max_order, int max_degree, int holdout) {
  if (max_order < 1 || max_degree < 0 || holdout < 0)
    throw std::invalid_argument("guess: need max_order >= 1, max_degree >= 0, holdout >= 0");
  GuessReport report;
  report.input_length = seq.size();
  report.max_order = max_order;
  report.max_degree = max_degree;
  report.holdout = holdout;

  const long L = static_cast<long>(seq.size());
  const long required = static_cast<long>(max_order + 1) * (max_degree + 1) + max_order + holdout;
  if (L < required)
    throw std::length_error("guess: need at least " + std::to_string(required) + " terms, got " + std::to_string(L));

  const long usable = L - holdout;

  for (int r = 1; r <= max_order; ++r) {
    for (int d = 0; d <= max_degree; ++d) {
      const int ncols = (r + 1) * (d + 1);
      const long neq = usable - r;
      if (neq < 1) continue;

      std::vector<std::vector<BigInt>> mat;
      mat.reserve(static_cast<std::size_t>(neq));
      for (long t = 0; t < neq; ++t) {
        const long n = start_index + t;
        std::vector<BigInt> row;
        row.reserve(static_cast<std::size_t>(ncols));
        for (int i = 0; i <= r; ++i)
          for (int k = 0; k <= d; ++k) row.push_back(int_pow(n, k) * seq[static_cast<std::size_t>(t + i)]);
        mat.push_back(std::move(row));
      }

      auto basis = detail::integer_nullspace(std::move(mat), ncols);
      if (basis.empty()) continue;

      // Candidates with a nonzero leading polynomial, ranked by fewest
      // nonzero entries in the basis vector, then lexicographically smallest
      // normalized coefficient list.
      struct Candidate {
        PRecurrence rec;
        int nnz;
        std::vector<BigInt> flat;
      };
      std::vector<Candidate> cands;
      for (const auto& vec : basis) {
        bool lead_nonzero = false;
        for (int k = 0; k <= d; ++k)
          if (vec[static_cast<std::size_t>(r * (d + 1) + k)] != 0) lead_nonzero = true;
        if (!lead_nonzero) continue;
        std::vector<UniPoly> polys;
        polys.reserve(static_cast<std::size_t>(r) + 1);
        for (int i = 0; i <= r; ++i) {
          std::vector<BigInt> c(vec.begin() + i * (d + 1), vec.begin() + (i + 1) * (d + 1));
          polys.push_back(UniPoly::of_ints(c));
        }
        PRecurrence rec = PRecurrence::normalized(std::move(polys));
        int nnz = 0;
        for (const auto& v : vec)
          if (v != 0) ++nnz;
        cands.push_back({std::move(rec), nnz, {}});
        cands.back().flat = flatten_padded(cands.back().rec);
      }
      if (cands.empty()) continue;
      auto best = std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.nnz != b.nnz) return a.nnz < b.nnz;
        return lex_less(a.flat, b.flat);
      });

      // Holdout validation: every equation touching a held-out term must
      // vanish as well, otherwise the fit is rejected.
      bool ok = true;
      int validated = 0;
      for (long t = neq; t <= L - 1 - r && ok; ++t) {
        const long n = start_index + t;
        BigInt acc(0);
        for (int i = 0; i <= r; ++i)
          acc += best->rec.coeffs()[static_cast<std::size_t>(i)].eval_int(BigInt(n)) * seq[static_cast<std::size_t>(t + i)];
        ok = (acc == 0);
        if (ok) ++validated;
      }
      if (!ok) continue;
      report.found = best->rec;
      report.validated_terms = validated;
      return report;
    }
  }
  return report;
}

std::vector<BigInt> apply(const PRecurrence& rec, std::vector<BigInt> initial, int count, long start_index) {
  const int r = rec.order();
  if (static_cast<int>(initial.size()) != r)
    throw std::invalid_argument("apply: need exactly order-many initial terms");
  if (count < 0) throw std::invalid_argument("apply: negative count");
  std::vector<BigInt> out = std::move(initial);
  for (int step = 0; step < count; ++step) {
    const long n = start_index + step;
    const BigInt lead = rec.coeffs().back().eval_int(BigInt(n));
    if (lead == 0)
      throw singularity_error("apply: leading coefficient vanishes at n = " + std::to_string(n));
    BigInt acc(0);
    for (int i = 0; i < r; ++i)
      acc += rec.coeffs()[static_cast<std::size_t>(i)].eval_int(BigInt(n)) * out[static_cast<std::size_t>(step + i)];
    BigInt num = -acc;
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), lead.get_mpz_t());
    if (rem != 0)
      throw integrality_error("apply: non-integer extension at n = " + std::to_string(n));
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace permpat::guesser
