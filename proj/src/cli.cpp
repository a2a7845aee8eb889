#include "permpat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "permpat/brute.hpp"
#include "permpat/closed_forms.hpp"
#include "permpat/engines.hpp"
#include "permpat/guesser.hpp"

namespace permpat::cli {

namespace {

using engines::GridFamily;

int env_ceiling(int fallback) {
  if (const char* s = std::getenv("PERMPAT_BRUTE_CEILING")) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("PERMPAT_BRUTE_CEILING is not an integer: " + std::string(s));
    }
  }
  return fallback;
}

// A two-index view of a grid (possibly a slice of the abcd cube),
// rows[n - n_min][I] for I = 0..n.
struct View {
  int n_min = 0;
  int n_max = 0;
  std::vector<std::vector<BigInt>> rows;
};

View view_of(const engines::TableGrid& grid) {
  View v{grid.n_min(), grid.n_max(), {}};
  for (int n = grid.n_min(); n <= grid.n_max(); ++n) {
    std::vector<BigInt> row;
    for (int I = 0; I <= n; ++I) row.push_back(grid.at(n, I));
    v.rows.push_back(std::move(row));
  }
  return v;
}

View abcd_slice(int n_max, bool vary_first) {
  View v{0, n_max, {}};
  for (int n = 0; n <= n_max; ++n) {
    std::vector<BigInt> row;
    for (int I = 0; I <= n; ++I)
      row.push_back(vary_first ? engines::abcd_P(n, I, std::min(1, n)) : engines::abcd_P(n, std::min(1, n), I));
    v.rows.push_back(std::move(row));
  }
  return v;
}

std::string view_csv(const View& v) {
  std::string out = "n";
  for (int I = 0; I <= v.n_max; ++I) out += ",I=" + std::to_string(I);
  out += "\n";
  for (int n = v.n_min; n <= v.n_max; ++n) {
    out += std::to_string(n);
    const auto& row = v.rows[static_cast<std::size_t>(n - v.n_min)];
    for (int I = 0; I <= v.n_max; ++I) {
      out += ",";
      if (I <= n) out += to_decimal(row[static_cast<std::size_t>(I)]);
    }
    out += "\n";
  }
  return out;
}

std::string view_plain(const View& v) {
  std::vector<std::size_t> width(static_cast<std::size_t>(v.n_max) + 1, 0);
  for (int n = v.n_min; n <= v.n_max; ++n)
    for (int I = 0; I <= n; ++I)
      width[static_cast<std::size_t>(I)] =
          std::max(width[static_cast<std::size_t>(I)], to_decimal(v.rows[static_cast<std::size_t>(n - v.n_min)][static_cast<std::size_t>(I)]).size());
  std::ostringstream out;
  out << "n";
  for (int I = 0; I <= v.n_max; ++I) {
    std::string h = (I == 0) ? "I=0" : std::to_string(I);
    width[static_cast<std::size_t>(I)] = std::max(width[static_cast<std::size_t>(I)], h.size());
    out << "  " << std::string(width[static_cast<std::size_t>(I)] - h.size(), ' ') << h;
  }
  out << "\n";
  for (int n = v.n_min; n <= v.n_max; ++n) {
    out << n;
    for (int I = 0; I <= n; ++I) {
      std::string c = to_decimal(v.rows[static_cast<std::size_t>(n - v.n_min)][static_cast<std::size_t>(I)]);
      out << "  " << std::string(width[static_cast<std::size_t>(I)] - c.size(), ' ') << c;
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json view_json(const std::string& family, const View& v) {
  nlohmann::json cells = nlohmann::json::array();
  for (int n = v.n_min; n <= v.n_max; ++n)
    for (int I = 0; I <= n; ++I)
      cells.push_back({{"n", n}, {"I", I}, {"value", to_decimal(v.rows[static_cast<std::size_t>(n - v.n_min)][static_cast<std::size_t>(I)])}});
  return {{"family", family}, {"n_max", v.n_max}, {"cells", cells}};
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
  }
}

int cmd_table(const std::string& family, int n_max, const std::string& format, const std::string& out_path,
              std::ostream& out) {
  std::string text;
  if (family == "abcd-I1" || family == "abcd-I2") {
    View v = abcd_slice(n_max, family == "abcd-I1");
    if (format == "csv")
      text = view_csv(v);
    else if (format == "json")
      text = view_json(family, v).dump(2) + "\n";
    else
      text = view_plain(v);
  } else if (family == "abcd") {
    engines::TableGrid grid = engines::build_table(GridFamily::Abcd, n_max);
    if (format != "json")
      throw std::invalid_argument("family abcd is three-indexed: use abcd-I1 / abcd-I2 for tabular views "
                                  "or --format json for the full grid");
    text = grid.to_json().dump(2) + "\n";
  } else {
    engines::TableGrid grid = engines::build_table(engines::family_from_name(family), n_max);
    if (format == "csv")
      text = grid.to_csv();
    else if (format == "json")
      text = grid.to_json().dump(2) + "\n";
    else
      text = view_plain(view_of(grid));
  }
  emit(out, text, out_path);
  return 0;
}

// --- verify ------------------------------------------------------------

struct CheckOutcome {
  bool ok = true;
  std::string first_failure;
  nlohmann::json detail;
};

void note_failure(CheckOutcome& o, const std::string& msg) {
  if (o.ok) o.first_failure = msg;
  o.ok = false;
}

CheckOutcome verify_oracle(int ceiling, std::ostream& out) {
  CheckOutcome outcome;
  for (int n = 0; n <= ceiling; ++n) {
    const auto abc = brute_table_main(PatternFamily::Abc, n, 2, ceiling);
    for (int I = 0; I <= n; ++I) {
      if (engines::abc_P(n, I) != abc[0][static_cast<std::size_t>(I)])
        note_failure(outcome, "abc r=0 n=" + std::to_string(n) + " I=" + std::to_string(I));
      if (engines::abc_P1(n, I) != abc[1][static_cast<std::size_t>(I)])
        note_failure(outcome, "abc r=1 n=" + std::to_string(n) + " I=" + std::to_string(I));
      if (engines::abc_P2(n, I) != abc[2][static_cast<std::size_t>(I)])
        note_failure(outcome, "abc r=2 n=" + std::to_string(n) + " I=" + std::to_string(I));
    }
    const auto cab = brute_table_main(PatternFamily::Cab, n, 1, ceiling);
    for (int I = 0; I <= n; ++I) {
      if (engines::cab_P(n, I) != cab[0][static_cast<std::size_t>(I)])
        note_failure(outcome, "cab r=0 n=" + std::to_string(n) + " I=" + std::to_string(I));
      if (engines::cab_P1(n, I) != cab[1][static_cast<std::size_t>(I)])
        note_failure(outcome, "cab r=1 n=" + std::to_string(n) + " I=" + std::to_string(I));
    }
    const auto abcd = brute_table_abcd(n, ceiling);
    for (int I1 = 0; I1 <= n; ++I1)
      for (int I2 = 0; I2 <= n; ++I2)
        if (engines::abcd_P(n, I1, I2) != abcd[static_cast<std::size_t>(I1)][static_cast<std::size_t>(I2)])
          note_failure(outcome, "abcd n=" + std::to_string(n) + " I1=" + std::to_string(I1) + " I2=" + std::to_string(I2));
    if (n >= 1) {
      const auto ab = brute_table_abc_bac(n, ceiling);
      for (int I = 0; I <= n; ++I) {
        const BigInt expect = I <= 1 ? engines::abc_bac_P(n) : BigInt(0);
        if (expect != ab[static_cast<std::size_t>(I)])
          note_failure(outcome, "abc+bac n=" + std::to_string(n) + " I=" + std::to_string(I));
      }
    }
  }
  out << (outcome.ok ? "[ ok ]" : "[fail]") << " oracle equivalence, all families, n <= " << ceiling;
  if (!outcome.ok) out << " (first mismatch: " << outcome.first_failure << ")";
  out << "\n";
  outcome.detail = {{"suite", "oracle"},
                    {"n_max", ceiling},
                    {"ok", outcome.ok},
                    {"first_mismatch", outcome.ok ? nlohmann::json(nullptr) : nlohmann::json(outcome.first_failure)}};
  return outcome;
}

CheckOutcome verify_closed_forms(int n_max, std::ostream& out) {
  CheckOutcome outcome;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& form : closed_forms::standard_forms()) {
    auto rep = closed_forms::verify(form, n_max);
    reports.push_back(rep.to_json());
    out << (rep.ok() ? "[ ok ]" : "[fail]") << " closed-form " << rep.form << " vs " << rep.family << " ("
        << (rep.proved ? "proved" : "conjecture") << "), n <= " << n_max << ": " << rep.mismatches.size()
        << " mismatches";
    if (!rep.ok()) {
      const auto& m = rep.mismatches.front();
      out << "; first at n=" << m.n << " I=" << m.I << " form=" << to_decimal(m.expected)
          << " engine=" << to_decimal(m.actual);
      note_failure(outcome, rep.form);
    }
    out << "\n";
  }
  const bool rec_ok = closed_forms::a1234_recurrence_check(std::max(2, n_max));
  out << (rec_ok ? "[ ok ]" : "[fail]") << " abcd column recurrence, n <= " << std::max(2, n_max) << "\n";
  if (!rec_ok) note_failure(outcome, "abcd column recurrence");
  outcome.detail = {{"suite", "closed-forms"},
                    {"n_max", n_max},
                    {"ok", outcome.ok},
                    {"reports", reports},
                    {"column_recurrence_ok", rec_ok}};
  return outcome;
}

CheckOutcome verify_functional(int n_max, std::ostream& out) {
  CheckOutcome outcome;
  struct Item {
    FunctionalEq eq;
    const char* name;
  };
  nlohmann::json identities = nlohmann::json::array();
  for (const Item& item : {Item{FunctionalEq::AbcLastEntry, "abc"}, Item{FunctionalEq::CabFirstEntry, "cab"},
                           Item{FunctionalEq::AbcdLastEntry, "abcd"}}) {
    bool ok = true;
    int first_bad = -1;
    for (int n = 1; n <= n_max; ++n) {
      if (!check_functional_equation(n, item.eq, n_max)) {
        ok = false;
        first_bad = n;
        break;
      }
    }
    out << (ok ? "[ ok ]" : "[fail]") << " functional equation (" << item.name << " deletion), n <= " << n_max;
    if (!ok) {
      out << " (fails at n=" << first_bad << ")";
      note_failure(outcome, std::string("functional equation ") + item.name);
    }
    out << "\n";
    identities.push_back({{"family", item.name}, {"ok", ok}});
  }
  outcome.detail = {{"suite", "functional-eq"}, {"n_max", n_max}, {"ok", outcome.ok}, {"identities", identities}};
  return outcome;
}

int cmd_verify(const std::string& suite, std::optional<int> n_max_opt, int ceiling, const std::string& format,
               std::ostream& out) {
  std::ostringstream sink;
  std::ostream& text = format == "json" ? static_cast<std::ostream&>(sink) : out;
  nlohmann::json suites = nlohmann::json::array();
  bool ok = true;
  if (suite == "oracle" || suite == "all") {
    const int bound = (suite == "oracle" && n_max_opt) ? *n_max_opt : ceiling;
    auto o = verify_oracle(bound, text);
    suites.push_back(std::move(o.detail));
    ok = o.ok && ok;
  }
  if (suite == "closed-forms" || suite == "all") {
    const int bound = n_max_opt ? *n_max_opt : 30;
    auto o = verify_closed_forms(bound, text);
    suites.push_back(std::move(o.detail));
    ok = o.ok && ok;
  }
  if (suite == "functional-eq" || suite == "all") {
    const int bound = (suite == "functional-eq" && n_max_opt) ? *n_max_opt : 7;
    auto o = verify_functional(bound, text);
    suites.push_back(std::move(o.detail));
    ok = o.ok && ok;
  }
  if (format == "json")
    out << nlohmann::json{{"passed", ok}, {"suites", suites}}.dump(2) << "\n";
  else
    out << (ok ? "all checks passed\n" : "verification FAILED\n");
  return ok ? 0 : 1;
}

// --- guess --------------------------------------------------------------

std::vector<BigInt> column_sequence(const std::string& family, const std::string& column, int n_max, long& start) {
  auto parse_assign = [](const std::string& text, const std::string& key) -> int {
    const auto pos = text.find(key + "=");
    if (pos == std::string::npos) throw std::invalid_argument("column spec must set " + key + "=<value>");
    return std::stoi(text.substr(pos + key.size() + 1));
  };
  std::vector<BigInt> seq;
  start = 0;
  if (family == "abcd") {
    const int I1 = parse_assign(column, "I1");
    const int I2 = parse_assign(column, "I2");
    for (int n = 0; n <= n_max; ++n) seq.push_back(engines::abcd_P(n, std::min(I1, n), std::min(I2, n)));
    return seq;
  }
  const int I = parse_assign(column, "I");
  if (family == "abc+bac") {
    start = 1;
    for (int n = 1; n <= n_max; ++n) seq.push_back(I <= 1 ? engines::abc_bac_P(n) : BigInt(0));
    return seq;
  }
  const GridFamily f = engines::family_from_name(family);
  for (int n = 0; n <= n_max; ++n) {
    const int eff = std::min(I, n);
    switch (f) {
      case GridFamily::Abc: seq.push_back(engines::abc_P(n, eff)); break;
      case GridFamily::AbcOne: seq.push_back(engines::abc_P1(n, eff)); break;
      case GridFamily::AbcTwo: seq.push_back(engines::abc_P2(n, eff)); break;
      case GridFamily::Cab: seq.push_back(engines::cab_P(n, eff)); break;
      case GridFamily::CabOne: seq.push_back(engines::cab_P1(n, eff)); break;
      default: throw std::invalid_argument("guess: unsupported family " + family);
    }
  }
  return seq;
}

std::vector<BigInt> file_sequence(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open sequence file: " + path);
  std::vector<BigInt> seq;
  std::string token;
  while (f >> token) seq.push_back(bigint_from_decimal(token));
  if (seq.empty()) throw std::invalid_argument("sequence file is empty: " + path);
  return seq;
}

int cmd_guess(const std::string& family, const std::string& column, const std::string& file, int n_max,
              int max_order, int max_degree, int holdout, long start_flag, const std::string& format,
              std::ostream& out) {
  std::vector<BigInt> seq;
  long start = start_flag;
  if (!file.empty()) {
    seq = file_sequence(file);
  } else if (!family.empty()) {
    if (n_max < 0) throw std::invalid_argument("guess: --n-max is required with --family");
    seq = column_sequence(family, column, n_max, start);
  } else {
    throw std::invalid_argument("guess: provide --family or --file");
  }

  const auto report = guesser::guess(seq, start, max_order, max_degree, holdout);
  if (format == "json") {
    nlohmann::json j = {{"input_length", report.input_length}, {"max_order", report.max_order},
                        {"max_degree", report.max_degree},     {"holdout", report.holdout},
                        {"validated_terms", report.validated_terms}};
    j["found"] = report.found ? report.found->to_json() : nlohmann::json(nullptr);
    out << j.dump(2) << "\n";
  } else if (report.found) {
    out << report.found->to_string() << "\n";
    out << "order " << report.found->order() << ", degree " << report.found->degree() << ", holdout terms validated: "
        << report.validated_terms << "\n";
  } else {
    out << "no recurrence found within bounds (order <= " << max_order << ", degree <= " << max_degree << ")\n";
  }
  return 0;
}

// --- genpoly / bruteforce ------------------------------------------------

int cmd_genpoly(const std::string& pattern, int n, bool at_one, int ceiling, std::ostream& out) {
  const QPolynomial f = gen_poly(n, Pattern::parse(pattern), ceiling);
  const std::vector<BigInt> cs = at_one ? expand_at_one(f) : f.coeffs_univar();
  for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? " " : "") << to_decimal(cs[i]);
  out << "\n";
  return 0;
}

int cmd_bruteforce(const std::string& family, int n, long long r, long long r2, int I, int I1, int I2, int ceiling,
                   std::ostream& out) {
  BigInt v;
  if (family == "abc")
    v = brute_count_abc(n, r, I, ceiling);
  else if (family == "cab")
    v = brute_count_cab(n, r, I, ceiling);
  else if (family == "abcd")
    v = brute_count_abcd(n, r, I1, I2, ceiling);
  else if (family == "abc+bac")
    v = brute_count_abc_bac(n, r, r2, I, ceiling);
  else
    throw std::invalid_argument("bruteforce: unknown family " + family);
  out << to_decimal(v) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact enumeration of permutations by forbidden-pattern occurrence counts"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "print a recurrence-family table");
  std::string t_family, t_format = "plain", t_out;
  int t_nmax = 0;
  table->add_option("--family", t_family,
                    "abc, abc-one, abc-two, cab, cab-one, abcd-I1, abcd-I2, abcd (json only), abc+bac")
      ->required();
  table->add_option("--n-max", t_nmax)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", t_format)->check(CLI::IsMember({"plain", "csv", "json"}));
  table->add_option("--out", t_out, "write to a file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check engines, closed forms and identities");
  std::string v_suite = "all", v_format = "plain";
  int v_ceiling = env_ceiling(kOracleCeiling);
  std::optional<int> v_nmax;
  verify->add_option("--suite", v_suite)->check(CLI::IsMember({"oracle", "closed-forms", "functional-eq", "all"}));
  verify->add_option("--n-max", v_nmax, "bound for the selected suite");
  verify->add_option("--ceiling", v_ceiling, "oracle sweep bound (default 8; env PERMPAT_BRUTE_CEILING)");
  verify->add_option("--format", v_format)->check(CLI::IsMember({"plain", "json"}));

  // guess
  auto* guess = app.add_subcommand("guess", "fit a linear recurrence with polynomial coefficients");
  std::string g_family, g_column = "I=1", g_file, g_format = "plain";
  int g_nmax = -1, g_order = 2, g_degree = 2, g_holdout = 4;
  long g_start = 0;
  guess->add_option("--family", g_family, "engine family supplying the sequence");
  guess->add_option("--column", g_column, "I=<k> or I1=<a>,I2=<b>");
  guess->add_option("--file", g_file, "file of whitespace-separated decimal terms");
  guess->add_option("--n-max", g_nmax, "last index taken from the engine column");
  guess->add_option("--max-order", g_order);
  guess->add_option("--max-degree", g_degree);
  guess->add_option("--holdout", g_holdout);
  guess->add_option("--start", g_start, "index of the first supplied term (files only)");
  guess->add_option("--format", g_format)->check(CLI::IsMember({"plain", "json"}));

  // genpoly
  auto* genpoly = app.add_subcommand("genpoly", "occurrence-count generating polynomial by brute force");
  std::string p_pattern;
  int p_n = 0, p_ceiling = env_ceiling(kGenPolyCeiling);
  bool p_at_one = false;
  genpoly->add_option("--pattern", p_pattern)->required();
  genpoly->add_option("--n", p_n)->required()->check(CLI::NonNegativeNumber);
  genpoly->add_flag("--at-one", p_at_one, "print the expansion around q = 1 instead");
  genpoly->add_option("--ceiling", p_ceiling);

  // bruteforce
  auto* brute = app.add_subcommand("bruteforce", "single brute-force count");
  std::string b_family;
  int b_n = 0, b_I = 1, b_I1 = 1, b_I2 = 1, b_ceiling = env_ceiling(kGenPolyCeiling);
  long long b_r = 0, b_r2 = 0;
  brute->add_option("--family", b_family, "abc, cab, abcd, abc+bac")->required();
  brute->add_option("--n", b_n)->required()->check(CLI::NonNegativeNumber);
  brute->add_option("--r", b_r, "occurrences of the main pattern");
  brute->add_option("--r2", b_r2, "occurrences of bac (abc+bac family)");
  brute->add_option("--I", b_I);
  brute->add_option("--I1", b_I1);
  brute->add_option("--I2", b_I2);
  brute->add_option("--ceiling", b_ceiling);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("permpat");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (table->parsed()) return cmd_table(t_family, t_nmax, t_format, t_out, out);
    if (verify->parsed()) return cmd_verify(v_suite, v_nmax, v_ceiling, v_format, out);
    if (guess->parsed())
      return cmd_guess(g_family, g_column, g_file, g_nmax, g_order, g_degree, g_holdout, g_start, g_format, out);
    if (genpoly->parsed()) return cmd_genpoly(p_pattern, p_n, p_at_one, p_ceiling, out);
    if (brute->parsed()) return cmd_bruteforce(b_family, b_n, b_r, b_r2, b_I, b_I1, b_I2, b_ceiling, out);
    err << "no command given\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace permpat::cli
