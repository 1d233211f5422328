// majdet: verify determinant identities, tabulate statistics, factor elements.

#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majdet/bases.hpp"
#include "majdet/colored.hpp"
#include "majdet/errors.hpp"
#include "majdet/groups.hpp"
#include "majdet/signed.hpp"
#include "majdet/verify.hpp"

using namespace majdet;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kMaxTableRows = 10'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string identity;
  int n = 0;
  int m = 1;
  std::string lambda;
  std::string mode = "auto";
  std::uint64_t seed = 0;
  int points = 7;
  std::size_t threshold = 24;
  bool serial = false;
  bool no_timing = false;
};

int run_verify(const VerifyArgs& a) {
  const auto id = parse_identity(a.identity);
  if (!id) throw UsageError("unknown identity '" + a.identity + "'");
  VerifyParams p;
  p.identity = *id;
  p.n = a.n;
  p.m = a.m;
  if (!a.lambda.empty()) p.lambda = parse_partition(a.lambda);
  if (a.mode == "symbolic") {
    p.mode = CompareMode::symbolic;
  } else if (a.mode == "modular") {
    p.mode = CompareMode::modular;
  } else if (a.mode != "auto") {
    throw UsageError("mode must be symbolic, modular or auto");
  }
  p.modular.seed = a.seed;
  p.modular.points = a.points;
  if (const auto prime = prime_from_environment()) p.modular.prime = *prime;
  p.symbolic_threshold = a.threshold;
  p.exec = a.serial ? Execution::serial : Execution::parallel;

  const VerificationReport report = verify(p);
  std::cout << to_json(report, !a.no_timing).dump(2) << "\n";
  return report.pass ? kExitPass : kExitMismatch;
}

// ------------------------------------------------------------------- table

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

struct Row {
  std::string element;
  std::vector<int> stats;
  Exponents exponents;
};

std::string render(const Permutation& w) { return to_one_line(w); }
std::string render(const ColoredPermutation& g) { return to_string(g); }
std::string render(const SignedPermutation& g) { return to_string(g); }
std::string render(const DihedralElement& h) { return to_string(h); }

template <class Elem>
std::vector<Row> tabulate(const std::vector<Elem>& elements, const std::vector<std::string>& stats,
                          const std::map<std::string, std::function<int(const Elem&)>>& known,
                          const std::function<Exponents(const Elem&)>& factor) {
  for (const auto& s : stats) {
    if (!known.contains(s)) {
      std::string names;
      for (const auto& [k, fn] : known) names += (names.empty() ? "" : ", ") + k;
      throw UsageError("unknown statistic '" + s + "' (available: " + names + ")");
    }
  }
  std::vector<Row> rows;
  for (const auto& g : elements) {
    Row r{render(g), {}, factor(g)};
    for (const auto& s : stats) r.stats.push_back(known.at(s)(g));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long double order_estimate(const std::string& group, int n, int m) {
  long double order = 1;
  for (int k = 2; k <= n; ++k) order *= k;
  if (group == "colored") {
    for (int k = 0; k < n; ++k) order *= m;
  } else if (group == "signed") {
    for (int k = 0; k < n; ++k) order *= 2;
  } else if (group == "dihedral") {
    order = 2.0L * n;
  }
  return order;
}

int run_table(const std::string& group, int n, int m, const std::string& stats_text, bool as_json) {
  if (n < 1) throw UsageError("n must be positive");
  if (group == "colored" && m < 1) throw UsageError("m must be positive");
  if (order_estimate(group, n, m) > static_cast<long double>(kMaxTableRows)) {
    throw UsageError("group too large to tabulate (limit " + std::to_string(kMaxTableRows) + " elements)");
  }
  std::vector<std::string> stats = split_list(stats_text);
  std::vector<Row> rows;
  if (group == "sym") {
    if (stats.empty()) stats = {"maj"};
    const SymmetricGroup grp(n);
    rows = tabulate<Permutation>(
        grp.elements(), stats,
        {{"maj", [](const Permutation& w) { return maj(w); }},
         {"inv", [](const Permutation& w) { return inversions(w); }},
         {"des", [](const Permutation& w) { return static_cast<int>(descents(w).size()); }}},
        factor_sym);
  } else if (group == "colored") {
    if (stats.empty()) stats = {"fmaj"};
    const ColoredGroup grp(n, m);
    rows = tabulate<ColoredPermutation>(grp.elements(), stats,
                                        {{"fmaj", fmaj}, {"cmaj", cmaj}, {"col", col}, {"amaj", amaj}},
                                        factor_colored);
  } else if (group == "signed") {
    if (stats.empty()) stats = {"majA"};
    const SignedGroup grp(n);
    rows = tabulate<SignedPermutation>(
        grp.elements(), stats,
        {{"majA", maj_A},
         {"majB", maj_B},
         {"nneg", [](const SignedPermutation& g) { return neg_stats(g).nneg; }},
         {"sneg", [](const SignedPermutation& g) { return neg_stats(g).sneg; }}},
        factor_signed);
  } else if (group == "dihedral") {
    if (n < 3) throw UsageError("dihedral needs n >= 3");
    if (stats.empty()) stats = {"rot", "refl"};
    const DihedralGroup grp(n);
    rows = tabulate<DihedralElement>(
        grp.elements(), stats,
        {{"rot", [](const DihedralElement& h) { return dihedral_stats(h).first; }},
         {"refl", [](const DihedralElement& h) { return dihedral_stats(h).second; }}},
        factor_dihedral);
  } else {
    throw UsageError("unknown group '" + group + "' (sym, colored, signed, dihedral)");
  }

  if (as_json) {
    json out = json::array();
    for (const auto& r : rows) {
      json row = {{"element", r.element}, {"exponents", r.exponents}};
      for (std::size_t i = 0; i < stats.size(); ++i) row[stats[i]] = r.stats[i];
      out.push_back(row);
    }
    std::cout << json{{"group", group}, {"n", n}, {"rows", out}}.dump(2) << "\n";
    return kExitPass;
  }

  std::vector<std::string> header{"element"};
  header.insert(header.end(), stats.begin(), stats.end());
  header.emplace_back("exponents");
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& r : rows) {
    std::vector<std::string> line{r.element};
    for (int v : r.stats) line.push_back(std::to_string(v));
    line.push_back(join(r.exponents));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) text += "  ";
      // Element column left-aligned, numbers right-aligned.
      const std::string pad(width[i] - line[i].size(), ' ');
      text += i == 0 ? line[i] + pad : pad + line[i];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    std::cout << text << "\n";
  }
  return kExitPass;
}

// ------------------------------------------------------------------ factor

template <class Elem, class Mul>
Elem recompose(const BasisSpec<Elem>& spec, const Exponents& c, Elem out, Mul&& mul) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (int k = 0; k < c[i]; ++k) out = mul(out, spec.elements[i]);
  }
  return out;
}

int sum_of(const Exponents& c, std::size_t from, std::size_t to) {
  int s = 0;
  for (std::size_t i = from; i < to && i < c.size(); ++i) s += c[i];
  return s;
}

int run_factor(const std::string& group, const std::string& text, int m, std::string basis) {
  json out = {{"group", group}};
  bool holds = true;
  auto check = [&](const std::string& name, int statistic, int from_exponents) {
    out["identities"][name] = {{"statistic", statistic}, {"from_exponents", from_exponents}};
    holds = holds && statistic == from_exponents;
  };

  if (group == "sym") {
    const Permutation w = parse_one_line(text);
    const Exponents c = factor_sym(w);
    const auto spec = sym_basis(w.size());
    holds = recompose(spec, c, Permutation::identity(w.size()), compose) == w;
    out["element"] = to_one_line(w);
    out["basis"] = "t";
    out["exponents"] = c;
    check("maj", maj(w), sum_of(c, 0, c.size()));
  } else if (group == "colored") {
    if (m < 1) throw UsageError("m must be positive");
    const ColoredPermutation g = parse_colored(text, m);
    const int n = g.n();
    if (basis.empty()) basis = "fmaj";
    out["element"] = to_string(g);
    out["m"] = m;
    out["basis"] = basis;
    if (basis == "fmaj") {
      const Exponents c = factor_colored(g);
      holds = recompose(colored_basis(n, m), c, ColoredPermutation::identity(n, m), cmul) == g;
      out["exponents"] = c;
      check("fmaj", fmaj(g), sum_of(c, 0, c.size()));
    } else if (basis == "amaj") {
      const Exponents c = factor_amaj(g);
      holds = recompose(amaj_basis(n, m), c, ColoredPermutation::identity(n, m), cmul) == g;
      out["exponents"] = c;
      const auto split = static_cast<std::size_t>(n - 1);
      check("amaj", amaj(g), sum_of(c, 0, split));
      check("col", col(g), sum_of(c, split, c.size()));
    } else {
      throw UsageError("colored basis must be fmaj or amaj");
    }
  } else if (group == "signed") {
    const SignedPermutation g = parse_signed(text);
    const int n = g.n();
    const Exponents c = factor_signed(g);
    holds = recompose(signed_basis(n), c, SignedPermutation::identity(n), smul) == g;
    const auto split = static_cast<std::size_t>(n);
    out["element"] = to_string(g);
    out["basis"] = "s,u";
    out["d"] = Exponents(c.begin(), c.begin() + n);
    out["c"] = Exponents(c.begin() + n, c.end());
    int weighted = 0;
    for (std::size_t i = 0; i < split; ++i) weighted += static_cast<int>(i + 1) * c[i];
    const NegStats ns = neg_stats(g);
    check("majA", maj_A(g), sum_of(c, split, c.size()));
    check("nneg", ns.nneg, sum_of(c, 0, split));
    check("sneg", ns.sneg, weighted);
  } else {
    throw UsageError("factor supports sym, colored and signed");
  }
  out["recomposes"] = holds;
  std::cout << out.dump(2) << "\n";
  return holds ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group determinants weighted by permutation statistics"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Compare a weighted group determinant with its closed form");
  verify_cmd->add_option("identity", va.identity,
                         "maj, fmaj, maj-col, amaj, signed, signed-nneg, signed-majB, signed-sneg, dihedral, "
                         "defining, irrep")
      ->required();
  verify_cmd->add_option("--n", va.n, "Degree")->required();
  verify_cmd->add_option("--m", va.m, "Number of colors");
  verify_cmd->add_option("--lambda", va.lambda, "Partition for irrep, e.g. 2,2");
  verify_cmd->add_option("--mode", va.mode, "symbolic, modular or auto");
  verify_cmd->add_option("--seed", va.seed, "Seed for evaluation points");
  verify_cmd->add_option("--points", va.points, "Number of evaluation points");
  verify_cmd->add_option("--threshold", va.threshold, "Largest matrix handled symbolically in auto mode");
  verify_cmd->add_flag("--serial", va.serial, "Single-threaded kernels");
  verify_cmd->add_flag("--no-timing", va.no_timing, "Omit elapsed_ms from the report");

  std::string t_group;
  std::string t_stats;
  int t_n = 0;
  int t_m = 2;
  bool t_json = false;
  auto* table_cmd = app.add_subcommand("table", "Tabulate statistics and basis exponents");
  table_cmd->add_option("group", t_group, "sym, colored, signed or dihedral")->required();
  table_cmd->add_option("--n", t_n, "Degree")->required();
  table_cmd->add_option("--m", t_m, "Number of colors");
  table_cmd->add_option("--stats", t_stats, "Comma-separated statistics");
  table_cmd->add_flag("--json", t_json, "JSON output");

  std::string f_group;
  std::string f_element;
  std::string f_basis;
  int f_m = 2;
  auto* factor_cmd = app.add_subcommand("factor", "Factor an element over its perfect basis");
  factor_cmd->add_option("group", f_group, "sym, colored or signed")->required();
  factor_cmd->add_option("element", f_element, "One-line notation, primes mark colors or signs")->required();
  factor_cmd->add_option("--m", f_m, "Number of colors");
  factor_cmd->add_option("--basis", f_basis, "Colored basis: fmaj or amaj");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify_cmd) return run_verify(va);
    if (*table_cmd) return run_table(t_group, t_n, t_m, t_stats, t_json);
    return run_factor(f_group, f_element, f_m, f_basis);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // InvalidArgument, ParseError and friends: the inputs were not usable.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
