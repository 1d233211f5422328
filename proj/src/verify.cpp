#include "majdet/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <set>
#include <sstream>

#include "majdet/colored.hpp"
#include "majdet/errors.hpp"
#include "majdet/groups.hpp"
#include "majdet/repr.hpp"
#include "majdet/signed.hpp"

namespace majdet {

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 11> kNames{{
    {Identity::maj, "maj"},
    {Identity::fmaj, "fmaj"},
    {Identity::maj_col, "maj-col"},
    {Identity::amaj, "amaj"},
    {Identity::signed_general, "signed"},
    {Identity::signed_nneg, "signed-nneg"},
    {Identity::signed_majB, "signed-majB"},
    {Identity::signed_sneg, "signed-sneg"},
    {Identity::dihedral, "dihedral"},
    {Identity::defining, "defining"},
    {Identity::irrep, "irrep"},
}};

constexpr std::uint64_t kNoBound = std::numeric_limits<std::uint64_t>::max();
// Matrices larger than this are never expanded symbolically, even on request.
constexpr std::size_t kSymbolicCap = 48;
constexpr std::size_t kMaxPrintedTerms = 256;

bool uses_m(Identity id) {
  return id == Identity::fmaj || id == Identity::maj_col || id == Identity::amaj;
}

// |G| without enumerating; nullopt once it passes the cap.
std::optional<std::size_t> group_order(Identity id, int n, int m) {
  long double order = 1;
  for (int k = 2; k <= n; ++k) order *= k;
  switch (id) {
    case Identity::fmaj:
    case Identity::maj_col:
    case Identity::amaj:
      for (int k = 0; k < n; ++k) order *= m;
      break;
    case Identity::signed_general:
    case Identity::signed_nneg:
    case Identity::signed_majB:
    case Identity::signed_sneg:
      for (int k = 0; k < n; ++k) order *= 2;
      break;
    case Identity::dihedral:
      order = 2.0L * n;
      break;
    default:
      break;
  }
  if (order > static_cast<long double>(kMaxGroupOrder)) return std::nullopt;
  return static_cast<std::size_t>(order);
}

void check_params(const VerifyParams& p) {
  const std::string name = identity_name(p.identity);
  if (p.n < 1) throw InvalidArgument(name + ": n must be positive");
  if (uses_m(p.identity) && p.m < 1) throw InvalidArgument(name + ": m must be positive");
  if (p.identity == Identity::dihedral && p.n < 3) throw InvalidArgument("dihedral: n must be at least 3");
  if (p.identity == Identity::defining && p.n > 8) throw InvalidArgument("defining: n must be at most 8");
  if (p.identity == Identity::irrep && p.n > 7) throw InvalidArgument("irrep: n must be at most 7");
  if (p.lambda && p.identity != Identity::irrep) throw InvalidArgument(name + " takes no partition");
  if (p.identity != Identity::defining && p.identity != Identity::irrep && !group_order(p.identity, p.n, p.m)) {
    throw InvalidArgument(name + ": group order exceeds " + std::to_string(kMaxGroupOrder));
  }
  if (!is_prime_u64(p.modular.prime) || p.modular.prime >= (1ULL << 62)) {
    throw InvalidArgument("modulus " + std::to_string(p.modular.prime) + " is not a usable prime");
  }
  if (p.modular.points < 1) throw InvalidArgument("need at least one evaluation point");
}

std::string render_point(const ModAssignment& point) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, value] : point) {
    if (!first) out += ", ";
    first = false;
    out += v.name() + "=" + std::to_string(value);
  }
  return out + "}";
}

std::string first_difference(const MultiPoly& lhs, const MultiPoly& rhs) {
  const MultiPoly diff = lhs - rhs;
  const auto& mono = diff.terms().front().mono;
  return "coefficient of " + (mono.is_one() ? std::string("1") : to_string(mono)) + ": lhs " +
         lhs.coefficient(mono).get_str() + ", rhs " + rhs.coefficient(mono).get_str();
}

struct Sides {
  // Exactly one of these describes the left side.
  std::optional<RegularTable> table;
  std::optional<PolyMatrix> matrix;
  std::optional<FactoredProduct> product;
  FactoredProduct rhs;
};

template <FiniteGroup G>
Sides regular(const G& grp, const Weight<typename G::Element>& weight, FactoredProduct rhs, Execution exec) {
  Sides s;
  s.table = RegularTable::build(grp, weight, exec);
  s.rhs = std::move(rhs);
  return s;
}

FactoredProduct irrep_closed_form(const Partition& lambda) {
  const int n = size_of(lambda);
  if (lambda == Partition{n}) {
    // Trivial representation: every theta is 1 - q.
    FactoredProduct out;
    for (int k = 2; k <= n; ++k) out.times(q_integer(static_cast<std::uint32_t>(k)));
    return out;
  }
  if (n >= 2 && lambda == Partition{n - 1, 1}) return rhs_irrep_standard(n);
  if (lambda == Partition{2, 2}) return rhs_irrep_22();
  throw InvalidArgument("irrep: no closed form for " + to_string(lambda) + " (use [n], [n-1,1] or [2,2])");
}

Sides build_sides(const VerifyParams& p) {
  const int n = p.n;
  const int m = p.m;
  switch (p.identity) {
    case Identity::maj:
      return regular(SymmetricGroup(n), Weight<Permutation>(weight_maj), rhs_maj(n), p.exec);
    case Identity::fmaj:
      return regular(ColoredGroup(n, m), Weight<ColoredPermutation>(weight_fmaj), rhs_fmaj(n, m), p.exec);
    case Identity::maj_col:
      return regular(ColoredGroup(n, m), Weight<ColoredPermutation>(weight_maj_col), rhs_maj_col(n, m), p.exec);
    case Identity::amaj:
      return regular(ColoredGroup(n, m), Weight<ColoredPermutation>(weight_amaj), rhs_amaj(n, m), p.exec);
    case Identity::signed_general:
      return regular(SignedGroup(n), Weight<SignedPermutation>(weight_signed), rhs_signed(n), p.exec);
    case Identity::signed_nneg:
      return regular(SignedGroup(n), Weight<SignedPermutation>(weight_signed_nneg),
                     rhs_signed_spec(n, SignedSpecialization::nneg), p.exec);
    case Identity::signed_majB:
      return regular(SignedGroup(n), Weight<SignedPermutation>(weight_signed_majB),
                     rhs_signed_spec(n, SignedSpecialization::majB), p.exec);
    case Identity::signed_sneg:
      return regular(SignedGroup(n), Weight<SignedPermutation>(weight_signed_sneg),
                     rhs_signed_spec(n, SignedSpecialization::sneg), p.exec);
    case Identity::dihedral:
      return regular(DihedralGroup(n), Weight<DihedralElement>(weight_dihedral), rhs_dihedral(n), p.exec);
    case Identity::defining: {
      Sides s;
      s.matrix = defining_matrix(n);
      s.rhs = rhs_defining(n);
      return s;
    }
    case Identity::irrep: {
      Sides s;
      if (p.lambda) {
        check_partition(*p.lambda);
        if (size_of(*p.lambda) != n) {
          throw InvalidArgument("irrep: " + to_string(*p.lambda) + " is not a partition of " + std::to_string(n));
        }
        s.rhs = irrep_closed_form(*p.lambda);
        s.product = delta_irrep(*p.lambda);
      } else {
        // Every irreducible, each with multiplicity its dimension.
        FactoredProduct all;
        for (const auto& lambda : partitions(n)) {
          const FactoredProduct delta = delta_irrep(lambda);
          const std::uint64_t dim = syt_count(lambda);
          for (const auto& f : delta.factors()) all.times(f.base, f.exp * dim);
        }
        s.product = std::move(all);
        s.rhs = rhs_maj(n);
      }
      return s;
    }
  }
  throw InvalidArgument("unknown identity");
}

std::size_t lhs_size(const Sides& s) {
  if (s.table) return s.table->size();
  if (s.matrix) return s.matrix->rows();
  return 0;
}

std::vector<Var> lhs_variables(const Sides& s) {
  std::set<Var> vars;
  if (s.table) {
    for (const auto& w : s.table->weights()) {
      for (const auto& pw : w.powers()) vars.insert(pw.var);
    }
  }
  if (s.matrix) {
    for (std::size_t i = 0; i < s.matrix->rows(); ++i) {
      for (std::size_t j = 0; j < s.matrix->cols(); ++j) {
        const auto v = (*s.matrix)(i, j).variables();
        vars.insert(v.begin(), v.end());
      }
    }
  }
  if (s.product) {
    const auto v = s.product->variables();
    vars.insert(v.begin(), v.end());
  }
  return {vars.begin(), vars.end()};
}

void run_symbolic(const Sides& s, const VerifyParams& p, VerificationReport& r) {
  MultiPoly lhs;
  if (s.table) {
    lhs = det_bareiss(s.table->symbolic(kSymbolicCap), p.exec);
  } else if (s.matrix) {
    lhs = det_bareiss(*s.matrix, p.exec);
  } else {
    lhs = s.product->expand(kNoBound);
  }
  const MultiPoly rhs = s.rhs.expand(kNoBound);
  r.pass = lhs == rhs;
  if (s.product) {
    r.lhs = to_string(*s.product);
  } else if (lhs.size() <= kMaxPrintedTerms) {
    r.lhs = to_string(lhs, true);
  }
  if (!r.pass) r.mismatch = first_difference(lhs, rhs);
}

void run_modular(const Sides& s, const VerifyParams& p, VerificationReport& r) {
  std::set<Var> vars;
  for (Var v : lhs_variables(s)) vars.insert(v);
  for (Var v : s.rhs.variables()) vars.insert(v);
  const ModPrime field(p.modular.prime);
  const auto points = random_points({vars.begin(), vars.end()}, p.modular);
  r.prime = p.modular.prime;
  r.seed = p.modular.seed;
  r.points = static_cast<int>(points.size());
  r.pass = true;
  for (const auto& point : points) {
    std::uint64_t lhs = 0;
    if (s.table) {
      lhs = s.table->det_mod(point, field, p.exec);
    } else if (s.matrix) {
      const PolyMatrix& mat = *s.matrix;
      lhs = det_modular([&](std::size_t i, std::size_t j) { return mat(i, j); }, mat.rows(), point, field, p.exec);
    } else {
      lhs = s.product->evaluate_mod(point, field);
    }
    const std::uint64_t rhs = s.rhs.evaluate_mod(point, field);
    if (lhs != rhs) {
      r.pass = false;
      r.mismatch = "point " + render_point(point) + ": lhs " + std::to_string(lhs) + ", rhs " + std::to_string(rhs);
      return;
    }
  }
}

}  // namespace

std::string identity_name(Identity id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return std::string(name);
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

VerificationReport verify(const VerifyParams& params) {
  const auto start = std::chrono::steady_clock::now();
  check_params(params);

  VerificationReport r;
  r.identity = identity_name(params.identity);
  r.n = params.n;
  if (uses_m(params.identity)) r.m = params.m;
  r.lambda = params.lambda;

  Sides sides;
  try {
    sides = build_sides(params);
  } catch (const ShapeMismatch& e) {
    throw InvalidArgument(e.what());
  }
  const std::size_t size = lhs_size(sides);
  r.mode = params.mode.value_or(size <= params.symbolic_threshold ? CompareMode::symbolic : CompareMode::modular);
  if (r.mode == CompareMode::symbolic && size > kSymbolicCap) {
    throw InvalidArgument("symbolic mode is limited to " + std::to_string(kSymbolicCap) + " rows, got " +
                          std::to_string(size));
  }

  r.rhs = to_string(sides.rhs);
  r.rhs_factors = to_json(sides.rhs);
  if (r.mode == CompareMode::symbolic) {
    run_symbolic(sides, params, r);
  } else {
    run_modular(sides, params, r);
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json params = {{"n", report.n}};
  if (report.m) params["m"] = *report.m;
  if (report.lambda) params["lambda"] = *report.lambda;

  nlohmann::json j = {
      {"identity", report.identity},
      {"params", params},
      {"mode", report.mode == CompareMode::symbolic ? "symbolic" : "modular"},
      {"pass", report.pass},
  };
  if (report.lhs) j["lhs"] = *report.lhs;
  if (report.rhs) j["rhs"] = *report.rhs;
  if (report.rhs_factors) j["rhs_factors"] = *report.rhs_factors;
  if (report.prime) j["prime"] = *report.prime;
  if (report.seed) j["seed"] = *report.seed;
  if (report.points) j["points"] = *report.points;
  if (report.mismatch) j["mismatch"] = *report.mismatch;
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

}  // namespace majdet
