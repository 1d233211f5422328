#include "majdet/formulas.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "majdet/errors.hpp"

namespace majdet {

// ------------------------------------------------------------ FactoredProduct

FactoredProduct& FactoredProduct::times(const MultiPoly& base, std::uint64_t exp) {
  if (exp == 0) return *this;
  if (base.is_constant()) {
    BigInt c = base.constant_term();
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), c.get_mpz_t(), exp);
    unit_ *= r;
    return *this;
  }
  factors_.push_back({base, exp});
  return *this;
}

FactoredProduct& FactoredProduct::times(const FactoredProduct& other) {
  unit_ *= other.unit_;
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  return *this;
}

FactoredProduct& FactoredProduct::scale(const BigInt& factor) {
  unit_ *= factor;
  return *this;
}

FactoredProduct FactoredProduct::normalized() const {
  FactoredProduct out(unit_);
  for (const auto& f : factors_) {
    auto it = std::find_if(out.factors_.begin(), out.factors_.end(), [&](const Factor& g) { return g.base == f.base; });
    if (it == out.factors_.end()) {
      out.factors_.push_back(f);
    } else {
      it->exp += f.exp;
    }
  }
  std::vector<std::pair<std::pair<std::uint64_t, std::string>, Factor>> keyed;
  for (auto& f : out.factors_) keyed.push_back({{f.base.total_degree(), to_string(f.base, true)}, std::move(f)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.factors_.clear();
  for (auto& [key, f] : keyed) out.factors_.push_back(std::move(f));
  return out;
}

FactoredProduct FactoredProduct::substituted(const std::map<Var, MultiPoly>& images) const {
  FactoredProduct out(unit_);
  for (const auto& f : factors_) out.times(substitute(f.base, images), f.exp);
  return out;
}

std::vector<Var> FactoredProduct::variables() const {
  std::set<Var> vars;
  for (const auto& f : factors_) {
    const auto v = f.base.variables();
    vars.insert(v.begin(), v.end());
  }
  return {vars.begin(), vars.end()};
}

std::uint64_t FactoredProduct::degree_in(Var v) const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.exp * f.base.degree_in(v);
  return d;
}

std::uint64_t FactoredProduct::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.exp * f.base.total_degree();
  return d;
}

long double FactoredProduct::term_estimate() const {
  long double estimate = 1;
  for (Var v : variables()) estimate *= static_cast<long double>(degree_in(v)) + 1;
  return estimate;
}

MultiPoly FactoredProduct::expand(std::uint64_t term_bound) const {
  const long double estimate = term_estimate();
  if (estimate > static_cast<long double>(term_bound)) {
    throw DegreeBoundExceeded("expansion of " + to_string(*this) + " may need ~" +
                              std::to_string(static_cast<double>(estimate)) + " terms (bound " +
                              std::to_string(term_bound) + ")");
  }
  MultiPoly out(unit_);
  for (const auto& f : factors_) out *= f.base.pow(f.exp);
  return out;
}

std::uint64_t FactoredProduct::evaluate_mod(const ModAssignment& point, const ModPrime& field) const {
  BigInt u = unit_ % BigInt(static_cast<unsigned long>(field.value()));
  if (u < 0) u += static_cast<unsigned long>(field.value());
  std::uint64_t acc = u.get_ui();
  for (const auto& f : factors_) acc = field.mul(acc, field.pow(majdet::evaluate_mod(f.base, point, field), f.exp));
  return acc;
}

// --------------------------------------------------------------------- text

std::string to_string(const FactoredProduct& fp) {
  std::string out;
  if (fp.unit() == -1 && !fp.empty()) {
    out = "-";
  } else if (fp.unit() != 1 || fp.empty()) {
    out = fp.unit().get_str();
    if (!fp.empty()) out += "*";
  }
  bool first = true;
  for (const auto& f : fp.factors()) {
    if (!first) out += "*";
    first = false;
    out += "(" + to_string(f.base, true) + ")";
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])) != 0) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])) != 0) --b;
  return std::string(s.substr(a, b - a));
}

// Splits on '*' at parenthesis depth zero.
std::vector<std::string> top_level_factors(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in \"" + std::string(text) + "\"");
    if (text[i] == '*' && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in \"" + std::string(text) + "\"");
  parts.push_back(trim(text.substr(start)));
  return parts;
}

}  // namespace

FactoredProduct parse_factored(std::string_view text) {
  FactoredProduct out;
  for (std::string part : top_level_factors(text)) {
    if (part.empty()) throw ParseError("empty factor in \"" + std::string(text) + "\"");
    if (part[0] == '-' && part.size() > 1 && part[1] == '(') {
      out.scale(-1);
      part = trim(part.substr(1));
    }
    if (part[0] == '(') {
      const std::size_t close = part.rfind(')');
      std::uint64_t exp = 1;
      const std::string tail = trim(std::string_view(part).substr(close + 1));
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() == 1) throw ParseError("bad exponent \"" + tail + "\"");
        const std::string digits = trim(std::string_view(tail).substr(1));
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
          throw ParseError("bad exponent \"" + tail + "\"");
        }
        exp = std::stoull(digits);
      }
      out.times(parse_poly(std::string_view(part).substr(1, close - 1)), exp);
    } else {
      out.times(parse_poly(part), 1);
    }
  }
  return out;
}

nlohmann::json to_json(const FactoredProduct& fp) {
  nlohmann::json j;
  j["factors"] = nlohmann::json::array();
  for (const auto& f : fp.factors()) j["factors"].push_back({{"base", to_string(f.base, true)}, {"exp", f.exp}});
  if (fp.unit() != 1) j["unit"] = fp.unit().get_str();
  return j;
}

FactoredProduct factored_from_json(const nlohmann::json& j) {
  try {
    FactoredProduct out;
    if (j.contains("unit")) out.scale(BigInt(j.at("unit").get<std::string>()));
    for (const auto& f : j.at("factors")) {
      out.times(parse_poly(f.at("base").get<std::string>()), f.at("exp").get<std::uint64_t>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("factored product JSON: ") + e.what());
  }
}

// --------------------------------------------------------- cyclotomic form

namespace {

std::vector<std::uint32_t> divisors(std::uint32_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= k; ++d) {
    if (k % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

std::optional<CyclotomicForm> cyclotomic_form(const FactoredProduct& fp) {
  CyclotomicForm form{fp.unit(), {}};
  for (const auto& f : fp.factors()) {
    const auto v = f.base.univariate_variable();
    if (!v) return std::nullopt;
    const auto c = f.base.dense(*v);
    const std::size_t k = c.size() - 1;
    const bool interior_zero = std::all_of(c.begin() + 1, c.end() - 1, [](const BigInt& x) { return x == 0; });
    const bool all_one = std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x == 1; });
    std::uint32_t first_divisor = 1;
    auto order = static_cast<std::uint32_t>(k);
    if (interior_zero && (c[0] == 1 || c[0] == -1) && c[k] == -c[0]) {
      // +-(1 - v^k) = -+(v^k - 1) = -+ prod_{d | k} Phi_d(v)
      if (c[0] == 1 && f.exp % 2 == 1) form.unit = -form.unit;
    } else if (all_one) {
      // [k+1]_v = prod_{d | k+1, d > 1} Phi_d(v)
      first_divisor = 2;
      order = static_cast<std::uint32_t>(k + 1);
    } else {
      return std::nullopt;
    }
    for (std::uint32_t d : divisors(order)) {
      if (d >= first_divisor) form.exponents[{*v, d}] += f.exp;
    }
  }
  return form;
}

// ------------------------------------------------------------- comparisons

int point_count(std::uint64_t degree_bound) {
  const auto extra = static_cast<int>((degree_bound + 999'999) / 1'000'000);
  return std::max(5, extra);
}

std::vector<ModAssignment> random_points(const std::vector<Var>& vars, const ModularOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> coord(1, options.prime - 1);
  std::vector<ModAssignment> points;
  std::set<std::vector<std::uint64_t>> seen;
  while (static_cast<int>(points.size()) < options.points) {
    ModAssignment point;
    std::vector<std::uint64_t> key;
    for (Var v : vars) {
      point[v] = coord(rng);
      key.push_back(point[v]);
    }
    if (!seen.insert(key).second && !vars.empty()) continue;
    points.push_back(std::move(point));
  }
  return points;
}

namespace {

std::vector<Var> merged_variables(const FactoredProduct& a, const std::set<Var>& extra) {
  std::set<Var> vars(extra);
  for (Var v : a.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

}  // namespace

bool fp_equal(const FactoredProduct& a, const FactoredProduct& b, CompareMode mode, const ModularOptions& options,
              std::uint64_t term_bound) {
  if (mode == CompareMode::modular) {
    const auto bv = b.variables();
    const ModPrime field(options.prime);
    for (const auto& point : random_points(merged_variables(a, {bv.begin(), bv.end()}), options)) {
      if (a.evaluate_mod(point, field) != b.evaluate_mod(point, field)) return false;
    }
    return true;
  }
  const auto limit = static_cast<long double>(term_bound);
  if (a.term_estimate() <= limit && b.term_estimate() <= limit) return a.expand(term_bound) == b.expand(term_bound);
  const auto fa = cyclotomic_form(a);
  const auto fb = cyclotomic_form(b);
  if (fa && fb) return *fa == *fb;
  throw DegreeBoundExceeded("symbolic comparison of " + to_string(a) + " and " + to_string(b) +
                            " needs modular mode");
}

bool fp_equal(const FactoredProduct& a, const MultiPoly& b, CompareMode mode, const ModularOptions& options,
              std::uint64_t term_bound) {
  if (mode == CompareMode::modular) {
    const ModPrime field(options.prime);
    for (const auto& point : random_points(merged_variables(a, b.variables()), options)) {
      if (a.evaluate_mod(point, field) != evaluate_mod(b, point, field)) return false;
    }
    return true;
  }
  return a.expand(term_bound) == b;
}

// ------------------------------------------------------------ closed forms

std::uint64_t checked_exponent(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0 || numerator % denominator != 0) {
    throw NonIntegerExponent(numerator.get_str() + " / " + denominator.get_str());
  }
  const BigInt q = numerator / denominator;
  if (q < 0 || !q.fits_ulong_p()) throw NonIntegerExponent("exponent " + q.get_str() + " out of range");
  return q.get_ui();
}

namespace {

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt ipow(long base, int exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

void require_positive(int n, const char* name) {
  if (n < 1) throw InvalidArgument(std::string(name) + " must be at least 1");
}

}  // namespace

MultiPoly q_factorial(int n, Var v) {
  MultiPoly out(1);
  for (int k = 1; k <= n; ++k) out *= q_integer(static_cast<std::uint32_t>(k), v);
  return out;
}

FactoredProduct rhs_maj(int n) {
  require_positive(n, "n");
  FactoredProduct out;
  const BigInt nf = factorial(n);
  for (int k = 2; k <= n; ++k) {
    out.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(k)), checked_exponent(nf * (k - 1), k));
  }
  return out;
}

FactoredProduct rhs_fmaj(int n, int m) {
  require_positive(n, "n");
  require_positive(m, "m");
  FactoredProduct out;
  const BigInt order = factorial(n) * ipow(m, n);
  for (int k = 1; k <= n; ++k) {
    const int mk = m * k;
    out.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(mk)), checked_exponent(order * (mk - 1), mk));
  }
  return out;
}

FactoredProduct rhs_maj_col(int n, int m) {
  require_positive(n, "n");
  require_positive(m, "m");
  FactoredProduct out;
  const BigInt nf = factorial(n);
  for (int k = 2; k <= n; ++k) {
    out.times(one_minus_power(Var::p(), static_cast<std::uint32_t>(k)), checked_exponent(nf * ipow(m, n) * (k - 1), k));
  }
  for (int k = 1; k <= n; ++k) {
    out.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(m * k)),
              checked_exponent(nf * ipow(m, n - 1) * (m - 1), k));
  }
  return out;
}

FactoredProduct rhs_amaj(int n, int m) {
  require_positive(n, "n");
  require_positive(m, "m");
  FactoredProduct out;
  const BigInt nf = factorial(n);
  out.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(m)), checked_exponent(nf * ipow(m, n - 1) * (m - 1) * n, 1));
  for (int k = 2; k <= n; ++k) {
    out.times(one_minus_power(Var::p(), static_cast<std::uint32_t>(k)), checked_exponent(nf * ipow(m, n) * (k - 1), k));
  }
  return out;
}

FactoredProduct rhs_signed(int n) {
  require_positive(n, "n");
  FactoredProduct out;
  const BigInt nf = factorial(n);
  for (int k = 1; k <= n; ++k) {
    out.times(one_minus_power(Var::q_sub(k), static_cast<std::uint32_t>(2 * k)), checked_exponent(nf * ipow(2, n - 1), k));
  }
  for (int k = 2; k <= n; ++k) {
    out.times(one_minus_power(Var::p(), static_cast<std::uint32_t>(k)), checked_exponent(nf * ipow(2, n) * (k - 1), k));
  }
  return out;
}

FactoredProduct rhs_signed_spec(int n, SignedSpecialization which) {
  std::map<Var, MultiPoly> images;
  for (int i = 1; i <= n; ++i) {
    images[Var::q_sub(i)] = which == SignedSpecialization::sneg
                                ? MultiPoly::monomial(Monomial::of(Var::q(), static_cast<std::uint32_t>(i)))
                                : MultiPoly::variable(Var::q());
  }
  FactoredProduct out = rhs_signed(n).substituted(images);
  if (which == SignedSpecialization::majB) out = out.substituted({{Var::p(), MultiPoly::variable(Var::q())}});
  return out;
}

std::optional<SignedSpecialization> parse_specialization(std::string_view name) {
  if (name == "nneg") return SignedSpecialization::nneg;
  if (name == "majB") return SignedSpecialization::majB;
  if (name == "sneg") return SignedSpecialization::sneg;
  return std::nullopt;
}

FactoredProduct rhs_dihedral(int n) {
  if (n < 3) throw InvalidArgument("dihedral polygon size must be at least 3");
  FactoredProduct out;
  out.times(one_minus_power(Var::x(1), static_cast<std::uint32_t>(n)), static_cast<std::uint64_t>(2 * n - 2));
  out.times(one_minus_power(Var::x(2), 2), static_cast<std::uint64_t>(n));
  return out;
}

FactoredProduct rhs_defining(int n) {
  require_positive(n, "n");
  FactoredProduct out;
  out.times(one_minus_power(Var::q(), 1), static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2);
  for (int k = 2; k <= n; ++k) out.times(q_integer(static_cast<std::uint32_t>(k)), static_cast<std::uint64_t>(n - 1));
  return out;
}

FactoredProduct rhs_irrep_standard(int n) {
  if (n < 2) throw InvalidArgument("the standard representation needs n >= 2");
  FactoredProduct out;
  for (int k = 2; k <= n; ++k) out.times(q_integer(static_cast<std::uint32_t>(k)), static_cast<std::uint64_t>(n - 2));
  out.times(one_minus_power(Var::q(), 1), static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2);
  return out;
}

FactoredProduct rhs_irrep_22() {
  FactoredProduct out;
  out.times(one_minus_power(Var::q(), 1));
  out.times(one_minus_power(Var::q(), 3));
  out.times(one_minus_power(Var::q(), 4), 2);
  return out;
}

}  // namespace majdet
