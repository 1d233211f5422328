#include "majdet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

#include "majdet/errors.hpp"

namespace majdet {

// ---------------------------------------------------------------- Var

namespace {
constexpr std::uint16_t kXBase = 2;     // x_i -> 2 + i
constexpr std::uint16_t kQSubBase = 100;  // q_i -> 100 + i
}  // namespace

Var Var::x(int i) {
  if (i < 1 || i > kMaxIndexed) throw OutOfRange("x index " + std::to_string(i));
  return Var(static_cast<std::uint16_t>(kXBase + i));
}

Var Var::q_sub(int i) {
  if (i < 1 || i > kMaxIndexed) throw OutOfRange("q_ index " + std::to_string(i));
  return Var(static_cast<std::uint16_t>(kQSubBase + i));
}

std::string Var::name() const {
  if (id_ == 0) return "p";
  if (id_ == 1) return "q";
  if (id_ == 2) return "x";
  if (id_ < kQSubBase) return "x" + std::to_string(id_ - kXBase);
  return "q_" + std::to_string(id_ - kQSubBase);
}

std::optional<Var> Var::from_name(std::string_view name) {
  if (name == "p") return p();
  if (name == "q") return q();
  if (name == "x") return x();
  auto parse_index = [](std::string_view digits) -> std::optional<int> {
    if (digits.empty() || digits.size() > 3 || digits.front() == '0') return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    if (value < 1 || value > kMaxIndexed) return std::nullopt;
    return value;
  };
  if (name.size() > 2 && name.substr(0, 2) == "q_") {
    if (auto i = parse_index(name.substr(2))) return q_sub(*i);
  } else if (name.size() > 1 && name.front() == 'x') {
    if (auto i = parse_index(name.substr(1))) return x(*i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, std::uint32_t exp) {
  Monomial m;
  if (exp != 0) {
    m.powers_.push_back({v, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_powers(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end(), [](const Power& a, const Power& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& pw : powers) {
    if (pw.exp == 0) continue;
    if (!m.powers_.empty() && m.powers_.back().var == pw.var) {
      m.powers_.back().exp += pw.exp;
    } else {
      m.powers_.push_back(pw);
    }
    m.degree_ += pw.exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(Var v) const noexcept {
  for (const auto& pw : powers_) {
    if (pw.var == v) return pw.exp;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  auto it = other.powers_.begin();
  for (const auto& pw : powers_) {
    while (it != other.powers_.end() && it->var < pw.var) ++it;
    if (it == other.powers_.end() || it->var != pw.var || it->exp < pw.exp) return false;
  }
  return true;
}

std::optional<Var> Monomial::single_variable() const noexcept {
  if (powers_.size() == 1) return powers_.front().var;
  return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + rhs.powers_.size());
  auto a = powers_.begin();
  auto b = rhs.powers_.begin();
  while (a != powers_.end() || b != rhs.powers_.end()) {
    if (b == rhs.powers_.end() || (a != powers_.end() && a->var < b->var)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->var < a->var) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial out;
  auto b = rhs.powers_.begin();
  for (const auto& pw : powers_) {
    std::uint32_t e = pw.exp;
    if (b != rhs.powers_.end() && b->var == pw.var) {
      e -= b->exp;
      ++b;
    }
    if (e != 0) out.powers_.push_back({pw.var, e});
  }
  out.degree_ = degree_ - rhs.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Lexicographic on exponent vectors, earlier registry variables most significant.
  auto ia = a.powers_.begin();
  auto ib = b.powers_.begin();
  while (ia != a.powers_.end() && ib != b.powers_.end()) {
    if (ia->var != ib->var) return ia->var < ib->var ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ia->exp != ib->exp) return ia->exp <=> ib->exp;
    ++ia;
    ++ib;
  }
  if (ia != a.powers_.end()) return std::strong_ordering::greater;
  if (ib != b.powers_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(long constant) {
  if (constant != 0) terms_.push_back({Monomial(), BigInt(constant)});
}

MultiPoly::MultiPoly(const BigInt& constant) {
  if (constant != 0) terms_.push_back({Monomial(), constant});
}

MultiPoly MultiPoly::variable(Var v) { return monomial(Monomial::of(v)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const BigInt& coeff) {
  MultiPoly out;
  if (coeff != 0) out.terms_.push_back({m, coeff});
  return out;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  MultiPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

MultiPoly MultiPoly::from_dense(Var v, std::span<const BigInt> coeffs) {
  MultiPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out.terms_.push_back({Monomial::of(v, static_cast<std::uint32_t>(k)), coeffs[k]});
  }
  return out;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

bool MultiPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff == 1;
}

BigInt MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

std::uint64_t MultiPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.back().mono.degree();
}

std::uint32_t MultiPoly::degree_in(Var v) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::set<Var> MultiPoly::variables() const {
  std::set<Var> vars;
  for (const auto& t : terms_) {
    for (const auto& pw : t.mono.powers()) vars.insert(pw.var);
  }
  return vars;
}

std::optional<Var> MultiPoly::univariate_variable() const noexcept {
  std::optional<Var> var;
  for (const auto& t : terms_) {
    const auto powers = t.mono.powers();
    if (powers.empty()) continue;
    if (powers.size() > 1) return std::nullopt;
    if (var && *var != powers.front().var) return std::nullopt;
    var = powers.front().var;
  }
  return var;
}

std::vector<BigInt> MultiPoly::dense(Var v) const {
  std::vector<BigInt> out(terms_.empty() ? 0 : static_cast<std::size_t>(degree_in(v)) + 1);
  for (const auto& t : terms_) {
    if (t.mono.degree() != t.mono.exponent(v)) throw InvalidArgument("polynomial is not univariate in " + v.name());
    out[t.mono.exponent(v)] = t.coeff;
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

template <class Combine>
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, Combine combine_b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->mono < ib->mono)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->mono < ia->mono) {
      out.push_back({ib->mono, combine_b(BigInt(0), ib->coeff)});
      ++ib;
    } else {
      BigInt c = combine_b(ia->coeff, ib->coeff);
      if (c != 0) out.push_back({ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigInt& x, const BigInt& y) { return BigInt(x + y); });
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigInt& x, const BigInt& y) { return BigInt(x - y); });
  return *this;
}

namespace {

std::optional<Var> common_univariate(const MultiPoly& a, const MultiPoly& b) {
  const auto va = a.univariate_variable();
  const auto vb = b.univariate_variable();
  if (!a.is_constant() && !va) return std::nullopt;
  if (!b.is_constant() && !vb) return std::nullopt;
  if (va && vb && *va != *vb) return std::nullopt;
  if (va) return va;
  if (vb) return vb;
  return Var::q();
}

MultiPoly dense_mul(const MultiPoly& a, const MultiPoly& b, Var v) {
  const auto da = a.dense(v);
  const auto db = b.dense(v);
  std::vector<BigInt> out(da.size() + db.size() - 1);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < db.size(); ++j) {
      if (db[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), da[i].get_mpz_t(), db[j].get_mpz_t());
    }
  }
  return MultiPoly::from_dense(v, out);
}

MultiPoly term_times(const MultiPoly::Term& t, const MultiPoly& b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(b.size());
  for (const auto& bt : b.terms()) out.push_back({t.mono * bt.mono, t.coeff * bt.coeff});
  return MultiPoly::from_terms(std::move(out));
}

}  // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (a.is_constant() || b.is_constant()) {
    const MultiPoly& c = a.is_constant() ? a : b;
    const MultiPoly& other = a.is_constant() ? b : a;
    const BigInt k = c.constant_term();
    if (k == 1) return other;
    MultiPoly out = other;
    for (auto& t : out.terms_) t.coeff *= k;
    return out;
  }
  if (auto v = common_univariate(a, b)) return dense_mul(a, b, *v);

  std::vector<MultiPoly::Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) products.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  }
  return MultiPoly::from_terms(std::move(products));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::pow(std::uint64_t exp) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

namespace {

MultiPoly dense_exact_div(const MultiPoly& a, const MultiPoly& b, Var v) {
  auto rem = a.dense(v);
  const auto den = b.dense(v);
  if (rem.size() < den.size()) throw NotDivisible(to_string(a) + " by " + to_string(b));
  const std::size_t db = den.size() - 1;
  std::vector<BigInt> quot(rem.size() - db);
  BigInt tmp;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), den[db].get_mpz_t())) {
      throw NotDivisible(to_string(a) + " by " + to_string(b));
    }
    mpz_divexact(tmp.get_mpz_t(), rem[i].get_mpz_t(), den[db].get_mpz_t());
    const std::size_t shift = i - db;
    for (std::size_t j = 0; j <= db; ++j) {
      if (den[j] != 0) mpz_submul(rem[shift + j].get_mpz_t(), tmp.get_mpz_t(), den[j].get_mpz_t());
    }
    quot[shift] = tmp;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) throw NotDivisible(to_string(a) + " by " + to_string(b));
  }
  return MultiPoly::from_dense(v, quot);
}

}  // namespace

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by zero polynomial");
  if (a.is_zero()) return MultiPoly();
  if (b.is_constant()) {
    const BigInt k = b.constant_term();
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), k.get_mpz_t())) {
        throw NotDivisible(to_string(a) + " by " + to_string(b));
      }
      BigInt c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), k.get_mpz_t());
      out.push_back({t.mono, c});
    }
    return MultiPoly::from_terms(std::move(out));
  }
  if (auto v = common_univariate(a, b)) return dense_exact_div(a, b, *v);

  // Leading-term elimination under the graded order. When b | a every
  // intermediate leading term is divisible by lt(b).
  const auto& lead = b.leading_term();
  MultiPoly rem = a;
  std::vector<MultiPoly::Term> quot;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!lead.mono.divides(lt.mono) || !mpz_divisible_p(lt.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw NotDivisible(to_string(a) + " by " + to_string(b));
    }
    MultiPoly::Term t{lt.mono / lead.mono, BigInt()};
    mpz_divexact(t.coeff.get_mpz_t(), lt.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    rem -= term_times(t, b);
    quot.push_back(std::move(t));
  }
  return MultiPoly::from_terms(std::move(quot));
}

// ---------------------------------------------------------------- evaluation

BigInt evaluate(const MultiPoly& a, const Assignment& point, std::optional<std::uint64_t> modulus) {
  BigInt total = 0;
  BigInt term;
  BigInt power;
  for (const auto& t : a.terms()) {
    term = t.coeff;
    for (const auto& pw : t.mono.powers()) {
      auto it = point.find(pw.var);
      if (it == point.end()) throw MissingVariable(pw.var.name());
      if (modulus) {
        const BigInt m(static_cast<unsigned long>(*modulus));
        mpz_powm_ui(power.get_mpz_t(), it->second.get_mpz_t(), pw.exp, m.get_mpz_t());
      } else {
        mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), pw.exp);
      }
      term *= power;
    }
    total += term;
    if (modulus) total %= BigInt(static_cast<unsigned long>(*modulus));
  }
  if (modulus) {
    const BigInt m(static_cast<unsigned long>(*modulus));
    total %= m;
    if (total < 0) total += m;
  }
  return total;
}

std::uint64_t evaluate_mod(const Monomial& m, const ModAssignment& point, const ModPrime& field) {
  std::uint64_t value = 1;
  for (const auto& pw : m.powers()) {
    auto it = point.find(pw.var);
    if (it == point.end()) throw MissingVariable(pw.var.name());
    value = field.mul(value, field.pow(it->second, pw.exp));
  }
  return value;
}

std::uint64_t evaluate_mod(const MultiPoly& a, const ModAssignment& point, const ModPrime& field) {
  const BigInt p(static_cast<unsigned long>(field.value()));
  std::uint64_t total = 0;
  BigInt c;
  for (const auto& t : a.terms()) {
    mpz_fdiv_r(c.get_mpz_t(), t.coeff.get_mpz_t(), p.get_mpz_t());
    const std::uint64_t coeff = c.get_ui();
    total = field.add(total, field.mul(coeff, evaluate_mod(t.mono, point, field)));
  }
  return total;
}

MultiPoly substitute(const MultiPoly& a, const std::map<Var, MultiPoly>& images) {
  std::map<std::pair<Var, std::uint32_t>, MultiPoly> power_cache;
  auto image_power = [&](Var v, std::uint32_t e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, images.at(v).pow(e)).first;
    return it->second;
  };
  MultiPoly out;
  for (const auto& t : a.terms()) {
    std::vector<Monomial::Power> kept;
    MultiPoly factor(t.coeff);
    for (const auto& pw : t.mono.powers()) {
      if (images.count(pw.var) != 0) {
        factor *= image_power(pw.var, pw.exp);
      } else {
        kept.push_back(pw);
      }
    }
    out += factor * MultiPoly::monomial(Monomial::from_powers(std::move(kept)));
  }
  return out;
}

// ---------------------------------------------------------------- text

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& pw : m.powers()) {
    if (!out.empty()) out += '*';
    out += pw.var.name();
    if (pw.exp != 1) out += "^" + std::to_string(pw.exp);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MultiPoly& a, bool compact) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    const bool negative = t.coeff < 0;
    const BigInt magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else if (compact) {
      out += negative ? "-" : "+";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += to_string(t.mono);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = product();
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  MultiPoly product() {
    MultiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(std::stoull(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      return MultiPoly(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      auto v = Var::from_name(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return MultiPoly::variable(*v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- named polynomials

MultiPoly cyclotomic(std::uint32_t m, Var v) {
  if (m == 0) throw InvalidArgument("cyclotomic index must be positive");
  std::map<std::uint32_t, MultiPoly> memo;
  std::function<const MultiPoly&(std::uint32_t)> phi = [&](std::uint32_t k) -> const MultiPoly& {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    MultiPoly acc = MultiPoly::variable(v).pow(k) - MultiPoly(1);
    for (std::uint32_t d = 1; d < k; ++d) {
      if (k % d == 0) acc = exact_div(acc, phi(d));
    }
    return memo.emplace(k, std::move(acc)).first->second;
  };
  return phi(m);
}

MultiPoly q_integer(std::uint32_t k, Var v) {
  std::vector<BigInt> coeffs(k, BigInt(1));
  return MultiPoly::from_dense(v, coeffs);
}

MultiPoly one_minus_power(Var v, std::uint32_t k) {
  return MultiPoly(1) - MultiPoly::monomial(Monomial::of(v, k));
}

}  // namespace majdet
