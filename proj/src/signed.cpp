#include "majdet/signed.hpp"

#include <cctype>

#include "majdet/errors.hpp"

namespace majdet {

SignedPermutation::SignedPermutation(std::vector<int> signs, Permutation w)
    : signs_(std::move(signs)), w_(std::move(w)) {
  if (static_cast<int>(signs_.size()) != w_.size()) throw ShapeMismatch("sign vector length");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InvalidArgument("signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  return SignedPermutation(std::vector<int>(static_cast<std::size_t>(n), 1), Permutation::identity(n));
}

SignedPermutation smul(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n() != b.n()) throw SizeMismatch("signed permutations of different sizes");
  const Permutation& u = a.perm();
  const Permutation u_inv = u.inverse();
  std::vector<int> signs(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) signs[static_cast<std::size_t>(i - 1)] = a.sign_of_value(i) * b.sign_of_value(u_inv(i));
  return SignedPermutation(std::move(signs), compose(u, b.perm()));
}

SignedPermutation sinverse(const SignedPermutation& a) {
  // (eps, u)(eps', u^-1) is the identity iff u.eps' = eps, i.e. eps'_j = eps_{u(j)}.
  const Permutation& u = a.perm();
  std::vector<int> signs(static_cast<std::size_t>(a.n()));
  for (int j = 1; j <= a.n(); ++j) signs[static_cast<std::size_t>(j - 1)] = a.sign_of_value(u(j));
  return SignedPermutation(std::move(signs), u.inverse());
}

namespace {

// Letters padded with the sentinels w_0 = 0 and w_{n+1} = n+1.
std::vector<int> padded_letters(const SignedPermutation& g) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(g.n()) + 2);
  letters.push_back(0);
  for (int k = 1; k <= g.n(); ++k) letters.push_back(g.letter(k));
  letters.push_back(g.n() + 1);
  return letters;
}

// Rank in 0 < 1 < ... < n+1 < n' < ... < 1'.
int b_key(int letter, int n) { return letter >= 0 ? letter : 2 * n + 2 + letter; }

}  // namespace

int maj_A(const SignedPermutation& g) {
  const auto letters = padded_letters(g);
  int total = 0;
  for (int i = 0; i <= g.n(); ++i) {
    if (letters[static_cast<std::size_t>(i)] > letters[static_cast<std::size_t>(i + 1)]) total += i;
  }
  return total;
}

int maj_B(const SignedPermutation& g) {
  const auto letters = padded_letters(g);
  int total = 0;
  for (int i = 0; i <= g.n(); ++i) {
    if (b_key(letters[static_cast<std::size_t>(i)], g.n()) > b_key(letters[static_cast<std::size_t>(i + 1)], g.n())) {
      total += i;
    }
  }
  return total;
}

NegStats neg_stats(const SignedPermutation& g) {
  NegStats out;
  for (int i = 1; i <= g.n(); ++i) {
    if (g.sign_of_value(i) == -1) {
      out.neg.push_back(i);
      ++out.nneg;
      out.sneg += i;
    }
  }
  return out;
}

std::string to_string(const SignedPermutation& g) {
  std::string out;
  const bool wide = g.n() > 9;
  for (int k = 1; k <= g.n(); ++k) {
    if (k > 1) out += wide ? "," : " ";
    const int letter = g.letter(k);
    out += std::to_string(letter < 0 ? -letter : letter);
    if (letter < 0) out += '\'';
  }
  return out;
}

SignedPermutation parse_signed(std::string_view text) {
  std::vector<int> values;
  std::vector<bool> barred;
  const bool separated = text.find(',') != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0 || c == ',') {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      throw ParseError("unexpected '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
    }
    int v = 0;
    do {
      v = v * 10 + (text[i] - '0');
      ++i;
    } while (separated && i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0);
    int primes = 0;
    while (i < text.size() && text[i] == '\'') {
      ++primes;
      ++i;
    }
    if (primes > 1) throw ParseError("a signed letter takes at most one prime in \"" + std::string(text) + "\"");
    values.push_back(v);
    barred.push_back(primes == 1);
  }
  try {
    Permutation w(values);
    std::vector<int> signs(values.size(), 1);
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (barred[k]) signs[static_cast<std::size_t>(values[k] - 1)] = -1;
    }
    return SignedPermutation(std::move(signs), std::move(w));
  } catch (const Error& e) {
    throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

SignedGroup::SignedGroup(int n) : n_(n) {
  const SymmetricGroup sym(n);
  const std::size_t masks = std::size_t{1} << static_cast<unsigned>(n);
  elements_.reserve(sym.size() * masks);
  for (const auto& w : sym.elements()) {
    for (std::size_t mask = 0; mask < masks; ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n), 1);
      for (int i = 0; i < n; ++i) {
        if ((mask >> static_cast<unsigned>(n - 1 - i)) & 1U) signs[static_cast<std::size_t>(i)] = -1;
      }
      elements_.emplace_back(std::move(signs), w);
    }
  }
}

std::size_t SignedGroup::index_of(const Element& a) const {
  std::size_t mask = 0;
  for (int s : a.signs()) mask = (mask << 1U) | (s == -1 ? 1U : 0U);
  return (lex_rank(a.perm()) << static_cast<unsigned>(n_)) + mask;
}

SignedGroup::Element SignedGroup::s(int k) const {
  std::vector<int> signs(static_cast<std::size_t>(n_), 1);
  signs[static_cast<std::size_t>(k - 1)] = -1;
  return SignedPermutation(std::move(signs), cycle(k, n_));
}

SignedGroup::Element SignedGroup::u(int k) const {
  return SignedPermutation(std::vector<int>(static_cast<std::size_t>(n_), 1), cycle(k, n_));
}

}  // namespace majdet
