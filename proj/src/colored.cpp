#include "majdet/colored.hpp"

#include <cctype>

#include "majdet/errors.hpp"

namespace majdet {

bool letter_less(const ColoredLetter& a, const ColoredLetter& b) {
  if (a.color != b.color) return a.color > b.color;
  return a.value < b.value;
}

ColoredPermutation::ColoredPermutation(Permutation w, std::vector<int> colors, int m)
    : w_(std::move(w)), colors_(std::move(colors)), m_(m) {
  if (m < 1) throw InvalidArgument("number of colors must be positive");
  if (static_cast<int>(colors_.size()) != w_.size()) throw ShapeMismatch("color vector length");
  for (int c : colors_) {
    if (c < 0 || c >= m) throw InvalidArgument("color " + std::to_string(c) + " outside [0," + std::to_string(m) + ")");
  }
}

ColoredPermutation ColoredPermutation::identity(int n, int m) {
  return ColoredPermutation(Permutation::identity(n), std::vector<int>(static_cast<std::size_t>(n), 0), m);
}

ColoredPermutation cmul(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw ShapeMismatch("colored permutations of different shapes");
  const Permutation& h = b.perm();
  std::vector<int> colors(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) {
    colors[static_cast<std::size_t>(i - 1)] =
        (a.colors()[static_cast<std::size_t>(h(i) - 1)] + b.colors()[static_cast<std::size_t>(i - 1)]) % a.m();
  }
  return ColoredPermutation(compose(a.perm(), h), std::move(colors), a.m());
}

ColoredPermutation cinverse(const ColoredPermutation& a) {
  // (w, x)(w', x') = (w w', x.w' + x') is the identity iff w' = w^-1 and
  // x' = -(x.w^-1), i.e. x'_i = -x_{w^-1(i)}.
  const Permutation inv = a.perm().inverse();
  std::vector<int> colors(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) {
    colors[static_cast<std::size_t>(i - 1)] = (a.m() - a.colors()[static_cast<std::size_t>(inv(i) - 1)]) % a.m();
  }
  return ColoredPermutation(inv, std::move(colors), a.m());
}

int cmaj(const ColoredPermutation& g) {
  int total = 0;
  for (int i = 1; i < g.n(); ++i) {
    if (letter_less(g.letter(i + 1), g.letter(i))) total += i;
  }
  return total;
}

int col(const ColoredPermutation& g) {
  int total = 0;
  for (int c : g.colors()) total += c;
  return total;
}

int fmaj(const ColoredPermutation& g) { return g.m() * cmaj(g) + col(g); }

int amaj(const ColoredPermutation& g) { return maj(g.perm()); }

std::string to_string(const ColoredPermutation& g) {
  std::string out;
  const bool wide = g.n() > 9;
  for (int k = 1; k <= g.n(); ++k) {
    if (k > 1) out += wide ? "," : " ";
    const auto letter = g.letter(k);
    out += std::to_string(letter.value) + std::string(static_cast<std::size_t>(letter.color), '\'');
  }
  return out;
}

ColoredPermutation parse_colored(std::string_view text, int m) {
  std::vector<int> values;
  std::vector<int> colors;
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
    values.push_back(v);
    colors.push_back(primes);
  }
  try {
    return ColoredPermutation(Permutation(std::move(values)), std::move(colors), m);
  } catch (const Error& e) {
    throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

ColoredGroup::ColoredGroup(int n, int m) : n_(n), m_(m) {
  if (m < 1) throw OutOfRange("number of colors must be positive");
  const SymmetricGroup sym(n);
  std::size_t color_count = 1;
  for (int i = 0; i < n; ++i) color_count *= static_cast<std::size_t>(m);
  elements_.reserve(sym.size() * color_count);
  for (const auto& w : sym.elements()) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (std::size_t code = 0; code < color_count; ++code) {
      std::size_t rest = code;
      for (int k = n - 1; k >= 0; --k) {
        colors[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(m));
        rest /= static_cast<std::size_t>(m);
      }
      elements_.emplace_back(w, colors, m);
    }
  }
}

std::size_t ColoredGroup::index_of(const Element& a) const {
  std::size_t code = 0;
  for (int c : a.colors()) code = code * static_cast<std::size_t>(m_) + static_cast<std::size_t>(c);
  std::size_t color_count = 1;
  for (int i = 0; i < n_; ++i) color_count *= static_cast<std::size_t>(m_);
  return lex_rank(a.perm()) * color_count + code;
}

ColoredGroup::Element ColoredGroup::t_tilde(int k) const {
  std::vector<int> b(static_cast<std::size_t>(n_), 0);
  b[0] = 1 % m_;
  return ColoredPermutation(cycle(k, n_), std::move(b), m_);
}

ColoredGroup::Element ColoredGroup::t_plain(int k) const { return embed(cycle(k, n_)); }

ColoredGroup::Element ColoredGroup::y(int i) const {
  if (i < 1 || i > n_) throw OutOfRange("y index " + std::to_string(i));
  std::vector<int> e(static_cast<std::size_t>(n_), 0);
  e[static_cast<std::size_t>(i - 1)] = 1 % m_;
  return ColoredPermutation(Permutation::identity(n_), std::move(e), m_);
}

ColoredGroup::Element ColoredGroup::embed(const Permutation& w) const {
  if (w.size() != n_) throw SizeMismatch("embedding permutation of wrong size");
  return ColoredPermutation(w, std::vector<int>(static_cast<std::size_t>(n_), 0), m_);
}

}  // namespace majdet
