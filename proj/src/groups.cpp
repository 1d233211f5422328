#include "majdet/groups.hpp"

#include <cctype>
#include <numeric>

#include "majdet/errors.hpp"

namespace majdet {

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw OutOfRange("negative permutation size");
  Permutation w;
  w.images_.resize(static_cast<std::size_t>(n));
  std::iota(w.images_.begin(), w.images_.end(), 1);
  return w;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i];
      if (from < 1 || from > n) throw OutOfRange("cycle entry " + std::to_string(from));
      images[static_cast<std::size_t>(from - 1)] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return inv;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result = identity(size());
  while (e != 0) {
    if (e & 1U) result = compose(result, base);
    e >>= 1U;
    if (e != 0) base = compose(base, base);
  }
  return result;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw SizeMismatch("composing S_" + std::to_string(u.size()) + " with S_" + std::to_string(v.size()));
  }
  std::vector<int> images(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) images[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(images));
}

Permutation cycle(int k, int n) {
  if (k < 1 || k > n) throw OutOfRange("t_" + std::to_string(k) + " in S_" + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  if (k > 1) {
    images[0] = k;
    for (int i = 2; i <= k; ++i) images[static_cast<std::size_t>(i - 1)] = i - 1;
  }
  return Permutation(std::move(images));
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) out.push_back(i);
  }
  return out;
}

int maj(const Permutation& w) {
  int total = 0;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) total += i;
  }
  return total;
}

int inversions(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) count += w(i) > w(j) ? 1 : 0;
  }
  return count;
}

std::string to_one_line(const Permutation& w) {
  std::string out;
  const bool wide = w.size() > 9;
  for (int i = 1; i <= w.size(); ++i) {
    if (wide && i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

std::string to_cycle_notation(const Permutation& w) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(w.size()) + 1, false);
  for (int start = w.size(); start >= 1; --start) {
    if (seen[static_cast<std::size_t>(start)] || w(start) == start) continue;
    // Starting from the largest unseen value makes each cycle begin at its maximum.
    std::string cyc = "(";
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      if (cyc.size() > 1) cyc += ',';
      cyc += std::to_string(x);
      x = w(x);
    } while (x != start);
    out += cyc + ")";
  }
  return out.empty() ? "()" : out;
}

Permutation parse_one_line(std::string_view text) {
  std::vector<int> values;
  const bool separated = text.find(',') != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0 || c == ',') {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      throw ParseError("unexpected '" + std::string(1, c) + "' in permutation \"" + std::string(text) + "\"");
    }
    if (separated) {
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      values.push_back(v);
    } else {
      values.push_back(c - '0');
      ++i;
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

std::size_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::size_t rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int v = 1; v < w(i); ++v) smaller += used[static_cast<std::size_t>(v)] ? 0 : 1;
    used[static_cast<std::size_t>(w(i))] = true;
    rank = rank * static_cast<std::size_t>(n - i + 1) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1 || n > 10) throw OutOfRange("symmetric group degree " + std::to_string(n));
  std::vector<int> current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), 1);
  do {
    elements_.emplace_back(current);
  } while (std::next_permutation(current.begin(), current.end()));
}

// ---------------------------------------------------------------- dihedral

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 3) throw OutOfRange("dihedral polygon size must be at least 3");
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < 2; ++s) elements_.push_back({n, r, s});
  }
}

DihedralGroup::Element DihedralGroup::multiply(const Element& a, const Element& b) const {
  if (a.n != n_ || b.n != n_) throw SizeMismatch("dihedral elements of different polygons");
  // g2 g1 g2 = g1^-1, so g1^a g2^b g1^c g2^d = g1^(a + (-1)^b c) g2^(b + d).
  const int rot = ((a.rot + (a.refl == 0 ? b.rot : -b.rot)) % n_ + n_) % n_;
  return {n_, rot, (a.refl + b.refl) % 2};
}

DihedralGroup::Element DihedralGroup::invert(const Element& a) const {
  if (a.refl == 1) return a;
  return {n_, (n_ - a.rot) % n_, 0};
}

Permutation to_permutation(const DihedralElement& h) {
  const int n = h.n;
  std::vector<int> rotation(static_cast<std::size_t>(n));
  std::vector<int> reflection(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    rotation[static_cast<std::size_t>(i - 1)] = i % n + 1;
    reflection[static_cast<std::size_t>(i - 1)] = i == n ? n : n - i;
  }
  return compose(Permutation(rotation).pow(h.rot), Permutation(reflection).pow(h.refl));
}

std::pair<int, int> dihedral_stats(const DihedralElement& h) {
  const Permutation w = to_permutation(h);
  const int n = h.n;
  const int rot = w(n) == n ? 0 : w(n);
  // Rotations preserve the clockwise successor relation, reflections reverse it.
  const int step = ((w(2) - w(1)) % n + n) % n;
  return {rot, step == 1 ? 0 : 1};
}

std::string to_string(const DihedralElement& h) {
  std::string out;
  if (h.rot != 0) out += h.rot == 1 ? "g1" : "g1^" + std::to_string(h.rot);
  if (h.refl != 0) out += out.empty() ? "g2" : "*g2";
  return out.empty() ? "e" : out;
}

}  // namespace majdet
