#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace solgraph {

using Point = std::uint32_t;

/// Permutation of {0..n-1} stored as an image table. Products compose left
/// to right: (a*b)(i) = b(a(i)), so conjugation g^-1*a*g relabels a by g
/// and the commutator a^-1 b^-1 a b reads exactly as written.
///
/// Text I/O uses 1-based disjoint cycle notation, "()" for the identity.
class Perm {
 public:
  Perm() = default;

  explicit Perm(Point degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), Point{0});
  }

  explicit Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point v : img_) {
      if (v >= img_.size() || seen[v])
        throw std::invalid_argument("image table is not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(Point degree) { return Perm(degree); }

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator()(Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (Point i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Smallest moved point; degree() when this is the identity.
  Point first_moved() const {
    for (Point i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return degree();
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;
  // Canonical element order: lexicographic on image sequences.
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Point v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline void require_same_degree(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
}

inline Perm compose(const Perm& a, const Perm& b) {
  require_same_degree(a, b);
  std::vector<Point> img(a.degree());
  for (Point i = 0; i < a.degree(); ++i) img[i] = b(a(i));
  return Perm(std::move(img));
}

inline Perm inverse(const Perm& a) {
  std::vector<Point> img(a.degree());
  for (Point i = 0; i < a.degree(); ++i) img[a(i)] = i;
  return Perm(std::move(img));
}

/// g^-1 * a * g
inline Perm conjugate(const Perm& a, const Perm& g) {
  require_same_degree(a, g);
  std::vector<Point> img(a.degree());
  for (Point i = 0; i < a.degree(); ++i) img[g(i)] = g(a(i));
  return Perm(std::move(img));
}

/// a^-1 * b^-1 * a * b
inline Perm commutator(const Perm& a, const Perm& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

/// Left-nested commutator [...[[x1,x2],x3]...,xk]; needs at least two items.
inline Perm long_commutator(std::span<const Perm> items) {
  if (items.size() < 2)
    throw std::invalid_argument("long commutator needs at least 2 items");
  Perm acc = commutator(items[0], items[1]);
  for (std::size_t i = 2; i < items.size(); ++i)
    acc = commutator(acc, items[i]);
  return acc;
}

/// Nontrivial cycles, each starting at its smallest point, sorted by that
/// point. 0-based.
inline std::vector<std::vector<Point>> cycles(const Perm& a) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(a.degree(), false);
  for (Point i = 0; i < a.degree(); ++i) {
    if (seen[i] || a(i) == i) continue;
    std::vector<Point> cyc;
    Point p = i;
    do {
      cyc.push_back(p);
      seen[p] = true;
      p = a(p);
    } while (p != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

/// Least m >= 1 with a^m = identity; the lcm of the cycle lengths.
inline std::uint64_t element_order(const Perm& a) {
  std::uint64_t ord = 1;
  for (const auto& cyc : cycles(a))
    ord = std::lcm(ord, static_cast<std::uint64_t>(cyc.size()));
  return ord;
}

/// Multiset of cycle lengths (ascending), fixed points omitted.
inline std::vector<Point> cycle_type(const Perm& a) {
  std::vector<Point> t;
  for (const auto& cyc : cycles(a)) t.push_back(static_cast<Point>(cyc.size()));
  std::sort(t.begin(), t.end());
  return t;
}

inline std::string to_cycle_string(const Perm& a) {
  auto cs = cycles(a);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

/// Parses whitespace-tolerant disjoint cycle notation, e.g. "(1 2 3)(4 5)".
/// Commas are accepted as separators. "()" is the identity. Points are
/// 1-based in the text and must not repeat across cycles or exceed `degree`.
inline Perm parse_cycles(std::string_view text, Point degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_sep = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_sep();
  if (i == text.size())
    throw std::invalid_argument("empty cycle expression");

  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle expression");
    ++i;
    any_cycle = true;
    std::vector<Point> cyc;
    for (;;) {
      skip_sep();
      if (i == text.size())
        throw std::invalid_argument("unclosed cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("unexpected character in cycle expression");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) throw std::invalid_argument("point exceeds degree");
        ++i;
      }
      if (v == 0) throw std::invalid_argument("points are 1-based");
      Point p = static_cast<Point>(v - 1);
      if (used[p]) throw std::invalid_argument("point repeated across cycles");
      used[p] = true;
      cyc.push_back(p);
    }
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k]] = cyc[k + 1];
    if (cyc.size() >= 2) img[cyc.back()] = cyc.front();
    skip_sep();
  }
  if (!any_cycle) throw std::invalid_argument("empty cycle expression");
  return Perm(std::move(img));
}

}  // namespace solgraph
