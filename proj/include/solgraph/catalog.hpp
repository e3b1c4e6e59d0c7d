#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solgraph/group.hpp"

namespace solgraph {

/// Cyclic group of order n in its natural degree-n action.
inline PermGroup cyclic(Point n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup(n, {Perm(std::move(img))});
}

/// Dihedral group of order 2n acting on n points (n >= 3): rotation plus
/// the reflection fixing point 1.
inline PermGroup dihedral(Point n) {
  if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
  std::vector<Point> rot(n), refl(n);
  for (Point i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

inline PermGroup symmetric(Point n) {
  if (n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
  if (n == 1) return trivial_group(1);
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::vector<Point> swap01(n);
  for (Point i = 0; i < n; ++i) swap01[i] = i;
  swap01[0] = 1;
  swap01[1] = 0;
  return PermGroup(n, {Perm(std::move(swap01)), Perm(std::move(cycle))});
}

/// Alternating group: <(1 2 3), (1 2 ... n)> for odd n, <(1 2 3), (2 3 ... n)>
/// for even n.
inline PermGroup alternating(Point n) {
  if (n < 1) throw std::invalid_argument("alternating: n must be >= 1");
  if (n <= 2) return trivial_group(n);
  std::vector<Point> three(n);
  for (Point i = 0; i < n; ++i) three[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return PermGroup(n, {Perm(std::move(three))});
  std::vector<Point> big(n);
  for (Point i = 0; i < n; ++i) big[i] = i;
  if (n % 2 == 1) {
    for (Point i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    for (Point i = 1; i < n; ++i) big[i] = (i == n - 1) ? 1 : i + 1;
  }
  return PermGroup(n, {Perm(std::move(three)), Perm(std::move(big))});
}

namespace detail {

inline bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

/// PSL(2,p) for an odd prime p >= 5, acting on the projective line over the
/// p-element field. Point i (1-based) is the field value i-1; point p+1 is
/// infinity. Generated by z -> z+1 and z -> -1/z; order p(p^2-1)/2.
inline PermGroup psl2(std::uint32_t p) {
  if (!detail::is_odd_prime(p) || p < 5)
    throw std::invalid_argument("psl2: p must be an odd prime >= 5");
  const Point n = p + 1;
  const Point inf = p;  // 0-based index of the infinity point
  std::vector<Point> t(n), s(n);
  // field inverses by exhaustive products; p is tiny here
  std::vector<Point> inv(p, 0);
  for (Point a = 1; a < p; ++a)
    for (Point b = 1; b < p; ++b)
      if ((static_cast<std::uint64_t>(a) * b) % p == 1) inv[a] = b;
  for (Point z = 0; z < p; ++z) {
    t[z] = (z + 1) % p;
    s[z] = (z == 0) ? inf : (p - inv[z]) % p;
  }
  t[inf] = inf;
  s[inf] = 0;
  return PermGroup(n, {Perm(std::move(t)), Perm(std::move(s))});
}

/// A x B acting on the disjoint union of the two point sets.
inline PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  const Point n = A.degree() + B.degree();
  std::vector<Perm> gens;
  for (const Perm& g : A.generators()) {
    std::vector<Point> img(n);
    for (Point i = 0; i < A.degree(); ++i) img[i] = g(i);
    for (Point i = A.degree(); i < n; ++i) img[i] = i;
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : B.generators()) {
    std::vector<Point> img(n);
    for (Point i = 0; i < A.degree(); ++i) img[i] = i;
    for (Point i = 0; i < B.degree(); ++i) img[A.degree() + i] = A.degree() + g(i);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

inline PermGroup from_generators(Point degree, const std::vector<std::string>& cycle_strings) {
  std::vector<Perm> gens;
  for (const std::string& s : cycle_strings) gens.push_back(parse_cycles(s, degree));
  return PermGroup(degree, std::move(gens));
}

struct CatalogEntry {
  std::string name;
  PermGroup group;
  std::optional<bool> is_soluble_expected;
  std::optional<bool> is_almost_simple;
  std::string notes;
  bool extended_only = false;  // excluded from "verify all" unless requested
};

/// The fixed test bed. Names double as CLI identifiers.
inline std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](std::string name, PermGroup g, std::optional<bool> soluble,
                 std::optional<bool> almost_simple, std::string notes,
                 bool extended = false) {
    cat.push_back(CatalogEntry{std::move(name), std::move(g), soluble, almost_simple,
                               std::move(notes), extended});
  };
  add("C6", cyclic(6), true, false, "cyclic, abelian");
  add("S3", symmetric(3), true, false, "smallest non-abelian");
  add("S4", symmetric(4), true, false, "soluble, not nilpotent");
  add("D4", dihedral(4), true, false, "order 8, nilpotency class 2");
  add("D6", dihedral(6), true, false, "order 12, soluble, not nilpotent");
  add("Q8", from_generators(8, {"(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"}), true, false,
      "quaternion group in its regular action, class 2");
  add("A5", alternating(5), false, true, "smallest insoluble group");
  add("S5", symmetric(5), false, true, "almost simple over A5");
  add("A6", alternating(6), false, true, "order 360");
  add("PSL2-7", psl2(7), false, true, "order 168");
  add("PSL2-11", psl2(11), false, true, "order 660");
  add("A5xC2", direct_product(alternating(5), cyclic(2)), false, false,
      "insoluble with radical of order 2");
  add("A5xA5", direct_product(alternating(5), alternating(5)), false, false,
      "order 3600, trivial radical, not almost simple");
  add("A7", alternating(7), false, true, "order 2520", /*extended=*/true);
  return cat;
}

namespace detail {

inline std::optional<PermGroup> parse_group_name(std::string_view name);

inline std::optional<std::uint32_t> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 1000000) return std::nullopt;
  }
  return static_cast<std::uint32_t>(v);
}

inline std::optional<PermGroup> parse_atomic_name(std::string_view name) {
  try {
    if (name.starts_with("PSL2-")) {
      if (auto p = parse_uint(name.substr(5))) return psl2(*p);
      return std::nullopt;
    }
    if (name.size() >= 2) {
      auto n = parse_uint(name.substr(1));
      if (n) {
        switch (name[0]) {
          case 'C': return cyclic(*n);
          case 'D': return dihedral(*n);
          case 'S': return symmetric(*n);
          case 'A': return alternating(*n);
          default: break;
        }
      }
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<PermGroup> parse_group_name(std::string_view name) {
  if (auto g = parse_atomic_name(name)) return g;
  for (std::size_t i = 1; i + 1 < name.size(); ++i) {
    if (name[i] != 'x') continue;
    auto lhs = parse_group_name(name.substr(0, i));
    auto rhs = parse_group_name(name.substr(i + 1));
    if (lhs && rhs) return direct_product(*lhs, *rhs);
  }
  return std::nullopt;
}

}  // namespace detail

/// Resolves a CLI identifier: a default-catalog name first, then the naming
/// scheme C<n>, D<n>, S<n>, A<n>, PSL2-<p> and x-products thereof.
inline std::optional<CatalogEntry> resolve_group(std::string_view name) {
  for (CatalogEntry& e : default_catalog())
    if (e.name == name) return std::move(e);
  if (auto g = detail::parse_group_name(name))
    return CatalogEntry{std::string(name), std::move(*g), std::nullopt, std::nullopt, "", false};
  return std::nullopt;
}

}  // namespace solgraph
