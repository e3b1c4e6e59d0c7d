#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "solgraph/errors.hpp"
#include "solgraph/perm.hpp"

namespace solgraph {

/// Deduplicated set of same-degree permutations in canonical order
/// (lexicographic on image sequences).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(Point degree) : degree_(degree) {}

  static ElementSet from_unsorted(Point degree, std::vector<Perm> members) {
    for (const Perm& p : members)
      if (p.degree() != degree)
        throw std::invalid_argument("element degree mismatch");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    ElementSet s(degree);
    s.members_ = std::move(members);
    return s;
  }

  Point degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Perm>& members() const { return members_; }
  const Perm& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const Perm& p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
  }

  std::optional<std::size_t> index_of(const Perm& p) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    if (it == members_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
  }

  bool subset_of(const ElementSet& other) const {
    for (const Perm& p : members_)
      if (!other.contains(p)) return false;
    return true;
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  Point degree_ = 0;
  std::vector<Perm> members_;
};

/// Identity of a concrete subgroup: its order plus a hash over the sorted
/// element list. Used as a cache key for subgroup-level predicates.
struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t hash = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const {
    return static_cast<std::size_t>(f.hash * 0x9e3779b97f4a7c15ull ^ f.order);
  }
};

inline Fingerprint fingerprint_of(const ElementSet& elements) {
  std::uint64_t h = 1469598103934665603ull;
  for (const Perm& p : elements) {
    for (Point v : p.images()) {
      h ^= v + 1;
      h *= 1099511628211ull;
    }
    h ^= h >> 29;
  }
  return Fingerprint{elements.size(), h};
}

/// Base and strong generating set built with the deterministic Schreier-Sims
/// procedure. Base points are chosen first-moved-first, so identical
/// generator lists always produce identical chains.
class StabChain {
 public:
  StabChain() = default;

  StabChain(Point degree, std::span<const Perm> generators) : degree_(degree) {
    std::vector<Perm> gens;
    for (const Perm& g : generators) {
      if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
      if (g.is_identity()) continue;
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    if (gens.empty()) return;  // trivial group, no levels

    Point beta = degree;
    for (const Perm& g : gens) beta = std::min(beta, g.first_moved());
    add_level(beta);
    levels_[0].gens = std::move(gens);
    rebuild_orbit(0);
    construct();
    order_ = 1;
    for (const Level& l : levels_) order_ *= l.orbit.size();
  }

  Point degree() const { return degree_; }
  std::uint64_t order() const { return order_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const Level& l : levels_) b.push_back(l.beta);
    return b;
  }

  /// Membership by sifting through the chain.
  bool contains(const Perm& g) const {
    if (g.degree() != degree_) throw std::invalid_argument("degree mismatch");
    auto [residue, stopped] = sift_from(0, g);
    return stopped == levels_.size() && residue.is_identity();
  }

  /// All group elements as transversal products, in no particular order.
  std::vector<Perm> elements() const {
    std::vector<Perm> out{Perm(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
      std::vector<Perm> next;
      next.reserve(out.size() * levels_[l].orbit.size());
      for (const Perm& h : out)
        for (const Perm& u : levels_[l].transversal) next.push_back(compose(h, u));
      out = std::move(next);
    }
    return out;
  }

  Perm random_element(std::mt19937& rng) const {
    Perm g(degree_);
    for (const Level& l : levels_)
      g = compose(g, l.transversal[rng() % l.transversal.size()]);
    return g;
  }

 private:
  struct Level {
    Point beta = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;        // BFS discovery order, orbit[0] == beta
    std::vector<Perm> transversal;   // transversal[k] maps beta to orbit[k]
    std::vector<std::int32_t> pos;   // point -> orbit index, -1 outside
  };

  void add_level(Point beta) {
    Level l;
    l.beta = beta;
    l.pos.assign(degree_, -1);
    levels_.push_back(std::move(l));
  }

  void rebuild_orbit(std::size_t li) {
    Level& l = levels_[li];
    l.orbit.assign(1, l.beta);
    l.transversal.assign(1, Perm(degree_));
    std::fill(l.pos.begin(), l.pos.end(), -1);
    l.pos[l.beta] = 0;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      Point p = l.orbit[k];
      for (const Perm& s : l.gens) {
        Point q = s(p);
        if (l.pos[q] < 0) {
          l.pos[q] = static_cast<std::int32_t>(l.orbit.size());
          l.orbit.push_back(q);
          l.transversal.push_back(compose(l.transversal[k], s));
        }
      }
    }
  }

  // Strips g through levels li.. ; returns the residue and the level at
  // which stripping stopped (levels_.size() on a full pass).
  std::pair<Perm, std::size_t> sift_from(std::size_t li, Perm g) const {
    for (std::size_t l = li; l < levels_.size(); ++l) {
      Point p = g(levels_[l].beta);
      std::int32_t k = levels_[l].pos[p];
      if (k < 0) return {std::move(g), l};
      g = compose(g, inverse(levels_[l].transversal[static_cast<std::size_t>(k)]));
    }
    return {std::move(g), levels_.size()};
  }

  void construct() {
    std::ptrdiff_t i = 0;
    while (i >= 0) {
      bool restarted = false;
      for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restarted; ++oi) {
        for (std::size_t si = 0; si < levels_[i].gens.size() && !restarted; ++si) {
          const Perm u = levels_[i].transversal[oi];
          const Perm s = levels_[i].gens[si];
          Point q = s(levels_[i].orbit[oi]);
          const Perm u2 = levels_[i].transversal[static_cast<std::size_t>(levels_[i].pos[q])];
          Perm schreier = compose(compose(u, s), inverse(u2));
          if (schreier.is_identity()) continue;
          auto [residue, drop] = sift_from(static_cast<std::size_t>(i) + 1, std::move(schreier));
          if (residue.is_identity() && drop == levels_.size()) continue;
          if (drop == levels_.size()) add_level(residue.first_moved());
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= drop; ++l) {
            levels_[l].gens.push_back(residue);
            rebuild_orbit(l);
          }
          i = static_cast<std::ptrdiff_t>(drop);
          restarted = true;
        }
      }
      if (!restarted) --i;
    }
  }

  Point degree_ = 0;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Finite permutation group given by generators, with an eagerly built
/// stabilizer chain. Immutable once constructed.
class PermGroup {
 public:
  PermGroup(Point degree, std::vector<Perm> generators) : degree_(degree) {
    if (degree == 0) throw std::invalid_argument("degree must be positive");
    for (const Perm& g : generators) {
      if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
      if (g.is_identity()) continue;
      if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
    }
    if (gens_.empty()) gens_.push_back(Perm(degree));
    chain_ = StabChain(degree, gens_);
  }

  Point degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const { return chain_; }
  std::uint64_t order() const { return chain_.order(); }
  bool contains(const Perm& g) const { return chain_.contains(g); }
  bool is_trivial() const { return order() == 1; }

 private:
  Point degree_;
  std::vector<Perm> gens_;
  StabChain chain_;
};

inline PermGroup trivial_group(Point degree) { return PermGroup(degree, {}); }

/// All elements by breadth-first closure of the generators under right
/// multiplication. Deliberately independent of the stabilizer chain's
/// transversal enumeration; the two cardinalities must agree.
inline ElementSet enumerate_elements(const PermGroup& group, std::uint64_t cap = 10000) {
  if (group.order() > cap) throw CapExceededError(group.order(), cap);
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  Perm id(group.degree());
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : group.generators()) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  std::vector<Perm> all(seen.begin(), seen.end());
  ElementSet out = ElementSet::from_unsorted(group.degree(), std::move(all));
  if (out.size() != group.order())
    throw std::logic_error("closure size disagrees with stabilizer chain order");
  return out;
}

/// Fast element materialization via transversal products. Same set as
/// enumerate_elements; used on hot paths.
inline ElementSet chain_elements(const PermGroup& group) {
  return ElementSet::from_unsorted(group.degree(), group.chain().elements());
}

/// Conjugacy classes of an enumerated group. transporter[i] conjugates the
/// class representative onto element i.
struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;   // element index -> class id
  std::vector<std::uint32_t> reps;       // class id -> element index
  std::vector<Perm> transporter;         // element index -> conjugator from rep
};

inline ConjugacyClasses conjugacy_classes(const PermGroup& group, const ElementSet& elements) {
  const std::size_t n = elements.size();
  ConjugacyClasses cc;
  cc.class_of.assign(n, UINT32_MAX);
  cc.transporter.assign(n, Perm(group.degree()));
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<std::uint32_t>(i));

  for (std::uint32_t i = 0; i < n; ++i) {
    if (cc.class_of[i] != UINT32_MAX) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(cc.reps.size());
    cc.reps.push_back(i);
    cc.class_of[i] = cls;
    std::deque<std::uint32_t> todo{i};
    while (!todo.empty()) {
      std::uint32_t e = todo.front();
      todo.pop_front();
      for (const Perm& g : group.generators()) {
        Perm c = conjugate(elements[e], g);
        std::uint32_t ci = index.at(c);
        if (cc.class_of[ci] == UINT32_MAX) {
          cc.class_of[ci] = cls;
          cc.transporter[ci] = compose(cc.transporter[e], g);
          todo.push_back(ci);
        }
      }
    }
  }
  return cc;
}

/// Greedy generating subset of a finite element set. `is_subgroup` reports
/// whether the set itself is closed, i.e. generates no more than itself.
struct GeneratedSubgroup {
  PermGroup group;
  bool is_subgroup;
};

inline GeneratedSubgroup group_from_elements(Point degree, const ElementSet& elements) {
  std::vector<Perm> gens;
  PermGroup cur = trivial_group(degree);
  for (const Perm& p : elements) {
    if (!cur.contains(p)) {
      gens.push_back(p);
      cur = PermGroup(degree, gens);
    }
  }
  bool closed = !elements.empty() && cur.order() == elements.size();
  return GeneratedSubgroup{std::move(cur), closed};
}

}  // namespace solgraph
