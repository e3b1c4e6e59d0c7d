#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "solgraph/group.hpp"

using namespace solgraph;

namespace {
PermGroup gens(Point degree, std::initializer_list<const char*> cycles) {
  std::vector<Perm> g;
  for (const char* c : cycles) g.push_back(parse_cycles(c, degree));
  return PermGroup(degree, std::move(g));
}
}  // namespace

TEST_CASE("stabilizer chain orders", "[group]") {
  CHECK(gens(5, {"(1 2 3)", "(1 2 3 4 5)"}).order() == 60);
  CHECK(gens(4, {"(1 2)", "(1 2 3 4)"}).order() == 24);
  CHECK(gens(6, {"(1 2 3 4 5 6)"}).order() == 6);
  CHECK(gens(8, {"(1 2)", "(1 2 3 4 5 6 7 8)"}).order() == 40320);
  CHECK(trivial_group(3).order() == 1);
}

TEST_CASE("membership by sifting", "[group]") {
  PermGroup a5 = gens(5, {"(1 2 3)", "(1 2 3 4 5)"});
  CHECK_FALSE(a5.contains(parse_cycles("(1 2)", 5)));
  CHECK(a5.contains(parse_cycles("(1 2 3)", 5)));
  CHECK(a5.contains(Perm(5)));
  for (const Perm& g : a5.generators()) CHECK(a5.contains(g));
  CHECK_THROWS_AS(a5.contains(Perm(4)), std::invalid_argument);
}

TEST_CASE("chain construction is deterministic", "[group]") {
  PermGroup a = gens(7, {"(1 2 3)", "(1 2 3 4 5 6 7)"});
  PermGroup b = gens(7, {"(1 2 3)", "(1 2 3 4 5 6 7)"});
  CHECK(a.chain().base() == b.chain().base());
  CHECK(a.order() == b.order());
  CHECK(a.order() == 2520);
}

TEST_CASE("element enumeration", "[group]") {
  SECTION("cyclic group under a generous cap") {
    ElementSet e = enumerate_elements(gens(6, {"(1 2 3 4 5 6)"}), 100);
    CHECK(e.size() == 6);
  }
  SECTION("cap semantics") {
    PermGroup a5 = gens(5, {"(1 2 3)", "(1 2 3 4 5)"});
    CHECK(enumerate_elements(a5, 100).size() == 60);
    CHECK_THROWS_AS(enumerate_elements(a5, 50), CapExceededError);
    try {
      enumerate_elements(a5, 50);
    } catch (const CapExceededError& e) {
      CHECK(e.order() == 60);
      CHECK(e.cap() == 50);
    }
  }
  SECTION("closure under product and inverse") {
    ElementSet e = enumerate_elements(gens(4, {"(1 2)", "(1 2 3 4)"}), 1000);
    REQUIRE(e.size() == 24);
    for (const Perm& a : e) {
      CHECK(e.contains(inverse(a)));
      for (const Perm& b : e) CHECK(e.contains(compose(a, b)));
    }
  }
  SECTION("BFS closure matches transversal enumeration") {
    for (auto& g : {gens(5, {"(1 2 3)", "(1 2 3 4 5)"}), gens(4, {"(1 2)", "(1 2 3 4)"}),
                    gens(6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"})}) {
      CHECK(enumerate_elements(g) == chain_elements(g));
    }
  }
}

TEST_CASE("canonical element order", "[group]") {
  ElementSet e = enumerate_elements(gens(3, {"(1 2 3)", "(1 2)"}), 10);
  REQUIRE(e.size() == 6);
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i - 1] < e[i]);
  CHECK(e[0].is_identity());
  CHECK(e.index_of(parse_cycles("(1 2)", 3)).has_value());
  CHECK(e.contains(parse_cycles("(1 2)", 3)));

  ElementSet c3 = enumerate_elements(gens(3, {"(1 2 3)"}), 10);
  CHECK_FALSE(c3.contains(parse_cycles("(1 2)", 3)));
  CHECK(c3.subset_of(e));
  CHECK_FALSE(e.subset_of(c3));
}

TEST_CASE("member orders divide the group order", "[group]") {
  PermGroup a5 = gens(5, {"(1 2 3)", "(1 2 3 4 5)"});
  for (const Perm& g : enumerate_elements(a5))
    CHECK(a5.order() % element_order(g) == 0);
}

TEST_CASE("random elements are members", "[group]") {
  PermGroup s6 = gens(6, {"(1 2)", "(1 2 3 4 5 6)"});
  std::mt19937 rng(42);
  for (int i = 0; i < 50; ++i) CHECK(s6.contains(s6.chain().random_element(rng)));
}

TEST_CASE("conjugacy classes", "[group]") {
  PermGroup a5 = gens(5, {"(1 2 3)", "(1 2 3 4 5)"});
  ElementSet e = enumerate_elements(a5);
  ConjugacyClasses cc = conjugacy_classes(a5, e);
  REQUIRE(cc.reps.size() == 5);

  std::vector<std::size_t> sizes(cc.reps.size(), 0);
  for (std::uint32_t c : cc.class_of) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 12, 12, 15, 20});

  for (std::size_t i = 0; i < e.size(); ++i) {
    const Perm& rep = e[cc.reps[cc.class_of[i]]];
    CHECK(conjugate(rep, cc.transporter[i]) == e[i]);
  }
}

TEST_CASE("group_from_elements detects closure", "[group]") {
  Point d = 4;
  ElementSet v4 = ElementSet::from_unsorted(
      d, {Perm(d), parse_cycles("(1 2)(3 4)", d), parse_cycles("(1 3)(2 4)", d),
          parse_cycles("(1 4)(2 3)", d)});
  GeneratedSubgroup sub = group_from_elements(d, v4);
  CHECK(sub.is_subgroup);
  CHECK(sub.group.order() == 4);

  ElementSet not_closed = ElementSet::from_unsorted(
      d, {Perm(d), parse_cycles("(1 2)", d), parse_cycles("(1 3)", d)});
  GeneratedSubgroup sub2 = group_from_elements(d, not_closed);
  CHECK_FALSE(sub2.is_subgroup);
  CHECK(sub2.group.order() == 6);
}

TEST_CASE("fingerprints separate unequal sets", "[group]") {
  ElementSet a = enumerate_elements(gens(4, {"(1 2)", "(1 2 3 4)"}));
  ElementSet b = enumerate_elements(gens(4, {"(1 2 3)", "(2 3 4)"}));
  CHECK(fingerprint_of(a) == fingerprint_of(a));
  CHECK_FALSE(fingerprint_of(a) == fingerprint_of(b));
}
