#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "solgraph/catalog.hpp"
#include "solgraph/radical.hpp"
#include "solgraph/solubilizer.hpp"

using namespace solgraph;

TEST_CASE("pair solubility", "[solubilizer]") {
  PermGroup a5 = alternating(5);
  PairCache cache;
  Perm x = parse_cycles("(1 2 3 4 5)", 5);
  Perm y = parse_cycles("(1 2 3)", 5);

  CHECK(pair_is_soluble(a5, x, x, cache));
  CHECK_FALSE(pair_is_soluble(a5, x, y, cache));  // <x,y> is the whole of A5
  CHECK(pair_is_soluble(a5, x, Perm(5), cache));
  CHECK_THROWS_AS(pair_is_soluble(a5, parse_cycles("(1 2)", 5), y, cache),
                  std::invalid_argument);

  SECTION("cached answers match fresh derived-series computations") {
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
      Perm a = a5.chain().random_element(rng);
      Perm b = a5.chain().random_element(rng);
      bool cached = pair_is_soluble(a5, a, b, cache);
      bool fresh = is_soluble(PermGroup(5, {a, b}));
      CHECK(cached == fresh);
    }
    CHECK(cache.hits() > 0);
  }
}

TEST_CASE("solubilizer cardinalities", "[solubilizer]") {
  PairCache cache;

  SECTION("3-cycle in A5") {
    SolubilizerResult r = solubilizer(alternating(5), parse_cycles("(1 2 3)", 5), cache);
    CHECK(r.cardinality == 24);
    CHECK_FALSE(r.is_subgroup);
  }
  SECTION("an order-3 element of PSL(2,7)") {
    PermGroup g = psl2(7);
    ElementSet elems = enumerate_elements(g);
    for (const Perm& e : elems) {
      if (element_order(e) != 3) continue;
      SolubilizerResult r = solubilizer(g, e, cache);
      CHECK(r.cardinality == 78);
      break;
    }
  }
  SECTION("soluble group: every solubilizer is the whole group") {
    PermGroup s4 = symmetric(4);
    for (const Perm& x : enumerate_elements(s4)) {
      SolubilizerResult r = solubilizer(s4, x, cache);
      CHECK(r.cardinality == 24);
      CHECK(r.is_subgroup);
    }
  }
  SECTION("double transposition in A5, frozen from the union oracle") {
    PermGroup a5 = alternating(5);
    Perm x = parse_cycles("(1 2)(3 4)", 5);
    SolubilizerResult r = solubilizer(a5, x, cache);
    CHECK(r.cardinality == 36);
    CHECK(r.members == solubilizer_oracle(a5, x));
  }
}

TEST_CASE("solubilizer result invariants", "[solubilizer]") {
  PermGroup a5 = alternating(5);
  PairCache cache;
  ElementSet elems = enumerate_elements(a5);
  RadicalResult rad = soluble_radical(a5);
  for (const char* xs : {"(1 2 3)", "(1 2)(3 4)", "(1 2 3 4 5)", "()"}) {
    Perm x = parse_cycles(xs, 5);
    SolubilizerResult r = solubilizer(a5, x, cache);
    CHECK(r.members.contains(x));
    CHECK(r.members.contains(Perm(5)));
    CHECK(r.cardinality % element_order(x) == 0);
    CHECK(r.cardinality % centralizer(elems, x).size() == 0);
    CHECK(cyclic_normalizer(elems, x).subset_of(r.members));
    CHECK(rad.radical.subset_of(r.members));
  }
}

TEST_CASE("oracle equivalence", "[solubilizer]") {
  PairCache cache;
  SECTION("identity element") {
    PermGroup s4 = symmetric(4);
    ElementSet o = solubilizer_oracle(s4, Perm(4));
    CHECK(o.size() == 24);  // soluble group, everything is adjacent
  }
  SECTION("order-5 element of A5") {
    PermGroup a5 = alternating(5);
    Perm x = parse_cycles("(1 2 3 4 5)", 5);
    ElementSet o = solubilizer_oracle(a5, x);
    CHECK(o.size() == 10);
    CHECK(o == solubilizer(a5, x, cache).members);
    CHECK(o == cyclic_normalizer(a5, x));  // the normalizer case
  }
  SECTION("transposition in S5") {
    PermGroup s5 = symmetric(5);
    Perm x = parse_cycles("(1 2)", 5);
    CHECK(solubilizer_oracle(s5, x) == solubilizer(s5, x, cache).members);
  }
}

TEST_CASE("conjugation equivariance", "[solubilizer]") {
  PermGroup a5 = alternating(5);
  PairCache cache;
  std::mt19937 rng(31);
  Perm x = parse_cycles("(1 2 3)", 5);
  ElementSet sol = solubilizer(a5, x, cache).members;
  for (int i = 0; i < 5; ++i) {
    Perm g = a5.chain().random_element(rng);
    ElementSet sol_conj = solubilizer(a5, conjugate(x, g), cache).members;
    std::vector<Perm> translated;
    for (const Perm& y : sol) translated.push_back(conjugate(y, g));
    CHECK(sol_conj == ElementSet::from_unsorted(5, std::move(translated)));
  }
}

TEST_CASE("quotient law on A5xC2", "[solubilizer]") {
  PermGroup g = direct_product(alternating(5), cyclic(2));
  PairCache cache;
  RadicalResult rad = soluble_radical(g, cache);
  REQUIRE(rad.radical.size() == 2);
  QuotientGroup q = quotient_group(g, rad.radical);
  PairCache qcache;
  // spot-check a few elements; the acceptance suite covers all of them
  ElementSet elems = enumerate_elements(g);
  for (std::size_t i : {std::size_t{0}, std::size_t{7}, std::size_t{63}, std::size_t{119}}) {
    const Perm& x = elems[i];
    std::uint64_t whole = solubilizer(g, x, cache).cardinality;
    std::uint64_t quotient = solubilizer(q.group, q.image_of(x), qcache).cardinality;
    CHECK(whole == 2 * quotient);
  }
}

TEST_CASE("commutator condition", "[solubilizer]") {
  PairCache cache;

  SECTION("abelian groups satisfy weight 2") {
    PermGroup c6 = cyclic(6);
    for (const Perm& x : enumerate_elements(c6)) {
      CHECK(commutator_condition(c6, x, 2, CommutatorMode::brute, cache));
      CHECK(commutator_condition(c6, x, 2, CommutatorMode::structural, cache));
    }
  }
  SECTION("class-2 groups satisfy weight 3") {
    PermGroup d4 = dihedral(4);
    for (const Perm& x : enumerate_elements(d4)) {
      CHECK(commutator_condition(d4, x, 3, CommutatorMode::brute, cache));
      CHECK(commutator_condition(d4, x, 3, CommutatorMode::structural, cache));
    }
    // weight 2 fails: D4 is not abelian
    CHECK_FALSE(commutator_condition(d4, Perm(4), 2, CommutatorMode::brute, cache));
  }
  SECTION("A5 fails weight 3 for every element") {
    PermGroup a5 = alternating(5);
    for (const Perm& x : enumerate_elements(a5)) {
      CHECK_FALSE(commutator_condition(a5, x, 3, CommutatorMode::brute, cache));
      CHECK_FALSE(commutator_condition(a5, x, 3, CommutatorMode::structural, cache));
    }
  }
  SECTION("modes agree on a mixed sample") {
    for (const PermGroup& g : {symmetric(3), dihedral(6), cyclic(8)}) {
      for (const Perm& x : enumerate_elements(g)) {
        for (int k : {2, 3, 4}) {
          CHECK(commutator_condition(g, x, k, CommutatorMode::brute, cache) ==
                commutator_condition(g, x, k, CommutatorMode::structural, cache));
        }
      }
    }
  }
  SECTION("work budget") {
    PermGroup s4 = symmetric(4);
    CHECK_THROWS_AS(commutator_condition(s4, Perm(4), 6, CommutatorMode::brute, cache),
                    WorkBudgetError);
    CHECK_NOTHROW(commutator_condition(s4, Perm(4), 6, CommutatorMode::structural, cache));
  }
  SECTION("weight below 2 is rejected") {
    PermGroup c6 = cyclic(6);
    CHECK_THROWS_AS(commutator_condition(c6, Perm(6), 1, CommutatorMode::brute, cache),
                    std::invalid_argument);
  }
}

TEST_CASE("shared cache across threads", "[solubilizer]") {
  PermGroup a5 = alternating(5);
  ElementSet elems = enumerate_elements(a5);

  PairCache single;
  std::vector<std::uint64_t> expected;
  for (const Perm& x : elems) expected.push_back(solubilizer(a5, x, single).cardinality);

  PairCache shared;
  std::vector<std::uint64_t> got(elems.size(), 0);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < elems.size(); i += 4)
        got[i] = solubilizer(a5, elems[i], shared).cardinality;
    });
  }
  for (std::thread& t : workers) t.join();
  CHECK(got == expected);
  CHECK(shared.hits() + shared.misses() > 0);
}

TEST_CASE("remark counterexample search", "[solubilizer]") {
  SECTION("insoluble catalog, weight 4: no hits expected") {
    std::vector<PermGroup> groups{alternating(5), symmetric(5), psl2(7)};
    RemarkSearchReport rep = search_remark_counterexample(groups, 4);
    CHECK(rep.groups_scanned == 3);
    CHECK(rep.insoluble_groups == 3);
    CHECK(rep.hits.empty());
  }
  SECTION("soluble groups are filtered out") {
    std::vector<PermGroup> groups{cyclic(6), symmetric(4), dihedral(4)};
    RemarkSearchReport rep = search_remark_counterexample(groups, 4);
    CHECK(rep.insoluble_groups == 0);
    CHECK(rep.elements_scanned == 0);
    CHECK(rep.hits.empty());
  }
  SECTION("weight 3 over insoluble groups is empty as well") {
    std::vector<PermGroup> groups{alternating(5)};
    RemarkSearchReport rep = search_remark_counterexample(groups, 3);
    CHECK(rep.hits.empty());
  }
  SECTION("weight below 3 is rejected") {
    std::vector<PermGroup> groups{alternating(5)};
    CHECK_THROWS_AS(search_remark_counterexample(groups, 2), std::invalid_argument);
  }
}
