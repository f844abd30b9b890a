#include <algorithm>
#include <vector>

#include "doctest.h"
#include "modlat/classify.hpp"
#include "modlat/error.hpp"
#include "modlat/module.hpp"
#include "modlat/ring.hpp"

using namespace modlat;

namespace {

Module cyclic(int n) { return make_module(make_ring({n}), {{0, n}}); }

Submodule gen(const Module& m, std::vector<int> gens) {
  return submodule_generated(m, gens);
}

}  // namespace

TEST_CASE("prime submodules") {
  Module z4 = cyclic(4);
  CHECK(is_prime_submodule(gen(z4, {2})));
  Witness w;
  CHECK_FALSE(is_prime_submodule(gen(z4, {}), &w));
  CHECK(witness_violates(PredicateKind::prime, gen(z4, {}), w));

  Module z6 = cyclic(6);
  CHECK_FALSE(is_prime_submodule(gen(z6, {})));
  CHECK(is_prime_submodule(gen(z6, {2})));
  CHECK(is_prime_submodule(gen(z6, {3})));

  CHECK_THROWS_AS(is_prime_submodule(gen(z6, {1})), error);  // improper
}

TEST_CASE("classical prime submodules") {
  Module z6 = cyclic(6);
  Witness w;
  CHECK_FALSE(is_classical_prime(gen(z6, {}), &w));
  CHECK(witness_violates(PredicateKind::classical_prime, gen(z6, {}), w));
  CHECK(is_classical_prime(gen(z6, {2})));

  Module z4 = cyclic(4);
  CHECK_FALSE(is_classical_prime(gen(z4, {}), &w));
  CHECK(w.scalars == std::vector<int>{2, 2});
  CHECK(is_classical_prime(gen(z4, {2})));

  Module z5 = cyclic(5);
  CHECK(is_classical_prime(gen(z5, {})));

  CHECK_THROWS_AS(is_classical_prime(gen(z4, {1})), error);
}

TEST_CASE("2-absorbing submodules") {
  Module z4 = cyclic(4);
  CHECK(is_2_absorbing_submodule(gen(z4, {})));

  Module z8 = cyclic(8);
  Witness w;
  CHECK_FALSE(is_2_absorbing_submodule(gen(z8, {}), &w));
  CHECK(witness_violates(PredicateKind::two_absorbing, gen(z8, {}), w));
  CHECK(is_2_absorbing_submodule(gen(z8, {4})));
  CHECK(is_2_absorbing_submodule(gen(z8, {2})));

  Module z6 = cyclic(6);
  CHECK(is_2_absorbing_submodule(gen(z6, {})));

  Module z30 = cyclic(30);
  CHECK_FALSE(is_2_absorbing_submodule(gen(z30, {})));

  CHECK_THROWS_AS(is_2_absorbing_submodule(gen(z8, {1})), error);
}

TEST_CASE("n-absorbing submodules over a three-prime direct sum") {
  Ring z30 = make_ring({30});
  Module m = make_module(z30, {{0, 2}, {0, 3}, {0, 5}});
  Submodule zero = gen(m, {});
  CHECK(colon_ideal_module(zero).is_zero());

  Witness w;
  CHECK_FALSE(is_n_absorbing_submodule(zero, 2, &w));
  CHECK(witness_violates(PredicateKind::n_absorbing, zero, w));
  CHECK(is_n_absorbing_submodule(zero, 3));
  CHECK(is_n_absorbing_submodule(zero, 4));

  // the specific violating tuple: scalars (2,3) on the element (1,1,0)
  Witness fixed;
  fixed.scalars = {2, 3};
  fixed.element = element_of(m, {1, 1, 0});
  CHECK(witness_violates(PredicateKind::n_absorbing, zero, fixed));
  CHECK(witness_violates(PredicateKind::two_absorbing, zero, fixed));

  CHECK_THROWS_AS(is_n_absorbing_submodule(zero, 0), error);
}

TEST_CASE("classical 2-absorbing detection with dual evaluation") {
  Module z8 = cyclic(8);
  Witness w;
  CHECK_FALSE(is_classical_2_absorbing(gen(z8, {}), &w));
  CHECK(w.scalars == std::vector<int>{2, 2, 2});
  CHECK(w.element == 1);
  CHECK(witness_violates(PredicateKind::classical_2_absorbing, gen(z8, {}), w));
  CHECK(is_classical_2_absorbing(gen(z8, {4})));
  CHECK(is_classical_2_absorbing(gen(z8, {2})));

  Module z6 = cyclic(6);
  CHECK(is_classical_2_absorbing(gen(z6, {})));

  Module z16 = cyclic(16);
  CHECK(is_classical_2_absorbing(gen(z16, {4})));
  CHECK_FALSE(is_classical_2_absorbing(gen(z16, {8})));
  CHECK_FALSE(is_classical_2_absorbing(gen(z16, {})));

  CHECK_THROWS_AS(is_classical_2_absorbing(gen(z6, {1})), error);

  // non-violating tuple replays as false
  Witness benign;
  benign.scalars = {1, 1, 1};
  benign.element = 0;
  CHECK_FALSE(witness_violates(PredicateKind::classical_2_absorbing, gen(z8, {}), benign));
}

TEST_CASE("the two classical 2-absorbing routes agree everywhere") {
  std::vector<Module> modules;
  modules.push_back(cyclic(8));
  modules.push_back(cyclic(12));
  modules.push_back(cyclic(16));
  modules.push_back(cyclic(30));
  modules.push_back(make_module(make_ring({4}), {{0, 4}, {0, 2}}));
  modules.push_back(make_module(make_ring({30}), {{0, 2}, {0, 3}, {0, 5}}));
  modules.push_back(make_module(make_ring({2, 2}), {{0, 2}, {1, 2}}));
  for (const Module& m : modules) {
    for (const Submodule& n : enumerate_submodules(m)) {
      if (!n.proper()) continue;
      CHECK(classical_2_absorbing_definitional(n) == classical_2_absorbing_by_colons(n));
    }
  }
}

TEST_CASE("full classification of the chain module") {
  Module z8 = cyclic(8);
  Classification c = classify_all(z8);
  REQUIRE(c.lattice.size() == 4);
  REQUIRE(c.records.size() == 3);

  const ClassificationRecord& r0 = c.records[0];  // (0)
  CHECK(c.lattice[r0.lattice_index].is_zero());
  CHECK_FALSE(r0.prime);
  CHECK_FALSE(r0.classical_prime);
  CHECK_FALSE(r0.two_absorbing);
  CHECK_FALSE(r0.classical_2_absorbing);
  REQUIRE(r0.classical_2_absorbing_witness.has_value());
  CHECK(witness_violates(PredicateKind::classical_2_absorbing,
                         c.lattice[r0.lattice_index],
                         *r0.classical_2_absorbing_witness));
  CHECK(r0.n_absorbing.at(2) == false);
  CHECK(r0.n_absorbing.at(3) == true);
  CHECK(r0.n_absorbing.at(4) == true);

  const ClassificationRecord& r1 = c.records[1];  // (4)
  CHECK(c.lattice[r1.lattice_index].elements == std::vector<int>{0, 4});
  CHECK_FALSE(r1.prime);
  CHECK_FALSE(r1.classical_prime);
  CHECK(r1.two_absorbing);
  CHECK(r1.classical_2_absorbing);

  const ClassificationRecord& r2 = c.records[2];  // (2)
  CHECK(r2.prime);
  CHECK(r2.classical_prime);
  CHECK(r2.two_absorbing);
  CHECK(r2.classical_2_absorbing);

  // colon profile of (4): colons by 2 and 6 are (2), the rest are (4)
  REQUIRE(r1.colon_profile.size() == 6);
  for (const auto& [m, ideal] : r1.colon_profile) {
    if (m == 2 || m == 6)
      CHECK(ideal.elements == std::vector<int>{0, 2, 4, 6});
    else
      CHECK(ideal.elements == std::vector<int>{0, 4});
  }

  // chain lattice has exactly the three covering edges
  REQUIRE(c.hasse.size() == 3);
  for (auto [lo, hi] : c.hasse)
    CHECK(std::includes(c.lattice[hi].elements.begin(), c.lattice[hi].elements.end(),
                        c.lattice[lo].elements.begin(), c.lattice[lo].elements.end()));

  // zero module classifies to nothing
  Classification cz = classify_all(make_module(make_ring({2}), {}));
  CHECK(cz.records.empty());
  CHECK(cz.lattice.size() == 1);
}

TEST_CASE("minimal classical 2-absorbing submodules") {
  auto min8 = minimal_classical_2_absorbing(cyclic(8));
  REQUIRE(min8.size() == 1);
  CHECK(min8[0].elements == std::vector<int>{0, 4});

  auto min6 = minimal_classical_2_absorbing(cyclic(6));
  REQUIRE(min6.size() == 1);
  CHECK(min6[0].is_zero());

  auto min16 = minimal_classical_2_absorbing(cyclic(16));
  REQUIRE(min16.size() == 1);
  CHECK(min16[0].elements == std::vector<int>{0, 4, 8, 12});

  auto min4 = minimal_classical_2_absorbing(cyclic(4));
  REQUIRE(min4.size() == 1);
  CHECK(min4[0].is_zero());
}

TEST_CASE("ten equivalent conditions, element-quantified family") {
  Module z8 = cyclic(8);
  ConditionVector good = evaluate_main_conditions(gen(z8, {4}));
  CHECK(good.all_true());
  CHECK(good.all_equal());

  ConditionVector bad = evaluate_main_conditions(gen(z8, {}));
  CHECK(bad.all_equal());
  CHECK_FALSE(bad.conditions[0]);
  for (bool b : bad.conditions) CHECK_FALSE(b);

  for (int n : {6, 8, 12}) {
    Module m = cyclic(n);
    for (const Submodule& s : enumerate_submodules(m)) {
      if (!s.proper()) continue;
      ConditionVector v = evaluate_main_conditions(s);
      CHECK(v.all_equal());
      CHECK(v.conditions[0] == is_classical_2_absorbing(s));
    }
  }
}

TEST_CASE("ten conditions, submodule-quantified family") {
  Module z8 = cyclic(8);
  ConditionVector good = evaluate_main2_conditions(gen(z8, {4}));
  CHECK(good.all_true());

  ConditionVector bad = evaluate_main2_conditions(gen(z8, {}));
  for (bool b : bad.conditions) CHECK_FALSE(b);

  // every submodule-quantified condition forces the definitional one
  for (int n : {6, 8, 12}) {
    Module m = cyclic(n);
    for (const Submodule& s : enumerate_submodules(m)) {
      if (!s.proper()) continue;
      ConditionVector v = evaluate_main2_conditions(s);
      for (int k = 1; k < 10; ++k)
        if (v.conditions[k]) CHECK(v.conditions[0]);
    }
  }
}

TEST_CASE("colon union identity for classical 2-absorbing submodules") {
  Module z8 = cyclic(8);
  ColonUnionOutcome ok = colon_union_check(gen(z8, {4}));
  CHECK(ok.union_equal);
  CHECK(ok.one_of);

  ColonUnionOutcome bad = colon_union_check(gen(z8, {}));
  CHECK_FALSE(bad.union_equal);
  CHECK(bad.witness.has_value());

  Module z6 = cyclic(6);
  ColonUnionOutcome ok6 = colon_union_check(gen(z6, {}));
  CHECK(ok6.union_equal);
  CHECK(ok6.one_of);
}

TEST_CASE("m-closed subsets evaluated literally") {
  Module z8 = cyclic(8);
  CHECK(is_c2a_m_closed(z8, {1, 2, 3, 5, 6, 7}));        // complement of (4)
  CHECK_FALSE(is_c2a_m_closed(z8, {1, 2, 3, 4, 5, 6, 7}));  // complement of (0)
  CHECK(is_c2a_m_closed(z8, {}));  // no hypothesis triple ever fires
  CHECK(is_c2a_m_closed(z8, {2, 6}));
  CHECK_FALSE(is_c2a_m_closed(z8, {4}));
  CHECK_THROWS_AS(is_c2a_m_closed(z8, {0, 1}), error);  // zero not allowed

  Module z6 = cyclic(6);
  CHECK(is_c2a_m_closed(z6, {1, 2, 3, 4, 5}));
}

TEST_CASE("maximal submodules disjoint from an m-closed set") {
  Module z8 = cyclic(8);
  auto max1 = maximal_disjoint_submodules(z8, {1, 2, 3, 5, 6, 7});
  REQUIRE(max1.size() == 1);
  CHECK(max1[0].elements == std::vector<int>{0, 4});

  auto max2 = maximal_disjoint_submodules(z8, {1, 3, 5, 7});
  REQUIRE(max2.size() == 1);
  CHECK(max2[0].elements == std::vector<int>{0, 2, 4, 6});

  auto max3 = maximal_disjoint_submodules(z8, {2, 6});
  REQUIRE(max3.size() == 1);
  CHECK(max3[0].elements == std::vector<int>{0, 4});

  CHECK_THROWS_AS(maximal_disjoint_submodules(z8, {}), error);   // empty set
  CHECK_THROWS_AS(maximal_disjoint_submodules(z8, {4}), error);  // not m-closed
  try {
    maximal_disjoint_submodules(z8, {4});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}
