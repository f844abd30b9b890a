#include <algorithm>
#include <vector>

#include "doctest.h"
#include "modlat/error.hpp"
#include "modlat/module.hpp"
#include "modlat/ring.hpp"

using namespace modlat;

namespace {

Module cyclic(int n) { return make_module(make_ring({n}), {{0, n}}); }

std::vector<int> elems(const Submodule& s) { return s.elements; }

}  // namespace

TEST_CASE("module construction validates components") {
  Ring z6 = make_ring({6});
  CHECK_THROWS_AS(make_module(z6, {{0, 4}}), error);  // 4 does not divide 6
  CHECK_THROWS_AS(make_module(z6, {{1, 2}}), error);  // no coordinate 1
  CHECK_THROWS_AS(make_module(z6, {{0, 0}}), error);

  Module m = make_module(z6, {{0, 2}, {0, 3}});
  CHECK(m->size == 6);
  CHECK(element_of(m, {1, 2}) == 5);
  CHECK(component_coords(m, 5) == std::vector<int>{1, 2});
  // action is componentwise reduction of the integer scalar
  CHECK(m->act(5, element_of(m, {1, 1})) == element_of(m, {1, 2}));

  Module zero = make_module(z6, {});
  CHECK(zero->size == 1);

  Module z8 = cyclic(8);
  CHECK(z8->act(3, 5) == 7);
  CHECK(z8->add(5, 7) == 4);
}

TEST_CASE("submodule generation and enumeration") {
  Module z8 = cyclic(8);
  Submodule two = submodule_generated(z8, {2});
  CHECK(elems(two) == std::vector<int>{0, 2, 4, 6});
  CHECK(two.generators == std::vector<int>{2});
  CHECK(submodule_generated(z8, {}).is_zero());

  CHECK(enumerate_submodules(z8).size() == 4);
  CHECK(enumerate_submodules(cyclic(6)).size() == 4);

  Module v2 = make_module(make_ring({2}), {{0, 2}, {0, 2}});
  CHECK(enumerate_submodules(v2).size() == 5);

  Module m42 = make_module(make_ring({4}), {{0, 4}, {0, 2}});
  CHECK(enumerate_submodules(m42).size() == 8);

  // enumeration is closed under sum and intersection and sorted
  auto subs = enumerate_submodules(m42);
  CHECK(subs.front().is_zero());
  CHECK_FALSE(subs.back().proper());
  for (size_t i = 1; i < subs.size(); ++i) {
    CHECK(subs[i - 1].elements.size() <= subs[i].elements.size());
  }
}

TEST_CASE("colon ideals of submodules") {
  Module z8 = cyclic(8);
  Submodule four = submodule_generated(z8, {4});
  CHECK(colon_ideal(four, {2}).elements == std::vector<int>{0, 2, 4, 6});
  CHECK(colon_ideal_module(four).elements == std::vector<int>{0, 4});
  CHECK_THROWS_AS(colon_ideal(four, {}), error);
  CHECK_THROWS_AS(colon_ideal(four, {9}), error);

  Module z6 = cyclic(6);
  CHECK(colon_ideal_module(submodule_generated(z6, {})).is_zero());
}

TEST_CASE("colon submodule divides by the product of the scalars") {
  Module z8 = cyclic(8);
  Submodule four = submodule_generated(z8, {4});
  CHECK(elems(colon_submodule(four, {2})) == std::vector<int>{0, 2, 4, 6});

  Module z12 = cyclic(12);
  Submodule zero = submodule_generated(z12, {});
  // (0 : 2*3) = {m : 6m = 0}, not {m : 2m = 0 and 3m = 0}
  CHECK(elems(colon_submodule(zero, {2, 3})) == std::vector<int>{0, 2, 4, 6, 8, 10});

  CHECK_THROWS_AS(colon_submodule(four, {}), error);

  // peeling scalars off one at a time gives the same set
  Submodule n = submodule_generated(z12, {4});
  for (int a = 0; a < 12; a += 5)
    for (int b = 0; b < 12; b += 3)
      for (int c = 0; c < 12; c += 4) {
        Submodule lhs = colon_submodule(n, {a, b, c});
        Submodule rhs = colon_submodule(colon_submodule(n, {c}), {a, b});
        CHECK(lhs == rhs);
      }
}

TEST_CASE("zero divisors on a quotient") {
  Module z6 = cyclic(6);
  CHECK(zero_divisors_on_quotient(submodule_generated(z6, {})) ==
        std::vector<int>{0, 2, 3, 4});

  Module z8 = cyclic(8);
  CHECK(zero_divisors_on_quotient(submodule_generated(z8, {4})) ==
        std::vector<int>{0, 2, 4, 6});

  CHECK_THROWS_AS(zero_divisors_on_quotient(submodule_generated(z8, {1})), error);
}

TEST_CASE("quotient modules use least representatives") {
  Module z8 = cyclic(8);
  Submodule four = submodule_generated(z8, {4});
  auto [q, proj] = quotient_module(z8, four);
  CHECK(q->size == 4);
  CHECK(proj.kernel() == four);
  CHECK(proj.surjective());
  CHECK(proj(6) == proj(2));

  Submodule two = submodule_generated(z8, {2});
  Submodule image = proj.image_of(two);
  CHECK(image.elements.size() == 2);
  CHECK(proj.preimage_of(image) == two);

  // quotient by the zero submodule is the module itself up to relabeling
  auto [q0, p0] = quotient_module(z8, submodule_generated(z8, {}));
  CHECK(q0->size == 8);
  CHECK(p0.kernel().is_zero());
}

TEST_CASE("homomorphisms extend generator images or reject them") {
  Ring z4 = make_ring({4});
  Module m2 = make_module(z4, {{0, 2}});
  Module m4 = make_module(z4, {{0, 4}});

  CHECK_FALSE(try_hom(m2, m4, {1}).has_value());  // 1 has order 2, image must too
  auto f = try_hom(m2, m4, {2});
  REQUIRE(f.has_value());
  CHECK((*f)(1) == 2);
  CHECK(f->kernel().is_zero());
  CHECK(f->image().elements == std::vector<int>{0, 2});

  Module z8 = cyclic(8);
  ModuleHom id = hom(z8, z8, {1});
  CHECK(id.surjective());
  CHECK(id.kernel().is_zero());

  ModuleHom dbl = hom(z8, z8, {2});
  CHECK(dbl.image().elements == std::vector<int>{0, 2, 4, 6});
  CHECK(dbl.kernel().elements == std::vector<int>{0, 4});

  CHECK_THROWS_AS(hom(m2, m4, {1}), error);
  CHECK_THROWS_AS(hom(m2, m4, {1, 2}), error);  // one image per generator
}

TEST_CASE("direct products carry translation tables") {
  Ring z2 = make_ring({2});
  Ring z3 = make_ring({3});
  Module m2 = make_module(z2, {{0, 2}});
  Module m3 = make_module(z3, {{0, 3}});

  CHECK_THROWS_AS(direct_product({{z2, m2}}), error);  // needs two factors

  DirectProduct dp = direct_product({{z2, m2}, {z3, m3}});
  CHECK(dp.ring->spec() == "Z2xZ3");
  CHECK(dp.module->size == 6);
  REQUIRE(dp.module->components.size() == 2);
  CHECK(dp.module->components[1].coord == 1);
  CHECK(dp.module->components[1].order == 3);

  for (int x = 0; x < 6; ++x) CHECK(dp.embed(dp.project(x)) == x);
  // scalar (1,2) acts coordinatewise
  int s = dp.ring->index({1, 2});
  CHECK(dp.module->act(s, dp.embed({1, 1})) == dp.embed({1, 2}));
}

TEST_CASE("coordinate splits recover factor modules and split every submodule") {
  Ring r = make_ring({2, 3});
  Module m = make_module(r, {{0, 2}, {1, 3}});
  DirectProduct dp = coordinate_split(m, {{0}, {1}});
  REQUIRE(dp.parts.size() == 2);
  CHECK(dp.parts[0]->size == 2);
  CHECK(dp.parts[1]->size == 3);
  CHECK(dp.part_rings[0]->spec() == "Z2");
  CHECK(dp.part_rings[1]->spec() == "Z3");

  for (const Submodule& n : enumerate_submodules(m)) {
    SubmoduleSplit sp = split_submodule(dp, n);
    CHECK(sp.split);
    long long prod = 1;
    for (const auto& f : sp.factors) prod *= static_cast<long long>(f.elements.size());
    CHECK(prod == static_cast<long long>(n.elements.size()));
  }

  CHECK_THROWS_AS(coordinate_split(m, {{0}}), error);        // not a partition
  CHECK_THROWS_AS(coordinate_split(m, {{0}, {0, 1}}), error);
}

TEST_CASE("localization at a multiplicative set") {
  Module z6 = cyclic(6);

  Localization at3 = localize(z6, {1, 3});
  CHECK(at3.torsion.elements == std::vector<int>{0, 2, 4});
  CHECK(at3.ring_torsion.elements == std::vector<int>{0, 2, 4});
  REQUIRE(at3.localized_ring.has_value());
  CHECK((*at3.localized_ring)->size == 2);
  CHECK(at3.module->size == 2);
  CHECK(at3.map.surjective());

  Localization triv = localize(z6, {1});
  CHECK(triv.torsion.is_zero());
  REQUIRE(triv.localized_ring.has_value());
  CHECK((*triv.localized_ring)->size == 6);
  CHECK(triv.module->size == 6);

  Localization all = localize(z6, {0, 1});
  CHECK_FALSE(all.localized_ring.has_value());
  CHECK(all.module->size == 1);
  CHECK_FALSE(all.torsion.proper());

  Localization units = localize(z6, {1, 5});
  CHECK(units.torsion.is_zero());
  CHECK(units.module->size == 6);

  CHECK_THROWS_AS(localize(z6, {3}), error);     // missing 1
  CHECK_THROWS_AS(localize(z6, {1, 2}), error);  // not closed (4 missing)
}

TEST_CASE("tensoring with a free module replicates coordinates") {
  Module z8 = cyclic(8);
  Submodule four = submodule_generated(z8, {4});

  auto [m1, n1] = tensor_free(z8, four, 1);
  CHECK(m1->size == 8);
  CHECK(n1 == four);

  auto [m2, n2] = tensor_free(z8, four, 2);
  CHECK(m2->size == 64);
  CHECK(n2.elements.size() == 4);
  REQUIRE(m2->components.size() == 2);
  // diagonal action
  CHECK(m2->act(3, element_of(m2, {1, 2})) == element_of(m2, {3, 6}));

  CHECK_THROWS_AS(tensor_free(z8, four, 0), error);
}

TEST_CASE("multiplication modules and submodule products") {
  CHECK(is_multiplication_module(cyclic(8)));
  CHECK(is_multiplication_module(cyclic(6)));
  Module v2 = make_module(make_ring({2}), {{0, 2}, {0, 2}});
  CHECK_FALSE(is_multiplication_module(v2));
  Module m23 = make_module(make_ring({6}), {{0, 2}, {0, 3}});
  CHECK(is_multiplication_module(m23));  // isomorphic to the cyclic module
  CHECK(is_multiplication_module(make_module(make_ring({2}), {})));

  Module z8 = cyclic(8);
  Submodule two = submodule_generated(z8, {2});
  CHECK(elems(submodule_product(two, two)) == std::vector<int>{0, 4});

  Module z6 = cyclic(6);
  CHECK(submodule_product(submodule_generated(z6, {2}), submodule_generated(z6, {3}))
            .is_zero());

  Submodule d1 = submodule_generated(v2, {1});
  CHECK_THROWS_AS(submodule_product(d1, d1), error);
}
