#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "modlat/error.hpp"
#include "modlat/ring.hpp"

using namespace modlat;

namespace {

std::vector<int> multiples(int d, int n) {
  std::vector<int> out;
  for (int x = 0; x < n; x += d) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool has_code(const error& e, errc c) { return e.code() == c; }

}  // namespace

TEST_CASE("ring construction rejects degenerate moduli") {
  CHECK_THROWS_AS(make_ring({}), error);
  CHECK_THROWS_AS(make_ring({1}), error);
  CHECK_THROWS_AS(make_ring({0}), error);
  CHECK_THROWS_AS(make_ring({6, 1}), error);
  CHECK_THROWS_AS(make_ring({-3}), error);
  try {
    make_ring({1});
    CHECK(false);
  } catch (const error& e) {
    CHECK(has_code(e, errc::invalid_ring));
  }
}

TEST_CASE("cyclic ring arithmetic matches residue arithmetic") {
  Ring r = make_ring({6});
  CHECK(r->size == 6);
  CHECK(r->one == 1);
  CHECK(r->add(4, 5) == 3);
  CHECK(r->mul(4, 5) == 2);
  CHECK(r->mul(0, 5) == 0);
  CHECK(r->label(4) == "4");
  CHECK(r->spec() == "Z6");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      CHECK(r->add(a, b) == (a + b) % 6);
      CHECK(r->mul(a, b) == (a * b) % 6);
    }
}

TEST_CASE("two-coordinate ring works componentwise") {
  Ring r = make_ring({2, 3});
  CHECK(r->size == 6);
  CHECK(r->coords(5) == std::vector<int>{1, 2});
  CHECK(r->index({1, 1}) == 4);
  CHECK(r->one == 4);
  CHECK(r->add(5, 5) == 1);  // (1,2)+(1,2) = (0,1)
  CHECK(r->mul(5, 5) == 4);  // (1,2)*(1,2) = (1,1)
  CHECK(r->label(5) == "(1,2)");
  CHECK(r->spec() == "Z2xZ3");
}

TEST_CASE("chinese remainder map is a ring isomorphism for coprime moduli") {
  Ring prod = make_ring({2, 3});
  Ring cyc = make_ring({6});
  // x mod 6 -> (x mod 2, x mod 3)
  std::vector<int> phi(6);
  for (int x = 0; x < 6; ++x) phi[x] = prod->index({x % 2, x % 3});
  std::vector<char> hit(6, 0);
  for (int x = 0; x < 6; ++x) hit[phi[x]] = 1;
  CHECK(std::count(hit.begin(), hit.end(), 1) == 6);
  CHECK(phi[cyc->one] == prod->one);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      CHECK(phi[cyc->add(a, b)] == prod->add(phi[a], phi[b]));
      CHECK(phi[cyc->mul(a, b)] == prod->mul(phi[a], phi[b]));
    }
}

TEST_CASE("no bijection identifies Z4 with Z2xZ2") {
  Ring cyc = make_ring({4});
  Ring prod = make_ring({2, 2});
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool ok = true;
    for (int a = 0; a < 4 && ok; ++a)
      for (int b = 0; b < 4 && ok; ++b)
        ok = perm[cyc->add(a, b)] == prod->add(perm[a], perm[b]) &&
             perm[cyc->mul(a, b)] == prod->mul(perm[a], perm[b]);
    if (ok) found = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_FALSE(found);
}

TEST_CASE("ideal generation produces closures with minimal generators") {
  Ring z6 = make_ring({6});
  Ideal i = ideal_generated(z6, {2});
  CHECK(i.elements == std::vector<int>{0, 2, 4});
  CHECK(i.generators == std::vector<int>{2});

  Ideal unit = ideal_generated(z6, {5});
  CHECK(static_cast<int>(unit.elements.size()) == 6);
  CHECK_FALSE(unit.proper());

  Ideal zero = ideal_generated(z6, {});
  CHECK(zero.elements == std::vector<int>{0});
  CHECK(zero.is_zero());

  Ideal rebuilt = ideal_generated(z6, {0, 2, 4});
  CHECK(rebuilt.generators == std::vector<int>{2});
  CHECK(rebuilt == i);

  CHECK_THROWS_AS(ideal_generated(z6, {7}), error);
}

TEST_CASE("ideal enumeration counts known lattices") {
  CHECK(enumerate_ideals(make_ring({6})).size() == 4);
  CHECK(enumerate_ideals(make_ring({8})).size() == 4);
  CHECK(enumerate_ideals(make_ring({2, 2})).size() == 4);
  CHECK(enumerate_ideals(make_ring({12})).size() == 6);
  // sorted by (size, elements); Z6: (0), (3), (2), R
  auto ideals = enumerate_ideals(make_ring({6}));
  CHECK(ideals[0].elements == std::vector<int>{0});
  CHECK(ideals[1].elements == std::vector<int>{0, 3});
  CHECK(ideals[2].elements == std::vector<int>{0, 2, 4});
  CHECK(static_cast<int>(ideals[3].elements.size()) == 6);
}

TEST_CASE("ideal product, intersection and sum on cyclic rings") {
  Ring z6 = make_ring({6});
  Ideal two = ideal_generated(z6, {2});
  Ideal three = ideal_generated(z6, {3});
  CHECK(ideal_combine(two, three, IdealOp::product).is_zero());
  CHECK(ideal_combine(two, three, IdealOp::intersection).is_zero());
  CHECK_FALSE(ideal_combine(two, three, IdealOp::sum).proper());

  Ring z36 = make_ring({36});
  Ideal four = ideal_generated(z36, {4});
  Ideal nine = ideal_generated(z36, {9});
  CHECK(four.elements == multiples(4, 36));
  CHECK(nine.elements == multiples(9, 36));
  CHECK(ideal_combine(four, nine, IdealOp::intersection).is_zero());
  CHECK(ideal_combine(four, nine, IdealOp::product).is_zero());
  CHECK_FALSE(ideal_combine(four, nine, IdealOp::sum).proper());

  Ring z8 = make_ring({8});
  Ideal t8 = ideal_generated(z8, {2});
  Ideal sq = ideal_combine(t8, t8, IdealOp::product);
  CHECK(sq.elements == std::vector<int>{0, 4});
}

TEST_CASE("prime ideal detection on small rings") {
  Ring z6 = make_ring({6});
  CHECK(is_prime_ideal(ideal_generated(z6, {2})));
  CHECK(is_prime_ideal(ideal_generated(z6, {3})));
  CHECK_FALSE(is_prime_ideal(ideal_generated(z6, {})));
  CHECK_FALSE(is_prime_ideal(ideal_generated(z6, {1})));  // improper: false

  Ring z8 = make_ring({8});
  CHECK(is_prime_ideal(ideal_generated(z8, {2})));
  CHECK_FALSE(is_prime_ideal(ideal_generated(z8, {4})));
  CHECK_FALSE(is_prime_ideal(ideal_generated(z8, {})));

  Ring p2 = make_ring({2, 3});
  CHECK(is_prime_ideal(ideal_generated(p2, {p2->index({1, 0})})));
  CHECK(is_prime_ideal(ideal_generated(p2, {p2->index({0, 1})})));
  CHECK_FALSE(is_prime_ideal(ideal_generated(p2, {})));
}

TEST_CASE("n-absorbing ideals, elementwise flavor") {
  Ring z6 = make_ring({6});
  Ideal z6zero = ideal_generated(z6, {});
  CHECK(is_n_absorbing_ideal(z6zero, 2));
  CHECK_FALSE(is_n_absorbing_ideal(z6zero, 1));  // arity 1 = prime

  Ring z8 = make_ring({8});
  Ideal z8zero = ideal_generated(z8, {});
  CHECK_FALSE(is_n_absorbing_ideal(z8zero, 2));  // 2*2*2 = 0, 4 not in (0)
  CHECK(is_n_absorbing_ideal(z8zero, 3));
  CHECK(is_n_absorbing_ideal(ideal_generated(z8, {4}), 2));

  Ring z30 = make_ring({30});
  Ideal z30zero = ideal_generated(z30, {});
  CHECK_FALSE(is_n_absorbing_ideal(z30zero, 2));
  CHECK(is_n_absorbing_ideal(z30zero, 3));

  CHECK(is_n_absorbing_ideal(ideal_generated(z6, {2}), 1));  // prime

  CHECK_THROWS_AS(is_n_absorbing_ideal(ideal_generated(z6, {1}), 2), error);
  CHECK_THROWS_AS(is_n_absorbing_ideal(z6zero, 0), error);
}

TEST_CASE("elementwise and strongly 2-absorbing agree on small rings") {
  for (const auto& moduli :
       std::vector<std::vector<int>>{{6}, {8}, {12}, {16}, {30}, {2, 2}, {2, 4}, {3, 3}}) {
    Ring r = make_ring(moduli);
    for (const Ideal& i : enumerate_ideals(r)) {
      if (!i.proper()) continue;
      CHECK(is_n_absorbing_ideal(i, 2, false) == is_n_absorbing_ideal(i, 2, true));
    }
  }
}

TEST_CASE("radicals and minimal primes on cyclic rings") {
  Ring z8 = make_ring({8});
  CHECK(radical(ideal_generated(z8, {4})).elements == multiples(2, 8));
  CHECK(radical(ideal_generated(z8, {})).elements == multiples(2, 8));

  Ring z6 = make_ring({6});
  CHECK(radical(ideal_generated(z6, {})).is_zero());

  Ring z36 = make_ring({36});
  CHECK(radical(ideal_generated(z36, {4})).elements == multiples(2, 36));
  CHECK(radical(ideal_generated(z36, {6})).elements == multiples(6, 36));

  auto mins6 = minimal_primes_over(ideal_generated(z6, {}));
  REQUIRE(mins6.size() == 2);
  CHECK(mins6[0].elements == std::vector<int>{0, 3});
  CHECK(mins6[1].elements == std::vector<int>{0, 2, 4});

  auto mins8 = minimal_primes_over(ideal_generated(z8, {}));
  REQUIRE(mins8.size() == 1);
  CHECK(mins8[0].elements == multiples(2, 8));

  Ring p2 = make_ring({2, 3});
  auto minsp = minimal_primes_over(ideal_generated(p2, {}));
  CHECK(minsp.size() == 2);

  // radical equals the intersection of minimal primes
  for (const auto& moduli : std::vector<std::vector<int>>{{6}, {8}, {12}, {2, 4}}) {
    Ring r = make_ring(moduli);
    for (const Ideal& i : enumerate_ideals(r)) {
      if (!i.proper()) continue;
      Ideal rad = radical(i);
      auto mins = minimal_primes_over(i);
      REQUIRE(!mins.empty());
      Ideal meet = mins[0];
      for (size_t k = 1; k < mins.size(); ++k)
        meet = ideal_combine(meet, mins[k], IdealOp::intersection);
      CHECK(meet == rad);
    }
  }
}

TEST_CASE("error names use kebab-case identifiers") {
  CHECK(std::string(errc_name(errc::invalid_ring)) == "invalid-ring");
  CHECK(std::string(errc_name(errc::check_failed)) == "check-failed");
  CHECK(std::string(errc_name(errc::size_limit)) == "size-limit");
  CHECK(std::string(errc_name(errc::improper_input)) == "improper-input");
  CHECK(std::string(errc_name(errc::unknown_id)) == "unknown-id");
}
