#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "modlat/error.hpp"
#include "modlat/harness.hpp"
#include "modlat/json_io.hpp"

using namespace modlat;

namespace {

InstanceFamily tiny_family() {
  InstanceFamily f;
  f.max_modulus = 4;
  f.max_pair_modulus = 2;
  f.include_triple = false;
  f.max_module_size = 4;
  f.max_components = 2;
  return f;
}

InstanceFamily small_family() {
  InstanceFamily f;
  f.max_modulus = 6;
  f.max_pair_modulus = 1;
  f.include_triple = false;
  f.max_module_size = 6;
  f.max_components = 2;
  return f;
}

}  // namespace

TEST_CASE("instance generation is bounded, complete and deterministic") {
  auto instances = generate_instances(tiny_family());
  CHECK(instances.size() == 11);

  // rings appear in canonical order: Z2, Z3, Z4, then Z2xZ2
  CHECK(ring_spec(instances.front().ring) == "Z2");
  CHECK(ring_spec(instances.back().ring) == "Z2xZ2");

  std::vector<std::string> labels;
  for (const auto& i : instances) {
    CHECK(i.module->size <= 4);
    CHECK(i.module->size >= 2);
    labels.push_back(instance_label(i));
  }
  std::set<std::string> unique(labels.begin(), labels.end());
  CHECK(unique.size() == labels.size());

  auto again = generate_instances(tiny_family());
  REQUIRE(again.size() == instances.size());
  for (size_t k = 0; k < again.size(); ++k)
    CHECK(instance_label(again[k]) == labels[k]);

  // modules over Z4 in order: Z2, then the two of size 4 with the
  // two-component presentation first
  auto mods = modules_over(make_ring({4}), tiny_family());
  REQUIRE(mods.size() == 3);
  CHECK(mods[0]->size == 2);
  CHECK(mods[1]->components.size() == 2);
  CHECK(mods[2]->components.size() == 1);
}

TEST_CASE("default family covers the canonical example instances") {
  InstanceFamily f;  // defaults
  auto instances = generate_instances(f);
  std::set<std::string> labels;
  for (const auto& i : instances) labels.insert(instance_label(i));
  CHECK(labels.count("ring=Z8 module=Z8"));
  CHECK(labels.count("ring=Z8 module=Z2(+)Z4"));
  CHECK(labels.count("ring=Z2xZ3 module=Z2@0(+)Z3@1"));
  CHECK(labels.count("ring=Z30 module=Z2(+)Z3(+)Z5"));
}

TEST_CASE("suite registry") {
  auto ids = suite_ids();
  REQUIRE(ids.size() == 14);
  CHECK(ids.front() == "T-MAIN");
  std::set<std::string> s(ids.begin(), ids.end());
  for (const char* id :
       {"T-MAIN", "T-MAIN-COR", "T-HOM", "T-MEET", "T-SEP", "T-EX1", "T-MIN", "T-RAD",
        "T-MULT", "T-MAIN2", "T-MCLOSED", "T-FLAT", "T-LOC", "T-PROD"})
    CHECK(s.count(id));

  CHECK_THROWS_AS(run_suite("T-NOPE", tiny_family()), error);
  try {
    run_suite("T-NOPE", tiny_family());
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_id);
  }
}

TEST_CASE("core suites pass on a small family") {
  for (const char* id : {"T-MAIN", "T-MEET", "T-MIN", "T-RAD", "T-SEP", "T-MAIN-COR"}) {
    SuiteReport r = run_suite(id, small_family());
    INFO(id);
    CHECK(r.passed());
    CHECK(r.instances > 0);
    CHECK(r.checks > 0);
  }
}

TEST_CASE("suite reports serialize deterministically") {
  SuiteReport a = run_suite("T-MEET", tiny_family());
  SuiteReport b = run_suite("T-MEET", tiny_family());
  CHECK(dump_report(to_json(a)) == dump_report(to_json(b)));
  nlohmann::json j = to_json(a);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("suite") == "T-MEET");
  CHECK(!j.contains("wall_seconds"));
}

TEST_CASE("separating search finds the first honest witness") {
  SearchOutcome s = search_separating("c2a", "classical-prime", small_family());
  CHECK(s.found);
  CHECK(s.replayed);
  REQUIRE(s.instance.has_value());
  CHECK(ring_spec(s.instance->ring) == "Z4");
  CHECK(s.instance->module->size == 4);
  REQUIRE(s.submodule.has_value());
  CHECK(s.submodule->is_zero());
  REQUIRE(s.right_witness.has_value());
  CHECK(s.right_witness->scalars == std::vector<int>{2, 2});

  nlohmann::json j = to_json(s);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("found") == true);
}

TEST_CASE("separating search certifies exhaustion when none exists") {
  SearchOutcome s = search_separating("prime", "c2a", tiny_family());
  CHECK_FALSE(s.found);
  CHECK(s.instances_enumerated.size() == 11);
  CHECK(s.submodules_checked > 0);

  SearchOutcome again = search_separating("prime", "c2a", tiny_family());
  CHECK(dump_report(to_json(s)) == dump_report(to_json(again)));

  CHECK_THROWS_AS(search_separating("c2a", "bogus", tiny_family()), error);
}

TEST_CASE("ring specs parse and reject garbage") {
  CHECK(parse_ring_spec("Z6")->moduli == std::vector<int>{6});
  CHECK(parse_ring_spec("Z2xZ3")->moduli == std::vector<int>{2, 3});
  CHECK(parse_ring_spec("Z2xZ3xZ5")->moduli == std::vector<int>{2, 3, 5});
  CHECK_THROWS_AS(parse_ring_spec(""), error);
  CHECK_THROWS_AS(parse_ring_spec("Z"), error);
  CHECK_THROWS_AS(parse_ring_spec("Z1"), error);
  CHECK_THROWS_AS(parse_ring_spec("6"), error);
  CHECK_THROWS_AS(parse_ring_spec("Z6x"), error);
  CHECK_THROWS_AS(parse_ring_spec("Z2xZ0"), error);
}

TEST_CASE("module specs parse from csv and json") {
  Ring z8 = parse_ring_spec("Z8");
  Module a = parse_module_spec(z8, "8");
  CHECK(a->size == 8);
  REQUIRE(a->components.size() == 1);
  CHECK(a->components[0].order == 8);

  Ring z6 = parse_ring_spec("Z6");
  Module b = parse_module_spec(z6, "2,3");
  CHECK(b->size == 6);
  CHECK(b->components.size() == 2);

  Module c = parse_module_spec(
      z8, R"({"ring":{"moduli":[8]},"components":[{"coord":0,"order":4}]})");
  CHECK(c->size == 4);

  Module d = parse_module_spec(z8, R"({"components":[{"coord":0,"order":2}]})");
  CHECK(d->size == 2);

  Module e = parse_module_spec(R"({"ring":{"moduli":[6]},"components":[]})");
  CHECK(e->size == 1);

  CHECK_THROWS_AS(parse_module_spec(z8, "x"), error);
  CHECK_THROWS_AS(parse_module_spec(z8, ""), error);
  CHECK_THROWS_AS(parse_module_spec(z8, "3"), error);  // 3 does not divide 8
  CHECK_THROWS_AS(parse_module_spec(
                      z8, R"({"ring":{"moduli":[6]},"components":[]})"),
                  error);  // contradicts the supplied ring
  CHECK_THROWS_AS(parse_module_spec(R"({"components":[]})"), error);  // no ring
}

TEST_CASE("classification serializes with schema and witnesses") {
  Ring z8 = parse_ring_spec("Z8");
  Module m = parse_module_spec(z8, "8");
  Classification c = classify_all(m);
  nlohmann::json j = to_json(c);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("records").size() == 3);
  CHECK(j.at("lattice").size() == 4);
  // the zero submodule record carries a replayable violating tuple
  const auto& rec0 = j.at("records").at(0);
  CHECK(rec0.at("classical_2_absorbing") == false);
  CHECK(rec0.at("witnesses").contains("classical_2_absorbing"));
}
