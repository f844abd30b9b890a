#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "modlat/classify.hpp"
#include "modlat/module.hpp"
#include "modlat/ring.hpp"

namespace modlat {

// Bounds of the exhaustive instance universe.
struct InstanceFamily {
  int max_modulus = 16;       // single-coordinate rings Z2..Zmax
  int max_pair_modulus = 4;   // two-coordinate rings ZaxZb, 2 <= a <= b <= max
  bool include_triple = true; // additionally Z30 and Z2xZ3xZ5
  int max_module_size = 36;   // module carrier bound
  int max_components = 3;     // cyclic components per module
};

struct Instance {
  Ring ring;
  Module module;
};

// Every (ring, module) pair within the bounds, deterministically ordered:
// rings by (coordinate count, moduli), modules by (size, component list).
std::vector<Instance> generate_instances(const InstanceFamily& f);
std::vector<Ring> family_rings(const InstanceFamily& f);
std::vector<Module> modules_over(const Ring& r, const InstanceFamily& f);

std::string ring_spec(const Ring& r);           // "Z8", "Z2xZ3"
std::string instance_label(const Instance& i);  // "ring=Z8 module=Z4(+)Z2"

// A failed assertion, with enough data to replay the counterexample.
struct CheckFailure {
  std::string instance;
  std::string check;
  std::string detail;
  nlohmann::json data;
};

// An exploratory observation (recorded, never a failure).
struct Finding {
  std::string instance;
  std::string kind;
  nlohmann::json data;
};

struct SuiteReport {
  std::string suite;
  std::string tier;  // "A", "B", or "A+B"
  InstanceFamily family;
  int instances = 0;
  long long checks = 0;
  std::vector<CheckFailure> failures;
  std::vector<Finding> findings;
  double wall_seconds = 0;  // console diagnostics only; never serialized
  bool passed() const { return failures.empty(); }
};

// Registered suite ids, in canonical execution order.
std::vector<std::string> suite_ids();

// Runs one suite over the family (per-suite caps may tighten the bounds;
// the report records the bounds actually used).  Unknown id: unknown_id.
SuiteReport run_suite(const std::string& id, const InstanceFamily& f);
std::vector<SuiteReport> run_all_suites(const InstanceFamily& f);

// Predicate ids usable in separation searches.
std::vector<std::string> separation_predicates();  // prime, classical-prime, 2abs, 3abs, 4abs, c2a

struct SearchOutcome {
  std::string left;   // predicate expected true
  std::string right;  // predicate expected false
  InstanceFamily family;
  bool found = false;
  long long submodules_checked = 0;
  // On success: the first witness in deterministic enumeration order.
  std::optional<Instance> instance;
  std::optional<Submodule> submodule;
  std::optional<Witness> right_witness;  // violating tuple for `right`
  bool replayed = false;                 // witness re-verified independently
  // On exhaustion: every instance enumerated (the certificate).
  std::vector<std::string> instances_enumerated;
};

// First (instance, submodule) with left true and right false, scanning the
// family in deterministic order; exhaustion yields a certificate instead.
SearchOutcome search_separating(const std::string& left, const std::string& right,
                                const InstanceFamily& f);

}  // namespace modlat
