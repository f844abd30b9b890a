#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlat/module.hpp"
#include "modlat/ring.hpp"

namespace modlat {

// A violating tuple for a submodule predicate: scalar ring elements plus one
// module element.  Replayable through witness_violates.
struct Witness {
  std::vector<int> scalars;
  int element = 0;
};

enum class PredicateKind {
  prime,
  classical_prime,
  two_absorbing,
  n_absorbing,  // uses the arity recorded alongside
  classical_2_absorbing,
};

const char* predicate_name(PredicateKind k);

// All predicates below require a proper submodule and raise improper_input
// otherwise.  When the result is false and `w` is non-null, a violating
// tuple is stored.

// a*m in N, m not in N  =>  a in (N : M).
bool is_prime_submodule(const Submodule& n, Witness* w = nullptr);

// a*b*m in N  =>  a*m in N or b*m in N.
bool is_classical_prime(const Submodule& n, Witness* w = nullptr);

// a*b*m in N  =>  a*m in N or b*m in N or a*b in (N : M).
bool is_2_absorbing_submodule(const Submodule& n, Witness* w = nullptr);

// a1*...*ak*m in N  =>  the product of all k scalars lies in (N : M) or some
// k-1 of them keep m in N.
bool is_n_absorbing_submodule(const Submodule& n, int k, Witness* w = nullptr);

// a*b*c*m in N  =>  a*b*m in N or a*c*m in N or b*c*m in N.
// Evaluated by two textually independent routes (the quadruple scalar loop
// and the colon-ideal route); disagreement raises check_failed.
bool is_classical_2_absorbing(const Submodule& n, Witness* w = nullptr);

// The two routes individually (each usable as an oracle for the other).
bool classical_2_absorbing_definitional(const Submodule& n, Witness* w = nullptr);
// True iff every colon ideal (N : m) with m outside N is a 2-absorbing ideal.
bool classical_2_absorbing_by_colons(const Submodule& n, Witness* w = nullptr);

// Re-evaluates the defining implication on one tuple; true iff the tuple
// violates the predicate (arity = w.scalars.size() for n_absorbing).
bool witness_violates(PredicateKind kind, const Submodule& n, const Witness& w);

struct ClassifyOptions {
  int nabs_max = 4;          // evaluate n-absorbing for k = 2..nabs_max
  bool colon_profile = true; // record (N : m) for every m outside N
  int max_module_size = 256;
};

struct ClassificationRecord {
  int lattice_index = 0;  // position in Classification::lattice
  bool prime = false;
  bool classical_prime = false;
  bool two_absorbing = false;
  bool classical_2_absorbing = false;
  std::map<int, bool> n_absorbing;  // arity -> flag
  std::optional<Witness> prime_witness;
  std::optional<Witness> classical_prime_witness;
  std::optional<Witness> two_absorbing_witness;
  std::optional<Witness> classical_2_absorbing_witness;
  std::map<int, Witness> n_absorbing_witnesses;  // arity -> tuple, false flags only
  // (m, (N : m)) for every module element m outside N, in element order.
  std::vector<std::pair<int, Ideal>> colon_profile;
};

struct Classification {
  Module module;
  std::vector<Submodule> lattice;            // all submodules, sorted
  std::vector<ClassificationRecord> records; // one per proper submodule
  std::vector<std::pair<int, int>> hasse;    // cover edges (lower, upper)
};

// Classifies every proper submodule; cross-checks that the classical
// 2-absorbing flag matches "every colon-profile entry is 2-absorbing".
Classification classify_all(const Module& m, const ClassifyOptions& opts = {});

// Minimal elements of the classical 2-absorbing submodules; empty result is
// legitimate (flagged by callers, not an error).  Every classical
// 2-absorbing submodule is checked to contain a minimal one.
std::vector<Submodule> minimal_classical_2_absorbing(const Module& m,
                                                     int max_module_size = 256);

// Truth values of the ten element/ideal conditions equivalent to classical
// 2-absorption.  conditions[i] is condition (i+1).
struct ConditionVector {
  std::array<bool, 10> conditions{};
  bool all_true() const;
  bool all_equal() const;
};

// Element-quantified family (quantifiers run over scalars, ideals and module
// elements).  Each condition is evaluated by its own loop.
ConditionVector evaluate_main_conditions(const Submodule& n);

// Submodule-quantified family (module elements replaced by submodules,
// condition (2) asking for equality with one of the two colons).
ConditionVector evaluate_main2_conditions(const Submodule& n,
                                          int max_module_size = 256);

// (N : abcm) as a set equals the union of (N : abm), (N : acm), (N : bcm)
// for all scalars and elements (union_equal), and additionally equals one of
// the three (one_of).  Violations are reported, never silently dropped.
struct ColonUnionOutcome {
  bool union_equal = true;
  bool one_of = true;
  std::optional<Witness> witness;  // first violating (a, b, c, m)
};
ColonUnionOutcome colon_union_check(const Submodule& n);

// S is m-closed when for all ideals I, J, Q and submodules K, L:
// (K + IJL), (K + IQL), (K + JQL) all meeting S forces (K + IJQL) to meet S.
// The quantifier is evaluated literally.  Elements of s must be nonzero.
bool is_c2a_m_closed(const Module& m, const std::vector<int>& s,
                     long long max_cost = 200'000'000);

// Maximal submodules disjoint from s (s nonempty, m-closed — checked).
// Every returned submodule is verified classical 2-absorbing.
std::vector<Submodule> maximal_disjoint_submodules(const Module& m,
                                                   const std::vector<int>& s,
                                                   int max_module_size = 256);

}  // namespace modlat
