#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modlat/ring.hpp"

namespace modlat {

// One cyclic building block of a module: the subgroup of order `order`
// inside Z_{moduli[coord]}, acted on through ring coordinate `coord`.
struct Component {
  int coord;
  int order;
};

struct ModuleData {
  Ring ring;
  std::vector<Component> components;  // empty for derived presentations
  int size = 0;
  std::vector<uint16_t> add_table;          // size x size
  std::vector<uint16_t> act_table;          // ring->size x size
  std::vector<std::string> element_labels;  // size
  std::vector<int> gens;                    // canonical generating set
  std::string desc;

  int add(int a, int b) const { return add_table[static_cast<size_t>(a) * size + b]; }
  int act(int r, int m) const { return act_table[static_cast<size_t>(r) * size + m]; }
  int neg(int a) const;
  const std::string& label(int m) const { return element_labels[m]; }
};

using Module = std::shared_ptr<const ModuleData>;

// M = (+) Z_{order_i}, the i-th summand acted on through ring coordinate
// components[i].coord (so order_i must divide moduli[coord]).
Module make_module(const Ring& ring, const std::vector<Component>& components);

bool same_module(const Module& a, const Module& b);

struct Submodule {
  Module module;
  std::vector<int> elements;    // sorted, always contains 0
  std::vector<int> generators;  // greedy-minimal witness

  bool contains(int m) const;
  bool proper() const { return elements.size() < static_cast<size_t>(module->size); }
  bool is_zero() const { return elements.size() == 1; }
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return same_module(a.module, b.module) && a.elements == b.elements;
  }
};

// Mixed-radix element index of a component-coordinate tuple, and its
// inverse.  Only for modules presented by components (not derived carriers).
int element_of(const Module& m, const std::vector<int>& comps);
std::vector<int> component_coords(const Module& m, int elem);

Submodule submodule_generated(const Module& m, const std::vector<int>& gens);

// All submodules, sorted by (size, elements); cross-checked for closure
// under sum and intersection.
std::vector<Submodule> enumerate_submodules(const Module& m,
                                            int max_module_size = 256);

Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);

// (N :_R X) = { r in R : r*x in N for all x in X }.  X must be nonempty.
Ideal colon_ideal(const Submodule& n, const std::vector<int>& elems);
// (N :_R M)
Ideal colon_ideal_module(const Submodule& n);
// (N :_M a1...ak) = { m in M : (a1*...*ak)*m in N }, the colon by the
// product of the scalars.  The scalar list must be nonempty.
Submodule colon_submodule(const Submodule& n, const std::vector<int>& scalars);

// Z_R(M/N): ring elements acting as zero-divisors on the quotient, i.e.
// r*m in N for some m not in N.  Requires N proper.
std::vector<int> zero_divisors_on_quotient(const Submodule& n);

struct ModuleHom {
  Module source;
  Module target;
  std::vector<int> map;  // source->size entries

  int operator()(int m) const { return map[m]; }
  Submodule kernel() const;
  Submodule image() const;
  bool surjective() const;
  Submodule image_of(const Submodule& n) const;
  Submodule preimage_of(const Submodule& n) const;
};

// Extends gen_images (one image per m->gens entry) additively; throws
// relation_violation if no well-defined R-hom exists.
ModuleHom hom(const Module& src, const Module& dst,
              const std::vector<int>& gen_images);
std::optional<ModuleHom> try_hom(const Module& src, const Module& dst,
                                 const std::vector<int>& gen_images);

// M/L with least-representative element encoding; second member is the
// canonical projection.
std::pair<Module, ModuleHom> quotient_module(const Module& m, const Submodule& l);

// A module presented as a product of factors, together with the translation
// tables between combined elements and factor tuples.  `module` is the
// combined carrier: a freshly built product for direct_product, the original
// module for coordinate_split.
struct DirectProduct {
  Ring ring;  // product of the factor rings
  Module module;
  std::vector<Ring> part_rings;
  std::vector<Module> parts;
  std::vector<std::vector<int>> ring_coords;  // ring coordinates each factor owns
  std::vector<std::vector<int>> proj_table;   // [factor][module elem] -> factor elem
  std::vector<int> embed_table;  // mixed-radix tuple over factor sizes -> module elem

  int embed(const std::vector<int>& part_elems) const;
  std::vector<int> project(int m) const;
};

// Requires at least two factors, all over the same ring list order.
DirectProduct direct_product(const std::vector<std::pair<Ring, Module>>& parts);

// Splits a module over a product ring along a ring-coordinate partition:
// positions[i] lists the coordinates owned by factor i (jointly a partition
// of all ring coordinates).  Factor i is the idempotent slice e_i * M.
DirectProduct coordinate_split(const Module& m,
                               const std::vector<std::vector<int>>& positions);

// Decomposition of a submodule of a product into per-factor submodules.
// `split` reports whether n equals the product of its factor projections.
struct SubmoduleSplit {
  bool split = false;
  std::vector<Submodule> factors;  // projection of n into each factor
};
SubmoduleSplit split_submodule(const DirectProduct& dp, const Submodule& n);

struct Localization {
  // Ring S^-1 R presented as a product of cyclic rings; empty iff 0 lies in
  // the saturation of S (everything collapses).
  std::optional<Ring> localized_ring;
  Ideal ring_torsion;  // kernel of R -> S^-1 R
  Submodule torsion;   // T = { m : s*m = 0 for some s in S }
  Module module;       // S^-1 M = M / T (finite case)
  ModuleHom map;       // M -> S^-1 M
};

// S must contain 1 and be multiplicatively closed.
Localization localize(const Module& m, const std::vector<int>& s);

// M (x)_R R^k together with N^k inside it; k = 1 returns the inputs.
std::pair<Module, Submodule> tensor_free(const Module& m, const Submodule& n,
                                         int k);

// Every submodule N satisfies N = (N : M) M.
bool is_multiplication_module(const Module& m, int max_module_size = 256);

// N*K = (N:M)(K:M)M; requires a multiplication module.
Submodule submodule_product(const Submodule& a, const Submodule& b);

}  // namespace modlat
