#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modlat/error.hpp"

namespace modlat {

struct RingData;
using Ring = std::shared_ptr<const RingData>;

// Finite commutative ring with identity, presented as a product of residue
// class rings Z_{m1} x ... x Z_{mk} (every modulus >= 2, so 1 != 0).
// Elements are indexed 0..size-1 in lexicographic order of their residue
// tuples, coordinate 0 most significant; index 0 is the zero element.
// Addition and multiplication tables are built eagerly at construction.
struct RingData {
  std::vector<int> moduli;
  int size = 0;
  int one = 0;  // index of (1,...,1)
  std::vector<uint16_t> add_table;
  std::vector<uint16_t> mul_table;

  int add(int a, int b) const {
    return add_table[static_cast<size_t>(a) * size + b];
  }
  int mul(int a, int b) const {
    return mul_table[static_cast<size_t>(a) * size + b];
  }
  std::vector<int> coords(int e) const;
  int index(const std::vector<int>& coords) const;
  std::string label(int e) const;  // "3" or "(1,0)"
  std::string spec() const;        // "Z6" or "Z2xZ3"
};

// Builds the ring, validating moduli (nonempty, each >= 2) and the table
// size limit.  The resulting tables are checked for ring axioms on small
// carriers at construction.
Ring make_ring(const std::vector<int>& moduli);

// True when both rings have identical presentations (same moduli list).
bool same_ring(const Ring& a, const Ring& b);

// An ideal, stored as its full sorted element set plus a generator witness
// whose generated ideal reproduces exactly the element set.
struct Ideal {
  Ring ring;
  std::vector<int> elements;    // sorted ascending, always contains 0
  std::vector<int> generators;  // minimal greedy witness, sorted

  bool contains(int e) const;
  bool proper() const { return static_cast<int>(elements.size()) < ring->size; }
  bool is_zero() const { return elements.size() == 1; }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring->moduli == b.ring->moduli && a.elements == b.elements;
  }
};

enum class IdealOp { product, intersection, sum };

// Smallest ideal containing `gens`; empty list yields the zero ideal.
Ideal ideal_generated(const Ring& ring, const std::vector<int>& gens);

// The complete duplicate-free ideal list, sorted by (size, elements).
// Computed by closing the cyclic ideals under pairwise sums; completeness is
// cross-checked (closure under sum and intersection, all cyclics present).
std::vector<Ideal> enumerate_ideals(const Ring& ring);

Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealOp op);

// Proper + (ab in I implies a in I or b in I).  Improper input returns false.
bool is_prime_ideal(const Ideal& ideal);

// Elementwise: every (n+1)-tuple with product in I has an n-subtuple with
// product in I.  Strong variant quantifies over ideal tuples I1...I(n+1)
// with product contained in I.  Improper input is an error.
bool is_n_absorbing_ideal(const Ideal& ideal, int n, bool strongly = false);

// {r : r^k in I for some k >= 1}.  Improper input is an error.
Ideal radical(const Ideal& ideal);

// Prime ideals containing I that are minimal with that property, canonical
// order.  Improper input is an error.
std::vector<Ideal> minimal_primes_over(const Ideal& ideal);

// Generic helpers shared across the library.
bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b);
std::vector<char> element_mask(const std::vector<int>& elems, int universe);

}  // namespace modlat
