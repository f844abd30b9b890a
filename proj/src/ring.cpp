#include "modlat/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace modlat {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_ring: return "invalid-ring";
    case errc::invalid_module: return "invalid-module";
    case errc::ring_mismatch: return "ring-mismatch";
    case errc::module_mismatch: return "module-mismatch";
    case errc::improper_input: return "improper-input";
    case errc::invalid_input: return "invalid-input";
    case errc::invalid_multiplicative_set: return "invalid-multiplicative-set";
    case errc::relation_violation: return "relation-violation";
    case errc::unsupported_structure: return "unsupported-structure";
    case errc::size_limit: return "size-limit";
    case errc::precondition_failed: return "precondition-failed";
    case errc::check_failed: return "check-failed";
    case errc::unknown_id: return "unknown-id";
  }
  return "error";
}

namespace {

constexpr int kMaxCarrier = 4096;  // table construction guard

}  // namespace

std::vector<int> RingData::coords(int e) const {
  std::vector<int> c(moduli.size());
  for (size_t i = moduli.size(); i-- > 0;) {
    c[i] = e % moduli[i];
    e /= moduli[i];
  }
  return c;
}

int RingData::index(const std::vector<int>& c) const {
  int e = 0;
  for (size_t i = 0; i < moduli.size(); ++i) e = e * moduli[i] + c[i] % moduli[i];
  return e;
}

std::string RingData::label(int e) const {
  std::vector<int> c = coords(e);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::string RingData::spec() const {
  std::string s;
  for (size_t i = 0; i < moduli.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(moduli[i]);
  }
  return s;
}

bool same_ring(const Ring& a, const Ring& b) {
  return a == b || a->moduli == b->moduli;
}

Ring make_ring(const std::vector<int>& moduli) {
  if (moduli.empty()) fail(errc::invalid_ring, "empty modulus list");
  long long size = 1;
  for (int m : moduli) {
    if (m < 2) fail(errc::invalid_ring, "modulus " + std::to_string(m) + " < 2");
    size *= m;
    if (size > kMaxCarrier)
      fail(errc::size_limit, "ring carrier exceeds " + std::to_string(kMaxCarrier));
  }
  auto data = std::make_shared<RingData>();
  data->moduli = moduli;
  data->size = static_cast<int>(size);
  const int n = data->size;

  // element -> coordinate tuples, then tables coordinatewise
  std::vector<std::vector<int>> cs(n);
  for (int e = 0; e < n; ++e) cs[e] = data->coords(e);
  data->one = data->index(std::vector<int>(moduli.size(), 1));

  data->add_table.resize(static_cast<size_t>(n) * n);
  data->mul_table.resize(static_cast<size_t>(n) * n);
  std::vector<int> tmp(moduli.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (size_t i = 0; i < moduli.size(); ++i)
        tmp[i] = (cs[a][i] + cs[b][i]) % moduli[i];
      data->add_table[static_cast<size_t>(a) * n + b] =
          static_cast<uint16_t>(data->index(tmp));
      for (size_t i = 0; i < moduli.size(); ++i)
        tmp[i] = (cs[a][i] * cs[b][i]) % moduli[i];
      data->mul_table[static_cast<size_t>(a) * n + b] =
          static_cast<uint16_t>(data->index(tmp));
    }
  }

  // Exhaustive axiom spot-check on small carriers.
  if (n <= 32) {
    for (int a = 0; a < n; ++a) {
      if (data->add(a, 0) != a || data->mul(a, data->one) != a ||
          data->mul(a, 0) != 0)
        fail(errc::check_failed, "ring unit/zero axiom");
      for (int b = 0; b < n; ++b) {
        if (data->add(a, b) != data->add(b, a) || data->mul(a, b) != data->mul(b, a))
          fail(errc::check_failed, "ring commutativity");
        for (int c = 0; c < n; ++c) {
          if (data->mul(a, data->add(b, c)) !=
              data->add(data->mul(a, b), data->mul(a, c)))
            fail(errc::check_failed, "ring distributivity");
          if (data->mul(a, data->mul(b, c)) != data->mul(data->mul(a, b), c))
            fail(errc::check_failed, "ring associativity");
        }
      }
    }
  }
  return data;
}

bool Ideal::contains(int e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<char> element_mask(const std::vector<int>& elems, int universe) {
  std::vector<char> mask(universe, 0);
  for (int e : elems) mask[e] = 1;
  return mask;
}

namespace {

// Additive closure of a seed set already closed under ring multiplication
// (i.e. r*x stays in the seed's multiplicative sweep).
std::vector<int> additive_closure(const RingData& r, std::vector<int> seed) {
  std::vector<char> in(r.size, 0);
  std::vector<int> work;
  in[0] = 1;
  work.push_back(0);
  for (int e : seed)
    if (!in[e]) {
      in[e] = 1;
      work.push_back(e);
    }
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      int s = r.add(work[i], work[j]);
      if (!in[s]) {
        in[s] = 1;
        work.push_back(s);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<int> ideal_closure(const RingData& r, const std::vector<int>& gens) {
  std::vector<int> sweep;
  sweep.reserve(gens.size() * r.size);
  for (int g : gens)
    for (int x = 0; x < r.size; ++x) sweep.push_back(r.mul(x, g));
  return additive_closure(r, std::move(sweep));
}

void verify_ideal(const RingData& r, const std::vector<int>& elems) {
  std::vector<char> in = element_mask(elems, r.size);
  if (!in[0]) fail(errc::check_failed, "ideal misses 0");
  for (int a : elems) {
    for (int b : elems)
      if (!in[r.add(a, b)]) fail(errc::check_failed, "ideal not additively closed");
    for (int x = 0; x < r.size; ++x)
      if (!in[r.mul(x, a)]) fail(errc::check_failed, "ideal not absorbing");
  }
}

std::vector<int> minimal_ideal_generators(const RingData& r,
                                          const std::vector<int>& elems) {
  std::vector<int> gens;
  if (elems.size() == 1) return gens;  // zero ideal
  std::vector<int> cur{0};
  for (int e : elems) {
    if (std::binary_search(cur.begin(), cur.end(), e)) continue;
    gens.push_back(e);
    cur = ideal_closure(r, gens);
    if (cur == elems) break;
  }
  return gens;
}

Ideal build_ideal(const Ring& ring, std::vector<int> elems) {
  verify_ideal(*ring, elems);
  Ideal i;
  i.ring = ring;
  i.generators = minimal_ideal_generators(*ring, elems);
  i.elements = std::move(elems);
  return i;
}

void check_element_range(const Ring& ring, const std::vector<int>& elems,
                         const char* what) {
  for (int e : elems)
    if (e < 0 || e >= ring->size)
      fail(errc::invalid_input, std::string(what) + ": element out of range");
}

}  // namespace

Ideal ideal_generated(const Ring& ring, const std::vector<int>& gens) {
  check_element_range(ring, gens, "ideal_generated");
  return build_ideal(ring, ideal_closure(*ring, gens));
}

std::vector<Ideal> enumerate_ideals(const Ring& ring) {
  const RingData& r = *ring;
  std::map<std::vector<int>, bool> seen;  // elements -> processed against others
  std::vector<std::vector<int>> sets;
  for (int x = 0; x < r.size; ++x) {
    auto s = ideal_closure(r, {x});
    if (!seen.count(s)) {
      seen.emplace(s, false);
      sets.push_back(s);
    }
  }
  // close under pairwise sums (sum of ideals = additive closure of union)
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> u = sets[i];
      u.insert(u.end(), sets[j].begin(), sets[j].end());
      auto s = additive_closure(r, std::move(u));
      if (!seen.count(s)) {
        seen.emplace(s, false);
        sets.push_back(s);
      }
    }
  }
  std::sort(sets.begin(), sets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  // completeness cross-check: closed under sum and intersection, contains
  // every cyclic ideal
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> u = sets[i];
      u.insert(u.end(), sets[j].begin(), sets[j].end());
      if (!seen.count(additive_closure(r, std::move(u))))
        fail(errc::check_failed, "ideal set not sum-closed");
      std::vector<int> meet;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                            sets[j].end(), std::back_inserter(meet));
      if (!seen.count(meet))
        fail(errc::check_failed, "ideal set not intersection-closed");
    }
  }

  std::vector<Ideal> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(build_ideal(ring, std::move(s)));
  return out;
}

Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealOp op) {
  if (!same_ring(a.ring, b.ring)) fail(errc::ring_mismatch, "ideal_combine");
  const RingData& r = *a.ring;
  switch (op) {
    case IdealOp::product: {
      std::vector<int> prods;
      prods.reserve(a.elements.size() * b.elements.size());
      for (int x : a.elements)
        for (int y : b.elements) prods.push_back(r.mul(x, y));
      return build_ideal(a.ring, additive_closure(r, std::move(prods)));
    }
    case IdealOp::intersection: {
      std::vector<int> meet;
      std::set_intersection(a.elements.begin(), a.elements.end(),
                            b.elements.begin(), b.elements.end(),
                            std::back_inserter(meet));
      return build_ideal(a.ring, std::move(meet));
    }
    case IdealOp::sum: {
      std::vector<int> u = a.elements;
      u.insert(u.end(), b.elements.begin(), b.elements.end());
      return build_ideal(a.ring, additive_closure(r, std::move(u)));
    }
  }
  fail(errc::invalid_input, "ideal_combine: unknown op");
}

bool is_prime_ideal(const Ideal& ideal) {
  if (!ideal.proper()) return false;
  const RingData& r = *ideal.ring;
  std::vector<char> in = element_mask(ideal.elements, r.size);
  for (int a = 0; a < r.size; ++a) {
    if (in[a]) continue;
    for (int b = a; b < r.size; ++b) {
      if (in[b]) continue;
      if (in[r.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_n_absorbing_ideal(const Ideal& ideal, int n, bool strongly) {
  if (!ideal.proper()) fail(errc::improper_input, "is_n_absorbing_ideal");
  if (n < 1) fail(errc::invalid_input, "is_n_absorbing_ideal: n < 1");
  const RingData& r = *ideal.ring;

  if (!strongly) {
    double cost = 1;
    for (int i = 0; i <= n; ++i) cost *= r.size;
    if (cost > 5e9) fail(errc::size_limit, "is_n_absorbing_ideal: |R|^(n+1) too large");
    std::vector<char> in = element_mask(ideal.elements, r.size);
    // odometer over (n+1)-tuples with running prefix products
    std::vector<int> tuple(n + 1, 0), prefix(n + 2, r.one);
    int level = 0;
    while (level >= 0) {
      if (tuple[level] == r.size) {
        tuple[level] = 0;
        --level;
        if (level >= 0) ++tuple[level];
        continue;
      }
      prefix[level + 1] = r.mul(prefix[level], tuple[level]);
      if (level == n) {
        if (in[prefix[n + 1]]) {
          bool ok = false;
          for (int drop = 0; drop <= n && !ok; ++drop) {
            int p = r.one;
            for (int i = 0; i <= n; ++i)
              if (i != drop) p = r.mul(p, tuple[i]);
            ok = in[p];
          }
          if (!ok) return false;
        }
        ++tuple[level];
      } else {
        ++level;
      }
    }
    return true;
  }

  // strong mode: tuples of ideals
  std::vector<Ideal> ideals = enumerate_ideals(ideal.ring);
  const int k = static_cast<int>(ideals.size());
  double cost = 1;
  for (int i = 0; i <= n; ++i) cost *= k;
  if (cost > 2e7) fail(errc::size_limit, "is_n_absorbing_ideal: ideal tuple space too large");
  // product table over the ideal list
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < k; ++i) index_of[ideals[i].elements] = i;
  std::vector<int> prod_table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) {
      int p = index_of.at(
          ideal_combine(ideals[i], ideals[j], IdealOp::product).elements);
      prod_table[static_cast<size_t>(i) * k + j] = p;
      prod_table[static_cast<size_t>(j) * k + i] = p;
    }
  int unit = index_of.at(ideal_generated(ideal.ring, {ideal.ring->one}).elements);
  std::vector<int> tuple(n + 1, 0), prefix(n + 2, unit);
  int level = 0;
  while (level >= 0) {
    if (tuple[level] == k) {
      tuple[level] = 0;
      --level;
      if (level >= 0) ++tuple[level];
      continue;
    }
    prefix[level + 1] = prod_table[static_cast<size_t>(prefix[level]) * k + tuple[level]];
    if (level == n) {
      if (sorted_subset(ideals[prefix[n + 1]].elements, ideal.elements)) {
        bool ok = false;
        for (int drop = 0; drop <= n && !ok; ++drop) {
          int p = unit;
          for (int i = 0; i <= n; ++i)
            if (i != drop) p = prod_table[static_cast<size_t>(p) * k + tuple[i]];
          ok = sorted_subset(ideals[p].elements, ideal.elements);
        }
        if (!ok) return false;
      }
      ++tuple[level];
    } else {
      ++level;
    }
  }
  return true;
}

Ideal radical(const Ideal& ideal) {
  if (!ideal.proper()) fail(errc::improper_input, "radical");
  const RingData& r = *ideal.ring;
  std::vector<char> in = element_mask(ideal.elements, r.size);
  std::vector<int> elems;
  for (int x = 0; x < r.size; ++x) {
    int p = x;
    for (int k = 1; k <= r.size; ++k) {
      if (in[p]) {
        elems.push_back(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return build_ideal(ideal.ring, std::move(elems));
}

std::vector<Ideal> minimal_primes_over(const Ideal& ideal) {
  if (!ideal.proper()) fail(errc::improper_input, "minimal_primes_over");
  std::vector<Ideal> primes;
  for (const Ideal& p : enumerate_ideals(ideal.ring))
    if (is_prime_ideal(p) && sorted_subset(ideal.elements, p.elements))
      primes.push_back(p);
  std::vector<Ideal> minimal;
  for (const Ideal& p : primes) {
    bool is_min = true;
    for (const Ideal& q : primes)
      if (!(q == p) && sorted_subset(q.elements, p.elements)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(p);
  }
  return minimal;
}

}  // namespace modlat
