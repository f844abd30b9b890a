#include "modlat/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace modlat {

namespace {

constexpr int kMaxCarrier = 4096;

std::string join_labels(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  return s + ")";
}

// Additive closure (inside the module) of a seed set.
std::vector<int> group_closure(const ModuleData& m, std::vector<int> seed) {
  std::vector<char> in(m.size, 0);
  std::vector<int> work;
  in[0] = 1;
  work.push_back(0);
  for (int e : seed)
    if (!in[e]) {
      in[e] = 1;
      work.push_back(e);
    }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      int s = m.add(work[i], work[j]);
      if (!in[s]) {
        in[s] = 1;
        work.push_back(s);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<int> submodule_closure(const ModuleData& m, const std::vector<int>& gens) {
  std::vector<int> sweep;
  sweep.reserve(gens.size() * m.ring->size);
  for (int g : gens)
    for (int r = 0; r < m.ring->size; ++r) sweep.push_back(m.act(r, g));
  return group_closure(m, std::move(sweep));
}

void verify_submodule(const ModuleData& m, const std::vector<int>& elems) {
  std::vector<char> in = element_mask(elems, m.size);
  if (!in[0]) fail(errc::check_failed, "submodule misses 0");
  for (int a : elems) {
    for (int b : elems)
      if (!in[m.add(a, b)]) fail(errc::check_failed, "submodule not additively closed");
    for (int r = 0; r < m.ring->size; ++r)
      if (!in[m.act(r, a)]) fail(errc::check_failed, "submodule not action-closed");
  }
}

std::vector<int> minimal_submodule_generators(const ModuleData& m,
                                              const std::vector<int>& elems) {
  std::vector<int> gens;
  if (elems.size() == 1) return gens;
  std::vector<int> cur{0};
  for (int e : elems) {
    if (std::binary_search(cur.begin(), cur.end(), e)) continue;
    gens.push_back(e);
    cur = submodule_closure(m, gens);
    if (cur == elems) break;
  }
  return gens;
}

Submodule build_submodule(const Module& module, std::vector<int> elems) {
  verify_submodule(*module, elems);
  Submodule n;
  n.module = module;
  n.generators = minimal_submodule_generators(*module, elems);
  n.elements = std::move(elems);
  return n;
}

// Greedy generating set for the whole carrier of a finished ModuleData.
std::vector<int> whole_module_generators(const ModuleData& m) {
  std::vector<int> gens, cur{0};
  for (int e = 0; e < m.size && static_cast<int>(cur.size()) < m.size; ++e) {
    if (std::binary_search(cur.begin(), cur.end(), e)) continue;
    gens.push_back(e);
    cur = submodule_closure(m, gens);
  }
  return gens;
}

void axiom_check(const ModuleData& m) {
  const RingData& r = *m.ring;
  for (int a = 0; a < m.size; ++a) {
    if (m.add(a, 0) != a || m.act(r.one, a) != a || m.act(0, a) != 0)
      fail(errc::check_failed, "module unit/zero axiom");
    for (int b = 0; b < m.size; ++b)
      if (m.add(a, b) != m.add(b, a))
        fail(errc::check_failed, "module addition not commutative");
  }
  if (m.size <= 24 && r.size <= 24) {
    for (int a = 0; a < m.size; ++a)
      for (int b = 0; b < m.size; ++b)
        for (int c = 0; c < m.size; ++c)
          if (m.add(a, m.add(b, c)) != m.add(m.add(a, b), c))
            fail(errc::check_failed, "module addition not associative");
    for (int s = 0; s < r.size; ++s) {
      for (int t = 0; t < r.size; ++t)
        for (int a = 0; a < m.size; ++a) {
          if (m.act(r.mul(s, t), a) != m.act(s, m.act(t, a)))
            fail(errc::check_failed, "module action not multiplicative");
          if (m.act(r.add(s, t), a) != m.add(m.act(s, a), m.act(t, a)))
            fail(errc::check_failed, "module action not additive in scalars");
        }
      for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b)
          if (m.act(s, m.add(a, b)) != m.add(m.act(s, a), m.act(s, b)))
            fail(errc::check_failed, "module action not additive");
    }
  }
}

// Finishes a ModuleData whose ring/size/add_table/act_table/labels/desc are
// filled: runs axiom checks and computes canonical generators.
Module finish_module(std::shared_ptr<ModuleData> data) {
  axiom_check(*data);
  data->gens = whole_module_generators(*data);
  return data;
}

}  // namespace

int ModuleData::neg(int a) const {
  for (int b = 0; b < size; ++b)
    if (add(a, b) == 0) return b;
  fail(errc::check_failed, "no additive inverse");
}

bool same_module(const Module& a, const Module& b) {
  if (a == b) return true;
  return same_ring(a->ring, b->ring) && a->size == b->size &&
         a->add_table == b->add_table && a->act_table == b->act_table;
}

Module make_module(const Ring& ring, const std::vector<Component>& components) {
  if (!ring) fail(errc::invalid_module, "null ring");
  long long size = 1;
  for (const Component& c : components) {
    if (c.coord < 0 || c.coord >= static_cast<int>(ring->moduli.size()))
      fail(errc::invalid_module, "component coordinate out of range");
    if (c.order < 1) fail(errc::invalid_module, "component order < 1");
    if (ring->moduli[c.coord] % c.order != 0)
      fail(errc::invalid_module,
           "component order " + std::to_string(c.order) +
               " does not divide ring modulus " +
               std::to_string(ring->moduli[c.coord]));
    size *= c.order;
    if (size > kMaxCarrier)
      fail(errc::size_limit, "module carrier exceeds " + std::to_string(kMaxCarrier));
  }
  auto data = std::make_shared<ModuleData>();
  data->ring = ring;
  data->components = components;
  data->size = static_cast<int>(size);
  const int n = data->size;
  const int k = static_cast<int>(components.size());

  // mixed-radix coordinates over component orders, coordinate 0 most significant
  auto coords = [&](int e) {
    std::vector<int> c(k);
    for (int i = k; i-- > 0;) {
      c[i] = e % components[i].order;
      e /= components[i].order;
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    int e = 0;
    for (int i = 0; i < k; ++i) e = e * components[i].order + c[i];
    return e;
  };

  std::vector<std::vector<int>> cs(n);
  for (int e = 0; e < n; ++e) cs[e] = coords(e);

  data->add_table.resize(static_cast<size_t>(n) * n);
  std::vector<int> tmp(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i) tmp[i] = (cs[a][i] + cs[b][i]) % components[i].order;
      data->add_table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(index(tmp));
    }

  data->act_table.resize(static_cast<size_t>(ring->size) * n);
  for (int r = 0; r < ring->size; ++r) {
    std::vector<int> rc = ring->coords(r);
    for (int a = 0; a < n; ++a) {
      for (int i = 0; i < k; ++i)
        tmp[i] = (rc[components[i].coord] * cs[a][i]) % components[i].order;
      data->act_table[static_cast<size_t>(r) * n + a] = static_cast<uint16_t>(index(tmp));
    }
  }

  data->element_labels.resize(n);
  for (int e = 0; e < n; ++e) {
    if (k == 1) {
      data->element_labels[e] = std::to_string(cs[e][0]);
    } else {
      std::vector<std::string> parts(k);
      for (int i = 0; i < k; ++i) parts[i] = std::to_string(cs[e][i]);
      data->element_labels[e] = join_labels(parts);
    }
  }

  const bool multi_coord = ring->moduli.size() > 1;
  for (int i = 0; i < k; ++i) {
    if (i) data->desc += "(+)";
    data->desc += "Z" + std::to_string(components[i].order);
    if (multi_coord) data->desc += "@" + std::to_string(components[i].coord);
  }
  if (k == 0) data->desc = "0";

  return finish_module(data);
}

bool Submodule::contains(int m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

int element_of(const Module& m, const std::vector<int>& comps) {
  const ModuleData& md = *m;
  if (md.components.empty() && md.size > 1)
    fail(errc::unsupported_structure, "element_of: module has no component presentation");
  if (comps.size() != md.components.size())
    fail(errc::invalid_input, "element_of: wrong tuple length");
  int e = 0;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comps[i] < 0 || comps[i] >= md.components[i].order)
      fail(errc::invalid_input, "element_of: coordinate out of range");
    e = e * md.components[i].order + comps[i];
  }
  return e;
}

std::vector<int> component_coords(const Module& m, int elem) {
  const ModuleData& md = *m;
  if (md.components.empty() && md.size > 1)
    fail(errc::unsupported_structure, "component_coords: module has no component presentation");
  if (elem < 0 || elem >= md.size) fail(errc::invalid_input, "component_coords: out of range");
  std::vector<int> comps(md.components.size());
  for (size_t i = comps.size(); i-- > 0;) {
    comps[i] = elem % md.components[i].order;
    elem /= md.components[i].order;
  }
  return comps;
}

Submodule submodule_generated(const Module& m, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= m->size)
      fail(errc::invalid_input, "submodule_generated: element out of range");
  return build_submodule(m, submodule_closure(*m, gens));
}

std::vector<Submodule> enumerate_submodules(const Module& m, int max_module_size) {
  if (m->size > max_module_size)
    fail(errc::size_limit, "enumerate_submodules: carrier " + std::to_string(m->size) +
                               " exceeds " + std::to_string(max_module_size));
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> sets;
  for (int x = 0; x < m->size; ++x) {
    auto s = submodule_closure(*m, {x});
    if (seen.insert(s).second) sets.push_back(std::move(s));
  }
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> u = sets[i];
      u.insert(u.end(), sets[j].begin(), sets[j].end());
      auto s = group_closure(*m, std::move(u));
      if (seen.insert(s).second) sets.push_back(std::move(s));
    }
  std::sort(sets.begin(), sets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  // cross-check: closed under sum and intersection
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> u = sets[i];
      u.insert(u.end(), sets[j].begin(), sets[j].end());
      if (!seen.count(group_closure(*m, std::move(u))))
        fail(errc::check_failed, "submodule set not sum-closed");
      std::vector<int> meet;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                            sets[j].end(), std::back_inserter(meet));
      if (!seen.count(meet))
        fail(errc::check_failed, "submodule set not intersection-closed");
    }
  std::vector<Submodule> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(build_submodule(m, std::move(s)));
  return out;
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  if (!same_module(a.module, b.module)) fail(errc::module_mismatch, "submodule_sum");
  std::vector<int> u = a.elements;
  u.insert(u.end(), b.elements.begin(), b.elements.end());
  return build_submodule(a.module, group_closure(*a.module, std::move(u)));
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  if (!same_module(a.module, b.module))
    fail(errc::module_mismatch, "submodule_intersection");
  std::vector<int> meet;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(meet));
  return build_submodule(a.module, std::move(meet));
}

Ideal colon_ideal(const Submodule& n, const std::vector<int>& elems) {
  const ModuleData& m = *n.module;
  if (elems.empty()) fail(errc::invalid_input, "colon_ideal: empty element set");
  for (int e : elems)
    if (e < 0 || e >= m.size) fail(errc::invalid_input, "colon_ideal: element out of range");
  std::vector<char> in = element_mask(n.elements, m.size);
  std::vector<int> scalars;
  for (int r = 0; r < m.ring->size; ++r) {
    bool all = true;
    for (int x : elems)
      if (!in[m.act(r, x)]) {
        all = false;
        break;
      }
    if (all) scalars.push_back(r);
  }
  return ideal_generated(m.ring, scalars);
}

Ideal colon_ideal_module(const Submodule& n) {
  std::vector<int> all(n.module->size);
  std::iota(all.begin(), all.end(), 0);
  return colon_ideal(n, all);
}

Submodule colon_submodule(const Submodule& n, const std::vector<int>& scalars) {
  const ModuleData& m = *n.module;
  if (scalars.empty()) fail(errc::invalid_input, "colon_submodule: empty scalar list");
  int prod = m.ring->one;
  for (int s : scalars) {
    if (s < 0 || s >= m.ring->size)
      fail(errc::invalid_input, "colon_submodule: scalar out of range");
    prod = m.ring->mul(prod, s);
  }
  std::vector<char> in = element_mask(n.elements, m.size);
  std::vector<int> elems;
  for (int x = 0; x < m.size; ++x)
    if (in[m.act(prod, x)]) elems.push_back(x);
  return build_submodule(n.module, std::move(elems));
}

std::vector<int> zero_divisors_on_quotient(const Submodule& n) {
  const ModuleData& m = *n.module;
  if (!n.proper())
    fail(errc::improper_input, "zero_divisors_on_quotient: submodule equals the module");
  std::vector<char> in = element_mask(n.elements, m.size);
  std::vector<int> out;
  for (int r = 0; r < m.ring->size; ++r) {
    for (int x = 0; x < m.size; ++x) {
      if (in[x]) continue;
      if (in[m.act(r, x)]) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

Submodule ModuleHom::kernel() const {
  std::vector<int> elems;
  for (int x = 0; x < source->size; ++x)
    if (map[x] == 0) elems.push_back(x);
  return build_submodule(source, std::move(elems));
}

Submodule ModuleHom::image() const {
  std::vector<int> elems = map;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return build_submodule(target, std::move(elems));
}

bool ModuleHom::surjective() const {
  return static_cast<int>(image().elements.size()) == target->size;
}

Submodule ModuleHom::image_of(const Submodule& n) const {
  if (!same_module(n.module, source)) fail(errc::module_mismatch, "image_of");
  std::vector<int> elems;
  elems.reserve(n.elements.size());
  for (int x : n.elements) elems.push_back(map[x]);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return build_submodule(target, std::move(elems));
}

Submodule ModuleHom::preimage_of(const Submodule& n) const {
  if (!same_module(n.module, target)) fail(errc::module_mismatch, "preimage_of");
  std::vector<int> elems;
  for (int x = 0; x < source->size; ++x)
    if (n.contains(map[x])) elems.push_back(x);
  return build_submodule(source, std::move(elems));
}

ModuleHom hom(const Module& src, const Module& dst,
              const std::vector<int>& gen_images) {
  if (!same_ring(src->ring, dst->ring)) fail(errc::ring_mismatch, "hom");
  if (gen_images.size() != src->gens.size())
    fail(errc::invalid_input, "hom: expected one image per generator");
  for (int y : gen_images)
    if (y < 0 || y >= dst->size) fail(errc::invalid_input, "hom: image out of range");

  // additive extension from the generators by breadth-first sweep
  std::vector<int> map(src->size, -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (size_t i = 0; i < src->gens.size(); ++i) {
      int y = src->add(x, src->gens[i]);
      if (map[y] < 0) {
        map[y] = dst->add(map[x], gen_images[i]);
        queue.push_back(y);
      }
    }
  }
  for (int x = 0; x < src->size; ++x)
    if (map[x] < 0) fail(errc::check_failed, "hom: generators do not span source");

  // well-definedness: the extension must respect every relation
  for (int x = 0; x < src->size; ++x)
    for (int y = 0; y < src->size; ++y)
      if (map[src->add(x, y)] != dst->add(map[x], map[y]))
        fail(errc::relation_violation, "hom: generator images violate additive relations");
  for (int r = 0; r < src->ring->size; ++r)
    for (int x = 0; x < src->size; ++x)
      if (map[src->act(r, x)] != dst->act(r, map[x]))
        fail(errc::relation_violation, "hom: generator images violate the ring action");

  ModuleHom h;
  h.source = src;
  h.target = dst;
  h.map = std::move(map);
  return h;
}

std::optional<ModuleHom> try_hom(const Module& src, const Module& dst,
                                 const std::vector<int>& gen_images) {
  try {
    return hom(src, dst, gen_images);
  } catch (const error& e) {
    if (e.code() == errc::relation_violation) return std::nullopt;
    throw;
  }
}

std::pair<Module, ModuleHom> quotient_module(const Module& m, const Submodule& l) {
  if (!same_module(l.module, m)) fail(errc::module_mismatch, "quotient_module");
  const ModuleData& md = *m;

  // least representative of each coset
  std::vector<int> rep(md.size);
  for (int x = 0; x < md.size; ++x) {
    int best = x;
    for (int e : l.elements) best = std::min(best, md.add(x, e));
    rep[x] = best;
  }
  std::vector<int> reps;
  for (int x = 0; x < md.size; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> rank(md.size, -1);
  for (size_t i = 0; i < reps.size(); ++i) rank[reps[i]] = static_cast<int>(i);

  auto data = std::make_shared<ModuleData>();
  data->ring = md.ring;
  data->size = static_cast<int>(reps.size());
  const int n = data->size;
  data->add_table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      data->add_table[static_cast<size_t>(i) * n + j] =
          static_cast<uint16_t>(rank[rep[md.add(reps[i], reps[j])]]);
  data->act_table.resize(static_cast<size_t>(md.ring->size) * n);
  for (int r = 0; r < md.ring->size; ++r)
    for (int i = 0; i < n; ++i)
      data->act_table[static_cast<size_t>(r) * n + i] =
          static_cast<uint16_t>(rank[rep[md.act(r, reps[i])]]);
  data->element_labels.resize(n);
  for (int i = 0; i < n; ++i) data->element_labels[i] = "[" + md.label(reps[i]) + "]";
  std::string lgens = l.generators.empty() ? "0" : std::string();
  for (size_t i = 0; i < l.generators.size(); ++i) {
    if (i) lgens += ",";
    lgens += md.label(l.generators[i]);
  }
  data->desc = md.desc + "/(" + lgens + ")";
  Module q = finish_module(data);

  ModuleHom proj;
  proj.source = m;
  proj.target = q;
  proj.map.resize(md.size);
  for (int x = 0; x < md.size; ++x) proj.map[x] = rank[rep[x]];
  return {q, proj};
}

int DirectProduct::embed(const std::vector<int>& part_elems) const {
  if (part_elems.size() != parts.size())
    fail(errc::invalid_input, "embed: wrong tuple length");
  int t = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (part_elems[i] < 0 || part_elems[i] >= parts[i]->size)
      fail(errc::invalid_input, "embed: element out of range");
    t = t * parts[i]->size + part_elems[i];
  }
  return embed_table[t];
}

std::vector<int> DirectProduct::project(int m) const {
  if (m < 0 || m >= module->size) fail(errc::invalid_input, "project: out of range");
  std::vector<int> out(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) out[i] = proj_table[i][m];
  return out;
}

DirectProduct direct_product(const std::vector<std::pair<Ring, Module>>& parts) {
  if (parts.size() < 2) fail(errc::invalid_input, "direct_product: needs at least two factors");
  DirectProduct dp;
  std::vector<int> moduli;
  long long size = 1;
  int offset = 0;
  for (const auto& [ring, mod] : parts) {
    if (!same_ring(ring, mod->ring))
      fail(errc::ring_mismatch, "direct_product: module not over its factor ring");
    dp.part_rings.push_back(ring);
    dp.parts.push_back(mod);
    std::vector<int> coords(ring->moduli.size());
    std::iota(coords.begin(), coords.end(), offset);
    dp.ring_coords.push_back(coords);
    offset += static_cast<int>(ring->moduli.size());
    moduli.insert(moduli.end(), ring->moduli.begin(), ring->moduli.end());
    size *= mod->size;
    if (size > kMaxCarrier)
      fail(errc::size_limit, "direct_product: carrier exceeds " + std::to_string(kMaxCarrier));
  }
  dp.ring = make_ring(moduli);
  const int n = static_cast<int>(size);
  const int k = static_cast<int>(parts.size());

  auto tuple_of = [&](int e) {
    std::vector<int> t(k);
    for (int i = k; i-- > 0;) {
      t[i] = e % dp.parts[i]->size;
      e /= dp.parts[i]->size;
    }
    return t;
  };

  auto data = std::make_shared<ModuleData>();
  data->ring = dp.ring;
  data->size = n;
  bool all_components = true;
  for (int i = 0; i < k; ++i) {
    if (dp.parts[i]->components.empty() && dp.parts[i]->size > 1) {
      all_components = false;
      break;
    }
  }
  if (all_components)
    for (int i = 0; i < k; ++i)
      for (const Component& c : dp.parts[i]->components)
        data->components.push_back({dp.ring_coords[i][c.coord], c.order});

  std::vector<std::vector<int>> tuples(n);
  for (int e = 0; e < n; ++e) tuples[e] = tuple_of(e);
  auto index_of = [&](const std::vector<int>& t) {
    int e = 0;
    for (int i = 0; i < k; ++i) e = e * dp.parts[i]->size + t[i];
    return e;
  };

  data->add_table.resize(static_cast<size_t>(n) * n);
  std::vector<int> tmp(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i) tmp[i] = dp.parts[i]->add(tuples[a][i], tuples[b][i]);
      data->add_table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(index_of(tmp));
    }

  data->act_table.resize(static_cast<size_t>(dp.ring->size) * n);
  for (int r = 0; r < dp.ring->size; ++r) {
    std::vector<int> rc = dp.ring->coords(r);
    std::vector<int> part_r(k);
    for (int i = 0; i < k; ++i) {
      std::vector<int> sub(dp.ring_coords[i].size());
      for (size_t j = 0; j < sub.size(); ++j) sub[j] = rc[dp.ring_coords[i][j]];
      part_r[i] = dp.part_rings[i]->index(sub);
    }
    for (int a = 0; a < n; ++a) {
      for (int i = 0; i < k; ++i) tmp[i] = dp.parts[i]->act(part_r[i], tuples[a][i]);
      data->act_table[static_cast<size_t>(r) * n + a] = static_cast<uint16_t>(index_of(tmp));
    }
  }

  data->element_labels.resize(n);
  for (int e = 0; e < n; ++e) {
    std::vector<std::string> ls(k);
    for (int i = 0; i < k; ++i) ls[i] = dp.parts[i]->label(tuples[e][i]);
    data->element_labels[e] = join_labels(ls);
  }
  for (int i = 0; i < k; ++i) {
    if (i) data->desc += " x ";
    data->desc += dp.parts[i]->desc;
  }
  dp.module = finish_module(data);

  dp.proj_table.assign(k, std::vector<int>(n));
  for (int e = 0; e < n; ++e)
    for (int i = 0; i < k; ++i) dp.proj_table[i][e] = tuples[e][i];
  dp.embed_table.resize(n);
  std::iota(dp.embed_table.begin(), dp.embed_table.end(), 0);
  return dp;
}

DirectProduct coordinate_split(const Module& m,
                               const std::vector<std::vector<int>>& positions) {
  const ModuleData& md = *m;
  const int ncoords = static_cast<int>(md.ring->moduli.size());
  std::vector<char> used(ncoords, 0);
  for (const auto& part : positions) {
    if (part.empty()) fail(errc::invalid_input, "coordinate_split: empty factor");
    for (int c : part) {
      if (c < 0 || c >= ncoords || used[c])
        fail(errc::invalid_input, "coordinate_split: positions must partition the coordinates");
      used[c] = 1;
    }
  }
  for (char u : used)
    if (!u) fail(errc::invalid_input, "coordinate_split: positions must partition the coordinates");

  DirectProduct dp;
  dp.module = m;
  const int k = static_cast<int>(positions.size());
  dp.ring_coords = positions;

  std::vector<int> moduli;
  for (const auto& part : positions)
    for (int c : part) moduli.push_back(md.ring->moduli[c]);
  dp.ring = make_ring(moduli);

  long long part_size_product = 1;
  for (int i = 0; i < k; ++i) {
    // idempotent with ones exactly on this factor's coordinates
    std::vector<int> ec(ncoords, 0);
    for (int c : positions[i]) ec[c] = 1;
    const int e = md.ring->index(ec);

    std::vector<int> elems;
    for (int x = 0; x < md.size; ++x) elems.push_back(md.act(e, x));
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const int psize = static_cast<int>(elems.size());
    part_size_product *= psize;
    std::vector<int> rank(md.size, -1);
    for (int j = 0; j < psize; ++j) rank[elems[j]] = j;

    std::vector<int> pmoduli(positions[i].size());
    for (size_t j = 0; j < positions[i].size(); ++j)
      pmoduli[j] = md.ring->moduli[positions[i][j]];
    Ring pring = make_ring(pmoduli);
    dp.part_rings.push_back(pring);

    auto data = std::make_shared<ModuleData>();
    data->ring = pring;
    data->size = psize;
    data->add_table.resize(static_cast<size_t>(psize) * psize);
    for (int a = 0; a < psize; ++a)
      for (int b = 0; b < psize; ++b) {
        int s = md.add(elems[a], elems[b]);
        if (rank[s] < 0) fail(errc::check_failed, "coordinate_split: slice not closed");
        data->add_table[static_cast<size_t>(a) * psize + b] = static_cast<uint16_t>(rank[s]);
      }
    data->act_table.resize(static_cast<size_t>(pring->size) * psize);
    for (int r = 0; r < pring->size; ++r) {
      // lift the factor scalar to the full ring, zero outside the factor
      std::vector<int> rc(ncoords, 0);
      std::vector<int> prc = pring->coords(r);
      for (size_t j = 0; j < positions[i].size(); ++j) rc[positions[i][j]] = prc[j];
      const int lift = md.ring->index(rc);
      for (int a = 0; a < psize; ++a) {
        int y = md.act(lift, elems[a]);
        if (rank[y] < 0) fail(errc::check_failed, "coordinate_split: slice not action-closed");
        data->act_table[static_cast<size_t>(r) * psize + a] = static_cast<uint16_t>(rank[y]);
      }
    }
    data->element_labels.resize(psize);
    for (int a = 0; a < psize; ++a) data->element_labels[a] = md.label(elems[a]);
    std::string cs;
    for (size_t j = 0; j < positions[i].size(); ++j) {
      if (j) cs += ",";
      cs += std::to_string(positions[i][j]);
    }
    data->desc = md.desc + "[" + cs + "]";
    dp.parts.push_back(finish_module(data));

    dp.proj_table.emplace_back(md.size);
    for (int x = 0; x < md.size; ++x) dp.proj_table.back()[x] = rank[md.act(e, x)];
  }

  if (part_size_product != md.size)
    fail(errc::check_failed, "coordinate_split: factor sizes do not multiply out");

  // x decomposes uniquely into its idempotent slices
  dp.embed_table.assign(md.size, -1);
  for (int x = 0; x < md.size; ++x) {
    int t = 0;
    for (int i = 0; i < k; ++i) t = t * dp.parts[i]->size + dp.proj_table[i][x];
    if (dp.embed_table[t] != -1)
      fail(errc::check_failed, "coordinate_split: decomposition not injective");
    dp.embed_table[t] = x;
  }
  return dp;
}

SubmoduleSplit split_submodule(const DirectProduct& dp, const Submodule& n) {
  if (!same_module(n.module, dp.module))
    fail(errc::module_mismatch, "split_submodule: submodule not inside the product");
  const int k = static_cast<int>(dp.parts.size());
  SubmoduleSplit out;
  for (int i = 0; i < k; ++i) {
    std::vector<int> elems;
    for (int x : n.elements) elems.push_back(dp.proj_table[i][x]);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    out.factors.push_back(build_submodule(dp.parts[i], std::move(elems)));
  }
  // n splits iff it equals the full product of its projections
  long long prod_size = 1;
  for (const Submodule& f : out.factors) prod_size *= static_cast<long long>(f.elements.size());
  if (prod_size == static_cast<long long>(n.elements.size())) {
    std::vector<char> in = element_mask(n.elements, dp.module->size);
    bool all = true;
    std::vector<int> idx(k, 0);
    std::vector<int> tuple(k);
    while (all) {
      for (int i = 0; i < k; ++i) tuple[i] = out.factors[i].elements[idx[i]];
      if (!in[dp.embed(tuple)]) all = false;
      int i = k - 1;
      while (i >= 0 && ++idx[i] == static_cast<int>(out.factors[i].elements.size())) idx[i--] = 0;
      if (i < 0) break;
    }
    out.split = all;
  }
  return out;
}

Localization localize(const Module& m, const std::vector<int>& s) {
  const ModuleData& md = *m;
  const RingData& rd = *md.ring;
  std::vector<char> in_s(rd.size, 0);
  for (int x : s) {
    if (x < 0 || x >= rd.size)
      fail(errc::invalid_multiplicative_set, "scalar out of range");
    in_s[x] = 1;
  }
  if (!in_s[rd.one]) fail(errc::invalid_multiplicative_set, "set must contain 1");
  for (int a : s)
    for (int b : s)
      if (!in_s[rd.mul(a, b)])
        fail(errc::invalid_multiplicative_set, "set not closed under multiplication");

  Localization loc;

  // torsion submodule T = { x : s*x = 0 for some s in S }
  std::vector<int> telems;
  for (int x = 0; x < md.size; ++x)
    for (int a : s)
      if (md.act(a, x) == 0) {
        telems.push_back(x);
        break;
      }
  loc.torsion = build_submodule(m, std::move(telems));

  // ring torsion = kernel of R -> S^-1 R
  std::vector<int> rtor;
  for (int r = 0; r < rd.size; ++r)
    for (int a : s)
      if (rd.mul(a, r) == 0) {
        rtor.push_back(r);
        break;
      }
  loc.ring_torsion = ideal_generated(md.ring, rtor);
  if (loc.ring_torsion.elements != rtor)
    fail(errc::check_failed, "localize: ring torsion not an ideal");

  // S^-1 R as a product of cyclic rings: coordinate i collapses Z_n to Z_g,
  // g = gcd of n with every torsion coordinate value
  std::vector<int> qmoduli;
  for (size_t i = 0; i < rd.moduli.size(); ++i) {
    int g = rd.moduli[i];
    for (int t : loc.ring_torsion.elements) g = std::gcd(g, rd.coords(t)[i]);
    if (g >= 2) qmoduli.push_back(g);
  }
  if (!qmoduli.empty()) loc.localized_ring = make_ring(qmoduli);

  auto [q, proj] = quotient_module(m, loc.torsion);
  loc.module = q;
  loc.map = proj;

  // every s in S must act invertibly on M/T
  for (int a : s) {
    std::vector<char> hit(q->size, 0);
    for (int x = 0; x < q->size; ++x) hit[q->act(a, x)] = 1;
    for (char h : hit)
      if (!h) fail(errc::check_failed, "localize: set element not invertible on quotient");
  }
  return loc;
}

std::pair<Module, Submodule> tensor_free(const Module& m, const Submodule& n, int k) {
  if (!same_module(n.module, m)) fail(errc::module_mismatch, "tensor_free");
  if (k < 1) fail(errc::invalid_input, "tensor_free: k < 1");
  if (k == 1) return {m, n};
  const ModuleData& md = *m;
  long long size = 1;
  for (int i = 0; i < k; ++i) {
    size *= md.size;
    if (size > kMaxCarrier)
      fail(errc::size_limit, "tensor_free: carrier exceeds " + std::to_string(kMaxCarrier));
  }
  const int nsz = static_cast<int>(size);

  auto tuple_of = [&](int e) {
    std::vector<int> t(k);
    for (int i = k; i-- > 0;) {
      t[i] = e % md.size;
      e /= md.size;
    }
    return t;
  };
  auto index_of = [&](const std::vector<int>& t) {
    int e = 0;
    for (int i = 0; i < k; ++i) e = e * md.size + t[i];
    return e;
  };

  auto data = std::make_shared<ModuleData>();
  data->ring = md.ring;
  data->size = nsz;
  for (int i = 0; i < k; ++i)
    for (const Component& c : md.components) data->components.push_back(c);

  std::vector<std::vector<int>> tuples(nsz);
  for (int e = 0; e < nsz; ++e) tuples[e] = tuple_of(e);
  std::vector<int> tmp(k);
  data->add_table.resize(static_cast<size_t>(nsz) * nsz);
  for (int a = 0; a < nsz; ++a)
    for (int b = 0; b < nsz; ++b) {
      for (int i = 0; i < k; ++i) tmp[i] = md.add(tuples[a][i], tuples[b][i]);
      data->add_table[static_cast<size_t>(a) * nsz + b] = static_cast<uint16_t>(index_of(tmp));
    }
  data->act_table.resize(static_cast<size_t>(md.ring->size) * nsz);
  for (int r = 0; r < md.ring->size; ++r)
    for (int a = 0; a < nsz; ++a) {
      for (int i = 0; i < k; ++i) tmp[i] = md.act(r, tuples[a][i]);
      data->act_table[static_cast<size_t>(r) * nsz + a] = static_cast<uint16_t>(index_of(tmp));
    }
  data->element_labels.resize(nsz);
  for (int e = 0; e < nsz; ++e) {
    std::vector<std::string> ls(k);
    for (int i = 0; i < k; ++i) ls[i] = md.label(tuples[e][i]);
    data->element_labels[e] = join_labels(ls);
  }
  data->desc = md.desc + "^" + std::to_string(k);
  Module big = finish_module(data);

  std::vector<int> nelems;
  for (int e = 0; e < nsz; ++e) {
    bool all = true;
    for (int i = 0; i < k; ++i)
      if (!n.contains(tuples[e][i])) {
        all = false;
        break;
      }
    if (all) nelems.push_back(e);
  }
  return {big, build_submodule(big, std::move(nelems))};
}

namespace {

// I * M for an ideal I of the base ring: the submodule generated by i*g.
Submodule ideal_times_module(const Ideal& i, const Module& m) {
  std::vector<int> gens;
  for (int r : i.elements)
    for (int g : m->gens) gens.push_back(m->act(r, g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return submodule_generated(m, gens);
}

}  // namespace

bool is_multiplication_module(const Module& m, int max_module_size) {
  for (const Submodule& n : enumerate_submodules(m, max_module_size))
    if (!(ideal_times_module(colon_ideal_module(n), m) == n)) return false;
  return true;
}

Submodule submodule_product(const Submodule& a, const Submodule& b) {
  if (!same_module(a.module, b.module)) fail(errc::module_mismatch, "submodule_product");
  if (!is_multiplication_module(a.module))
    fail(errc::unsupported_structure,
         "submodule_product requires a multiplication module");
  Ideal prod = ideal_combine(colon_ideal_module(a), colon_ideal_module(b), IdealOp::product);
  return ideal_times_module(prod, a.module);
}

}  // namespace modlat
