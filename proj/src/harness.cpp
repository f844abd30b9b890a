#include "modlat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modlat/classify.hpp"
#include "modlat/error.hpp"
#include "modlat/json_io.hpp"

namespace modlat {

namespace {

bool spec_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool component_list_less(const std::vector<Component>& a, const std::vector<Component>& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i].coord != b[i].coord) return a[i].coord < b[i].coord;
    if (a[i].order != b[i].order) return a[i].order < b[i].order;
  }
  return a.size() < b.size();
}

}  // namespace

std::vector<Ring> family_rings(const InstanceFamily& f) {
  std::vector<std::vector<int>> specs;
  for (int n = 2; n <= f.max_modulus; ++n) specs.push_back({n});
  if (f.include_triple) {
    specs.push_back({30});
    specs.push_back({2, 3, 5});
  }
  for (int a = 2; a <= f.max_pair_modulus; ++a)
    for (int b = a; b <= f.max_pair_modulus; ++b) specs.push_back({a, b});
  std::sort(specs.begin(), specs.end(), spec_less);
  specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
  std::vector<Ring> rings;
  rings.reserve(specs.size());
  for (const auto& s : specs) rings.push_back(make_ring(s));
  return rings;
}

std::vector<Module> modules_over(const Ring& r, const InstanceFamily& f) {
  std::vector<Component> cands;
  for (int c = 0; c < static_cast<int>(r->moduli.size()); ++c)
    for (int d = 2; d <= r->moduli[c]; ++d)
      if (r->moduli[c] % d == 0) cands.push_back(Component{c, d});

  struct Entry {
    long long size;
    std::vector<Component> comps;
  };
  std::vector<Entry> entries;
  std::vector<int> pick;
  std::function<void(int, long long)> extend = [&](int lo, long long size) {
    if (!pick.empty()) {
      std::vector<Component> comps;
      comps.reserve(pick.size());
      for (int i : pick) comps.push_back(cands[i]);
      entries.push_back(Entry{size, std::move(comps)});
    }
    if (static_cast<int>(pick.size()) == f.max_components) return;
    for (int i = lo; i < static_cast<int>(cands.size()); ++i) {
      const long long next = size * cands[i].order;
      if (next > f.max_module_size) continue;
      pick.push_back(i);
      extend(i, next);
      pick.pop_back();
    }
  };
  extend(0, 1);
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.size != b.size) return a.size < b.size;
    return component_list_less(a.comps, b.comps);
  });
  std::vector<Module> out;
  out.reserve(entries.size());
  for (const Entry& e : entries) out.push_back(make_module(r, e.comps));
  return out;
}

std::vector<Instance> generate_instances(const InstanceFamily& f) {
  std::vector<Instance> out;
  for (const Ring& r : family_rings(f))
    for (const Module& m : modules_over(r, f)) out.push_back(Instance{r, m});
  return out;
}

std::string ring_spec(const Ring& r) { return r->spec(); }

std::string instance_label(const Instance& i) {
  return "ring=" + ring_spec(i.ring) + " module=" + i.module->desc;
}

// ---------------------------------------------------------------------------
// suite machinery
// ---------------------------------------------------------------------------

namespace {

void record_check(SuiteReport& r, bool ok, const std::string& instance, const char* check,
                  const std::string& detail,
                  nlohmann::json data = nlohmann::json::object()) {
  ++r.checks;
  if (!ok) r.failures.push_back(CheckFailure{instance, check, detail, std::move(data)});
}

// Converts an escaped library error (check_failed and friends) into a
// recorded failure instead of aborting the whole suite.
void guarded(SuiteReport& r, const std::string& label, const std::function<void()>& body) {
  try {
    body();
  } catch (const error& e) {
    r.failures.push_back(CheckFailure{
        label, "unexpected-error", e.what(), {{"code", errc_name(e.code())}}});
  }
}

struct LatticeCache {
  std::vector<Submodule> lattice;
  std::map<std::vector<int>, int> index;
  std::vector<char> c2a;  // proper entries only
  std::vector<char> cp;   // filled when requested

  static LatticeCache build(const Module& m, int max_module_size, bool with_cp = false) {
    LatticeCache c;
    c.lattice = enumerate_submodules(m, max_module_size);
    const int t = static_cast<int>(c.lattice.size());
    for (int i = 0; i < t; ++i) c.index[c.lattice[i].elements] = i;
    c.c2a.assign(t, 0);
    c.cp.assign(t, 0);
    for (int i = 0; i < t; ++i) {
      if (!c.lattice[i].proper()) continue;
      c.c2a[i] = is_classical_2_absorbing(c.lattice[i]) ? 1 : 0;
      if (with_cp) c.cp[i] = is_classical_prime(c.lattice[i]) ? 1 : 0;
    }
    return c;
  }
  int find(const std::vector<int>& elements) const {
    auto it = index.find(elements);
    return it == index.end() ? -1 : it->second;
  }
};

// Ideal lattice with pairwise product index table.
struct IdealProducts {
  std::vector<Ideal> ideals;
  std::map<std::vector<int>, int> index;
  std::vector<int> prod;
  int count = 0;
  int at(int i, int j) const { return prod[static_cast<size_t>(i) * count + j]; }

  static IdealProducts build(const Ring& ring) {
    IdealProducts t;
    t.ideals = enumerate_ideals(ring);
    t.count = static_cast<int>(t.ideals.size());
    for (int i = 0; i < t.count; ++i) t.index[t.ideals[i].elements] = i;
    t.prod.resize(static_cast<size_t>(t.count) * t.count);
    for (int i = 0; i < t.count; ++i)
      for (int j = 0; j <= i; ++j) {
        const int p =
            t.index.at(ideal_combine(t.ideals[i], t.ideals[j], IdealOp::product).elements);
        t.prod[static_cast<size_t>(i) * t.count + j] = p;
        t.prod[static_cast<size_t>(j) * t.count + i] = p;
      }
    return t;
  }
};

int count_prime_factors(int d) {
  int count = 0;
  for (int p = 2; static_cast<long long>(p) * p <= d; ++p)
    while (d % p == 0) {
      d /= p;
      ++count;
    }
  if (d > 1) ++count;
  return count;
}

int ipow(int base, int exp) {
  int v = 1;
  while (exp-- > 0) v *= base;
  return v;
}

// ---------------------------------------------------------------------------
// T-MAIN: the ten element/ideal conditions agree with each other and with the
// classical 2-absorbing predicate on every proper submodule.
// ---------------------------------------------------------------------------
void suite_main(SuiteReport& r, const InstanceFamily& f) {
  auto instances = generate_instances(f);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      for (const Submodule& n : enumerate_submodules(inst.module, f.max_module_size)) {
        if (!n.proper()) continue;
        const ConditionVector v = evaluate_main_conditions(n);
        const bool c2a = is_classical_2_absorbing(n);
        record_check(r, v.all_equal(), label, "element-conditions-agree",
                     "the ten element/ideal conditions disagree",
                     {{"submodule", to_json(n)}, {"conditions", to_json(v)}});
        record_check(r, v.conditions[0] == c2a, label, "conditions-match-predicate",
                     "condition (1) disagrees with the classical 2-absorbing predicate",
                     {{"submodule", to_json(n)}, {"conditions", to_json(v)}});
      }
    });
  }
}

// ---------------------------------------------------------------------------
// T-MAIN-COR: ideal-side corollaries.  On one-coordinate rings the proper
// ideal of index d is 2-absorbing exactly when d has at most two prime
// factors (with multiplicity).  Ideals translate index-preservingly into the
// regular module, and "every proper ideal 2-absorbing" is equivalent to
// "every proper submodule of every family module classical 2-absorbing".
// ---------------------------------------------------------------------------
void suite_main_cor(SuiteReport& r, const InstanceFamily& f) {
  for (const Ring& ring : family_rings(f)) {
    const std::string rlabel = "ring=" + ring->spec();
    guarded(r, rlabel, [&] {
      const std::vector<Ideal> ideals = enumerate_ideals(ring);
      std::vector<char> two_abs(ideals.size(), 0);
      for (size_t i = 0; i < ideals.size(); ++i)
        if (ideals[i].proper()) two_abs[i] = is_n_absorbing_ideal(ideals[i], 2) ? 1 : 0;

      if (ring->moduli.size() == 1) {
        for (size_t i = 0; i < ideals.size(); ++i) {
          if (!ideals[i].proper()) continue;
          const int d = ring->size / static_cast<int>(ideals[i].elements.size());
          record_check(r, (two_abs[i] != 0) == (count_prime_factors(d) <= 2), rlabel,
                       "cyclic-2-absorbing-closed-form",
                       "2-absorbing verdict disagrees with the prime-factor form",
                       {{"ideal", to_json(ideals[i])}, {"index", d}});
        }
      }

      std::vector<Component> reg;
      for (int c = 0; c < static_cast<int>(ring->moduli.size()); ++c)
        reg.push_back(Component{c, ring->moduli[c]});
      const bool regular_fits = ring->size <= f.max_module_size &&
                                static_cast<int>(reg.size()) <= f.max_components;
      if (!regular_fits) return;

      const Module regular = make_module(ring, reg);
      bool all_ideals = true;
      for (size_t i = 0; i < ideals.size(); ++i) {
        if (!ideals[i].proper()) continue;
        if (!two_abs[i]) all_ideals = false;
        const Submodule as_sub = submodule_generated(regular, ideals[i].generators);
        record_check(r, as_sub.elements == ideals[i].elements, rlabel,
                     "regular-translation",
                     "ideal does not translate index-preservingly into the regular module",
                     {{"ideal", to_json(ideals[i])}});
        record_check(r, is_classical_2_absorbing(as_sub) == (two_abs[i] != 0), rlabel,
                     "regular-c2a-matches-ideal",
                     "classical 2-absorption in the regular module disagrees with the "
                     "2-absorbing ideal verdict",
                     {{"ideal", to_json(ideals[i])}});
      }

      bool all_subs = true;
      for (const Module& m : modules_over(ring, f)) {
        ++r.instances;
        for (const Submodule& n : enumerate_submodules(m, f.max_module_size)) {
          if (!n.proper()) continue;
          if (!is_classical_2_absorbing(n)) {
            all_subs = false;
            break;
          }
        }
        if (!all_subs && !all_ideals) break;  // both sides settled
      }
      record_check(r, all_ideals == all_subs, rlabel, "module-wide-corollary",
                   "\"all proper ideals 2-absorbing\" disagrees with \"all proper "
                   "submodules classical 2-absorbing\" across the family modules");
    });
  }
}

// ---------------------------------------------------------------------------
// T-HOM: classical 2-absorption transfers along epimorphisms.  Canonical
// projections M -> M/L are checked on every instance; in addition every
// module homomorphism between family modules of size <= 16 over the same
// ring is enumerated through generator images.
// ---------------------------------------------------------------------------
void suite_hom(SuiteReport& r, const InstanceFamily& f) {
  auto instances = generate_instances(f);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      const LatticeCache base = LatticeCache::build(inst.module, f.max_module_size);
      for (const Submodule& l : base.lattice) {
        if (!l.proper()) continue;
        const auto [quot_mod, pi] = quotient_module(inst.module, l);
        const LatticeCache quot = LatticeCache::build(quot_mod, 256);
        for (int ki = 0; ki < static_cast<int>(base.lattice.size()); ++ki) {
          const Submodule& k = base.lattice[ki];
          if (!k.proper() || !sorted_subset(l.elements, k.elements)) continue;
          const Submodule image = pi.image_of(k);
          const int qi = quot.find(image.elements);
          record_check(r, qi >= 0, label, "projection-image-is-submodule",
                       "projected image is missing from the quotient lattice",
                       {{"kernel", to_json(l)}, {"submodule", to_json(k)}});
          if (qi < 0) continue;
          record_check(r, base.c2a[ki] == quot.c2a[qi], label, "projection-preserves-c2a",
                       "classical 2-absorption changed across the canonical projection",
                       {{"kernel", to_json(l)}, {"submodule", to_json(k)}});
        }
        for (int qi = 0; qi < static_cast<int>(quot.lattice.size()); ++qi) {
          if (!quot.lattice[qi].proper()) continue;
          const Submodule pre = pi.preimage_of(quot.lattice[qi]);
          const int ki = base.find(pre.elements);
          record_check(r, ki >= 0, label, "projection-preimage-is-submodule",
                       "preimage is missing from the source lattice",
                       {{"kernel", to_json(l)}});
          if (ki < 0) continue;
          record_check(r, quot.c2a[qi] == base.c2a[ki], label, "projection-reflects-c2a",
                       "classical 2-absorption changed when pulling back along the "
                       "canonical projection",
                       {{"kernel", to_json(l)}});
        }
      }
    });
  }

  const int hom_cap = 16;
  for (const Ring& ring : family_rings(f)) {
    std::vector<Module> mods;
    for (const Module& m : modules_over(ring, f))
      if (m->size <= hom_cap) mods.push_back(m);
    if (mods.empty()) continue;
    const std::string rlabel = "ring=" + ring->spec();
    guarded(r, rlabel, [&] {
      std::vector<LatticeCache> caches;
      caches.reserve(mods.size());
      for (const Module& m : mods) caches.push_back(LatticeCache::build(m, hom_cap));
      for (size_t ai = 0; ai < mods.size(); ++ai)
        for (size_t bi = 0; bi < mods.size(); ++bi) {
          const Module& a = mods[ai];
          const Module& b = mods[bi];
          const LatticeCache& ca = caches[ai];
          const LatticeCache& cb = caches[bi];
          const int g = static_cast<int>(a->gens.size());
          std::vector<int> images(g, 0);
          while (true) {
            if (auto h = try_hom(a, b, images)) {
              const Submodule ker = h->kernel();
              const Submodule img = h->image();
              record_check(
                  r,
                  static_cast<long long>(ker.elements.size()) *
                          static_cast<long long>(img.elements.size()) ==
                      a->size,
                  rlabel, "hom-kernel-image-cardinality",
                  "|kernel| * |image| differs from the source cardinality",
                  {{"source", a->desc}, {"target", b->desc}});
              if (h->surjective()) {
                for (int ni = 0; ni < static_cast<int>(ca.lattice.size()); ++ni) {
                  const Submodule& n = ca.lattice[ni];
                  if (!n.proper() || !sorted_subset(ker.elements, n.elements)) continue;
                  const int ti = cb.find(h->image_of(n).elements);
                  record_check(r, ti >= 0, rlabel, "epi-image-is-submodule",
                               "image of a kernel-containing submodule is missing from "
                               "the target lattice",
                               {{"source", a->desc}, {"target", b->desc}});
                  if (ti < 0) continue;
                  record_check(r, ca.c2a[ni] == cb.c2a[ti], rlabel, "epi-preserves-c2a",
                               "classical 2-absorption changed along a surjection",
                               {{"source", a->desc},
                                {"target", b->desc},
                                {"submodule", to_json(n)}});
                }
                for (int ti = 0; ti < static_cast<int>(cb.lattice.size()); ++ti) {
                  if (!cb.lattice[ti].proper()) continue;
                  const int ni = ca.find(h->preimage_of(cb.lattice[ti]).elements);
                  record_check(r, ni >= 0, rlabel, "epi-preimage-is-submodule",
                               "preimage is missing from the source lattice",
                               {{"source", a->desc}, {"target", b->desc}});
                  if (ni < 0) continue;
                  record_check(r, cb.c2a[ti] == ca.c2a[ni], rlabel, "epi-reflects-c2a",
                               "classical 2-absorption changed when pulling back along "
                               "a surjection",
                               {{"source", a->desc},
                                {"target", b->desc},
                                {"submodule", to_json(cb.lattice[ti])}});
                }
              }
            }
            int pos = g - 1;
            while (pos >= 0 && images[pos] == b->size - 1) {
              images[pos] = 0;
              --pos;
            }
            if (pos < 0) break;
            ++images[pos];
          }
        }
    });
  }
}

// ---------------------------------------------------------------------------
// T-MEET: the intersection of two classical prime submodules is classical
// 2-absorbing; comparable classical 2-absorbing pairs meet in the smaller.
// ---------------------------------------------------------------------------
void suite_meet(SuiteReport& r, const InstanceFamily& f) {
  auto instances = generate_instances(f);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      const LatticeCache cache =
          LatticeCache::build(inst.module, f.max_module_size, /*with_cp=*/true);
      const int t = static_cast<int>(cache.lattice.size());
      for (int i = 0; i < t; ++i) {
        if (!cache.cp[i]) continue;
        for (int j = i; j < t; ++j) {
          if (!cache.cp[j]) continue;
          const Submodule meet = submodule_intersection(cache.lattice[i], cache.lattice[j]);
          const int mi = cache.find(meet.elements);
          record_check(r, mi >= 0, label, "meet-is-submodule",
                       "intersection is missing from the lattice");
          if (mi < 0) continue;
          record_check(r, cache.c2a[mi] != 0, label, "classical-prime-meet-is-c2a",
                       "intersection of two classical prime submodules is not classical "
                       "2-absorbing",
                       {{"first", to_json(cache.lattice[i])},
                        {"second", to_json(cache.lattice[j])}});
        }
      }
      for (int i = 0; i < t; ++i) {
        if (!cache.c2a[i]) continue;
        for (int j = i; j < t; ++j) {
          if (!cache.c2a[j] || !sorted_subset(cache.lattice[i].elements,
                                              cache.lattice[j].elements))
            continue;
          const Submodule meet = submodule_intersection(cache.lattice[i], cache.lattice[j]);
          record_check(r, meet.elements == cache.lattice[i].elements, label,
                       "comparable-c2a-meet",
                       "comparable classical 2-absorbing pair does not meet in the "
                       "smaller member");
        }
      }
    });
  }
}

// ---------------------------------------------------------------------------
// T-SEP: the implication lattice between the predicates, the classical prime
// characterization, ideal-level agreements, and recorded separation searches.
// ---------------------------------------------------------------------------
void suite_sep(SuiteReport& r, const InstanceFamily& f) {
  auto instances = generate_instances(f);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      for (const Submodule& n : enumerate_submodules(inst.module, f.max_module_size)) {
        if (!n.proper()) continue;
        const bool prime = is_prime_submodule(n);
        const bool cp = is_classical_prime(n);
        const bool two = is_2_absorbing_submodule(n);
        const bool three = is_n_absorbing_submodule(n, 3);
        const bool four = is_n_absorbing_submodule(n, 4);
        const bool c2a = is_classical_2_absorbing(n);
        const nlohmann::json data = {{"submodule", to_json(n)}};
        record_check(r, !prime || cp, label, "prime-implies-classical-prime",
                     "prime submodule is not classical prime", data);
        record_check(r, !prime || two, label, "prime-implies-2-absorbing",
                     "prime submodule is not 2-absorbing", data);
        record_check(r, !cp || c2a, label, "classical-prime-implies-c2a",
                     "classical prime submodule is not classical 2-absorbing", data);
        record_check(r, !two || c2a, label, "2-absorbing-implies-c2a",
                     "2-absorbing submodule is not classical 2-absorbing", data);
        record_check(r, !two || three, label, "2-absorbing-implies-3-absorbing",
                     "2-absorbing submodule is not 3-absorbing", data);
        record_check(r, !three || four, label, "3-absorbing-implies-4-absorbing",
                     "3-absorbing submodule is not 4-absorbing", data);
        record_check(r, cp == (two && is_prime_ideal(colon_ideal_module(n))), label,
                     "classical-prime-characterization",
                     "classical prime does not match \"2-absorbing with prime "
                     "annihilator colon\"",
                     data);
      }
    });
  }

  for (const Ring& ring : family_rings(f)) {
    const std::string rlabel = "ring=" + ring->spec();
    guarded(r, rlabel, [&] {
      for (const Ideal& ideal : enumerate_ideals(ring)) {
        if (!ideal.proper()) continue;
        record_check(r, !is_prime_ideal(ideal) || is_n_absorbing_ideal(ideal, 2), rlabel,
                     "prime-ideal-implies-2-absorbing",
                     "prime ideal is not 2-absorbing", {{"ideal", to_json(ideal)}});
        record_check(r,
                     is_n_absorbing_ideal(ideal, 2) ==
                         is_n_absorbing_ideal(ideal, 2, /*strongly=*/true),
                     rlabel, "2-absorbing-strong-agreement",
                     "elementwise and strong 2-absorption disagree",
                     {{"ideal", to_json(ideal)}});
      }
    });
  }

  const std::pair<const char*, const char*> targets[] = {
      {"c2a", "classical-prime"}, {"2abs", "prime"}, {"c2a", "2abs"}};
  for (const auto& [left, right] : targets) {
    const SearchOutcome s = search_separating(left, right, f);
    if (s.found)
      record_check(r, s.replayed, instance_label(*s.instance),
                   "separation-witness-replays",
                   "separating witness failed independent replay",
                   {{"left", left}, {"right", right}});
    nlohmann::json data;
    data["left"] = left;
    data["right"] = right;
    data["found"] = s.found;
    data["submodules_checked"] = s.submodules_checked;
    if (s.found) {
      data["instance"] = instance_label(*s.instance);
      data["submodule"] = to_json(*s.submodule);
      data["witness"] = witness_json(*s.right_witness, s.instance->ring, s.instance->module);
    }
    r.findings.push_back(Finding{s.found ? instance_label(*s.instance) : "family",
                                 "separation", std::move(data)});
  }
}

// ---------------------------------------------------------------------------
// T-EX1: the power submodules (p^j) of Z_{p^(t+3)} are classical 2-absorbing
// exactly for j <= 2, with the fixed violating tuple (p, p, p; p^(j-3))
// replaying for every j >= 3.  Instances are fixed, independent of the
// family bounds.
// ---------------------------------------------------------------------------
void suite_ex1(SuiteReport& r, const InstanceFamily&) {
  for (const int p : {2, 3})
    for (const int t : {0, 1}) {
      const int n = ipow(p, t + 3);
      const Ring ring = make_ring({n});
      const Module m = make_module(ring, {Component{0, n}});
      ++r.instances;
      const std::string label = instance_label(Instance{ring, m});
      guarded(r, label, [&] {
        for (int j = 1; j <= t + 3; ++j) {
          const int gen = ipow(p, j) % n;
          const Submodule nj = submodule_generated(m, {gen});
          record_check(r, is_classical_2_absorbing(nj) == (j <= 2), label,
                       "power-submodule-c2a",
                       "classical 2-absorption of (p^j) disagrees with the j <= 2 rule",
                       {{"p", p}, {"j", j}});
          if (j >= 3) {
            const Witness w{{p, p, p}, ipow(p, j - 3)};
            record_check(
                r, witness_violates(PredicateKind::classical_2_absorbing, nj, w), label,
                "power-witness-replays",
                "the fixed tuple (p, p, p; p^(j-3)) does not violate (p^j)",
                {{"p", p}, {"j", j}});
          }
        }
      });
    }
}

// ---------------------------------------------------------------------------
// T-MIN: every instance owns at least one minimal classical 2-absorbing
// submodule; the minimal ones are pairwise incomparable, and every classical
// 2-absorbing submodule contains one (verified inside the search).
// ---------------------------------------------------------------------------
void suite_min(SuiteReport& r, const InstanceFamily& f) {
  auto instances = generate_instances(f);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      const auto mins = minimal_classical_2_absorbing(inst.module, f.max_module_size);
      record_check(r, !mins.empty(), label, "minimal-exists",
                   "no minimal classical 2-absorbing submodule found");
      bool incomparable = true;
      for (size_t i = 0; i < mins.size(); ++i)
        for (size_t j = 0; j < mins.size(); ++j)
          if (i != j && sorted_subset(mins[i].elements, mins[j].elements))
            incomparable = false;
      record_check(r, incomparable, label, "minimal-incomparable",
                   "two minimal classical 2-absorbing submodules are comparable");
    });
  }
}

// ---------------------------------------------------------------------------
// T-RAD: for a classical 2-absorbing N and m outside N, the colon ideal
// (N : m) has one or two minimal primes and its radical is their meet.  With
// a unique minimal prime P strictly above (N : m), each x in P \ (N : m)
// yields a prime colon (N : xm) containing P, and those colons form a chain.
// ---------------------------------------------------------------------------
void suite_rad(SuiteReport& r, const InstanceFamily& f) {
  long long dichotomy_checked = 0;
  long long corollary_a = 0;
  long long corollary_b = 0;

  for (const Ring& ring : family_rings(f)) {
    const std::string rlabel = "ring=" + ring->spec();
    guarded(r, rlabel, [&] {
      for (const Ideal& ideal : enumerate_ideals(ring)) {
        if (!ideal.proper()) continue;
        const auto mps = minimal_primes_over(ideal);
        record_check(r, !mps.empty(), rlabel, "minimal-primes-exist",
                     "proper ideal has no minimal prime above it",
                     {{"ideal", to_json(ideal)}});
        if (mps.empty()) continue;
        Ideal meet = mps[0];
        for (size_t i = 1; i < mps.size(); ++i)
          meet = ideal_combine(meet, mps[i], IdealOp::intersection);
        record_check(r, radical(ideal).elements == meet.elements, rlabel,
                     "radical-is-minimal-prime-meet",
                     "radical differs from the meet of the minimal primes",
                     {{"ideal", to_json(ideal)}});
      }
    });
  }

  auto instances = generate_instances(f);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      const ModuleData& md = *inst.module;
      for (const Submodule& n : enumerate_submodules(inst.module, f.max_module_size)) {
        if (!n.proper() || !is_classical_2_absorbing(n)) continue;
        for (int m = 0; m < md.size; ++m) {
          if (n.contains(m)) continue;
          const Ideal cm = colon_ideal(n, {m});
          const auto mps = minimal_primes_over(cm);
          ++dichotomy_checked;
          record_check(r, mps.size() >= 1 && mps.size() <= 2, label,
                       "colon-minimal-prime-dichotomy",
                       "colon ideal of a classical 2-absorbing submodule has more than "
                       "two minimal primes",
                       {{"element", element_coords(inst.module, m)},
                        {"count", static_cast<int>(mps.size())}});
          if (mps.size() == 1) {
            const Ideal& p = mps[0];
            if (cm.elements == p.elements) continue;
            ++corollary_a;
            std::vector<Ideal> chain;
            for (const int x : p.elements) {
              if (cm.contains(x)) continue;
              const Ideal cxm = colon_ideal(n, {md.act(x, m)});
              record_check(r, is_prime_ideal(cxm), label, "scaled-colon-prime",
                           "(N : xm) is not prime under the unique-minimal-prime "
                           "hypothesis",
                           {{"element", element_coords(inst.module, m)},
                            {"scalar", element_coords(inst.ring, x)}});
              record_check(r, sorted_subset(p.elements, cxm.elements), label,
                           "scaled-colon-contains-prime",
                           "(N : xm) does not contain the minimal prime",
                           {{"element", element_coords(inst.module, m)},
                            {"scalar", element_coords(inst.ring, x)}});
              chain.push_back(cxm);
            }
            bool ordered = true;
            for (size_t i = 0; i < chain.size() && ordered; ++i)
              for (size_t j = i + 1; j < chain.size() && ordered; ++j)
                if (!sorted_subset(chain[i].elements, chain[j].elements) &&
                    !sorted_subset(chain[j].elements, chain[i].elements))
                  ordered = false;
            record_check(r, ordered, label, "scaled-colons-totally-ordered",
                         "the scaled colon ideals do not form a chain",
                         {{"element", element_coords(inst.module, m)}});
          } else if (mps.size() == 2) {
            ++corollary_b;
          }
        }
      }
    });
  }

  r.findings.push_back(Finding{"family", "radical-coverage",
                               {{"dichotomy_checked", dichotomy_checked},
                                {"corollary_a_hypotheses", corollary_a},
                                {"corollary_b_hypotheses", corollary_b}}});
}

// ---------------------------------------------------------------------------
// T-MULT: on multiplication modules, classical 2-absorption matches the
// submodule-product characterization, and the graded chain of product
// conditions collapses as predicted.  The one unproved forward direction is
// recorded as a finding when it fails.
// ---------------------------------------------------------------------------
void suite_mult(SuiteReport& r, const InstanceFamily& f) {
  auto instances = generate_instances(f);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      if (!is_multiplication_module(inst.module, f.max_module_size)) return;
      const ModuleData& md = *inst.module;
      const IdealProducts ip = IdealProducts::build(inst.ring);
      const int q = ip.count;
      const auto lattice = enumerate_submodules(inst.module, f.max_module_size);
      const int t = static_cast<int>(lattice.size());
      std::vector<int> colon_of(t);  // submodule -> index of (N_i : M)
      for (int i = 0; i < t; ++i)
        colon_of[i] = ip.index.at(colon_ideal_module(lattice[i]).elements);

      for (int ni = 0; ni < t; ++ni) {
        const Submodule& n = lattice[ni];
        if (!n.proper()) continue;
        const bool c2a = is_classical_2_absorbing(n);
        const bool two = is_2_absorbing_submodule(n);
        const Ideal colon = colon_ideal_module(n);
        const nlohmann::json data = {{"submodule", to_json(n)}};

        // membership tables: in_im[i] = { x : I_i * x inside N },
        // in_colon[i] = I_i contained in (N : M)
        std::vector<char> in_colon(q, 0);
        for (int i = 0; i < q; ++i)
          in_colon[i] = sorted_subset(ip.ideals[i].elements, colon.elements) ? 1 : 0;
        std::vector<char> in_im(static_cast<size_t>(q) * md.size, 0);
        const std::vector<char> inside = element_mask(n.elements, md.size);
        for (int i = 0; i < q; ++i)
          for (int x = 0; x < md.size; ++x) {
            bool all = true;
            for (const int g : ip.ideals[i].generators)
              if (!inside[md.act(g, x)]) {
                all = false;
                break;
              }
            in_im[static_cast<size_t>(i) * md.size + x] = all ? 1 : 0;
          }
        const auto im = [&](int ideal, int x) {
          return in_im[static_cast<size_t>(ideal) * md.size + x] != 0;
        };

        // (a) product-times-element characterization of c2a
        bool cond_elem = true;
        for (int i = 0; i < t && cond_elem; ++i)
          for (int j = i; j < t && cond_elem; ++j) {
            const int qij = ip.at(colon_of[i], colon_of[j]);
            for (int k = j; k < t && cond_elem; ++k) {
              const int q3 = ip.at(qij, colon_of[k]);
              const int qik = ip.at(colon_of[i], colon_of[k]);
              const int qjk = ip.at(colon_of[j], colon_of[k]);
              for (int x = 0; x < md.size; ++x)
                if (im(q3, x) && !im(qij, x) && !im(qik, x) && !im(qjk, x)) {
                  cond_elem = false;
                  break;
                }
            }
          }
        record_check(r, cond_elem == c2a, label, "mult-product-element-characterization",
                     "the submodule-product-times-element condition disagrees with "
                     "classical 2-absorption",
                     data);

        // graded product conditions
        bool cond4 = true;  // N1 N2 N3 N4 inside N forces a pair with N4
        for (int i = 0; i < t && cond4; ++i)
          for (int j = i; j < t && cond4; ++j) {
            const int qij = ip.at(colon_of[i], colon_of[j]);
            for (int k = j; k < t && cond4; ++k) {
              const int q3 = ip.at(qij, colon_of[k]);
              const int qik = ip.at(colon_of[i], colon_of[k]);
              const int qjk = ip.at(colon_of[j], colon_of[k]);
              for (int d = 0; d < t; ++d) {
                if (!in_colon[ip.at(q3, colon_of[d])]) continue;
                if (!in_colon[ip.at(qij, colon_of[d])] &&
                    !in_colon[ip.at(qik, colon_of[d])] &&
                    !in_colon[ip.at(qjk, colon_of[d])]) {
                  cond4 = false;
                  break;
                }
              }
            }
          }
        bool cond3 = true;  // N1 N2 N3 inside N forces a pair
        for (int i = 0; i < t && cond3; ++i)
          for (int j = i; j < t && cond3; ++j) {
            const int qij = ip.at(colon_of[i], colon_of[j]);
            for (int k = j; k < t; ++k) {
              if (!in_colon[ip.at(qij, colon_of[k])]) continue;
              if (!in_colon[qij] && !in_colon[ip.at(colon_of[i], colon_of[k])] &&
                  !in_colon[ip.at(colon_of[j], colon_of[k])]) {
                cond3 = false;
                break;
              }
            }
          }

        record_check(r, !cond4 || cond3, label, "mult-four-implies-three",
                     "the four-submodule condition does not imply the three-submodule "
                     "condition",
                     data);
        record_check(r, !cond3 || two, label, "mult-three-implies-2-absorbing",
                     "the three-submodule condition does not imply 2-absorption", data);
        record_check(r, !two || c2a, label, "mult-2-absorbing-implies-c2a",
                     "2-absorption does not imply classical 2-absorption", data);
        record_check(r, two == is_n_absorbing_ideal(colon, 2), label,
                     "mult-2-absorbing-matches-colon",
                     "2-absorption disagrees with 2-absorption of (N : M)", data);
        if (c2a && !cond4)
          r.findings.push_back(Finding{label, "mult-forward-gap", data});
      }
    });
  }
}

// ---------------------------------------------------------------------------
// T-MAIN2: the submodule-quantified condition family.  Every condition
// implies the base implication (asserted); the reverse directions hold only
// under additional hypotheses and are recorded as findings where they fail.
// ---------------------------------------------------------------------------
void suite_main2(SuiteReport& r, const InstanceFamily& f) {
  InstanceFamily capped = f;
  capped.max_module_size = std::min(f.max_module_size, 12);
  r.family = capped;
  auto instances = generate_instances(capped);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      for (const Submodule& n : enumerate_submodules(inst.module, capped.max_module_size)) {
        if (!n.proper()) continue;
        const ConditionVector v = evaluate_main2_conditions(n, capped.max_module_size);
        const bool c2a = is_classical_2_absorbing(n);
        const bool four = is_n_absorbing_submodule(n, 4);
        const bool colon_two = is_n_absorbing_ideal(colon_ideal_module(n), 2);
        const ColonUnionOutcome cu = colon_union_check(n);
        const nlohmann::json data = {{"submodule", to_json(n)}};

        record_check(r, v.conditions[0] == c2a, label, "base-condition-matches-predicate",
                     "condition (1) disagrees with the classical 2-absorbing predicate",
                     data);
        for (int k = 1; k < 10; ++k)
          record_check(r, !v.conditions[k] || v.conditions[0], label,
                       "submodule-condition-implies-base",
                       "condition (" + std::to_string(k + 1) +
                           ") holds but the base implication fails",
                       {{"submodule", to_json(n)}, {"condition", k + 1}});
        record_check(r, !c2a || four, label, "c2a-implies-4-absorbing",
                     "classical 2-absorbing submodule is not 4-absorbing", data);
        record_check(r, !c2a || cu.union_equal, label, "c2a-colon-union",
                     "(N : abcm) is not the union of the pair colons on a classical "
                     "2-absorbing submodule",
                     data);

        for (int k = 1; k < 10; ++k)
          if (c2a && !v.conditions[k])
            r.findings.push_back(Finding{
                label, "main2-forward-gap",
                {{"submodule", to_json(n)}, {"condition", k + 1}}});
        if (c2a && !colon_two)
          r.findings.push_back(Finding{label, "colon-ideal-not-2-absorbing", data});
        if (four && colon_two && !c2a)
          r.findings.push_back(Finding{label, "four-absorbing-colon-gap", data});
        if (c2a && !cu.one_of) {
          nlohmann::json extra = data;
          if (cu.witness)
            extra["witness"] = witness_json(*cu.witness, inst.ring, inst.module);
          r.findings.push_back(Finding{label, "colon-one-of-violation", std::move(extra)});
        }
      }
    });
  }
}

// ---------------------------------------------------------------------------
// T-MCLOSED: an m-closed complement forces classical 2-absorption, and every
// maximal submodule disjoint from an m-closed set is classical 2-absorbing
// (verified inside maximal_disjoint_submodules; exercised exhaustively on
// carriers of size <= 6).
// ---------------------------------------------------------------------------
void suite_mclosed(SuiteReport& r, const InstanceFamily& f) {
  InstanceFamily capped = f;
  capped.max_module_size = std::min(f.max_module_size, 12);
  r.family = capped;
  auto instances = generate_instances(capped);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      const LatticeCache cache = LatticeCache::build(inst.module, capped.max_module_size);
      for (int ni = 0; ni < static_cast<int>(cache.lattice.size()); ++ni) {
        const Submodule& n = cache.lattice[ni];
        if (!n.proper()) continue;
        std::vector<int> complement;
        for (int x = 0; x < inst.module->size; ++x)
          if (!n.contains(x)) complement.push_back(x);
        const bool mc = is_c2a_m_closed(inst.module, complement);
        record_check(r, !mc || cache.c2a[ni], label, "m-closed-complement-implies-c2a",
                     "the complement is m-closed but the submodule is not classical "
                     "2-absorbing",
                     {{"submodule", to_json(n)}});
        if (cache.c2a[ni] && !mc)
          r.findings.push_back(Finding{label, "c2a-complement-not-m-closed",
                                       {{"submodule", to_json(n)}}});
      }

      if (inst.module->size <= 6) {
        const int size = inst.module->size;
        for (int mask = 1; mask < (1 << (size - 1)); ++mask) {
          std::vector<int> s;
          for (int x = 1; x < size; ++x)
            if (mask & (1 << (x - 1))) s.push_back(x);
          if (!is_c2a_m_closed(inst.module, s)) continue;
          nlohmann::json data = {{"set", s}};
          try {
            const auto maxs =
                maximal_disjoint_submodules(inst.module, s, capped.max_module_size);
            bool ok = !maxs.empty();
            for (const Submodule& d : maxs)
              for (const int x : s)
                if (d.contains(x)) ok = false;
            record_check(r, ok, label, "maximal-disjoint-family",
                         "maximal disjoint submodules are missing or meet the set",
                         std::move(data));
          } catch (const error& e) {
            record_check(r, false, label, "maximal-disjoint-family", e.what(),
                         std::move(data));
          }
        }
      }
    });
  }
}

// ---------------------------------------------------------------------------
// T-FLAT: k-fold free extension.  k = 1 returns the inputs; classical
// 2-absorption of N^2 inside M^2 forces that of N (asserted), while the
// forward direction genuinely fails and is recorded.
// ---------------------------------------------------------------------------
void suite_flat(SuiteReport& r, const InstanceFamily& f) {
  InstanceFamily capped = f;
  capped.max_module_size = std::min(f.max_module_size, 12);
  r.family = capped;
  auto instances = generate_instances(capped);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      const LatticeCache cache = LatticeCache::build(inst.module, capped.max_module_size);
      for (int ni = 0; ni < static_cast<int>(cache.lattice.size()); ++ni) {
        const Submodule& n = cache.lattice[ni];
        if (!n.proper()) continue;
        const auto [m1, n1] = tensor_free(inst.module, n, 1);
        record_check(r, same_module(m1, inst.module) && n1.elements == n.elements, label,
                     "free-extension-identity",
                     "1-fold free extension did not return the inputs",
                     {{"submodule", to_json(n)}});
        const auto [m2, n2] = tensor_free(inst.module, n, 2);
        const bool c2a_sq = is_classical_2_absorbing(n2);
        record_check(r, !c2a_sq || cache.c2a[ni], label, "square-c2a-restricts",
                     "N^2 is classical 2-absorbing but N is not",
                     {{"submodule", to_json(n)}});
        if (cache.c2a[ni] && !c2a_sq)
          r.findings.push_back(
              Finding{label, "flat-forward-gap", {{"submodule", to_json(n)}}});
      }
    });
  }
}

// ---------------------------------------------------------------------------
// T-LOC: classical 2-absorption localizes.  When S misses (N : M) it is
// preserved into S^-1 M; when S additionally misses the zero divisors on
// M/N it is reflected back.  Multiplicative sets are deduplicated by
// saturation; sets whose saturation contains 0 collapse everything and are
// skipped (both hypotheses fail).
// ---------------------------------------------------------------------------
void suite_loc(SuiteReport& r, const InstanceFamily& f) {
  auto instances = generate_instances(f);
  r.instances = static_cast<int>(instances.size());
  for (const Instance& inst : instances) {
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      const RingData& rd = *inst.ring;
      const auto closure = [&](std::vector<int> gens) {
        std::vector<char> in(rd.size, 0);
        in[rd.one] = 1;
        for (const int g : gens) in[g] = 1;
        bool grew = true;
        while (grew) {
          grew = false;
          std::vector<int> elems;
          for (int x = 0; x < rd.size; ++x)
            if (in[x]) elems.push_back(x);
          for (const int x : elems)
            for (const int y : elems)
              if (!in[rd.mul(x, y)]) {
                in[rd.mul(x, y)] = 1;
                grew = true;
              }
        }
        std::vector<int> out;
        for (int x = 0; x < rd.size; ++x)
          if (in[x]) out.push_back(x);
        return out;
      };
      const auto saturation = [&](const std::vector<int>& s) {
        const std::vector<char> in = element_mask(s, rd.size);
        std::vector<int> out;
        for (int x = 0; x < rd.size; ++x)
          for (int t2 = 0; t2 < rd.size; ++t2)
            if (in[rd.mul(x, t2)]) {
              out.push_back(x);
              break;
            }
        return out;
      };

      std::map<std::vector<int>, std::vector<int>> by_saturation;
      const auto consider = [&](std::vector<int> gens) {
        std::vector<int> s = closure(std::move(gens));
        std::vector<int> sat = saturation(s);
        by_saturation.emplace(std::move(sat), std::move(s));
      };
      consider({});
      for (int a = 0; a < rd.size; ++a) consider({a});
      for (int a = 0; a < rd.size; ++a)
        for (int b = a + 1; b < rd.size; ++b) consider({a, b});

      const LatticeCache cache = LatticeCache::build(inst.module, f.max_module_size);
      std::map<std::vector<int>, LatticeCache> quotient_caches;  // keyed by torsion

      for (const auto& [sat, s] : by_saturation) {
        const Localization loc = localize(inst.module, s);
        if (!loc.localized_ring) continue;  // 0 inverted: nothing to compare
        auto qit = quotient_caches.find(loc.torsion.elements);
        if (qit == quotient_caches.end())
          qit = quotient_caches
                    .emplace(loc.torsion.elements, LatticeCache::build(loc.module, 256))
                    .first;
        const LatticeCache& qcache = qit->second;
        const std::vector<char> s_mask = element_mask(s, rd.size);

        for (int ni = 0; ni < static_cast<int>(cache.lattice.size()); ++ni) {
          const Submodule& n = cache.lattice[ni];
          if (!n.proper()) continue;
          bool forward = true;
          for (const int x : colon_ideal_module(n).elements)
            if (s_mask[x]) {
              forward = false;
              break;
            }
          if (!forward) continue;  // S meets (N : M): both hypotheses fail
          bool backward = true;
          for (const int x : zero_divisors_on_quotient(n))
            if (s_mask[x]) {
              backward = false;
              break;
            }
          const Submodule image = loc.map.image_of(n);
          const int qi = qcache.find(image.elements);
          record_check(r, qi >= 0 && qcache.lattice[qi].proper(), label,
                       "localized-image-proper",
                       "the image of N stayed improper although S misses (N : M)",
                       {{"submodule", to_json(n)}, {"set", s}});
          if (qi < 0 || !qcache.lattice[qi].proper()) continue;
          record_check(r, !cache.c2a[ni] || qcache.c2a[qi], label,
                       "localization-preserves-c2a",
                       "classical 2-absorption was lost after inverting S",
                       {{"submodule", to_json(n)}, {"set", s}});
          if (backward)
            record_check(r, !qcache.c2a[qi] || cache.c2a[ni], label,
                         "localization-reflects-c2a",
                         "classical 2-absorption of the image did not pull back "
                         "although S misses the zero divisors on M/N",
                         {{"submodule", to_json(n)}, {"set", s}});
        }
      }
    });
  }
}

// ---------------------------------------------------------------------------
// T-PROD: over product rings every submodule splits along the coordinate
// blocks, and classical 2-absorption / classical primality of the whole are
// characterized by the factor patterns.
// ---------------------------------------------------------------------------
void suite_prod(SuiteReport& r, const InstanceFamily& f) {
  for (const Instance& inst : generate_instances(f)) {
    const int coords = static_cast<int>(inst.ring->moduli.size());
    if (coords < 2) continue;
    ++r.instances;
    const std::string label = instance_label(inst);
    guarded(r, label, [&] {
      std::vector<std::vector<std::vector<int>>> partitions;
      if (coords == 2) {
        partitions = {{{0}, {1}}};
      } else {
        partitions = {{{0}, {1}, {2}}, {{0, 1}, {2}}, {{0}, {1, 2}}};
      }
      const LatticeCache cache =
          LatticeCache::build(inst.module, f.max_module_size, /*with_cp=*/true);
      for (const auto& positions : partitions) {
        const DirectProduct dp = coordinate_split(inst.module, positions);
        std::vector<LatticeCache> fcaches;
        fcaches.reserve(dp.parts.size());
        for (const Module& part : dp.parts)
          fcaches.push_back(LatticeCache::build(part, 256, /*with_cp=*/true));
        for (int ni = 0; ni < static_cast<int>(cache.lattice.size()); ++ni) {
          const Submodule& n = cache.lattice[ni];
          if (!n.proper()) continue;
          const SubmoduleSplit sp = split_submodule(dp, n);
          record_check(r, sp.split, label, "submodule-splits",
                       "submodule is not the product of its block projections",
                       {{"submodule", to_json(n)}});
          if (!sp.split) continue;
          int proper_count = 0;
          bool proper_c2a = true;
          bool proper_cp = true;
          bool lookups = true;
          for (size_t pi = 0; pi < sp.factors.size(); ++pi) {
            if (!sp.factors[pi].proper()) continue;
            ++proper_count;
            const int fi = fcaches[pi].find(sp.factors[pi].elements);
            if (fi < 0) {
              lookups = false;
              continue;
            }
            proper_c2a = proper_c2a && fcaches[pi].c2a[fi];
            proper_cp = proper_cp && fcaches[pi].cp[fi];
          }
          record_check(r, lookups, label, "factor-is-submodule",
                       "a block projection is missing from the factor lattice",
                       {{"submodule", to_json(n)}});
          if (!lookups) continue;
          const bool expected_c2a = (proper_count == 1 && proper_c2a) ||
                                    (proper_count == 2 && proper_cp);
          record_check(r, (cache.c2a[ni] != 0) == expected_c2a, label,
                       "product-c2a-characterization",
                       "classical 2-absorption disagrees with the factor pattern",
                       {{"submodule", to_json(n)}});
          const bool expected_cp = proper_count == 1 && proper_cp;
          record_check(r, (cache.cp[ni] != 0) == expected_cp, label,
                       "product-classical-prime-characterization",
                       "classical primality disagrees with the factor pattern",
                       {{"submodule", to_json(n)}});
        }
      }
    });
  }
}

using SuiteFn = void (*)(SuiteReport&, const InstanceFamily&);
struct SuiteDef {
  const char* id;
  const char* tier;
  SuiteFn fn;
};

constexpr SuiteDef kSuites[] = {
    {"T-MAIN", "A", suite_main},
    {"T-MAIN-COR", "A", suite_main_cor},
    {"T-HOM", "A", suite_hom},
    {"T-MEET", "A", suite_meet},
    {"T-SEP", "A+B", suite_sep},
    {"T-EX1", "A", suite_ex1},
    {"T-MIN", "A", suite_min},
    {"T-RAD", "A", suite_rad},
    {"T-MULT", "A+B", suite_mult},
    {"T-MAIN2", "A+B", suite_main2},
    {"T-MCLOSED", "A+B", suite_mclosed},
    {"T-FLAT", "A+B", suite_flat},
    {"T-LOC", "A", suite_loc},
    {"T-PROD", "A", suite_prod},
};

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const SuiteDef& def : kSuites) ids.push_back(def.id);
  return ids;
}

SuiteReport run_suite(const std::string& id, const InstanceFamily& f) {
  for (const SuiteDef& def : kSuites) {
    if (id != def.id) continue;
    SuiteReport report;
    report.suite = def.id;
    report.tier = def.tier;
    report.family = f;
    const auto start = std::chrono::steady_clock::now();
    def.fn(report, f);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  fail(errc::unknown_id, "unknown suite id: " + id);
}

std::vector<SuiteReport> run_all_suites(const InstanceFamily& f) {
  std::vector<SuiteReport> reports;
  for (const std::string& id : suite_ids()) reports.push_back(run_suite(id, f));
  return reports;
}

std::vector<std::string> separation_predicates() {
  return {"prime", "classical-prime", "2abs", "3abs", "4abs", "c2a"};
}

namespace {

bool eval_separation_predicate(const std::string& id, const Submodule& n, Witness* w) {
  if (id == "prime") return is_prime_submodule(n, w);
  if (id == "classical-prime") return is_classical_prime(n, w);
  if (id == "2abs") return is_2_absorbing_submodule(n, w);
  if (id == "3abs") return is_n_absorbing_submodule(n, 3, w);
  if (id == "4abs") return is_n_absorbing_submodule(n, 4, w);
  if (id == "c2a") return is_classical_2_absorbing(n, w);
  fail(errc::unknown_id, "unknown predicate id: " + id);
}

PredicateKind separation_kind(const std::string& id) {
  if (id == "prime") return PredicateKind::prime;
  if (id == "classical-prime") return PredicateKind::classical_prime;
  if (id == "2abs") return PredicateKind::two_absorbing;
  if (id == "3abs" || id == "4abs") return PredicateKind::n_absorbing;
  if (id == "c2a") return PredicateKind::classical_2_absorbing;
  fail(errc::unknown_id, "unknown predicate id: " + id);
}

}  // namespace

SearchOutcome search_separating(const std::string& left, const std::string& right,
                                const InstanceFamily& f) {
  const auto preds = separation_predicates();
  for (const std::string& id : {left, right})
    if (std::find(preds.begin(), preds.end(), id) == preds.end())
      fail(errc::unknown_id, "unknown predicate id: " + id);

  SearchOutcome out;
  out.left = left;
  out.right = right;
  out.family = f;
  std::vector<std::string> labels;
  for (const Instance& inst : generate_instances(f)) {
    labels.push_back(instance_label(inst));
    for (const Submodule& n : enumerate_submodules(inst.module, f.max_module_size)) {
      if (!n.proper()) continue;
      ++out.submodules_checked;
      if (!eval_separation_predicate(left, n, nullptr)) continue;
      Witness w;
      if (eval_separation_predicate(right, n, &w)) continue;
      out.found = true;
      out.instance = inst;
      out.submodule = n;
      out.right_witness = w;
      out.replayed = witness_violates(separation_kind(right), n, w);
      return out;
    }
  }
  out.instances_enumerated = std::move(labels);
  return out;
}

}  // namespace modlat
