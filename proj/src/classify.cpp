#include "modlat/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlat/error.hpp"

namespace modlat {

namespace {

void require_proper(const Submodule& n, const char* who) {
  if (!n.module) fail(errc::invalid_input, std::string(who) + ": submodule has no module");
  if (!n.proper())
    fail(errc::improper_input, std::string(who) + ": submodule equals the whole module");
}

std::string submodule_name(const Submodule& n) {
  if (!n.proper()) return "M";
  if (n.is_zero()) return "(0)";
  std::string s = "(";
  for (size_t i = 0; i < n.generators.size(); ++i) {
    if (i) s += ",";
    s += n.module->label(n.generators[i]);
  }
  return s + ")";
}

std::vector<char> annihilator_mask(const Submodule& n) {
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  std::vector<char> in = element_mask(n.elements, md.size);
  std::vector<char> ann(rd.size, 0);
  for (int a = 0; a < rd.size; ++a) {
    bool all = true;
    for (int x = 0; x < md.size && all; ++x) all = in[md.act(a, x)] != 0;
    ann[a] = all ? 1 : 0;
  }
  return ann;
}

// Flat bit rows over a fixed universe; row i spans words [i*W, (i+1)*W).
struct BitRows {
  int words = 0;
  std::vector<uint64_t> bits;
  BitRows(int rows, int universe)
      : words((universe + 63) / 64), bits(static_cast<size_t>(rows) * words, 0) {}
  uint64_t* operator[](int i) { return bits.data() + static_cast<size_t>(i) * words; }
  const uint64_t* operator[](int i) const {
    return bits.data() + static_cast<size_t>(i) * words;
  }
  void set(int i, int x) { (*this)[i][x >> 6] |= uint64_t(1) << (x & 63); }
  bool test(int i, int x) const { return ((*this)[i][x >> 6] >> (x & 63)) & 1; }
  void clear() { std::fill(bits.begin(), bits.end(), 0); }
};

bool rows_equal(const uint64_t* a, const uint64_t* b, int w) {
  for (int i = 0; i < w; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool rows_union_equal(const uint64_t* whole, const uint64_t* a, const uint64_t* b,
                      const uint64_t* c, int w) {
  for (int i = 0; i < w; ++i)
    if (whole[i] != (a[i] | b[i] | c[i])) return false;
  return true;
}

int first_set(const uint64_t* row, int w) {
  for (int i = 0; i < w; ++i)
    if (row[i]) return i * 64 + std::countr_zero(row[i]);
  return -1;
}

// (N :_M z) for every scalar z, as bit rows over the module carrier.
BitRows scalar_colon_rows(const Submodule& n, const std::vector<char>& in) {
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  BitRows rows(rd.size, md.size);
  for (int z = 0; z < rd.size; ++z) {
    const uint16_t* t = &md.act_table[static_cast<size_t>(z) * md.size];
    for (int m = 0; m < md.size; ++m)
      if (in[t[m]]) rows.set(z, m);
  }
  return rows;
}

// (N :_R x) for every module element x, as bit rows over the ring carrier.
BitRows element_colon_rows(const Submodule& n, const std::vector<char>& in) {
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  BitRows rows(md.size, rd.size);
  for (int x = 0; x < md.size; ++x)
    for (int r = 0; r < rd.size; ++r)
      if (in[md.act(r, x)]) rows.set(x, r);
  return rows;
}

// Ideal lattice with a full pairwise product table (indices into the list).
struct IdealTable {
  std::vector<Ideal> ideals;
  std::vector<int> prod;  // ideals.size() x ideals.size()
  int count = 0;
  int at(int i, int j) const { return prod[static_cast<size_t>(i) * count + j]; }
};

IdealTable ideal_table(const Ring& ring) {
  IdealTable t;
  t.ideals = enumerate_ideals(ring);
  t.count = static_cast<int>(t.ideals.size());
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < t.count; ++i) idx[t.ideals[i].elements] = i;
  t.prod.resize(static_cast<size_t>(t.count) * t.count);
  for (int i = 0; i < t.count; ++i)
    for (int j = 0; j <= i; ++j) {
      int p = idx.at(ideal_combine(t.ideals[i], t.ideals[j], IdealOp::product).elements);
      t.prod[static_cast<size_t>(i) * t.count + j] = p;
      t.prod[static_cast<size_t>(j) * t.count + i] = p;
    }
  return t;
}

}  // namespace

const char* predicate_name(PredicateKind k) {
  switch (k) {
    case PredicateKind::prime: return "prime";
    case PredicateKind::classical_prime: return "classical-prime";
    case PredicateKind::two_absorbing: return "2-absorbing";
    case PredicateKind::n_absorbing: return "n-absorbing";
    case PredicateKind::classical_2_absorbing: return "classical-2-absorbing";
  }
  return "unknown";
}

bool is_prime_submodule(const Submodule& n, Witness* w) {
  require_proper(n, "is_prime_submodule");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  std::vector<char> in = element_mask(n.elements, md.size);
  std::vector<char> ann = annihilator_mask(n);
  for (int a = 0; a < rd.size; ++a) {
    if (ann[a]) continue;
    const uint16_t* ta = &md.act_table[static_cast<size_t>(a) * md.size];
    for (int m = 0; m < md.size; ++m)
      if (in[ta[m]] && !in[m]) {
        if (w) *w = Witness{{a}, m};
        return false;
      }
  }
  return true;
}

bool is_classical_prime(const Submodule& n, Witness* w) {
  require_proper(n, "is_classical_prime");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  std::vector<char> in = element_mask(n.elements, md.size);
  for (int a = 0; a < rd.size; ++a)
    for (int b = 0; b < rd.size; ++b) {
      const int ab = rd.mul(a, b);
      const uint16_t* tab = &md.act_table[static_cast<size_t>(ab) * md.size];
      const uint16_t* ta = &md.act_table[static_cast<size_t>(a) * md.size];
      const uint16_t* tb = &md.act_table[static_cast<size_t>(b) * md.size];
      for (int m = 0; m < md.size; ++m)
        if (in[tab[m]] && !in[ta[m]] && !in[tb[m]]) {
          if (w) *w = Witness{{a, b}, m};
          return false;
        }
    }
  return true;
}

bool is_2_absorbing_submodule(const Submodule& n, Witness* w) {
  require_proper(n, "is_2_absorbing_submodule");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  std::vector<char> in = element_mask(n.elements, md.size);
  std::vector<char> ann = annihilator_mask(n);
  for (int a = 0; a < rd.size; ++a)
    for (int b = 0; b < rd.size; ++b) {
      const int ab = rd.mul(a, b);
      if (ann[ab]) continue;
      const uint16_t* tab = &md.act_table[static_cast<size_t>(ab) * md.size];
      const uint16_t* ta = &md.act_table[static_cast<size_t>(a) * md.size];
      const uint16_t* tb = &md.act_table[static_cast<size_t>(b) * md.size];
      for (int m = 0; m < md.size; ++m)
        if (in[tab[m]] && !in[ta[m]] && !in[tb[m]]) {
          if (w) *w = Witness{{a, b}, m};
          return false;
        }
    }
  return true;
}

bool is_n_absorbing_submodule(const Submodule& n, int k, Witness* w) {
  require_proper(n, "is_n_absorbing_submodule");
  if (k < 1) fail(errc::invalid_input, "is_n_absorbing_submodule: arity must be at least 1");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  std::vector<char> in = element_mask(n.elements, md.size);
  std::vector<char> ann = annihilator_mask(n);
  // The defining implication is symmetric in the scalars, so nondecreasing
  // tuples cover every multiset once.
  std::vector<int> tup(k, 0);
  std::vector<int> pre(k + 1), suf(k + 1);
  while (true) {
    pre[0] = rd.one;
    for (int i = 0; i < k; ++i) pre[i + 1] = rd.mul(pre[i], tup[i]);
    suf[k] = rd.one;
    for (int i = k; i-- > 0;) suf[i] = rd.mul(tup[i], suf[i + 1]);
    const int full = pre[k];
    if (!ann[full]) {
      const uint16_t* tf = &md.act_table[static_cast<size_t>(full) * md.size];
      for (int m = 0; m < md.size; ++m) {
        if (!in[tf[m]]) continue;
        bool saved = false;
        for (int d = 0; d < k && !saved; ++d)
          saved = in[md.act(rd.mul(pre[d], suf[d + 1]), m)] != 0;
        if (!saved) {
          if (w) *w = Witness{tup, m};
          return false;
        }
      }
    }
    int i = k - 1;
    while (i >= 0 && tup[i] == rd.size - 1) --i;
    if (i < 0) break;
    const int v = tup[i] + 1;
    for (int j = i; j < k; ++j) tup[j] = v;
  }
  return true;
}

bool classical_2_absorbing_definitional(const Submodule& n, Witness* w) {
  require_proper(n, "classical_2_absorbing_definitional");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  std::vector<char> in = element_mask(n.elements, md.size);
  for (int a = 0; a < rd.size; ++a)
    for (int b = 0; b < rd.size; ++b) {
      const int ab = rd.mul(a, b);
      const uint16_t* tab = &md.act_table[static_cast<size_t>(ab) * md.size];
      for (int c = 0; c < rd.size; ++c) {
        const int abc = rd.mul(ab, c);
        const int ac = rd.mul(a, c);
        const int bc = rd.mul(b, c);
        const uint16_t* tabc = &md.act_table[static_cast<size_t>(abc) * md.size];
        const uint16_t* tac = &md.act_table[static_cast<size_t>(ac) * md.size];
        const uint16_t* tbc = &md.act_table[static_cast<size_t>(bc) * md.size];
        for (int m = 0; m < md.size; ++m)
          if (in[tabc[m]] && !in[tab[m]] && !in[tac[m]] && !in[tbc[m]]) {
            if (w) *w = Witness{{a, b, c}, m};
            return false;
          }
      }
    }
  return true;
}

bool classical_2_absorbing_by_colons(const Submodule& n, Witness* w) {
  require_proper(n, "classical_2_absorbing_by_colons");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  const int R = rd.size;
  const int WR = (R + 63) / 64;
  std::vector<char> in = element_mask(n.elements, md.size);
  // Distinct colon ideals repeat across elements; cache the verdict (and the
  // first violating scalar triple) per element set.
  std::map<std::vector<char>, std::optional<std::array<int, 3>>> cache;
  std::vector<uint64_t> viol(WR);
  for (int m = 0; m < md.size; ++m) {
    if (in[m]) continue;
    std::vector<char> k(R, 0);
    for (int r = 0; r < R; ++r) k[r] = in[md.act(r, m)];
    auto it = cache.find(k);
    if (it == cache.end()) {
      // 2-absorbing test of the colon set: it is a proper ideal because m
      // stays outside N.  cz[z] = { c : z*c lands in the colon set }.
      BitRows cz(R, R);
      for (int z = 0; z < R; ++z) {
        const uint16_t* mz = &rd.mul_table[static_cast<size_t>(z) * R];
        for (int c = 0; c < R; ++c)
          if (k[mz[c]]) cz.set(z, c);
      }
      std::optional<std::array<int, 3>> bad;
      for (int a = 0; a < R && !bad; ++a)
        for (int b = 0; b < R && !bad; ++b) {
          const int ab = rd.mul(a, b);
          if (k[ab]) continue;
          const uint64_t* vab = cz[ab];
          const uint64_t* va = cz[a];
          const uint64_t* vb = cz[b];
          for (int i = 0; i < WR; ++i) viol[i] = vab[i] & ~va[i] & ~vb[i];
          const int c = first_set(viol.data(), WR);
          if (c >= 0) bad = std::array<int, 3>{a, b, c};
        }
      it = cache.emplace(std::move(k), bad).first;
    }
    if (it->second) {
      if (w) *w = Witness{{(*it->second)[0], (*it->second)[1], (*it->second)[2]}, m};
      return false;
    }
  }
  return true;
}

bool is_classical_2_absorbing(const Submodule& n, Witness* w) {
  Witness wd;
  const bool by_definition = classical_2_absorbing_definitional(n, &wd);
  const bool by_colons = classical_2_absorbing_by_colons(n, nullptr);
  if (by_definition != by_colons)
    fail(errc::check_failed,
         "classical 2-absorbing routes disagree on " + submodule_name(n) + " in " +
             n.module->desc + " (definitional=" + (by_definition ? "true" : "false") +
             ", colon=" + (by_colons ? "true" : "false") + ")");
  if (!by_definition && w) *w = wd;
  return by_definition;
}

bool witness_violates(PredicateKind kind, const Submodule& n, const Witness& w) {
  require_proper(n, "witness_violates");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  for (int a : w.scalars)
    if (a < 0 || a >= rd.size)
      fail(errc::invalid_input, "witness_violates: scalar out of range");
  if (w.element < 0 || w.element >= md.size)
    fail(errc::invalid_input, "witness_violates: element out of range");
  auto expect = [&](size_t arity) {
    if (w.scalars.size() != arity)
      fail(errc::invalid_input, "witness_violates: wrong scalar count for " +
                                    std::string(predicate_name(kind)));
  };
  auto in = [&](int x) { return n.contains(x); };
  auto outside_annihilator = [&](int r) {
    for (int x = 0; x < md.size; ++x)
      if (!in(md.act(r, x))) return true;
    return false;
  };
  const int m = w.element;
  switch (kind) {
    case PredicateKind::prime: {
      expect(1);
      const int a = w.scalars[0];
      return in(md.act(a, m)) && !in(m) && outside_annihilator(a);
    }
    case PredicateKind::classical_prime: {
      expect(2);
      const int a = w.scalars[0], b = w.scalars[1];
      return in(md.act(rd.mul(a, b), m)) && !in(md.act(a, m)) && !in(md.act(b, m));
    }
    case PredicateKind::two_absorbing: {
      expect(2);
      const int a = w.scalars[0], b = w.scalars[1];
      const int ab = rd.mul(a, b);
      return in(md.act(ab, m)) && !in(md.act(a, m)) && !in(md.act(b, m)) &&
             outside_annihilator(ab);
    }
    case PredicateKind::n_absorbing: {
      if (w.scalars.empty())
        fail(errc::invalid_input, "witness_violates: n-absorbing needs scalars");
      const int k = static_cast<int>(w.scalars.size());
      int full = rd.one;
      for (int a : w.scalars) full = rd.mul(full, a);
      if (!in(md.act(full, m)) || !outside_annihilator(full)) return false;
      for (int d = 0; d < k; ++d) {
        int p = rd.one;
        for (int i = 0; i < k; ++i)
          if (i != d) p = rd.mul(p, w.scalars[i]);
        if (in(md.act(p, m))) return false;
      }
      return true;
    }
    case PredicateKind::classical_2_absorbing: {
      expect(3);
      const int a = w.scalars[0], b = w.scalars[1], c = w.scalars[2];
      const int ab = rd.mul(a, b), ac = rd.mul(a, c), bc = rd.mul(b, c);
      return in(md.act(rd.mul(ab, c), m)) && !in(md.act(ab, m)) && !in(md.act(ac, m)) &&
             !in(md.act(bc, m));
    }
  }
  return false;
}

Classification classify_all(const Module& m, const ClassifyOptions& opts) {
  if (!m) fail(errc::invalid_input, "classify_all: null module");
  Classification out;
  out.module = m;
  out.lattice = enumerate_submodules(m, opts.max_module_size);
  const int count = static_cast<int>(out.lattice.size());

  for (int li = 0; li < count; ++li) {
    const Submodule& n = out.lattice[li];
    if (!n.proper()) continue;
    ClassificationRecord rec;
    rec.lattice_index = li;
    Witness w;
    rec.prime = is_prime_submodule(n, &w);
    if (!rec.prime) rec.prime_witness = w;
    rec.classical_prime = is_classical_prime(n, &w);
    if (!rec.classical_prime) rec.classical_prime_witness = w;
    rec.two_absorbing = is_2_absorbing_submodule(n, &w);
    if (!rec.two_absorbing) rec.two_absorbing_witness = w;
    rec.classical_2_absorbing = is_classical_2_absorbing(n, &w);
    if (!rec.classical_2_absorbing) rec.classical_2_absorbing_witness = w;
    for (int k = 2; k <= opts.nabs_max; ++k) {
      const bool flag = is_n_absorbing_submodule(n, k, &w);
      rec.n_absorbing[k] = flag;
      if (!flag) rec.n_absorbing_witnesses[k] = w;
    }
    if (opts.colon_profile) {
      for (int x = 0; x < m->size; ++x)
        if (!n.contains(x)) rec.colon_profile.emplace_back(x, colon_ideal(n, {x}));
      bool all_two_absorbing = true;
      for (const auto& [x, colon] : rec.colon_profile)
        if (!is_n_absorbing_ideal(colon, 2)) {
          all_two_absorbing = false;
          break;
        }
      if (all_two_absorbing != rec.classical_2_absorbing)
        fail(errc::check_failed, "classify_all: colon profile contradicts the classical "
                                 "2-absorbing flag on " +
                                     submodule_name(n) + " in " + m->desc);
    }
    out.records.push_back(std::move(rec));
  }

  // Hasse diagram: strict containment minus transitive edges.
  std::vector<std::vector<char>> below(count, std::vector<char>(count, 0));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && out.lattice[i].elements.size() < out.lattice[j].elements.size() &&
          sorted_subset(out.lattice[i].elements, out.lattice[j].elements))
        below[i][j] = 1;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < count && cover; ++k)
        if (below[i][k] && below[k][j]) cover = false;
      if (cover) out.hasse.emplace_back(i, j);
    }
  return out;
}

std::vector<Submodule> minimal_classical_2_absorbing(const Module& m, int max_module_size) {
  if (!m) fail(errc::invalid_input, "minimal_classical_2_absorbing: null module");
  std::vector<Submodule> lattice = enumerate_submodules(m, max_module_size);
  std::vector<int> flagged;
  for (int i = 0; i < static_cast<int>(lattice.size()); ++i)
    if (lattice[i].proper() && is_classical_2_absorbing(lattice[i])) flagged.push_back(i);
  std::vector<Submodule> minimal;
  std::vector<int> minimal_idx;
  for (int i : flagged) {
    bool is_min = true;
    for (int j : flagged)
      if (j != i && lattice[j].elements.size() < lattice[i].elements.size() &&
          sorted_subset(lattice[j].elements, lattice[i].elements)) {
        is_min = false;
        break;
      }
    if (is_min) {
      minimal.push_back(lattice[i]);
      minimal_idx.push_back(i);
    }
  }
  // Finiteness guarantees every flagged submodule sits above a minimal one.
  for (int i : flagged) {
    bool covered = false;
    for (int j : minimal_idx)
      if (sorted_subset(lattice[j].elements, lattice[i].elements)) {
        covered = true;
        break;
      }
    if (!covered)
      fail(errc::check_failed,
           "minimal_classical_2_absorbing: " + submodule_name(lattice[i]) + " in " +
               m->desc + " contains no minimal classical 2-absorbing submodule");
  }
  return minimal;
}

bool ConditionVector::all_true() const {
  for (bool b : conditions)
    if (!b) return false;
  return true;
}

bool ConditionVector::all_equal() const {
  for (bool b : conditions)
    if (b != conditions[0]) return false;
  return true;
}

ConditionVector evaluate_main_conditions(const Submodule& n) {
  require_proper(n, "evaluate_main_conditions");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  const int R = rd.size, S = md.size;
  const int WR = (R + 63) / 64, WS = (S + 63) / 64;
  std::vector<char> in = element_mask(n.elements, S);
  BitRows colM = scalar_colon_rows(n, in);   // (N :_M z) over M
  BitRows colR = element_colon_rows(n, in);  // (N :_R x) over R
  IdealTable it = ideal_table(md.ring);
  const int Q = it.count;

  // { x : I*x ⊆ N } per ideal (membership through the generators suffices:
  // every ideal element is an R-combination of them).
  BitRows inIM(Q, S);
  for (int i = 0; i < Q; ++i)
    for (int x = 0; x < S; ++x) {
      bool all = true;
      for (int g : it.ideals[i].generators)
        if (!in[md.act(g, x)]) {
          all = false;
          break;
        }
      if (all) inIM.set(i, x);
    }
  // (N :_R I*x) = { r : I*(r*x) ⊆ N } per (ideal, element).
  BitRows colRI(Q * S, R);
  for (int i = 0; i < Q; ++i)
    for (int x = 0; x < S; ++x)
      for (int r = 0; r < R; ++r)
        if (inIM.test(i, md.act(r, x))) colRI.set(i * S + x, r);

  ConditionVector out;

  // (1) abc*m in N forces one of the three pair products to keep m in N.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int c = 0; c < R && ok; ++c) {
          const int abc = rd.mul(ab, c), ac = rd.mul(a, c), bc = rd.mul(b, c);
          for (int m = 0; m < S; ++m)
            if (in[md.act(abc, m)] && !in[md.act(ab, m)] && !in[md.act(ac, m)] &&
                !in[md.act(bc, m)]) {
              ok = false;
              break;
            }
        }
      }
    out.conditions[0] = ok;
  }

  // (2) (N :_M abc) is the union of the three pair colons.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int c = 0; c < R && ok; ++c) {
          const int abc = rd.mul(ab, c), ac = rd.mul(a, c), bc = rd.mul(b, c);
          if (!rows_union_equal(colM[abc], colM[ab], colM[ac], colM[bc], WS)) ok = false;
        }
      }
    out.conditions[1] = ok;
  }

  // (3) For ab*m outside N, (N :_R abm) is the union of (N :_R am), (N :_R bm).
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int m = 0; m < S && ok; ++m) {
          const int y = md.act(ab, m);
          if (in[y]) continue;
          const uint64_t* whole = colR[y];
          const uint64_t* pa = colR[md.act(a, m)];
          const uint64_t* pb = colR[md.act(b, m)];
          for (int i = 0; i < WR; ++i)
            if (whole[i] != (pa[i] | pb[i])) {
              ok = false;
              break;
            }
        }
      }
    out.conditions[2] = ok;
  }

  // (4) For ab*m outside N, (N :_R abm) equals one of the two colons.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int m = 0; m < S && ok; ++m) {
          const int y = md.act(ab, m);
          if (in[y]) continue;
          const uint64_t* whole = colR[y];
          if (!rows_equal(whole, colR[md.act(a, m)], WR) &&
              !rows_equal(whole, colR[md.act(b, m)], WR))
            ok = false;
        }
      }
    out.conditions[3] = ok;
  }

  // (5) abI*m ⊆ N forces ab*m in N or aI*m ⊆ N or bI*m ⊆ N.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int i = 0; i < Q && ok; ++i)
          for (int m = 0; m < S; ++m) {
            const int y = md.act(ab, m);
            if (!inIM.test(i, y)) continue;
            if (!in[y] && !inIM.test(i, md.act(a, m)) && !inIM.test(i, md.act(b, m))) {
              ok = false;
              break;
            }
          }
      }
    out.conditions[4] = ok;
  }

  // (6) For aI*m not inside N, (N :_R aIm) equals (N :_R am) or (N :_R Im).
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int i = 0; i < Q && ok; ++i)
        for (int m = 0; m < S && ok; ++m) {
          const int am = md.act(a, m);
          if (inIM.test(i, am)) continue;
          const uint64_t* whole = colRI[i * S + am];
          if (!rows_equal(whole, colR[am], WR) && !rows_equal(whole, colRI[i * S + m], WR))
            ok = false;
        }
    out.conditions[5] = ok;
  }

  // (7) aIJ*m ⊆ N forces aI*m ⊆ N or aJ*m ⊆ N or IJ*m ⊆ N.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int i = 0; i < Q && ok; ++i)
        for (int j = 0; j < Q && ok; ++j) {
          const int p = it.at(i, j);
          for (int m = 0; m < S; ++m) {
            const int am = md.act(a, m);
            if (!inIM.test(p, am)) continue;
            if (!inIM.test(i, am) && !inIM.test(j, am) && !inIM.test(p, m)) {
              ok = false;
              break;
            }
          }
        }
    out.conditions[6] = ok;
  }

  // (8) For IJ*m not inside N, (N :_R IJm) equals (N :_R Im) or (N :_R Jm).
  {
    bool ok = true;
    for (int i = 0; i < Q && ok; ++i)
      for (int j = 0; j < Q && ok; ++j) {
        const int p = it.at(i, j);
        for (int m = 0; m < S && ok; ++m) {
          if (inIM.test(p, m)) continue;
          const uint64_t* whole = colRI[p * S + m];
          if (!rows_equal(whole, colRI[i * S + m], WR) &&
              !rows_equal(whole, colRI[j * S + m], WR))
            ok = false;
        }
      }
    out.conditions[7] = ok;
  }

  // (9) IJK*m ⊆ N forces one of the three pair products to act into N.
  {
    bool ok = true;
    for (int i = 0; i < Q && ok; ++i)
      for (int j = 0; j < Q && ok; ++j) {
        const int ij = it.at(i, j);
        for (int k = 0; k < Q && ok; ++k) {
          const int ijk = it.at(ij, k);
          const int ik = it.at(i, k), jk = it.at(j, k);
          for (int m = 0; m < S; ++m) {
            if (!inIM.test(ijk, m)) continue;
            if (!inIM.test(ij, m) && !inIM.test(ik, m) && !inIM.test(jk, m)) {
              ok = false;
              break;
            }
          }
        }
      }
    out.conditions[8] = ok;
  }

  // (10) Every colon ideal (N :_R m) with m outside N is 2-absorbing.
  {
    bool ok = true;
    BitRows cz(R, R);
    for (int m = 0; m < S && ok; ++m) {
      if (in[m]) continue;
      cz.clear();
      for (int z = 0; z < R; ++z) {
        const uint16_t* mz = &rd.mul_table[static_cast<size_t>(z) * R];
        for (int c = 0; c < R; ++c)
          if (colR.test(m, mz[c])) cz.set(z, c);
      }
      for (int a = 0; a < R && ok; ++a)
        for (int b = 0; b < R && ok; ++b) {
          const int ab = rd.mul(a, b);
          if (colR.test(m, ab)) continue;
          const uint64_t* vab = cz[ab];
          const uint64_t* va = cz[a];
          const uint64_t* vb = cz[b];
          for (int i = 0; i < WR; ++i)
            if (vab[i] & ~va[i] & ~vb[i]) {
              ok = false;
              break;
            }
        }
    }
    out.conditions[9] = ok;
  }

  return out;
}

ConditionVector evaluate_main2_conditions(const Submodule& n, int max_module_size) {
  require_proper(n, "evaluate_main2_conditions");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  const int R = rd.size, S = md.size;
  const int WR = (R + 63) / 64, WS = (S + 63) / 64;
  std::vector<char> in = element_mask(n.elements, S);
  BitRows colM = scalar_colon_rows(n, in);
  std::vector<Submodule> subs = enumerate_submodules(n.module, max_module_size);
  const int T = static_cast<int>(subs.size());
  IdealTable it = ideal_table(md.ring);
  const int Q = it.count;

  // D[L] = (N :_R L) = { y : y*L ⊆ N }; the generators of L suffice.
  BitRows D(T, R);
  for (int l = 0; l < T; ++l)
    for (int y = 0; y < R; ++y) {
      bool all = true;
      for (int g : subs[l].generators)
        if (!in[md.act(y, g)]) {
          all = false;
          break;
        }
      if (all) D.set(l, y);
    }
  // F[i][L] = (N :_R I*L) = { x : x*I*L ⊆ N }, via both generator sets.
  BitRows F(Q * T, R);
  for (int i = 0; i < Q; ++i)
    for (int l = 0; l < T; ++l)
      for (int x = 0; x < R; ++x) {
        bool all = true;
        for (int gi : it.ideals[i].generators) {
          const int xg = rd.mul(x, gi);
          if (!D.test(l, xg)) {
            all = false;
            break;
          }
        }
        if (all) F.set(i * T + l, x);
      }
  // CS[L][z] = { r : r*z*L ⊆ N } and CF[i][L][z] = { r : r*z*I*L ⊆ N }.
  BitRows CS(T * R, R);
  for (int l = 0; l < T; ++l)
    for (int z = 0; z < R; ++z) {
      const uint16_t* mz = &rd.mul_table[static_cast<size_t>(z) * R];
      for (int r = 0; r < R; ++r)
        if (D.test(l, mz[r])) CS.set(l * R + z, r);
    }
  BitRows CF(Q * T * R, R);
  for (int i = 0; i < Q; ++i)
    for (int l = 0; l < T; ++l)
      for (int z = 0; z < R; ++z) {
        const uint16_t* mz = &rd.mul_table[static_cast<size_t>(z) * R];
        for (int r = 0; r < R; ++r)
          if (F.test(i * T + l, mz[r])) CF.set((i * T + l) * R + z, r);
      }

  ConditionVector out;

  // (1) The defining element implication.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int c = 0; c < R && ok; ++c) {
          const int abc = rd.mul(ab, c), ac = rd.mul(a, c), bc = rd.mul(b, c);
          for (int m = 0; m < S; ++m)
            if (in[md.act(abc, m)] && !in[md.act(ab, m)] && !in[md.act(ac, m)] &&
                !in[md.act(bc, m)]) {
              ok = false;
              break;
            }
        }
      }
    out.conditions[0] = ok;
  }

  // (2) (N :_M abc) equals one of the three pair colons.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int c = 0; c < R && ok; ++c) {
          const int abc = rd.mul(ab, c), ac = rd.mul(a, c), bc = rd.mul(b, c);
          if (!rows_equal(colM[abc], colM[ab], WS) && !rows_equal(colM[abc], colM[ac], WS) &&
              !rows_equal(colM[abc], colM[bc], WS))
            ok = false;
        }
      }
    out.conditions[1] = ok;
  }

  // (3) abc*L ⊆ N forces ab*L or ac*L or bc*L into N.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int c = 0; c < R && ok; ++c) {
          const int abc = rd.mul(ab, c), ac = rd.mul(a, c), bc = rd.mul(b, c);
          for (int l = 0; l < T; ++l)
            if (D.test(l, abc) && !D.test(l, ab) && !D.test(l, ac) && !D.test(l, bc)) {
              ok = false;
              break;
            }
        }
      }
    out.conditions[2] = ok;
  }

  // (4) For ab*L not inside N, (N :_R abL) equals (N :_R aL) or (N :_R bL).
  {
    bool ok = true;
    for (int l = 0; l < T && ok; ++l)
      for (int a = 0; a < R && ok; ++a)
        for (int b = 0; b < R && ok; ++b) {
          const int ab = rd.mul(a, b);
          if (D.test(l, ab)) continue;
          const uint64_t* whole = CS[l * R + ab];
          if (!rows_equal(whole, CS[l * R + a], WR) && !rows_equal(whole, CS[l * R + b], WR))
            ok = false;
        }
    out.conditions[3] = ok;
  }

  // (5) abI*L ⊆ N forces ab*L ⊆ N or aI*L ⊆ N or bI*L ⊆ N.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int b = 0; b < R && ok; ++b) {
        const int ab = rd.mul(a, b);
        for (int i = 0; i < Q && ok; ++i)
          for (int l = 0; l < T; ++l) {
            if (!F.test(i * T + l, ab)) continue;
            if (!D.test(l, ab) && !F.test(i * T + l, a) && !F.test(i * T + l, b)) {
              ok = false;
              break;
            }
          }
      }
    out.conditions[4] = ok;
  }

  // (6) For aI*L not inside N, (N :_R aIL) equals (N :_R aL) or (N :_R IL).
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int i = 0; i < Q && ok; ++i)
        for (int l = 0; l < T && ok; ++l) {
          if (F.test(i * T + l, a)) continue;
          const uint64_t* whole = CF[(i * T + l) * R + a];
          if (!rows_equal(whole, CS[l * R + a], WR) && !rows_equal(whole, F[i * T + l], WR))
            ok = false;
        }
    out.conditions[5] = ok;
  }

  // (7) aIJ*L ⊆ N forces aI*L ⊆ N or aJ*L ⊆ N or IJ*L ⊆ N.
  {
    bool ok = true;
    for (int a = 0; a < R && ok; ++a)
      for (int i = 0; i < Q && ok; ++i)
        for (int j = 0; j < Q && ok; ++j) {
          const int p = it.at(i, j);
          for (int l = 0; l < T; ++l) {
            if (!F.test(p * T + l, a)) continue;
            if (!F.test(i * T + l, a) && !F.test(j * T + l, a) &&
                !F.test(p * T + l, rd.one)) {
              ok = false;
              break;
            }
          }
        }
    out.conditions[6] = ok;
  }

  // (8) For IJ*L not inside N, (N :_R IJL) equals (N :_R IL) or (N :_R JL).
  {
    bool ok = true;
    for (int i = 0; i < Q && ok; ++i)
      for (int j = 0; j < Q && ok; ++j) {
        const int p = it.at(i, j);
        for (int l = 0; l < T && ok; ++l) {
          if (F.test(p * T + l, rd.one)) continue;
          const uint64_t* whole = F[p * T + l];
          if (!rows_equal(whole, F[i * T + l], WR) && !rows_equal(whole, F[j * T + l], WR))
            ok = false;
        }
      }
    out.conditions[7] = ok;
  }

  // (9) IJK*L ⊆ N forces one of the three pair products to push L into N.
  {
    bool ok = true;
    for (int i = 0; i < Q && ok; ++i)
      for (int j = 0; j < Q && ok; ++j) {
        const int ij = it.at(i, j);
        for (int k = 0; k < Q && ok; ++k) {
          const int ijk = it.at(ij, k);
          const int ik = it.at(i, k), jk = it.at(j, k);
          for (int l = 0; l < T; ++l) {
            if (!F.test(ijk * T + l, rd.one)) continue;
            if (!F.test(ij * T + l, rd.one) && !F.test(ik * T + l, rd.one) &&
                !F.test(jk * T + l, rd.one)) {
              ok = false;
              break;
            }
          }
        }
      }
    out.conditions[8] = ok;
  }

  // (10) (N :_R L) is a 2-absorbing ideal for every L not inside N.
  {
    bool ok = true;
    BitRows cz(R, R);
    for (int l = 0; l < T && ok; ++l) {
      if (sorted_subset(subs[l].elements, n.elements)) continue;
      cz.clear();
      for (int z = 0; z < R; ++z) {
        const uint16_t* mz = &rd.mul_table[static_cast<size_t>(z) * R];
        for (int c = 0; c < R; ++c)
          if (D.test(l, mz[c])) cz.set(z, c);
      }
      for (int a = 0; a < R && ok; ++a)
        for (int b = 0; b < R && ok; ++b) {
          const int ab = rd.mul(a, b);
          if (D.test(l, ab)) continue;
          const uint64_t* vab = cz[ab];
          const uint64_t* va = cz[a];
          const uint64_t* vb = cz[b];
          for (int i = 0; i < WR; ++i)
            if (vab[i] & ~va[i] & ~vb[i]) {
              ok = false;
              break;
            }
        }
    }
    out.conditions[9] = ok;
  }

  return out;
}

ColonUnionOutcome colon_union_check(const Submodule& n) {
  require_proper(n, "colon_union_check");
  const ModuleData& md = *n.module;
  const RingData& rd = *md.ring;
  const int R = rd.size, S = md.size;
  const int WR = (R + 63) / 64;
  std::vector<char> in = element_mask(n.elements, S);
  BitRows colR = element_colon_rows(n, in);
  ColonUnionOutcome out;
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      const int ab = rd.mul(a, b);
      for (int c = 0; c < R; ++c) {
        const int abc = rd.mul(ab, c), ac = rd.mul(a, c), bc = rd.mul(b, c);
        for (int m = 0; m < S; ++m) {
          const uint64_t* whole = colR[md.act(abc, m)];
          const uint64_t* p1 = colR[md.act(ab, m)];
          const uint64_t* p2 = colR[md.act(ac, m)];
          const uint64_t* p3 = colR[md.act(bc, m)];
          const bool union_ok = rows_union_equal(whole, p1, p2, p3, WR);
          const bool one_ok = rows_equal(whole, p1, WR) || rows_equal(whole, p2, WR) ||
                              rows_equal(whole, p3, WR);
          if ((!union_ok || !one_ok) && !out.witness) out.witness = Witness{{a, b, c}, m};
          out.union_equal = out.union_equal && union_ok;
          out.one_of = out.one_of && one_ok;
          if (!out.union_equal && !out.one_of) return out;
        }
      }
    }
  return out;
}

namespace {

std::vector<char> checked_meet_mask(const ModuleData& md, const std::vector<int>& s,
                                    const char* who) {
  std::vector<char> mask(md.size, 0);
  for (int x : s) {
    if (x < 0 || x >= md.size)
      fail(errc::invalid_input, std::string(who) + ": element out of range");
    if (x == 0) fail(errc::invalid_input, std::string(who) + ": elements must be nonzero");
    mask[x] = 1;
  }
  return mask;
}

}  // namespace

bool is_c2a_m_closed(const Module& m, const std::vector<int>& s, long long max_cost) {
  if (!m) fail(errc::invalid_input, "is_c2a_m_closed: null module");
  const ModuleData& md = *m;
  std::vector<char> in_s = checked_meet_mask(md, s, "is_c2a_m_closed");

  std::vector<Ideal> ideals = enumerate_ideals(md.ring);
  std::vector<Submodule> subs = enumerate_submodules(m);
  const long long q = static_cast<long long>(ideals.size());
  const long long t = static_cast<long long>(subs.size());
  const long long triples = q * (q + 1) * (q + 2) / 6;
  const long long cost = triples * t * t + q * q * 4 + q * t * 16 + t * t * 16;
  if (cost > max_cost)
    fail(errc::size_limit, "is_c2a_m_closed: quantifier space exceeds the cost bound");

  std::map<std::vector<int>, int> sub_index;
  for (int i = 0; i < t; ++i) sub_index[subs[i].elements] = i;
  std::map<std::vector<int>, int> ideal_index;
  for (int i = 0; i < q; ++i) ideal_index[ideals[i].elements] = i;

  std::vector<int> prod(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j <= i; ++j) {
      int p = ideal_index.at(ideal_combine(ideals[i], ideals[j], IdealOp::product).elements);
      prod[static_cast<size_t>(i) * q + j] = p;
      prod[static_cast<size_t>(j) * q + i] = p;
    }

  // I*L per (ideal, submodule), generated by products of the two generator sets.
  std::vector<int> times(static_cast<size_t>(q) * t);
  for (int i = 0; i < q; ++i)
    for (int l = 0; l < t; ++l) {
      std::vector<int> gens;
      for (int gi : ideals[i].generators)
        for (int gl : subs[l].generators) gens.push_back(md.act(gi, gl));
      times[static_cast<size_t>(i) * t + l] =
          sub_index.at(submodule_generated(m, gens).elements);
    }

  std::vector<char> sum_meets(static_cast<size_t>(t) * t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j <= i; ++j) {
      const Submodule& sum = i == j ? subs[i] : submodule_sum(subs[i], subs[j]);
      char meets = 0;
      for (int x : sum.elements)
        if (in_s[x]) {
          meets = 1;
          break;
        }
      sum_meets[static_cast<size_t>(i) * t + j] = meets;
      sum_meets[static_cast<size_t>(j) * t + i] = meets;
    }

  // The hypothesis triple is symmetric in (I, J, Q): one representative each.
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) {
      const int ij = prod[static_cast<size_t>(i) * q + j];
      for (int k = j; k < q; ++k) {
        const int ik = prod[static_cast<size_t>(i) * q + k];
        const int jk = prod[static_cast<size_t>(j) * q + k];
        const int ijk = prod[static_cast<size_t>(ij) * q + k];
        for (int l = 0; l < t; ++l) {
          const int a = times[static_cast<size_t>(ij) * t + l];
          const int b = times[static_cast<size_t>(ik) * t + l];
          const int c = times[static_cast<size_t>(jk) * t + l];
          const int d = times[static_cast<size_t>(ijk) * t + l];
          const char* row_a = &sum_meets[static_cast<size_t>(a) * t];
          const char* row_b = &sum_meets[static_cast<size_t>(b) * t];
          const char* row_c = &sum_meets[static_cast<size_t>(c) * t];
          const char* row_d = &sum_meets[static_cast<size_t>(d) * t];
          for (int kk = 0; kk < t; ++kk)
            if (row_a[kk] && row_b[kk] && row_c[kk] && !row_d[kk]) return false;
        }
      }
    }
  return true;
}

std::vector<Submodule> maximal_disjoint_submodules(const Module& m,
                                                   const std::vector<int>& s,
                                                   int max_module_size) {
  if (!m) fail(errc::invalid_input, "maximal_disjoint_submodules: null module");
  if (s.empty())
    fail(errc::invalid_input, "maximal_disjoint_submodules: the set must be nonempty");
  const ModuleData& md = *m;
  std::vector<char> in_s = checked_meet_mask(md, s, "maximal_disjoint_submodules");
  if (!is_c2a_m_closed(m, s))
    fail(errc::precondition_failed,
         "maximal_disjoint_submodules: the set is not classical 2-absorbing m-closed");

  std::vector<Submodule> subs = enumerate_submodules(m, max_module_size);
  const int t = static_cast<int>(subs.size());
  std::vector<char> disjoint(t, 0);
  for (int i = 0; i < t; ++i) {
    bool meets = false;
    for (int x : subs[i].elements)
      if (in_s[x]) {
        meets = true;
        break;
      }
    disjoint[i] = meets ? 0 : 1;
  }
  std::vector<Submodule> out;
  for (int i = 0; i < t; ++i) {
    if (!disjoint[i]) continue;
    bool maximal = true;
    for (int j = 0; j < t && maximal; ++j)
      if (j != i && disjoint[j] &&
          subs[i].elements.size() < subs[j].elements.size() &&
          sorted_subset(subs[i].elements, subs[j].elements))
        maximal = false;
    if (!maximal) continue;
    // M itself meets the nonempty set, so every maximal element is proper.
    if (!is_classical_2_absorbing(subs[i]))
      fail(errc::check_failed,
           "maximal_disjoint_submodules: maximal element " + submodule_name(subs[i]) +
               " in " + md.desc + " is not classical 2-absorbing");
    out.push_back(subs[i]);
  }
  return out;
}

}  // namespace modlat
