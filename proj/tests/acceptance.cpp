// Acceptance gate: every release criterion evaluated end to end, one
// PASS/FAIL line per criterion on stdout.  Exit code 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "modlat/classify.hpp"
#include "modlat/error.hpp"
#include "modlat/harness.hpp"
#include "modlat/json_io.hpp"

using namespace modlat;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Gate {
  int passed = 0;
  int failed = 0;
  void report(const std::string& id, bool ok, const std::string& note) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), note.c_str());
    std::fflush(stdout);
    (ok ? passed : failed) += 1;
  }
};

std::string count_note(long long checks, double secs) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%lld checks in %.1fs", checks, secs);
  return buf;
}

}  // namespace

int main() {
  Gate gate;
  InstanceFamily dflt;  // full default bounds

  // ---- criterion 1: the ten-condition equivalence suite on the reduced
  // family (single moduli <= 12, paired <= 4, |M| <= 24) within 3 minutes.
  {
    InstanceFamily f;
    f.max_modulus = 12;
    f.max_pair_modulus = 4;
    f.include_triple = false;
    f.max_module_size = 24;
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r = run_suite("T-MAIN", f);
    double secs = seconds_since(t0);
    bool ok = r.passed() && secs <= 180.0;
    gate.report("criterion-1", ok,
                "ten-condition equivalence, " + std::to_string(r.instances) +
                    " instances, " + count_note(r.checks, secs));
  }

  // ---- criterion 2: the definitional route and the colon route agree on
  // every proper submodule of every default-family instance.
  {
    auto t0 = std::chrono::steady_clock::now();
    long long agreed = 0, disagreed = 0;
    for (const Instance& inst : generate_instances(dflt)) {
      for (const Submodule& n : enumerate_submodules(inst.module)) {
        if (!n.proper()) continue;
        bool a = classical_2_absorbing_definitional(n);
        bool b = classical_2_absorbing_by_colons(n);
        (a == b ? agreed : disagreed) += 1;
      }
    }
    gate.report("criterion-2", disagreed == 0,
                "dual-route agreement on " + std::to_string(agreed) +
                    " submodules, disagreements=" + std::to_string(disagreed) +
                    " (" + count_note(agreed, seconds_since(t0)) + ")");
  }

  // ---- criterion 3: implication lattice holds across the default family.
  {
    auto t0 = std::chrono::steady_clock::now();
    long long checks = 0, bad = 0;
    for (const Instance& inst : generate_instances(dflt)) {
      Classification c = classify_all(inst.module);
      for (const ClassificationRecord& rec : c.records) {
        const Submodule& n = c.lattice[rec.lattice_index];
        bool colon_prime = is_prime_ideal(colon_ideal_module(n));
        if (rec.prime && !rec.classical_prime) ++bad;
        if (rec.prime && !rec.two_absorbing) ++bad;
        if (rec.classical_prime && !rec.classical_2_absorbing) ++bad;
        if (rec.two_absorbing && !rec.classical_2_absorbing) ++bad;
        if (rec.n_absorbing.at(2) && !rec.n_absorbing.at(3)) ++bad;
        if (rec.n_absorbing.at(3) && !rec.n_absorbing.at(4)) ++bad;
        if (rec.classical_prime != (rec.two_absorbing && colon_prime)) ++bad;
        checks += 7;
      }
    }
    gate.report("criterion-3", bad == 0,
                "implication lattice, violations=" + std::to_string(bad) + " (" +
                    count_note(checks, seconds_since(t0)) + ")");
  }

  // ---- criterion 4: truncated prime-power towers: (p^j) is classical
  // 2-absorbing exactly for j <= 2, and the cube witness (p,p,p,1) replays.
  {
    bool ok = true;
    std::string detail;
    for (int p : {2, 3}) {
      for (int t : {0, 1}) {
        int n = 1;
        for (int i = 0; i < t + 3; ++i) n *= p;
        Module m = make_module(make_ring({n}), {{0, n}});
        int pj = 1;
        for (int j = 1; j <= t + 3; ++j) {
          pj *= p;
          Submodule nj = submodule_generated(m, {pj % n});
          bool c2a = is_classical_2_absorbing(nj);
          if (c2a != (j <= 2)) {
            ok = false;
            detail += " flag(p=" + std::to_string(p) + ",j=" + std::to_string(j) + ")";
          }
          if (j == 3) {
            Witness w;
            w.scalars = {p, p, p};
            w.element = 1;
            if (!witness_violates(PredicateKind::classical_2_absorbing, nj, w)) {
              ok = false;
              detail += " replay(p=" + std::to_string(p) + ",t=" + std::to_string(t) + ")";
            }
          }
        }
      }
    }
    gate.report("criterion-4", ok, "prime-power truncations Z8/Z16/Z27/Z81" + detail);
  }

  // ---- criteria 5, 6, 8, 9 share the full default verification run.
  auto t_all0 = std::chrono::steady_clock::now();
  std::vector<SuiteReport> all1 = run_all_suites(dflt);
  double all1_secs = seconds_since(t_all0);
  std::map<std::string, const SuiteReport*> by_id;
  for (const SuiteReport& r : all1) by_id[r.suite] = &r;

  {
    bool ok = all1_secs <= 600.0;
    std::string note;
    for (const char* id :
         {"T-HOM", "T-MEET", "T-MIN", "T-RAD", "T-LOC", "T-MCLOSED", "T-PROD"}) {
      const SuiteReport* r = by_id.count(id) ? by_id[id] : nullptr;
      bool pass = r && r->passed();
      if (!pass) {
        ok = false;
        note += std::string(id) + "=FAIL ";
      }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "full verification run %.1fs", all1_secs);
    gate.report("criterion-5", ok, note + buf);
  }

  {
    const SuiteReport* rad = by_id.count("T-RAD") ? by_id["T-RAD"] : nullptr;
    bool ok = rad && rad->passed();
    long long dich = 0, cor_a = 0, cor_b = 0;
    if (rad) {
      for (const Finding& f : rad->findings) {
        if (f.kind == "radical-coverage") {
          dich = f.data.value("dichotomy_checked", 0LL);
          cor_a = f.data.value("corollary_a_hypotheses", 0LL);
          cor_b = f.data.value("corollary_b_hypotheses", 0LL);
        }
      }
    }
    ok = ok && dich > 0 && cor_a > 0;
    gate.report("criterion-6", ok,
                "radical dichotomy=" + std::to_string(dich) +
                    " corollary-hypotheses=" + std::to_string(cor_a) + "/" +
                    std::to_string(cor_b) + " (second corollary may be vacuous)");
  }

  // ---- criterion 7: separation searches.
  {
    auto t0 = std::chrono::steady_clock::now();
    SearchOutcome s1 = search_separating("c2a", "classical-prime", dflt);
    bool ok1 = s1.found && s1.replayed && s1.instance.has_value() &&
               is_classical_2_absorbing(*s1.submodule) &&
               witness_violates(PredicateKind::classical_prime, *s1.submodule,
                                *s1.right_witness);

    SearchOutcome s2 = search_separating("2abs", "prime", dflt);
    bool ok2 = s2.found && s2.replayed && s2.instance.has_value() &&
               is_2_absorbing_submodule(*s2.submodule) &&
               witness_violates(PredicateKind::prime, *s2.submodule, *s2.right_witness);

    SearchOutcome s3a = search_separating("c2a", "2abs", dflt);
    SearchOutcome s3b = search_separating("c2a", "2abs", dflt);
    bool ok3 = dump_report(to_json(s3a)) == dump_report(to_json(s3b));
    if (s3a.found)
      ok3 = ok3 && s3a.replayed;
    else
      ok3 = ok3 && !s3a.instances_enumerated.empty();

    std::string note = "witness1=" + (s1.found ? instance_label(*s1.instance) : "none") +
                       " witness2=" + (s2.found ? instance_label(*s2.instance) : "none") +
                       " third=" + (s3a.found ? "witness" : "exhausted");
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%.1fs)", seconds_since(t0));
    gate.report("criterion-7", ok1 && ok2 && ok3, note + buf);
  }

  // ---- criterion 8: exploratory suites keep their guaranteed directions
  // green and reproduce their findings byte for byte.
  {
    bool ok = true;
    std::string note;
    for (const char* id : {"T-MAIN2", "T-FLAT", "T-MULT"}) {
      const SuiteReport* first = by_id.count(id) ? by_id[id] : nullptr;
      if (!first || !first->passed()) {
        ok = false;
        note += std::string(id) + "=FAIL ";
        continue;
      }
      SuiteReport second = run_suite(id, dflt);
      if (dump_report(to_json(*first)) != dump_report(to_json(second))) {
        ok = false;
        note += std::string(id) + "=nondeterministic ";
      }
      note += std::string(id) + ":findings=" + std::to_string(first->findings.size()) + " ";
    }
    gate.report("criterion-8", ok, note);
  }

  // ---- criterion 9: the full verification run is byte-identical when
  // repeated.
  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteReport> all2 = run_all_suites(dflt);
    nlohmann::json j1 = nlohmann::json::array();
    for (const SuiteReport& r : all1) j1.push_back(to_json(r));
    nlohmann::json j2 = nlohmann::json::array();
    for (const SuiteReport& r : all2) j2.push_back(to_json(r));
    bool ok = dump_report(j1) == dump_report(j2);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "rerun %.1fs, %s", seconds_since(t0),
                  ok ? "byte-identical" : "DIFFERS");
    gate.report("criterion-9", ok, buf);
  }

  std::printf("%d passed, %d failed\n", gate.passed, gate.failed);
  return gate.failed == 0 ? 0 : 1;
}
