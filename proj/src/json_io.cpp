#include "modlat/json_io.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "modlat/error.hpp"

namespace modlat {

nlohmann::json element_coords(const Ring& r, int elem) {
  return nlohmann::json(r->coords(elem));
}

nlohmann::json element_coords(const Module& m, int elem) {
  // Derived carriers (quotients, slices) have no component presentation;
  // their elements are identified by carrier index alone.
  if (m->components.empty()) return nlohmann::json::array({elem});
  return nlohmann::json(component_coords(m, elem));
}

nlohmann::json to_json(const Ideal& i) {
  nlohmann::json elems = nlohmann::json::array();
  for (int e : i.elements) elems.push_back(element_coords(i.ring, e));
  nlohmann::json gens = nlohmann::json::array();
  for (int g : i.generators) gens.push_back(element_coords(i.ring, g));
  return {{"elements", std::move(elems)}, {"generators", std::move(gens)}};
}

nlohmann::json to_json(const Submodule& n) {
  nlohmann::json elems = nlohmann::json::array();
  for (int e : n.elements) elems.push_back(element_coords(n.module, e));
  nlohmann::json gens = nlohmann::json::array();
  for (int g : n.generators) gens.push_back(element_coords(n.module, g));
  return {{"elements", std::move(elems)}, {"generators", std::move(gens)}};
}

nlohmann::json witness_json(const Witness& w, const Ring& r, const Module& m) {
  nlohmann::json scalars = nlohmann::json::array();
  for (int a : w.scalars) scalars.push_back(element_coords(r, a));
  return {{"scalars", std::move(scalars)}, {"element", element_coords(m, w.element)}};
}

nlohmann::json to_json(const ConditionVector& v) {
  nlohmann::json conds = nlohmann::json::array();
  for (bool b : v.conditions) conds.push_back(b);
  return {{"conditions", std::move(conds)}};
}

nlohmann::json to_json(const InstanceFamily& f) {
  return {{"max_modulus", f.max_modulus},
          {"max_pair_modulus", f.max_pair_modulus},
          {"include_triple", f.include_triple},
          {"max_module_size", f.max_module_size},
          {"max_components", f.max_components}};
}

nlohmann::json module_spec_json(const Module& m) {
  nlohmann::json comps = nlohmann::json::array();
  for (const Component& c : m->components)
    comps.push_back({{"coord", c.coord}, {"order", c.order}});
  return {{"ring", {{"moduli", m->ring->moduli}}}, {"components", std::move(comps)}};
}

namespace {

nlohmann::json record_json(const Classification& c, const ClassificationRecord& rec) {
  const Module& m = c.module;
  const Ring& r = m->ring;
  nlohmann::json j;
  j["lattice_index"] = rec.lattice_index;
  j["prime"] = rec.prime;
  j["classical_prime"] = rec.classical_prime;
  j["two_absorbing"] = rec.two_absorbing;
  j["classical_2_absorbing"] = rec.classical_2_absorbing;
  nlohmann::json nabs = nlohmann::json::object();
  for (const auto& [k, flag] : rec.n_absorbing) nabs[std::to_string(k)] = flag;
  j["n_absorbing"] = std::move(nabs);
  nlohmann::json wit = nlohmann::json::object();
  if (rec.prime_witness) wit["prime"] = witness_json(*rec.prime_witness, r, m);
  if (rec.classical_prime_witness)
    wit["classical_prime"] = witness_json(*rec.classical_prime_witness, r, m);
  if (rec.two_absorbing_witness)
    wit["two_absorbing"] = witness_json(*rec.two_absorbing_witness, r, m);
  if (rec.classical_2_absorbing_witness)
    wit["classical_2_absorbing"] = witness_json(*rec.classical_2_absorbing_witness, r, m);
  for (const auto& [k, w] : rec.n_absorbing_witnesses)
    wit["n_absorbing_" + std::to_string(k)] = witness_json(w, r, m);
  j["witnesses"] = std::move(wit);
  nlohmann::json profile = nlohmann::json::array();
  for (const auto& [elem, colon] : rec.colon_profile)
    profile.push_back({{"element", element_coords(m, elem)}, {"ideal", to_json(colon)}});
  j["colon_profile"] = std::move(profile);
  return j;
}

}  // namespace

nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["schema"] = 1;
  nlohmann::json mod = module_spec_json(c.module);
  mod["desc"] = c.module->desc;
  mod["size"] = c.module->size;
  j["module"] = std::move(mod);
  nlohmann::json lattice = nlohmann::json::array();
  for (const Submodule& n : c.lattice) lattice.push_back(to_json(n));
  j["lattice"] = std::move(lattice);
  nlohmann::json records = nlohmann::json::array();
  for (const ClassificationRecord& rec : c.records) records.push_back(record_json(c, rec));
  j["records"] = std::move(records);
  nlohmann::json hasse = nlohmann::json::array();
  for (const auto& [lo, hi] : c.hasse) hasse.push_back({lo, hi});
  j["hasse"] = std::move(hasse);
  return j;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["tier"] = r.tier;
  j["family"] = to_json(r.family);
  j["instances"] = r.instances;
  j["checks"] = r.checks;
  nlohmann::json failures = nlohmann::json::array();
  for (const CheckFailure& f : r.failures)
    failures.push_back({{"instance", f.instance},
                        {"check", f.check},
                        {"detail", f.detail},
                        {"data", f.data}});
  j["failures"] = std::move(failures);
  nlohmann::json findings = nlohmann::json::array();
  for (const Finding& f : r.findings)
    findings.push_back({{"instance", f.instance}, {"kind", f.kind}, {"data", f.data}});
  j["findings"] = std::move(findings);
  return j;
}

nlohmann::json to_json(const SearchOutcome& s) {
  nlohmann::json j;
  j["schema"] = 1;
  j["left"] = s.left;
  j["right"] = s.right;
  j["family"] = to_json(s.family);
  j["found"] = s.found;
  j["submodules_checked"] = s.submodules_checked;
  if (s.found) {
    nlohmann::json inst;
    inst["label"] = instance_label(*s.instance);
    inst["ring"] = ring_spec(s.instance->ring);
    inst["module"] = module_spec_json(s.instance->module);
    j["instance"] = std::move(inst);
    j["submodule"] = to_json(*s.submodule);
    j["witness"] = witness_json(*s.right_witness, s.instance->ring, s.instance->module);
    j["replayed"] = s.replayed;
  } else {
    j["instances"] = s.instances_enumerated;
  }
  return j;
}

std::string dump_report(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Ring parse_ring_spec(const std::string& spec) {
  std::vector<int> moduli;
  size_t pos = 0;
  const auto bad = [&](const std::string& why) {
    fail(errc::invalid_input, "ring spec \"" + spec + "\": " + why +
                                  " (expected Z6 or Z2xZ3)");
  };
  if (spec.empty()) bad("empty");
  while (true) {
    if (pos >= spec.size() || spec[pos] != 'Z') bad("expected 'Z'");
    ++pos;
    const size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start) bad("expected a modulus after 'Z'");
    if (pos - start > 7) bad("modulus out of range");
    moduli.push_back(std::stoi(spec.substr(start, pos - start)));
    if (pos == spec.size()) break;
    if (spec[pos] != 'x') bad("expected 'x' between factors");
    ++pos;
  }
  return make_ring(moduli);  // validates each modulus >= 2
}

namespace {

Module parse_module_spec_impl(const Ring& r, const std::string& spec) {
  size_t first = spec.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    fail(errc::invalid_input, "module spec is empty");

  if (spec[first] != '{') {
    // Comma-separated cyclic orders, all on ring coordinate 0.
    if (!r) fail(errc::invalid_input, "module spec without a ring must embed one");
    std::vector<Component> components;
    size_t pos = 0;
    while (true) {
      const size_t comma = spec.find(',', pos);
      const std::string tok = spec.substr(pos, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - pos);
      if (tok.empty() || tok.size() > 7)
        fail(errc::invalid_input, "module spec \"" + spec + "\": bad order \"" + tok + "\"");
      for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          fail(errc::invalid_input,
               "module spec \"" + spec + "\": bad order \"" + tok + "\"");
      components.push_back(Component{0, std::stoi(tok)});
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return make_module(r, components);
  }

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(spec);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_input, std::string("module spec is not valid JSON: ") + e.what());
  }
  try {
    Ring ring = r;
    if (j.contains("ring")) {
      const std::vector<int> moduli = j.at("ring").at("moduli").get<std::vector<int>>();
      if (r && moduli != r->moduli)
        fail(errc::ring_mismatch, "module spec embeds ring " + make_ring(moduli)->spec() +
                                      " but " + r->spec() + " was supplied");
      if (!ring) ring = make_ring(moduli);
    }
    if (!ring) fail(errc::invalid_input, "module spec without a ring must embed one");
    if (!j.contains("components"))
      fail(errc::invalid_input, "module spec needs a \"components\" array");
    std::vector<Component> components;
    for (const auto& c : j.at("components"))
      components.push_back(Component{c.at("coord").get<int>(), c.at("order").get<int>()});
    return make_module(ring, components);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_input, std::string("module spec has the wrong shape: ") + e.what());
  }
}

}  // namespace

Module parse_module_spec(const Ring& r, const std::string& spec) {
  return parse_module_spec_impl(r, spec);
}

Module parse_module_spec(const std::string& spec) {
  return parse_module_spec_impl(nullptr, spec);
}

}  // namespace modlat
