#pragma once

#include <string>

#include "json.hpp"
#include "modlat/classify.hpp"
#include "modlat/harness.hpp"
#include "modlat/module.hpp"
#include "modlat/ring.hpp"

namespace modlat {

// All report objects carry "schema": 1.  Ring and module elements serialize
// as coordinate arrays; no wall-clock data is ever included, so equal inputs
// produce byte-identical documents.

nlohmann::json element_coords(const Ring& r, int elem);
nlohmann::json element_coords(const Module& m, int elem);

nlohmann::json to_json(const Ideal& i);
nlohmann::json to_json(const Submodule& n);
nlohmann::json witness_json(const Witness& w, const Ring& r, const Module& m);
nlohmann::json to_json(const ConditionVector& v);
nlohmann::json to_json(const InstanceFamily& f);
nlohmann::json module_spec_json(const Module& m);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const SearchOutcome& s);

std::string dump_report(const nlohmann::json& j);  // stable 2-space indent

// "Z6" or "Z2xZ3" (factors each >= 2).
Ring parse_ring_spec(const std::string& spec);

// Either a comma-separated list of cyclic orders on coordinate 0 ("8",
// "2,3") or a JSON object {"ring": {"moduli": [...]}, "components":
// [{"coord": i, "order": d}, ...]} (ring optional when `r` is supplied;
// must agree with `r` when both are present).
Module parse_module_spec(const Ring& r, const std::string& spec);
Module parse_module_spec(const std::string& spec);  // JSON form with ring

}  // namespace modlat
