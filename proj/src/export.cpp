#include "modlat/export.hpp"

#include <map>
#include <sstream>
#include <string>

namespace modlat {

namespace {

std::string node_name(const Submodule& n) {
  if (!n.proper()) return "M";
  if (n.is_zero()) return "(0)";
  std::string s = "(";
  for (size_t i = 0; i < n.generators.size(); ++i) {
    if (i) s += ",";
    s += n.module->label(n.generators[i]);
  }
  return s + ")";
}

std::string marker_line(const ClassificationRecord& rec) {
  std::string s;
  auto add = [&](const char* tag) {
    if (!s.empty()) s += " ";
    s += tag;
  };
  if (rec.prime) add("P");
  if (rec.classical_prime) add("CP");
  if (rec.two_absorbing) add("2A");
  if (rec.classical_2_absorbing) add("C2A");
  return s;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string lattice_dot(const Classification& c) {
  std::map<int, const ClassificationRecord*> by_index;
  for (const ClassificationRecord& rec : c.records) by_index[rec.lattice_index] = &rec;

  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  label=\"" << escape_dot(c.module->desc) << "\";\n";
  out << "  node [shape=box, style=\"rounded,filled\", fontname=\"Helvetica\"];\n";
  for (size_t i = 0; i < c.lattice.size(); ++i) {
    const Submodule& n = c.lattice[i];
    std::string fill = "#ffffff";
    std::string border = "#555555";
    std::string penwidth = "1";
    std::string markers;
    auto it = by_index.find(static_cast<int>(i));
    if (it != by_index.end()) {
      const ClassificationRecord& rec = *it->second;
      markers = marker_line(rec);
      if (rec.classical_2_absorbing) fill = "#cfe3f7";
      if (rec.classical_prime) {
        border = "#1a7f37";
        penwidth = "2";
      }
    }
    out << "  n" << i << " [label=\"" << escape_dot(node_name(n));
    if (!markers.empty()) out << "\\n" << markers;
    out << "\", fillcolor=\"" << fill << "\", color=\"" << border << "\", penwidth="
        << penwidth << "];\n";
  }
  for (const auto& [lo, hi] : c.hasse)
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string classification_text(const Classification& c) {
  std::map<int, const ClassificationRecord*> by_index;
  for (const ClassificationRecord& rec : c.records) by_index[rec.lattice_index] = &rec;

  std::ostringstream out;
  out << "module " << c.module->desc << " over " << c.module->ring->spec() << ": "
      << c.lattice.size() << " submodules\n";
  for (size_t i = 0; i < c.lattice.size(); ++i) {
    const Submodule& n = c.lattice[i];
    out << "#" << i << " " << node_name(n) << " size=" << n.elements.size();
    auto it = by_index.find(static_cast<int>(i));
    if (it == by_index.end()) {
      out << " (whole module)\n";
      continue;
    }
    const ClassificationRecord& rec = *it->second;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << " prime=" << yn(rec.prime) << " classical-prime=" << yn(rec.classical_prime)
        << " 2-absorbing=" << yn(rec.two_absorbing)
        << " classical-2-absorbing=" << yn(rec.classical_2_absorbing);
    if (!rec.n_absorbing.empty()) {
      out << " n-absorbing{";
      bool first = true;
      for (const auto& [k, flag] : rec.n_absorbing) {
        if (!first) out << ",";
        first = false;
        out << k << "=" << yn(flag);
      }
      out << "}";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace modlat
