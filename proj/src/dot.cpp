#include "qlogic/dot.hpp"

#include <sstream>

namespace qlogic {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

GreechieDiagram greechie_of(const QuasiOrthoalgebra& t) {
  GreechieDiagram d;
  for (Element a : atoms(t)) d.atoms.push_back(t.label(a));
  for (const auto& b : blocks(t)) {
    std::vector<std::string> members;
    for (Element a : local_atoms(t, b)) members.push_back(t.label(a));
    d.blocks.push_back(std::move(members));
  }
  return d;
}

std::string render_greechie(const GreechieDiagram& d) {
  std::ostringstream out;
  out << "graph greechie {\n  node [shape=circle];\n";
  for (const auto& a : d.atoms) out << "  " << quote(a) << ";\n";
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    out << "  subgraph block" << i + 1 << " {\n    edge [penwidth=2];\n    ";
    const auto& b = d.blocks[i];
    for (std::size_t k = 0; k < b.size(); ++k) out << (k ? " -- " : "") << quote(b[k]);
    out << ";\n  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_hasse(const QuasiOrthoalgebra& t) {
  const auto report = verify_quasi_oa(t);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw ValidationError("not a quasi-orthoalgebra (" + v.axiom + "): " + v.detail);
  }
  const std::size_t n = t.size();
  const auto le = order_matrix(t);
  auto lt = [&](Element a, Element b) { return a != b && le[a * n + b]; };
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Element e = 0; e < n; ++e) out << "  n" << e << " [label=" << quote(t.label(e)) << "];\n";
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool covers = true;
      for (Element c = 0; c < n && covers; ++c)
        if (lt(a, c) && lt(c, b)) covers = false;
      if (covers) out << "  n" << a << " -> n" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace qlogic
