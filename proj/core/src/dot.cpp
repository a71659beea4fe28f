#include "gga/dot.hpp"

#include <sstream>

namespace gga {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string dotBase(const Gga& g) {
  std::ostringstream out;
  out << "graph " << quote(g.name) << " {\n";
  for (int v = 0; v < g.base.vertexCount(); ++v)
    out << "  " << quote(g.base.vertexId(v)) << " [label=" << quote(g.base.vertexId(v)) << "];\n";
  for (auto [a, r] : g.base.edges()) {
    std::string label = g.base.arcId(a);
    if (a != r) label += "/" + g.base.arcId(r);
    out << "  " << quote(g.base.vertexId(g.base.origin(a))) << " -- "
        << quote(g.base.vertexId(g.base.terminus(a))) << " [label=" << quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dotAugmented(const Gga& g, const AugmentedDigraph& aug) {
  std::ostringstream out;
  out << "digraph " << quote(g.name + "+") << " {\n";
  for (int v = 0; v < aug.plus.vertexCount(); ++v)
    out << "  " << quote(aug.plus.vertexId(v)) << ";\n";
  for (int b = 0; b < aug.plus.arcCount(); ++b) {
    std::string label = aug.plus.arcId(b) + " rho=" + g.base.arcId(aug.rho[b]) + " adh={";
    const PointSet& X = *g.vertexAction[aug.plus.terminus(b)].points();
    for (size_t i = 0; i < aug.adhesion[b].size(); ++i)
      label += (i ? " " : "") + X.token(aug.adhesion[b][i]);
    label += "}";
    out << "  " << quote(aug.plus.vertexId(aug.plus.origin(b))) << " -> "
        << quote(aug.plus.vertexId(aug.plus.terminus(b))) << " [label=" << quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dotTree(const Gga& g, const AugmentedDigraph& aug, const CoveringTree& t) {
  std::ostringstream out;
  out << "graph " << quote(g.name + "-tree") << " {\n";
  for (const auto& v : t.verts)
    out << "  " << quote(v.id)
        << " [label=" << quote(v.id + " : " + g.base.vertexId(v.deltaVertex))
        << (v.interior ? "" : ", style=dashed") << "];\n";
  for (int a = 0; a < static_cast<int>(t.arcs.size()); ++a) {
    if (t.arcs[a].reverse < a) continue;
    out << "  " << quote(t.verts[t.arcs[a].origin].id) << " -- "
        << quote(t.verts[t.arcs[a].terminus].id)
        << " [label=" << quote(aug.plus.arcId(t.arcs[a].plusArc)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dotScaffold(const Scaffolding& s, const Gga& g) {
  std::ostringstream out;
  out << "graph " << quote(s.ggaName + "-scaffold") << " {\n";
  for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
    out << "  subgraph " << quote("cluster_" + std::to_string(b)) << " {\n";
    out << "    label=" << quote(s.bundles[b].id + " : " + g.base.vertexId(s.bundles[b].piVertex))
        << ";\n";
    const PointSet& X = *g.vertexAction[s.bundles[b].piVertex].points();
    for (int v : s.bundleVerts(b))
      out << "    " << quote(s.verts[v].id) << " [label=" << quote(X.token(s.verts[v].point))
          << "];\n";
    out << "  }\n";
  }
  for (int a = 0; a < static_cast<int>(s.arcs.size()); ++a) {
    if (s.arcs[a].reverse < a) continue;
    const PointSet& Y = *g.arcAction[s.abundles[s.arcs[a].abundle].piArc].points();
    out << "  " << quote(s.verts[s.arcs[a].origin].id) << " -- "
        << quote(s.verts[s.arcs[a].terminus].id) << " [label=" << quote(Y.token(s.arcs[a].point))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dotTPlus(const AugmentedTree& tp) {
  std::ostringstream out;
  out << "graph tplus {\n";
  for (int v = 0; v < tp.graph.vertexCount(); ++v)
    out << "  " << quote(tp.graph.vertexId(v)) << ";\n";
  for (auto [a, r] : tp.graph.edges())
    out << "  " << quote(tp.graph.vertexId(tp.graph.origin(a))) << " -- "
        << quote(tp.graph.vertexId(tp.graph.terminus(a)))
        << " [label=" << quote(tp.graph.arcId(a)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace gga
