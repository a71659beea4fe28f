#include "gga/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gga {

int CoveringTree::vertexIndex(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i].id == id) return i;
  return -1;
}

std::vector<int> CoveringTree::star(int v) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a)
    if (arcs[a].terminus == v) out.push_back(a);
  return out;
}

SerreGraph CoveringTree::asSerreGraph() const {
  std::vector<std::string> vids;
  for (const auto& v : verts) vids.push_back(v.id);
  std::vector<ArcDecl> decls;
  for (const auto& a : arcs)
    decls.push_back({a.id, verts[a.origin].id, verts[a.terminus].id, arcs[a.reverse].id});
  return SerreGraph::make(vids, decls);
}

bool CoveringTree::finite() const {
  return std::all_of(verts.begin(), verts.end(), [](const Vertex& v) { return v.interior; });
}

CoveringTree buildStarCoveringTree(const Gga& g, const AugmentedDigraph& aug,
                                   const std::string& rootVertex, int radius) {
  if (radius < 0) throw Error("covering tree radius must be non-negative");
  int root = g.base.vertexIndex(rootVertex);
  if (root < 0) throw Error("unknown root vertex '" + rootVertex + "'");

  CoveringTree t;
  t.radius = radius;
  t.verts.push_back({"r", root, 0, -1, -1, false});

  // downLabel[v]: the π+ label on the arc parent -> v (the label already
  // consumed from Star(π(v))); -1 at the root.
  std::vector<int> downLabel = {-1};

  std::vector<int> frontier = {0};
  for (size_t q = 0; q < frontier.size(); ++q) {
    int u = frontier[q];
    if (t.verts[u].depth >= radius) continue;
    int pu = t.verts[u].deltaVertex;
    for (int b : aug.plus.star(pu)) {
      if (b == downLabel[u]) continue;  // already present on the parent edge
      // spawn child w across pending arc b; w labels the origin of b
      int w = static_cast<int>(t.verts.size());
      std::string wid = t.verts[u].id + "/" + aug.plus.arcId(b);
      int depth = t.verts[u].depth + 1;

      // reverse-completing label b'' with ρ(b'') = reverse ρ(b); over a
      // self-reverse base arc simply reuse b
      int bb;
      if (g.base.selfReverse(aug.rho[b])) {
        bb = b;
      } else {
        int revBase = g.base.reverse(aug.rho[b]);
        bb = aug.fiber[revBase].front();  // least augmented arc id in the fiber
      }

      int up = static_cast<int>(t.arcs.size());
      t.arcs.push_back({wid + ".up", w, u, up + 1, b});
      t.arcs.push_back({wid + ".dn", u, w, up, bb});
      t.verts.push_back({wid, aug.plus.origin(b), depth, u, up, false});
      downLabel.push_back(bb);
      frontier.push_back(w);
    }
  }

  // interior = star complete
  for (int v = 0; v < static_cast<int>(t.verts.size()); ++v) {
    std::multiset<int> have;
    for (int a : t.star(v)) have.insert(t.arcs[a].plusArc);
    std::multiset<int> want;
    for (int b : aug.plus.star(t.verts[v].deltaVertex)) want.insert(b);
    t.verts[v].interior = have == want;
  }
  return t;
}

Diagnostics validateCoveringTree(const CoveringTree& t, const Gga& g, const AugmentedDigraph& aug) {
  Diagnostics d;
  SerreGraph tree = t.asSerreGraph();
  if (!tree.isTree()) d.fail("underlying graph is not a tree");

  for (const auto& a : t.arcs) {
    if (a.plusArc < 0 || a.plusArc >= aug.plus.arcCount()) {
      d.fail("arc '" + a.id + "' has an invalid label");
      continue;
    }
    // labels form a digraph morphism to the augmented digraph
    if (aug.plus.origin(a.plusArc) != t.verts[a.origin].deltaVertex ||
        aug.plus.terminus(a.plusArc) != t.verts[a.terminus].deltaVertex)
      d.fail("label of arc '" + a.id + "' does not match its endpoints");
    // composing with ρ is a graph morphism to the base
    int rev = t.arcs[a.reverse].plusArc;
    if (aug.rho[rev] != g.base.reverse(aug.rho[a.plusArc]))
      d.fail("reverse of arc '" + a.id + "' is not labelled over the reverse base arc");
  }

  for (int v = 0; v < static_cast<int>(t.verts.size()); ++v) {
    if (!t.verts[v].interior) continue;
    std::set<int> have;
    for (int a : t.star(v)) {
      if (!have.insert(t.arcs[a].plusArc).second)
        d.fail("duplicate star label at interior vertex '" + t.verts[v].id + "'");
    }
    std::set<int> want;
    for (int b : aug.plus.star(t.verts[v].deltaVertex)) want.insert(b);
    if (have != want)
      d.fail("star of interior vertex '" + t.verts[v].id + "' is not a bijection onto the augmented star");
  }
  return d;
}

std::optional<TreeIsomorphism> coveringTreesIsomorphic(const CoveringTree& t1,
                                                       const CoveringTree& t2,
                                                       const AugmentedDigraph& aug) {
  if (t1.radius != t2.radius) throw Error("covering tree radius mismatch");
  if (t1.verts.size() != t2.verts.size() || t1.arcs.size() != t2.arcs.size()) return std::nullopt;
  if (t1.verts[0].deltaVertex != t2.verts[0].deltaVertex) return std::nullopt;

  TreeIsomorphism iso;
  iso.vertexMap.assign(t1.verts.size(), -1);
  iso.arcMap.assign(t1.arcs.size(), -1);
  iso.vertexMap[0] = 0;

  // level-by-level parent-respecting matching on ρ∘π+ labels of upward arcs
  std::vector<int> order = {0};
  for (size_t q = 0; q < order.size(); ++q) {
    int u = order[q];
    int u2 = iso.vertexMap[u];
    // group children by base-arc label
    std::map<int, std::vector<int>> kids1, kids2;
    for (int v = 0; v < static_cast<int>(t1.verts.size()); ++v)
      if (t1.verts[v].parent == u) kids1[aug.rho[t1.arcs[t1.verts[v].upArc].plusArc]].push_back(v);
    for (int v = 0; v < static_cast<int>(t2.verts.size()); ++v)
      if (t2.verts[v].parent == u2) kids2[aug.rho[t2.arcs[t2.verts[v].upArc].plusArc]].push_back(v);
    if (kids1.size() != kids2.size()) return std::nullopt;
    for (auto& [label, list1] : kids1) {
      auto it = kids2.find(label);
      if (it == kids2.end() || it->second.size() != list1.size()) return std::nullopt;
      for (size_t i = 0; i < list1.size(); ++i) {
        int v1 = list1[i], v2 = it->second[i];
        iso.vertexMap[v1] = v2;
        iso.arcMap[t1.verts[v1].upArc] = t2.verts[v2].upArc;
        iso.arcMap[t1.arcs[t1.verts[v1].upArc].reverse] = t2.arcs[t2.verts[v2].upArc].reverse;
        order.push_back(v1);
      }
    }
  }
  if (std::count(iso.vertexMap.begin(), iso.vertexMap.end(), -1) > 0) return std::nullopt;
  return iso;
}

}  // namespace gga
