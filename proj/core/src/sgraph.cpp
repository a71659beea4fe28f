#include "gga/sgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gga {

std::string Diagnostics::joined() const {
  std::ostringstream out;
  for (size_t i = 0; i < issues.size(); ++i) {
    if (i) out << "; ";
    out << issues[i];
  }
  return out.str();
}

SerreGraph SerreGraph::make(std::vector<std::string> vertices, std::vector<ArcDecl> arcs) {
  SerreGraph g;
  g.vertexIds_ = std::move(vertices);
  for (int i = 0; i < g.vertexCount(); ++i) {
    if (!g.vertexIndex_.emplace(g.vertexIds_[i], i).second)
      throw Error("duplicate vertex id '" + g.vertexIds_[i] + "'");
  }
  for (const auto& a : arcs) {
    int idx = static_cast<int>(g.arcIds_.size());
    if (!g.arcIndex_.emplace(a.id, idx).second)
      throw Error("duplicate arc id '" + a.id + "'");
    g.arcIds_.push_back(a.id);
    int o = g.vertexIndex(a.origin), t = g.vertexIndex(a.terminus);
    if (o < 0 || t < 0) throw Error("arc '" + a.id + "' references an unknown vertex");
    g.origin_.push_back(o);
    g.terminus_.push_back(t);
  }
  g.reverse_.resize(g.arcCount(), -1);
  for (int i = 0; i < g.arcCount(); ++i) {
    int r = g.arcIndex(arcs[i].reverse);
    if (r < 0) throw Error("arc '" + arcs[i].id + "' has unknown reverse '" + arcs[i].reverse + "'");
    g.reverse_[i] = r;
  }
  Diagnostics d = g.validate();
  if (!d.ok) throw Error("invalid graph: " + d.joined());
  return g;
}

int SerreGraph::vertexIndex(const std::string& id) const {
  auto it = vertexIndex_.find(id);
  return it == vertexIndex_.end() ? -1 : it->second;
}

int SerreGraph::arcIndex(const std::string& id) const {
  auto it = arcIndex_.find(id);
  return it == arcIndex_.end() ? -1 : it->second;
}

Diagnostics SerreGraph::validate() const {
  Diagnostics d;
  for (int a = 0; a < arcCount(); ++a) {
    if (reverse_[reverse_[a]] != a)
      d.fail("reversal not involutive at arc '" + arcIds_[a] + "'");
    if (origin_[a] != terminus_[reverse_[a]])
      d.fail("o(a) != t(reverse a) at arc '" + arcIds_[a] + "'");
  }
  return d;
}

bool SerreGraph::connected() const {
  if (vertexCount() == 0) return false;
  std::vector<char> seen(vertexCount(), 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    for (int a = 0; a < arcCount(); ++a) {
      int w = -1;
      if (origin_[a] == v) w = terminus_[a];
      else if (terminus_[a] == v) w = origin_[a];
      if (w >= 0 && !seen[w]) { seen[w] = 1; queue.push_back(w); }
    }
  }
  return std::count(seen.begin(), seen.end(), 1) == vertexCount();
}

std::vector<std::pair<int, int>> SerreGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < arcCount(); ++a)
    if (reverse_[a] >= a) out.emplace_back(a, reverse_[a]);
  return out;
}

bool SerreGraph::isTree() const {
  if (!connected()) return false;
  for (int a = 0; a < arcCount(); ++a)
    if (origin_[a] == terminus_[a]) return false;  // loops (incl. self-reverse)
  auto es = edges();
  std::set<std::pair<int, int>> endpointPairs;
  for (auto [a, r] : es) {
    auto key = std::minmax(origin_[a], terminus_[a]);
    if (!endpointPairs.insert({key.first, key.second}).second) return false;  // parallel edge
  }
  return static_cast<int>(es.size()) == vertexCount() - 1;
}

std::vector<int> SerreGraph::star(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arcCount(); ++a)
    if (terminus_[a] == v) out.push_back(a);
  return out;
}

std::vector<int> SerreGraph::starInv(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arcCount(); ++a)
    if (origin_[a] == v) out.push_back(a);
  return out;
}

Digraph Digraph::make(std::vector<std::string> vertices, std::vector<std::string> arcIds,
                      std::vector<int> origin, std::vector<int> terminus) {
  Digraph g;
  g.vertexIds_ = std::move(vertices);
  g.arcIds_ = std::move(arcIds);
  g.origin_ = std::move(origin);
  g.terminus_ = std::move(terminus);
  for (int i = 0; i < g.vertexCount(); ++i)
    if (!g.vertexIndex_.emplace(g.vertexIds_[i], i).second)
      throw Error("duplicate vertex id '" + g.vertexIds_[i] + "'");
  for (int i = 0; i < g.arcCount(); ++i)
    if (!g.arcIndex_.emplace(g.arcIds_[i], i).second)
      throw Error("duplicate arc id '" + g.arcIds_[i] + "'");
  if (g.origin_.size() != g.arcIds_.size() || g.terminus_.size() != g.arcIds_.size())
    throw Error("digraph arc maps have wrong length");
  for (int a = 0; a < g.arcCount(); ++a)
    if (g.origin_[a] < 0 || g.origin_[a] >= g.vertexCount() || g.terminus_[a] < 0 ||
        g.terminus_[a] >= g.vertexCount())
      throw Error("digraph arc endpoint out of range");
  return g;
}

int Digraph::vertexIndex(const std::string& id) const {
  auto it = vertexIndex_.find(id);
  return it == vertexIndex_.end() ? -1 : it->second;
}

int Digraph::arcIndex(const std::string& id) const {
  auto it = arcIndex_.find(id);
  return it == arcIndex_.end() ? -1 : it->second;
}

std::vector<int> Digraph::star(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arcCount(); ++a)
    if (terminus_[a] == v) out.push_back(a);
  return out;
}

std::vector<int> Digraph::starInv(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arcCount(); ++a)
    if (origin_[a] == v) out.push_back(a);
  return out;
}

GraphEquivalence GraphEquivalence::trivial(const SerreGraph& g) {
  GraphEquivalence e;
  e.vertexClass.resize(g.vertexCount());
  std::iota(e.vertexClass.begin(), e.vertexClass.end(), 0);
  e.arcClass.resize(g.arcCount());
  std::iota(e.arcClass.begin(), e.arcClass.end(), 0);
  return e;
}

GraphEquivalence GraphEquivalence::fromVertexClasses(const SerreGraph& g,
                                                     std::vector<int> vertexClass) {
  GraphEquivalence e;
  e.vertexClass = std::move(vertexClass);
  std::map<std::pair<int, int>, int> key;
  e.arcClass.resize(g.arcCount(), -1);
  for (int a = 0; a < g.arcCount(); ++a) {
    std::pair<int, int> k = {e.vertexClass[g.origin(a)], e.vertexClass[g.terminus(a)]};
    auto it = key.find(k);
    if (it == key.end()) it = key.emplace(k, static_cast<int>(key.size())).first;
    e.arcClass[a] = it->second;
  }
  return e;
}

Diagnostics GraphEquivalence::validate(const SerreGraph& g) const {
  Diagnostics d;
  if (static_cast<int>(vertexClass.size()) != g.vertexCount() ||
      static_cast<int>(arcClass.size()) != g.arcCount()) {
    d.fail("equivalence has wrong size");
    return d;
  }
  for (int a = 0; a < g.arcCount(); ++a)
    for (int b = a + 1; b < g.arcCount(); ++b) {
      if (arcClass[a] != arcClass[b]) continue;
      if (vertexClass[g.origin(a)] != vertexClass[g.origin(b)])
        d.fail("equivalent arcs '" + g.arcId(a) + "','" + g.arcId(b) + "' have inequivalent origins");
      if (vertexClass[g.terminus(a)] != vertexClass[g.terminus(b)])
        d.fail("equivalent arcs '" + g.arcId(a) + "','" + g.arcId(b) + "' have inequivalent termini");
      if (arcClass[g.reverse(a)] != arcClass[g.reverse(b)])
        d.fail("equivalent arcs '" + g.arcId(a) + "','" + g.arcId(b) + "' have inequivalent reverses");
    }
  return d;
}

bool isDigraphMorphism(const SerreGraph& src, const SerreGraph& dst, const GraphMorphism& m) {
  if (static_cast<int>(m.vertexMap.size()) != src.vertexCount()) return false;
  if (static_cast<int>(m.arcMap.size()) != src.arcCount()) return false;
  for (int a = 0; a < src.arcCount(); ++a) {
    int b = m.arcMap[a];
    if (b < 0 || b >= dst.arcCount()) return false;
    if (dst.origin(b) != m.vertexMap[src.origin(a)]) return false;
    if (dst.terminus(b) != m.vertexMap[src.terminus(a)]) return false;
  }
  return true;
}

bool isGraphMorphism(const SerreGraph& src, const SerreGraph& dst, const GraphMorphism& m) {
  if (!isDigraphMorphism(src, dst, m)) return false;
  for (int a = 0; a < src.arcCount(); ++a)
    if (m.arcMap[src.reverse(a)] != dst.reverse(m.arcMap[a])) return false;
  return true;
}

namespace {

std::vector<std::string> classNames(const std::vector<int>& cls,
                                    const std::vector<std::string>& memberIds, int classCount) {
  std::vector<std::string> least(classCount);
  for (size_t i = 0; i < cls.size(); ++i) {
    const std::string& id = memberIds[i];
    std::string& cur = least[cls[i]];
    if (cur.empty() || id < cur) cur = id;
  }
  for (auto& s : least) s = "[" + s + "]";
  return least;
}

}  // namespace

QuotientResult quotient(const SerreGraph& g, const GraphEquivalence& e) {
  Diagnostics d = e.validate(g);
  if (!d.ok) throw Error("equivalence incompatible with graph: " + d.joined());

  int nvc = e.vertexClass.empty() ? 0 : *std::max_element(e.vertexClass.begin(), e.vertexClass.end()) + 1;
  int nac = e.arcClass.empty() ? 0 : *std::max_element(e.arcClass.begin(), e.arcClass.end()) + 1;

  std::vector<std::string> vids;
  {
    std::vector<std::string> all(g.vertexCount());
    for (int v = 0; v < g.vertexCount(); ++v) all[v] = g.vertexId(v);
    vids = classNames(e.vertexClass, all, nvc);
  }
  std::vector<std::string> aids;
  {
    std::vector<std::string> all(g.arcCount());
    for (int a = 0; a < g.arcCount(); ++a) all[a] = g.arcId(a);
    aids = classNames(e.arcClass, all, nac);
  }

  std::vector<ArcDecl> decls(nac);
  std::vector<char> got(nac, 0);
  for (int a = 0; a < g.arcCount(); ++a) {
    int c = e.arcClass[a];
    if (got[c]) continue;
    got[c] = 1;
    decls[c] = {aids[c], vids[e.vertexClass[g.origin(a)]], vids[e.vertexClass[g.terminus(a)]],
                aids[e.arcClass[g.reverse(a)]]};
  }

  QuotientResult res{SerreGraph::make(vids, decls), {}};
  res.projection.vertexMap = e.vertexClass;
  res.projection.arcMap = e.arcClass;
  return res;
}

SerreGraph contract(const SerreGraph& g, const std::vector<int>& arcSet) {
  std::set<int> B(arcSet.begin(), arcSet.end());
  for (int a : B)
    if (!B.count(g.reverse(a))) throw Error("contract: arc set is not reversal-closed");

  // components of (V, B)
  std::vector<int> comp(g.vertexCount(), -1);
  int nc = 0;
  for (int s = 0; s < g.vertexCount(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = nc;
    std::vector<int> queue = {s};
    for (size_t q = 0; q < queue.size(); ++q)
      for (int a : B) {
        int o = g.origin(a), t = g.terminus(a);
        if (o == queue[q] && comp[t] < 0) { comp[t] = nc; queue.push_back(t); }
        if (t == queue[q] && comp[o] < 0) { comp[o] = nc; queue.push_back(o); }
      }
    ++nc;
  }
  std::vector<std::string> all(g.vertexCount());
  for (int v = 0; v < g.vertexCount(); ++v) all[v] = g.vertexId(v);
  std::vector<std::string> vids = classNames(comp, all, nc);

  std::vector<ArcDecl> decls;
  for (int a = 0; a < g.arcCount(); ++a) {
    if (B.count(a)) continue;
    decls.push_back({g.arcId(a), vids[comp[g.origin(a)]], vids[comp[g.terminus(a)]],
                     g.arcId(g.reverse(a))});
  }
  return SerreGraph::make(vids, decls);
}

namespace {

struct GraphIsoSearch {
  const SerreGraph& A;
  const SerreGraph& B;
  std::vector<int> vmap, amap;
  std::vector<char> vused, aused;

  GraphIsoSearch(const SerreGraph& a, const SerreGraph& b)
      : A(a), B(b), vmap(a.vertexCount(), -1), amap(a.arcCount(), -1),
        vused(b.vertexCount(), 0), aused(b.arcCount(), 0) {}

  bool assignArcs(int a) {
    if (a == A.arcCount()) return true;
    if (amap[a] >= 0) return assignArcs(a + 1);
    for (int b = 0; b < B.arcCount(); ++b) {
      if (aused[b]) continue;
      if (B.origin(b) != vmap[A.origin(a)] || B.terminus(b) != vmap[A.terminus(a)]) continue;
      int ra = A.reverse(a), rb = B.reverse(b);
      if ((ra == a) != (rb == b)) continue;
      if (amap[ra] >= 0 && amap[ra] != rb) continue;
      if (ra != a && aused[rb]) continue;
      amap[a] = b;
      aused[b] = 1;
      bool setRev = ra != a && amap[ra] < 0;
      if (setRev) { amap[ra] = rb; aused[rb] = 1; }
      if (assignArcs(a + 1)) return true;
      if (setRev) { amap[ra] = -1; aused[rb] = 0; }
      amap[a] = -1;
      aused[b] = 0;
    }
    return false;
  }

  bool assignVerts(int v) {
    if (v == A.vertexCount()) return assignArcs(0);
    for (int w = 0; w < B.vertexCount(); ++w) {
      if (vused[w]) continue;
      vmap[v] = w;
      vused[w] = 1;
      if (assignVerts(v + 1)) return true;
      vmap[v] = -1;
      vused[w] = 0;
    }
    return false;
  }
};

}  // namespace

bool graphsIsomorphic(const SerreGraph& a, const SerreGraph& b) {
  if (a.vertexCount() != b.vertexCount() || a.arcCount() != b.arcCount()) return false;
  GraphIsoSearch s(a, b);
  return s.assignVerts(0);
}

}  // namespace gga
