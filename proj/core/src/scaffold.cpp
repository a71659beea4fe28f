#include "gga/scaffold.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gga {

int Scaffolding::bundleIndex(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(bundles.size()); ++i)
    if (bundles[i].id == id) return i;
  return -1;
}

int Scaffolding::vertAt(int bundle, int point) const {
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i].bundle == bundle && verts[i].point == point) return i;
  return -1;
}

int Scaffolding::arcAt(int abundle, int point) const {
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
    if (arcs[i].abundle == abundle && arcs[i].point == point) return i;
  return -1;
}

std::vector<int> Scaffolding::bundleVerts(int bundle) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i].bundle == bundle) out.push_back(i);
  return out;
}

std::vector<int> Scaffolding::bundleArcs(int abundle) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
    if (arcs[i].abundle == abundle) out.push_back(i);
  return out;
}

std::vector<int> Scaffolding::arcBundlesAt(int bundle) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(abundles.size()); ++i)
    if (abundles[i].terminus == bundle) out.push_back(i);
  return out;
}

std::vector<int> Scaffolding::psi(int abundle) const {
  int ny = -1;
  std::vector<int> map;
  for (int e : bundleArcs(abundle)) {
    const Arc& arc = arcs[e];
    if (arc.point >= ny) {
      ny = arc.point + 1;
      map.resize(ny, -1);
    }
    if (map[arc.point] >= 0) throw Error("psi: bundle is not a matching");
    map[arc.point] = verts[arc.terminus].point;
  }
  for (int v : map)
    if (v < 0) throw Error("psi: bundle colouring is not onto");
  return map;
}

std::vector<int> Scaffolding::adhesionAt(int abundle) const {
  std::vector<int> im = psi(abundle);
  std::sort(im.begin(), im.end());
  return im;
}

SerreGraph Scaffolding::quotientTree() const {
  std::vector<std::string> vids;
  for (const auto& b : bundles) vids.push_back(b.id);
  std::vector<ArcDecl> decls;
  for (const auto& ab : abundles)
    decls.push_back({ab.id, bundles[ab.origin].id, bundles[ab.terminus].id,
                     abundles[ab.reverse].id});
  return SerreGraph::make(vids, decls);
}

SerreGraph Scaffolding::asSerreGraph() const {
  std::vector<std::string> vids;
  for (const auto& v : verts) vids.push_back(v.id);
  std::vector<ArcDecl> decls;
  for (const auto& a : arcs)
    decls.push_back({a.id, verts[a.origin].id, verts[a.terminus].id, arcs[a.reverse].id});
  return SerreGraph::make(vids, decls);
}

Scaffolding buildCanonical(const Gga& g, const AugmentedDigraph& aug, const CoveringTree& t) {
  Scaffolding s;
  s.ggaName = g.name;

  for (const auto& tv : t.verts)
    s.bundles.push_back({tv.id, tv.deltaVertex, tv.interior, tv.parent});
  for (int c = 0; c < static_cast<int>(t.arcs.size()); ++c) {
    const auto& ta = t.arcs[c];
    s.abundles.push_back({ta.id, ta.origin, ta.terminus, ta.reverse, aug.rho[ta.plusArc], ta.plusArc});
  }

  // vertices: (tree vertex, point)
  std::vector<std::vector<int>> vertOf(t.verts.size());
  for (int u = 0; u < static_cast<int>(t.verts.size()); ++u) {
    const PermAction& X = g.vertexAction[t.verts[u].deltaVertex];
    vertOf[u].resize(X.points()->size());
    for (int x = 0; x < X.points()->size(); ++x) {
      vertOf[u][x] = static_cast<int>(s.verts.size());
      s.verts.push_back({t.verts[u].id + "|" + X.points()->token(x), u, x});
    }
  }

  // arcs: (tree arc, point).  Over a self-reverse base arc the member of the
  // pair with the lexicographically least id carries the h_a-twisted origin.
  for (int c = 0; c < static_cast<int>(t.arcs.size()); ++c) {
    const auto& ta = t.arcs[c];
    int baseArc = aug.rho[ta.plusArc];
    const PermAction& Y = g.arcAction[baseArc];
    bool mate = ta.reverse < c;  // second member of the pair: link reverses

    for (int y = 0; y < Y.points()->size(); ++y) {
      std::string id = ta.id + "|" + Y.points()->token(y);
      int o, tgt;
      if (!g.base.selfReverse(baseArc)) {
        // o(c,y) = (o(c), Φ_{π+(reverse c)}(y)), t(c,y) = (t(c), Φ_{π+(c)}(y))
        int oy = aug.chosenMap[t.arcs[ta.reverse].plusArc][y];
        int ty = aug.chosenMap[ta.plusArc][y];
        o = vertOf[ta.origin][oy];
        tgt = vertOf[ta.terminus][ty];
      } else {
        const Permutation& ha = g.inversionAgent.at(baseArc);
        const std::vector<int>& phiB = aug.chosenMap[ta.plusArc];
        bool twisted = ta.id < t.arcs[ta.reverse].id;
        int oy = twisted ? phiB[ha(y)] : phiB[y];
        int ty = twisted ? phiB[y] : phiB[ha(y)];
        o = vertOf[ta.origin][oy];
        tgt = vertOf[ta.terminus][ty];
      }
      int idx = static_cast<int>(s.arcs.size());
      int rev = mate ? s.arcAt(ta.reverse, y) : idx;  // fixed up below for !mate
      s.arcs.push_back({id, c, y, o, tgt, rev});
      if (mate) s.arcs[rev].reverse = idx;
    }
  }
  // self-pairing safety: every arc must have a reverse
  for (int i = 0; i < static_cast<int>(s.arcs.size()); ++i)
    if (s.arcs[s.arcs[i].reverse].reverse != i)
      throw Error("internal: scaffolding arc reversal is broken");
  return s;
}

namespace {

bool isAdhesionMap(const Gga& g, int baseArc, const std::vector<int>& map, bool twisted) {
  const PermAction& G = g.vertexAction[g.base.terminus(baseArc)];
  const std::vector<int>& phi = g.embedding[baseArc];
  int ny = static_cast<int>(phi.size());
  const Permutation* ha = nullptr;
  if (twisted) {
    auto it = g.inversionAgent.find(baseArc);
    if (it == g.inversionAgent.end()) return false;
    ha = &it->second;
  }
  for (const auto& gamma : G.elements()) {
    bool ok = true;
    for (int y = 0; y < ny && ok; ++y) {
      int src = twisted ? phi[(*ha)(y)] : phi[y];
      if (gamma(src) != map[y]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

PsiClass psiClassify(const Scaffolding& s, const Gga& g, int abundle) {
  PsiClass out;
  out.map = s.psi(abundle);
  int baseArc = s.abundles[abundle].piArc;
  out.adhesion = isAdhesionMap(g, baseArc, out.map, false);
  if (g.base.selfReverse(baseArc)) out.twisted = isAdhesionMap(g, baseArc, out.map, true);
  if (!out.adhesion && !out.twisted)
    throw Error("psi at bundle '" + s.abundles[abundle].id + "' is neither an adhesion map nor twisted");
  return out;
}

Diagnostics checkScaffolding(const Scaffolding& s, const Gga& g) {
  Diagnostics d;

  // structural sanity
  for (int i = 0; i < static_cast<int>(s.arcs.size()); ++i) {
    const auto& a = s.arcs[i];
    if (a.abundle < 0 || a.abundle >= static_cast<int>(s.abundles.size()) ||
        s.arcs[a.reverse].reverse != i) {
      d.fail("structure: arc table is inconsistent at '" + a.id + "'");
      return d;
    }
    const auto& ab = s.abundles[a.abundle];
    if (s.verts[a.origin].bundle != ab.origin || s.verts[a.terminus].bundle != ab.terminus)
      d.fail("structure: arc '" + a.id + "' does not join the bundles of its arc bundle");
    if (s.arcs[a.reverse].abundle != ab.reverse)
      d.fail("structure: reverse of arc '" + a.id + "' lies in the wrong bundle");
    if (a.origin != s.arcs[a.reverse].terminus)
      d.fail("structure: origin of arc '" + a.id + "' differs from its reverse's terminus");
  }
  if (!d.ok) return d;

  // (i) bundle quotient is a tree (at truncation)
  {
    SerreGraph q = s.quotientTree();
    if (!q.isTree()) d.fail("quotient-not-tree: bundle quotient is not a tree");
  }

  // (ii) vertex bundles induce empty subgraphs
  for (const auto& a : s.arcs)
    if (s.verts[a.origin].bundle == s.verts[a.terminus].bundle) {
      d.fail("bundle-not-empty: arc '" + a.id + "' joins vertices of one bundle");
      break;
    }

  // (iii) π is a graph morphism on the quotient
  for (const auto& ab : s.abundles) {
    if (g.base.origin(ab.piArc) != s.bundles[ab.origin].piVertex ||
        g.base.terminus(ab.piArc) != s.bundles[ab.terminus].piVertex)
      d.fail("pi-not-graph-morphism: arc bundle '" + ab.id + "' labels do not match its endpoints");
    if (s.abundles[ab.reverse].piArc != g.base.reverse(ab.piArc))
      d.fail("pi-not-graph-morphism: reverse of arc bundle '" + ab.id + "' has the wrong label");
  }

  // (iv) colouring bijections per bundle
  for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
    const PermAction& X = g.vertexAction[s.bundles[b].piVertex];
    std::set<int> seen;
    int count = 0;
    for (int v : s.bundleVerts(b)) {
      ++count;
      if (s.verts[v].point < 0 || s.verts[v].point >= X.points()->size() ||
          !seen.insert(s.verts[v].point).second) {
        d.fail("vertex-colour-not-bijective: bundle '" + s.bundles[b].id + "'");
        break;
      }
    }
    if (count != X.points()->size())
      d.fail("vertex-colour-not-bijective: bundle '" + s.bundles[b].id + "' has wrong size");
  }
  for (int ab = 0; ab < static_cast<int>(s.abundles.size()); ++ab) {
    const PermAction& Y = g.arcAction[s.abundles[ab].piArc];
    std::set<int> seen, termini, origins;
    int count = 0;
    bool bad = false;
    for (int e : s.bundleArcs(ab)) {
      ++count;
      if (s.arcs[e].point < 0 || s.arcs[e].point >= Y.points()->size() ||
          !seen.insert(s.arcs[e].point).second)
        bad = true;
      if (!termini.insert(s.arcs[e].terminus).second) bad = true;
      if (!origins.insert(s.arcs[e].origin).second) bad = true;
    }
    if (count != Y.points()->size() || bad)
      d.fail("arc-bundle-not-matching: bundle '" + s.abundles[ab].id + "' is not a full matching");
  }
  if (!d.ok) return d;

  // (iv) p(y) = p(reverse y)
  for (const auto& a : s.arcs)
    if (s.arcs[a.reverse].point != a.point) {
      d.fail("reverse-colour-mismatch: arc '" + a.id + "'");
      break;
    }

  // (iv) Ψ is an adhesion map; over self-reverse arcs one direction twisted
  std::vector<char> done(s.abundles.size(), 0);
  for (int ab = 0; ab < static_cast<int>(s.abundles.size()); ++ab) {
    if (done[ab]) continue;
    int rev = s.abundles[ab].reverse;
    done[ab] = done[rev] = 1;
    int baseArc = s.abundles[ab].piArc;
    if (!g.base.selfReverse(baseArc)) {
      for (int x : {ab, rev})
        if (!isAdhesionMap(g, s.abundles[x].piArc, s.psi(x), false))
          d.fail("psi-not-adhesion: bundle '" + s.abundles[x].id + "'");
    } else {
      auto m1 = s.psi(ab), m2 = s.psi(rev);
      bool ok = (isAdhesionMap(g, baseArc, m1, false) && isAdhesionMap(g, baseArc, m2, true)) ||
                (isAdhesionMap(g, baseArc, m1, true) && isAdhesionMap(g, baseArc, m2, false));
      if (!ok)
        d.fail("psi-not-adhesion: bundle pair '" + s.abundles[ab].id +
               "' admits no adhesion/twisted classification");
    }
  }

  // (iv) existence and uniqueness at interior bundles
  for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
    if (!s.bundles[b].interior) continue;
    int pv = s.bundles[b].piVertex;
    for (int arc = 0; arc < g.base.arcCount(); ++arc) {
      if (g.base.terminus(arc) != pv) continue;
      auto sets = g.vertexAction[pv].orbitOfSet(g.baseAdhesionSet(arc));
      for (const auto& S : sets) {
        int hits = 0;
        for (int ab : s.arcBundlesAt(b))
          if (s.abundles[ab].piArc == arc && s.adhesionAt(ab) == S) ++hits;
        if (hits != 1)
          d.fail("adhesion-uniqueness: " + std::to_string(hits) + " arc bundles at '" +
                 s.bundles[b].id + "' over arc '" + g.base.arcId(arc) + "' carry one adhesion set");
      }
    }
  }
  return d;
}

AugmentedTree collapseToTPlus(const Scaffolding& s) {
  AugmentedTree out;
  std::vector<std::string> vids;
  for (const auto& b : s.bundles) vids.push_back(b.id);
  std::vector<ArcDecl> decls;
  for (const auto& a : s.arcs) {
    decls.push_back({a.id, s.bundles[s.verts[a.origin].bundle].id,
                     s.bundles[s.verts[a.terminus].bundle].id, s.arcs[a.reverse].id});
    out.arcSource.push_back(static_cast<int>(out.arcSource.size()));
  }
  out.graph = SerreGraph::make(vids, decls);
  return out;
}

Scaffolding subdividedScaffoldTransfer(const Gga& g, int radius) {
  SubdivisionResult sd = subdivideSelfReverse(g);
  if (!sd.changed) throw Error("subdividedScaffoldTransfer: gga has no self-reverse arcs");

  AugmentedDigraph aug0 = augment(sd.gga);
  CoveringTree t0 =
      buildStarCoveringTree(sd.gga, aug0, sd.gga.base.vertexId(0), 2 * radius + 1);
  Scaffolding s0 = buildCanonical(sd.gga, aug0, t0);

  std::set<std::string> subVertexIds(sd.subdivisionVertices.begin(), sd.subdivisionVertices.end());
  std::map<std::string, std::string> arcOfVertex;  // subdivision vertex id -> original arc id
  for (const auto& [arcId, vid] : sd.vertexForArc) arcOfVertex[vid] = arcId;

  auto isSubBundle = [&](int b) {
    return subVertexIds.count(sd.gga.base.vertexId(s0.bundles[b].piVertex)) > 0;
  };

  Scaffolding s;
  s.ggaName = g.name;

  // kept bundles
  std::vector<int> bundleMap(s0.bundles.size(), -1);
  for (int b = 0; b < static_cast<int>(s0.bundles.size()); ++b) {
    if (isSubBundle(b)) continue;
    bundleMap[b] = static_cast<int>(s.bundles.size());
    int pv = g.base.vertexIndex(sd.gga.base.vertexId(s0.bundles[b].piVertex));
    // parent: nearest kept ancestor
    int par = s0.bundles[b].parent;
    while (par >= 0 && isSubBundle(par)) par = s0.bundles[par].parent;
    s.bundles.push_back({s0.bundles[b].id, pv, s0.bundles[b].interior, par});
  }
  for (auto& b : s.bundles)
    if (b.parent >= 0) b.parent = bundleMap[b.parent];

  // demote kept bundles adjacent to an unexpanded (frontier) subdivision bundle
  std::vector<char> dropBundleEdges(s0.bundles.size(), 0);
  for (int b = 0; b < static_cast<int>(s0.bundles.size()); ++b) {
    if (!isSubBundle(b) || s0.bundles[b].interior) continue;
    dropBundleEdges[b] = 1;
    for (const auto& ab : s0.abundles) {
      if (ab.terminus == b && bundleMap[ab.origin] >= 0)
        s.bundles[bundleMap[ab.origin]].interior = false;
      if (ab.origin == b && bundleMap[ab.terminus] >= 0)
        s.bundles[bundleMap[ab.terminus]].interior = false;
    }
  }

  // kept vertices
  std::vector<int> vertMap(s0.verts.size(), -1);
  for (int v = 0; v < static_cast<int>(s0.verts.size()); ++v) {
    if (bundleMap[s0.verts[v].bundle] < 0) continue;
    vertMap[v] = static_cast<int>(s.verts.size());
    s.verts.push_back({s0.verts[v].id, bundleMap[s0.verts[v].bundle], s0.verts[v].point});
  }

  // kept arc bundles and arcs (both endpoints kept)
  std::vector<int> abMap(s0.abundles.size(), -1);
  for (int ab = 0; ab < static_cast<int>(s0.abundles.size()); ++ab) {
    const auto& b0 = s0.abundles[ab];
    if (bundleMap[b0.origin] < 0 || bundleMap[b0.terminus] < 0) continue;
    abMap[ab] = static_cast<int>(s.abundles.size());
    int piArc = g.base.arcIndex(sd.gga.base.arcId(b0.piArc));
    if (piArc < 0) throw Error("internal: kept arc bundle over a subdivision arc");
    s.abundles.push_back({b0.id, bundleMap[b0.origin], bundleMap[b0.terminus], b0.reverse, piArc, -1});
  }
  for (auto& ab : s.abundles) ab.reverse = abMap[ab.reverse];
  std::vector<int> arcMap(s0.arcs.size(), -1);
  for (int e = 0; e < static_cast<int>(s0.arcs.size()); ++e) {
    if (abMap[s0.arcs[e].abundle] < 0) continue;
    arcMap[e] = static_cast<int>(s.arcs.size());
    s.arcs.push_back({s0.arcs[e].id, abMap[s0.arcs[e].abundle], s0.arcs[e].point,
                      vertMap[s0.arcs[e].origin], vertMap[s0.arcs[e].terminus], s0.arcs[e].reverse});
  }
  for (auto& a : s.arcs) a.reverse = arcMap[a.reverse];

  // splice through each expanded subdivision bundle: for each y the (+,y) and
  // (-,y) vertices each meet one edge; join their outer endpoints directly
  for (int b = 0; b < static_cast<int>(s0.bundles.size()); ++b) {
    if (!isSubBundle(b) || dropBundleEdges[b]) continue;
    std::string subVid = sd.gga.base.vertexId(s0.bundles[b].piVertex);
    std::string origArcId = arcOfVertex.at(subVid);
    int origArc = g.base.arcIndex(origArcId);
    const PermAction& Y = g.arcAction[origArc];
    int ny = Y.points()->size();
    const PointSet& Xva = *sd.gga.vertexAction[s0.bundles[b].piVertex].points();

    // neighbouring kept bundles of b in the quotient tree
    std::vector<int> nbrs;
    for (const auto& ab : s0.abundles)
      if (ab.terminus == b && bundleMap[ab.origin] >= 0) nbrs.push_back(ab.origin);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    if (nbrs.size() != 2 && nbrs.size() != 1)
      throw Error("internal: subdivision bundle with unexpected neighbour count");

    int newAb1 = static_cast<int>(s.abundles.size());
    int newAb2 = newAb1 + 1;
    // endpoints per y discovered below; bundle endpoints fixed after
    struct Splice { int outerPlus = -1, outerMinus = -1; };
    std::vector<Splice> splice(ny);
    for (int e = 0; e < static_cast<int>(s0.arcs.size()); ++e) {
      const auto& a0 = s0.arcs[e];
      if (s0.verts[a0.terminus].bundle != b) continue;  // arcs INTO the bundle
      int pt = s0.verts[a0.terminus].point;             // index into {p.y..., m.y...}
      std::string token = Xva.token(pt);
      bool plus = token.rfind("p.", 0) == 0;
      std::string ytoken = token.substr(2);
      int y = Y.points()->indexOf(ytoken);
      if (y < 0) throw Error("internal: subdivision point token mismatch");
      int outer = vertMap[a0.origin];
      if (outer < 0) throw Error("internal: spliced edge endpoint was dropped");
      (plus ? splice[y].outerPlus : splice[y].outerMinus) = outer;
    }

    int bPlus = -1, bMinus = -1;  // bundles of the outer endpoints
    for (int y = 0; y < ny; ++y) {
      if (splice[y].outerPlus < 0 || splice[y].outerMinus < 0)
        throw Error("internal: incomplete splice at subdivision bundle");
      int pb = s.verts[splice[y].outerPlus].bundle;
      int mb = s.verts[splice[y].outerMinus].bundle;
      if (bPlus < 0) { bPlus = pb; bMinus = mb; }
      if (pb != bPlus || mb != bMinus) throw Error("internal: splice endpoints change bundles");
    }

    s.abundles.push_back({s0.bundles[b].id + "*a", bMinus, bPlus, newAb2, origArc, -1});
    s.abundles.push_back({s0.bundles[b].id + "*b", bPlus, bMinus, newAb1, origArc, -1});
    for (int y = 0; y < ny; ++y) {
      int i1 = static_cast<int>(s.arcs.size());
      std::string yt = Y.points()->token(y);
      s.arcs.push_back({s0.bundles[b].id + "*a|" + yt, newAb1, y, splice[y].outerMinus,
                        splice[y].outerPlus, i1 + 1});
      s.arcs.push_back({s0.bundles[b].id + "*b|" + yt, newAb2, y, splice[y].outerPlus,
                        splice[y].outerMinus, i1});
    }
  }
  return s;
}

}  // namespace gga
