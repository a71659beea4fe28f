#include "gga/gga.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gga {

std::vector<int> Gga::baseAdhesionSet(int a) const {
  std::vector<int> im = embedding[a];
  std::sort(im.begin(), im.end());
  return im;
}

Diagnostics validateGga(const Gga& g) {
  Diagnostics d;
  if (g.base.vertexCount() == 0) {
    d.fail("base graph is empty");
    return d;
  }
  {
    Diagnostics gd = g.base.validate();
    for (auto& i : gd.issues) d.fail("base: " + i);
  }
  if (!g.base.connected()) d.fail("base graph is not connected");
  if (static_cast<int>(g.vertexAction.size()) != g.base.vertexCount() ||
      static_cast<int>(g.arcAction.size()) != g.base.arcCount() ||
      static_cast<int>(g.embedding.size()) != g.base.arcCount()) {
    d.fail("action tables have wrong size");
    return d;
  }
  for (int a = 0; a < g.base.arcCount(); ++a) {
    int r = g.base.reverse(a);
    if (!g.arcAction[a].sameActionObject(g.arcAction[r]))
      d.fail("actions at '" + g.base.arcId(a) + "' and its reverse differ");
    ActionEmbedding e = g.embeddingAt(a);
    if (static_cast<int>(e.pointMap.size()) != g.arcAction[a].points()->size()) {
      d.fail("embedding at '" + g.base.arcId(a) + "' has wrong length");
      continue;
    }
    EmbeddingCheck c = isEmbeddingOfActions(e);
    if (!c.ok)
      d.fail("embedding at '" + g.base.arcId(a) + "' is not an embedding of actions: " + c.witness);
  }
  for (int a = 0; a < g.base.arcCount(); ++a) {
    if (!g.base.selfReverse(a)) {
      if (g.inversionAgent.count(a))
        d.fail("inversion agent on non-self-reverse arc '" + g.base.arcId(a) + "'");
      continue;
    }
    auto it = g.inversionAgent.find(a);
    if (it == g.inversionAgent.end()) {
      d.fail("self-reverse arc '" + g.base.arcId(a) + "' has no inversion agent");
      continue;
    }
    const Permutation& h = it->second;
    if (!h.domain()->sameAs(*g.arcAction[a].points())) {
      d.fail("inversion agent at '" + g.base.arcId(a) + "' acts on the wrong set");
      continue;
    }
    const PermAction& H = g.arcAction[a];
    // h_a H h_a^{-1} = H
    Permutation hinv = h.inverse();
    for (const auto& x : H.elements()) {
      if (!H.contains(h.compose(x).compose(hinv))) {
        d.fail("inversion agent at '" + g.base.arcId(a) + "' does not normalize H(a)");
        break;
      }
    }
    if (!H.contains(h.compose(h)))
      d.fail("square of inversion agent at '" + g.base.arcId(a) + "' is not in H(a)");
  }
  return d;
}

int adhesionIndex(const Gga& g, int arc) {
  const PermAction& G = g.vertexAction[g.base.terminus(arc)];
  return static_cast<int>(G.orbitOfSet(g.baseAdhesionSet(arc)).size());
}

AugmentedDigraph augment(const Gga& g, TransversalChooser chooser) {
  AugmentedDigraph aug;
  std::vector<std::string> arcIds;
  std::vector<int> origin, terminus;
  aug.fiber.resize(g.base.arcCount());

  for (int a = 0; a < g.base.arcCount(); ++a) {
    int t = g.base.terminus(a);
    const PermAction& G = g.vertexAction[t];
    std::vector<int> baseSet = g.baseAdhesionSet(a);
    std::vector<std::vector<int>> sets = G.orbitOfSet(baseSet);
    for (size_t k = 0; k < sets.size(); ++k) {
      std::string id = k == 0 ? g.base.arcId(a) : g.base.arcId(a) + "+" + std::to_string(k + 1);
      int plusIdx = static_cast<int>(arcIds.size());
      arcIds.push_back(id);
      origin.push_back(g.base.origin(a));
      terminus.push_back(t);
      aug.rho.push_back(a);
      aug.adhesion.push_back(sets[k]);
      aug.selfReverseMark.push_back(g.base.selfReverse(a) ? 1 : 0);
      aug.fiber[a].push_back(plusIdx);

      // γ_b: canonical-least element mapping the base adhesion set onto this
      // one (identity for the original arc by construction).
      std::vector<Permutation> candidates;
      for (const auto& e : G.elements()) {
        std::vector<int> im;
        im.reserve(baseSet.size());
        for (int p : baseSet) im.push_back(e(p));
        std::sort(im.begin(), im.end());
        if (im == sets[k]) candidates.push_back(e);
      }
      if (candidates.empty()) throw Error("internal: empty transversal candidate list");
      int pick = 0;
      if (chooser) {
        pick = chooser(static_cast<int>(candidates.size()));
        if (pick < 0 || pick >= static_cast<int>(candidates.size()))
          throw Error("transversal chooser returned an out-of-range index");
      }
      if (k == 0) pick = 0;  // original arc keeps the identity
      aug.gamma.push_back(candidates[pick]);
      std::vector<int> phiB(g.embedding[a].size());
      for (size_t y = 0; y < phiB.size(); ++y) phiB[y] = aug.gamma.back()(g.embedding[a][y]);
      aug.chosenMap.push_back(std::move(phiB));
    }
  }

  std::vector<std::string> vids(g.base.vertexCount());
  for (int v = 0; v < g.base.vertexCount(); ++v) vids[v] = g.base.vertexId(v);
  aug.plus = Digraph::make(vids, arcIds, origin, terminus);
  return aug;
}

Diagnostics validateAugmented(const Gga& g, const AugmentedDigraph& aug) {
  Diagnostics d;
  for (int a = 0; a < g.base.arcCount(); ++a) {
    int t = g.base.terminus(a);
    const PermAction& G = g.vertexAction[t];
    auto sets = G.orbitOfSet(g.baseAdhesionSet(a));
    if (static_cast<int>(aug.fiber[a].size()) != static_cast<int>(sets.size()))
      d.fail("fiber over '" + g.base.arcId(a) + "' has wrong size");
    std::set<std::vector<int>> want(sets.begin(), sets.end());
    std::set<std::vector<int>> got;
    for (int b : aug.fiber[a]) got.insert(aug.adhesion[b]);
    if (want != got) d.fail("adhesion sets over '" + g.base.arcId(a) + "' do not exhaust the orbit");
    if (!aug.fiber[a].empty() && !aug.gamma[aug.fiber[a][0]].isIdentity())
      d.fail("original arc '" + g.base.arcId(a) + "' does not carry the identity transversal");
  }
  return d;
}

SubdivisionResult subdivideSelfReverse(const Gga& g) {
  SubdivisionResult res;
  std::vector<std::string> vertices;
  for (int v = 0; v < g.base.vertexCount(); ++v) vertices.push_back(g.base.vertexId(v));
  std::vector<ArcDecl> decls;
  std::vector<PermAction> arcActions;
  std::vector<std::vector<int>> embeddings;

  auto keepArc = [&](int a) {
    decls.push_back({g.base.arcId(a), g.base.vertexId(g.base.origin(a)),
                     g.base.vertexId(g.base.terminus(a)), g.base.arcId(g.base.reverse(a))});
    arcActions.push_back(g.arcAction[a]);
    embeddings.push_back(g.embedding[a]);
  };

  std::vector<PermAction> newVertexActions;  // appended after originals
  for (int a = 0; a < g.base.arcCount(); ++a) {
    if (!g.base.selfReverse(a)) {
      keepArc(a);
      continue;
    }
    res.changed = true;
    const std::string arcId = g.base.arcId(a);
    const std::string vid = arcId + ".v";
    res.subdivisionVertices.push_back(vid);
    res.vertexForArc[arcId] = vid;

    const PermAction& H = g.arcAction[a];
    const Permutation& ha = g.inversionAgent.at(a);
    int ny = H.points()->size();

    // X(v_a) = {-1,+1} x Y(a); tokens p.<y> then m.<y>
    std::vector<std::string> tokens;
    for (int y = 0; y < ny; ++y) tokens.push_back("p." + H.points()->token(y));
    for (int y = 0; y < ny; ++y) tokens.push_back("m." + H.points()->token(y));
    PointSetPtr xva = PointSet::make(vid, tokens);
    auto lift = [&](const Permutation& h, bool flip) {
      std::vector<int> img(2 * ny);
      for (int y = 0; y < ny; ++y) {
        int iy = h(y);
        if (!flip) {
          img[y] = iy;
          img[ny + y] = ny + iy;
        } else {
          img[y] = ny + iy;
          img[ny + y] = iy;
        }
      }
      return Permutation(xva, std::move(img));
    };
    std::vector<Permutation> gens;
    for (const auto& h : H.generators()) gens.push_back(lift(h, false));
    gens.push_back(lift(ha, true));  // h_{a+}(eps, y) = (-eps, h_a(y))
    newVertexActions.push_back(PermAction::make(xva, std::move(gens)));
    vertices.push_back(vid);

    // arc pair b_a: v_a -> t(a) with Φ = Φ_a; reverse embeds y -> (+1, y)
    const std::string ba = arcId + ".b", bar = arcId + ".br";
    decls.push_back({ba, vid, g.base.vertexId(g.base.terminus(a)), bar});
    arcActions.push_back(H);
    embeddings.push_back(g.embedding[a]);
    decls.push_back({bar, g.base.vertexId(g.base.terminus(a)), vid, ba});
    arcActions.push_back(H);
    std::vector<int> plusEmbed(ny);
    for (int y = 0; y < ny; ++y) plusEmbed[y] = y;  // (+1, y) tokens sit first
    embeddings.push_back(std::move(plusEmbed));
  }

  res.gga.name = g.name + "-subdivided";
  res.gga.base = SerreGraph::make(vertices, decls);
  res.gga.vertexAction = g.vertexAction;
  for (auto& va : newVertexActions) res.gga.vertexAction.push_back(std::move(va));
  res.gga.arcAction = std::move(arcActions);
  res.gga.embedding = std::move(embeddings);
  return res;
}

namespace {

/// Union of all adhesion sets inside X(v), sorted.
std::vector<int> adhesionUnion(const Gga& g, int v) {
  std::set<int> pts;
  for (int a = 0; a < g.base.arcCount(); ++a) {
    if (g.base.terminus(a) != v) continue;
    for (const auto& s : g.vertexAction[v].orbitOfSet(g.baseAdhesionSet(a)))
      pts.insert(s.begin(), s.end());
  }
  return {pts.begin(), pts.end()};
}

}  // namespace

Gga reduceGga(const Gga& g) {
  Gga out;
  out.name = g.name + "-reduced";
  out.base = g.base;
  out.arcAction = g.arcAction;
  out.vertexAction.reserve(g.base.vertexCount());
  std::vector<std::vector<int>> indexMap(g.base.vertexCount());
  for (int v = 0; v < g.base.vertexCount(); ++v) {
    std::vector<int> keep = adhesionUnion(g, v);
    if (keep.empty())
      throw Error("reduce: vertex '" + g.base.vertexId(v) + "' has no incident adhesion sets");
    PermAction induced = g.vertexAction[v].inducedOnSubset(keep);
    std::vector<int> map(g.vertexAction[v].points()->size(), -1);
    for (size_t i = 0; i < keep.size(); ++i) map[keep[i]] = static_cast<int>(i);
    indexMap[v] = std::move(map);
    out.vertexAction.push_back(std::move(induced));
  }
  out.embedding.resize(g.base.arcCount());
  for (int a = 0; a < g.base.arcCount(); ++a) {
    int t = g.base.terminus(a);
    out.embedding[a].resize(g.embedding[a].size());
    for (size_t y = 0; y < g.embedding[a].size(); ++y) {
      int m = indexMap[t][g.embedding[a][y]];
      if (m < 0) throw Error("internal: embedded point missing from adhesion union");
      out.embedding[a][y] = m;
    }
  }
  out.inversionAgent = g.inversionAgent;
  return out;
}

Gga arcReduceGga(const Gga& g) {
  AugmentedDigraph aug = augment(g);
  Gga out;
  out.name = g.name + "-arc-reduced";
  out.base = g.base;
  out.arcAction = g.arcAction;

  // X''(v): one block per augmented arc into v, tagged by its arc id.
  std::vector<std::vector<std::pair<int, int>>> blocks(g.base.vertexCount());  // (plus arc, point)
  for (int b = 0; b < aug.plus.arcCount(); ++b) {
    int v = aug.plus.terminus(b);
    for (int p : aug.adhesion[b]) blocks[v].emplace_back(b, p);
  }
  std::vector<PointSetPtr> sets(g.base.vertexCount());
  out.vertexAction.reserve(g.base.vertexCount());
  for (int v = 0; v < g.base.vertexCount(); ++v) {
    if (blocks[v].empty())
      throw Error("arc-reduce: vertex '" + g.base.vertexId(v) + "' has no incident adhesion sets");
    std::vector<std::string> tokens;
    for (auto [b, p] : blocks[v])
      tokens.push_back(aug.plus.arcId(b) + "." + g.vertexAction[v].points()->token(p));
    sets[v] = PointSet::make(g.base.vertexId(v), tokens);

    // action: g.(b, x) = (owner of g(adh(b)), g(x))
    std::map<std::vector<int>, int> ownerOf;
    for (int b = 0; b < aug.plus.arcCount(); ++b)
      if (aug.plus.terminus(b) == v) ownerOf[aug.adhesion[b]] = b;
    std::map<std::pair<int, int>, int> pos;
    for (size_t i = 0; i < blocks[v].size(); ++i) pos[blocks[v][i]] = static_cast<int>(i);

    std::vector<Permutation> perms;
    std::set<std::vector<int>> seen;
    for (const auto& e : g.vertexAction[v].elements()) {
      std::vector<int> img(blocks[v].size());
      for (size_t i = 0; i < blocks[v].size(); ++i) {
        auto [b, p] = blocks[v][i];
        std::vector<int> im;
        for (int q : aug.adhesion[b]) im.push_back(e(q));
        std::sort(im.begin(), im.end());
        auto it = ownerOf.find(im);
        if (it == ownerOf.end()) throw Error("internal: translated adhesion set not found");
        img[i] = pos.at({it->second, e(p)});
      }
      if (seen.insert(img).second) perms.emplace_back(sets[v], std::move(img));
    }
    out.vertexAction.push_back(PermAction::make(sets[v], std::move(perms)));
  }

  out.embedding.resize(g.base.arcCount());
  for (int a = 0; a < g.base.arcCount(); ++a) {
    int t = g.base.terminus(a);
    out.embedding[a].resize(g.embedding[a].size());
    for (size_t y = 0; y < g.embedding[a].size(); ++y) {
      // the base adhesion set of a is owned by the original arc a itself
      std::string token =
          g.base.arcId(a) + "." + g.vertexAction[t].points()->token(g.embedding[a][y]);
      int idx = sets[t]->indexOf(token);
      if (idx < 0) throw Error("internal: tagged point not found in arc-reduced set");
      out.embedding[a][y] = idx;
    }
  }
  out.inversionAgent = g.inversionAgent;
  return out;
}

bool isFree(const Gga& g) {
  for (int a = 0; a < g.base.arcCount(); ++a)
    if (g.arcAction[a].points()->size() != 1 || g.arcAction[a].order() != 1) return false;
  return true;
}

namespace {

/// Search state for gga isomorphisms: base-graph isomorphism first, then
/// per-vertex action isomorphisms, then arc action isomorphisms constrained
/// by the adhesion condition on both members of each reverse pair.
struct GgaIsoSearch {
  const Gga& A;
  const Gga& B;
  GraphMorphism theta;
  std::vector<char> vused, aused;
  std::vector<ActionIsomorphism> vertexTheta;
  std::vector<ActionIsomorphism> arcTheta;
  std::vector<char> arcDone;
  std::vector<std::vector<int>> psi;
  std::optional<GgaIsomorphism> result;

  GgaIsoSearch(const Gga& a, const Gga& b)
      : A(a), B(b) {
    theta.vertexMap.assign(A.base.vertexCount(), -1);
    theta.arcMap.assign(A.base.arcCount(), -1);
    vused.assign(B.base.vertexCount(), 0);
    aused.assign(B.base.arcCount(), 0);
    vertexTheta.resize(A.base.vertexCount());
    arcTheta.resize(A.base.arcCount());
    arcDone.assign(A.base.arcCount(), 0);
    psi.resize(A.base.arcCount());
  }

  // Θ_{t(a)} Φ_a Θ_a^{-1} must be an adhesion map g'∘Φ'_{θ(a)}; returns the
  // witness map if some g' works.
  std::optional<std::vector<int>> adhesionWitness(int a, const std::vector<int>& thetaArcPointMap) {
    int ta = A.base.terminus(a);
    int b = theta.arcMap[a];
    const PermAction& Gp = B.vertexAction[B.base.terminus(b)];
    int ny = A.arcAction[a].points()->size();
    // M : Y'(θa) -> X'(θ t a),  M(Θ_a(y)) = Θ_{t}(Φ_a(y))
    std::vector<int> M(ny, -1);
    for (int y = 0; y < ny; ++y)
      M[thetaArcPointMap[y]] = vertexTheta[ta].pointMap[A.embedding[a][y]];
    for (const auto& gp : Gp.elements()) {
      bool ok = true;
      for (int yp = 0; yp < ny && ok; ++yp)
        if (gp(B.embedding[b][yp]) != M[yp]) ok = false;
      if (ok) return M;
    }
    return std::nullopt;
  }

  bool tryArcPair(int a, int pos, const std::vector<int>& order);

  bool assignArcActions(int pos, const std::vector<int>& order) {
    if (pos == static_cast<int>(order.size())) {
      GgaIsomorphism iso;
      iso.theta = theta;
      iso.vertexTheta = vertexTheta;
      iso.arcTheta = arcTheta;
      iso.psiWitness = psi;
      result = std::move(iso);
      return true;
    }
    return tryArcPair(order[pos], pos, order);
  }

  bool assignVertexActions(int v) {
    if (v == A.base.vertexCount()) {
      std::vector<int> order;
      for (int a = 0; a < A.base.arcCount(); ++a)
        if (A.base.reverse(a) >= a) order.push_back(a);
      return assignArcActions(0, order);
    }
    auto isos = allActionIsomorphisms(A.vertexAction[v], B.vertexAction[theta.vertexMap[v]]);
    for (auto& iso : isos) {
      vertexTheta[v] = iso;
      if (assignVertexActions(v + 1)) return true;
    }
    return false;
  }

  bool assignArcs(int a) {
    if (a == A.base.arcCount()) return assignVertexActions(0);
    if (theta.arcMap[a] >= 0) return assignArcs(a + 1);
    for (int b = 0; b < B.base.arcCount(); ++b) {
      if (aused[b]) continue;
      if (B.base.origin(b) != theta.vertexMap[A.base.origin(a)]) continue;
      if (B.base.terminus(b) != theta.vertexMap[A.base.terminus(a)]) continue;
      int ra = A.base.reverse(a), rb = B.base.reverse(b);
      if ((ra == a) != (rb == b)) continue;
      if (ra != a && aused[rb]) continue;
      theta.arcMap[a] = b;
      aused[b] = 1;
      bool setRev = ra != a;
      if (setRev) { theta.arcMap[ra] = rb; aused[rb] = 1; }
      if (assignArcs(a + 1)) return true;
      if (setRev) { theta.arcMap[ra] = -1; aused[rb] = 0; }
      theta.arcMap[a] = -1;
      aused[b] = 0;
    }
    return false;
  }

  bool assignVerts(int v) {
    if (v == A.base.vertexCount()) return assignArcs(0);
    for (int w = 0; w < B.base.vertexCount(); ++w) {
      if (vused[w]) continue;
      if (A.vertexAction[v].points()->size() != B.vertexAction[w].points()->size()) continue;
      if (A.vertexAction[v].order() != B.vertexAction[w].order()) continue;
      theta.vertexMap[v] = w;
      vused[w] = 1;
      if (assignVerts(v + 1)) return true;
      theta.vertexMap[v] = -1;
      vused[w] = 0;
    }
    return false;
  }
};

bool GgaIsoSearch::tryArcPair(int a, int pos, const std::vector<int>& order) {
  int ra = A.base.reverse(a);
  auto isos = allActionIsomorphisms(A.arcAction[a], B.arcAction[theta.arcMap[a]]);
  for (auto& iso : isos) {
    auto w1 = adhesionWitness(a, iso.pointMap);
    if (!w1) continue;
    std::optional<std::vector<int>> w2;
    if (ra != a) {
      w2 = adhesionWitness(ra, iso.pointMap);
      if (!w2) continue;
    }
    arcTheta[a] = iso;
    psi[a] = *w1;
    if (ra != a) {
      arcTheta[ra] = iso;
      psi[ra] = *w2;
    }
    if (assignArcActions(pos + 1, order)) return true;
  }
  return false;
}

}  // namespace

std::optional<GgaIsomorphism> ggaIsomorphic(const Gga& g, const Gga& h) {
  if (g.base.vertexCount() != h.base.vertexCount() || g.base.arcCount() != h.base.arcCount())
    return std::nullopt;
  GgaIsoSearch s(g, h);
  s.assignVerts(0);
  return s.result;
}

Diagnostics verifyGgaIsomorphism(const Gga& g, const Gga& h, const GgaIsomorphism& iso) {
  Diagnostics d;
  if (!isGraphMorphism(g.base, h.base, iso.theta)) d.fail("theta is not a graph morphism");
  {
    std::set<int> vs(iso.theta.vertexMap.begin(), iso.theta.vertexMap.end());
    std::set<int> as(iso.theta.arcMap.begin(), iso.theta.arcMap.end());
    if (static_cast<int>(vs.size()) != g.base.vertexCount() ||
        static_cast<int>(as.size()) != g.base.arcCount())
      d.fail("theta is not bijective");
  }
  for (int v = 0; v < g.base.vertexCount(); ++v)
    if (!verifyActionIsomorphism(g.vertexAction[v], h.vertexAction[iso.theta.vertexMap[v]],
                                 iso.vertexTheta[v]))
      d.fail("vertex map at '" + g.base.vertexId(v) + "' is not an action isomorphism");
  for (int a = 0; a < g.base.arcCount(); ++a) {
    if (!verifyActionIsomorphism(g.arcAction[a], h.arcAction[iso.theta.arcMap[a]], iso.arcTheta[a]))
      d.fail("arc map at '" + g.base.arcId(a) + "' is not an action isomorphism");
    // Ψ_a must be an adhesion map of θ(a) with Θ_t Φ_a = Ψ_a Θ_a
    int b = iso.theta.arcMap[a];
    int ta = g.base.terminus(a);
    const PermAction& Gp = h.vertexAction[h.base.terminus(b)];
    const auto& psiMap = iso.psiWitness[a];
    bool isAdhesion = false;
    for (const auto& gp : Gp.elements()) {
      bool ok = true;
      for (size_t yp = 0; yp < psiMap.size() && ok; ++yp)
        if (gp(h.embedding[b][yp]) != psiMap[yp]) ok = false;
      if (ok) { isAdhesion = true; break; }
    }
    if (!isAdhesion) d.fail("psi witness at '" + g.base.arcId(a) + "' is not an adhesion map");
    for (int y = 0; y < g.arcAction[a].points()->size(); ++y)
      if (iso.vertexTheta[ta].pointMap[g.embedding[a][y]] != psiMap[iso.arcTheta[a].pointMap[y]]) {
        d.fail("adhesion square does not commute at '" + g.base.arcId(a) + "'");
        break;
      }
  }
  return d;
}

}  // namespace gga
