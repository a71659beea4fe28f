#include "gga/convert.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gga {

Gga fromBurgerMozes(const std::string& name, const PermAction& f) {
  Gga g;
  g.name = name;
  std::string v = "v";
  auto orbits = f.orbits();

  std::vector<ArcDecl> decls;
  for (size_t i = 0; i < orbits.size(); ++i) {
    std::string id = "a" + std::to_string(i + 1);
    decls.push_back({id, v, v, id});
  }
  g.base = SerreGraph::make({v}, decls);

  std::vector<std::string> xTokens = f.points()->tokens();
  PointSetPtr X = PointSet::make(v, xTokens);
  std::vector<Permutation> gens;
  for (const auto& p : f.generators()) gens.emplace_back(X, p.images());
  g.vertexAction.push_back(PermAction::make(X, std::move(gens)));

  for (size_t i = 0; i < orbits.size(); ++i) {
    int rep = orbits[i].front();  // least point of the orbit
    std::string arcId = "a" + std::to_string(i + 1);
    PointSetPtr Y = PointSet::make(arcId, {f.points()->token(rep)});
    g.arcAction.push_back(PermAction::trivial(Y));
    g.embedding.push_back({rep});
    g.inversionAgent.emplace(static_cast<int>(i), Permutation::identity(Y));
  }
  return g;
}

Gga fromBoxProduct(const std::string& name, const PermAction& m, const PermAction& n) {
  if (m.order() <= 1 || n.order() <= 1)
    throw Error("box product requires nontrivial actions");
  auto mOrbits = m.orbits();
  auto nOrbits = n.orbits();
  // side L carries (M, X) and has one vertex per N-orbit; side R carries
  // (N, Y) with one vertex per M-orbit.  Arc a(i,j): R_j -> L_i.
  int nl = static_cast<int>(nOrbits.size());
  int nr = static_cast<int>(mOrbits.size());

  std::vector<std::string> vertices;
  for (int i = 0; i < nl; ++i) vertices.push_back("L" + std::to_string(i + 1));
  for (int j = 0; j < nr; ++j) vertices.push_back("R" + std::to_string(j + 1));

  std::vector<ArcDecl> decls;
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) {
      std::string a = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      decls.push_back({a, "R" + std::to_string(j + 1), "L" + std::to_string(i + 1), a + "r"});
      decls.push_back({a + "r", "L" + std::to_string(i + 1), "R" + std::to_string(j + 1), a});
    }

  Gga g;
  g.name = name;
  g.base = SerreGraph::make(vertices, decls);
  for (int i = 0; i < nl; ++i) {
    PointSetPtr X = PointSet::make("L" + std::to_string(i + 1), m.points()->tokens());
    std::vector<Permutation> gens;
    for (const auto& p : m.generators()) gens.emplace_back(X, p.images());
    g.vertexAction.push_back(PermAction::make(X, std::move(gens)));
  }
  for (int j = 0; j < nr; ++j) {
    PointSetPtr Y = PointSet::make("R" + std::to_string(j + 1), n.points()->tokens());
    std::vector<Permutation> gens;
    for (const auto& p : n.generators()) gens.emplace_back(Y, p.images());
    g.vertexAction.push_back(PermAction::make(Y, std::move(gens)));
  }

  g.arcAction.resize(g.base.arcCount(), PermAction::trivial(PointSet::make("tmp", {"z"})));
  g.embedding.resize(g.base.arcCount());
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) {
      std::string aId = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      int a = g.base.arcIndex(aId);
      int ar = g.base.reverse(a);
      PointSetPtr Z = PointSet::make(aId, {"z"});
      PermAction act = PermAction::trivial(Z);
      g.arcAction[a] = act;
      g.arcAction[ar] = act;
      g.embedding[a] = {mOrbits[j].front()};   // into X at L_i: rep of M-orbit j
      g.embedding[ar] = {nOrbits[i].front()};  // into Y at R_j: rep of N-orbit i
    }
  return g;
}

Gga fromGraphOfGroups(const GraphOfGroups& gog) {
  for (int a = 0; a < gog.base.arcCount(); ++a)
    if (gog.base.selfReverse(a))
      throw Error("graph of groups must not have self-reverse arcs");

  Gga g;
  g.name = gog.name;
  g.base = gog.base;

  auto elementTokens = [](const PermAction& grp) {
    std::vector<std::string> tokens;
    for (int i = 0; i < grp.order(); ++i) tokens.push_back("e" + std::to_string(i));
    return tokens;
  };

  // left-regular vertex actions on element indices
  std::vector<PointSetPtr> xs(gog.base.vertexCount());
  for (int v = 0; v < gog.base.vertexCount(); ++v) {
    const PermAction& G = gog.vertexGroup[v];
    xs[v] = PointSet::make(gog.base.vertexId(v), elementTokens(G));
    std::vector<Permutation> gens;
    for (const auto& gen : G.generators()) {
      std::vector<int> img(G.order());
      for (int i = 0; i < G.order(); ++i) img[i] = G.elementIndex(gen.compose(G.elements()[i]));
      gens.emplace_back(xs[v], std::move(img));
    }
    g.vertexAction.push_back(PermAction::make(xs[v], std::move(gens)));
  }

  for (int a = 0; a < gog.base.arcCount(); ++a) {
    const PermAction& H = gog.arcGroup[a];
    // the arc pair shares one regular action object
    int r = gog.base.reverse(a);
    if (r < a) {
      g.arcAction.push_back(g.arcAction[r]);
    } else {
      std::vector<Permutation> gens;
      PointSetPtr Ypair = PointSet::make(gog.base.arcId(std::min(a, r)) + ".y", elementTokens(H));
      for (const auto& gen : H.generators()) {
        std::vector<int> img(H.order());
        for (int i = 0; i < H.order(); ++i) img[i] = H.elementIndex(gen.compose(H.elements()[i]));
        gens.emplace_back(Ypair, std::move(img));
      }
      g.arcAction.push_back(PermAction::make(Ypair, std::move(gens)));
    }

    // θ_a on all of H by following generator words
    const PermAction& Gt = gog.vertexGroup[gog.base.terminus(a)];
    if (gog.hom[a].size() != H.generators().size())
      throw Error("arc homomorphism at '" + gog.base.arcId(a) + "' has wrong generator count");
    for (const auto& im : gog.hom[a])
      if (!Gt.contains(im))
        throw Error("arc homomorphism image at '" + gog.base.arcId(a) + "' is not in the target group");

    std::vector<int> theta(H.order(), -1);  // H element index -> Gt element index
    theta[H.elementIndex(Permutation::identity(H.points()))] = Gt.elementIndex(Permutation::identity(Gt.points()));
    // BFS closure over generators
    std::vector<int> queue;
    for (int i = 0; i < H.order(); ++i)
      if (theta[i] >= 0) queue.push_back(i);
    for (size_t q = 0; q < queue.size(); ++q) {
      int hi = queue[q];
      for (size_t k = 0; k < H.generators().size(); ++k) {
        Permutation prod = H.generators()[k].compose(H.elements()[hi]);
        int pi = H.elementIndex(prod);
        Permutation img = gog.hom[a][k].compose(Gt.elements()[theta[hi]]);
        int ii = Gt.elementIndex(img);
        if (theta[pi] < 0) {
          theta[pi] = ii;
          queue.push_back(pi);
        } else if (theta[pi] != ii) {
          throw Error("arc homomorphism at '" + gog.base.arcId(a) + "' is not well-defined");
        }
      }
    }
    std::set<int> image(theta.begin(), theta.end());
    if (image.count(-1) || static_cast<int>(image.size()) != H.order())
      throw Error("arc homomorphism at '" + gog.base.arcId(a) + "' is not injective");
    g.embedding.push_back(std::move(theta));
  }
  return g;
}

Gga fromLocalActionDiagram(const LadDescription& lad) {
  Gga g;
  g.name = lad.name;
  g.base = lad.graph;

  // X(v) = concatenation of per-arc point blocks in arc declaration order
  std::vector<PointSetPtr> xs(g.base.vertexCount());
  std::vector<std::map<std::string, int>> tokenIndex(g.base.vertexCount());
  for (int v = 0; v < g.base.vertexCount(); ++v) {
    std::vector<std::string> tokens;
    for (int a = 0; a < g.base.arcCount(); ++a) {
      if (g.base.terminus(a) != v) continue;
      for (const auto& t : lad.arcPoints[a]) tokens.push_back(t);
    }
    if (tokens.empty())
      throw Error("local action diagram: vertex '" + g.base.vertexId(v) + "' has no incident arc points");
    xs[v] = PointSet::make(g.base.vertexId(v), tokens);
    for (int i = 0; i < xs[v]->size(); ++i) tokenIndex[v][xs[v]->token(i)] = i;
  }
  for (int v = 0; v < g.base.vertexCount(); ++v) {
    std::vector<Permutation> gens;
    for (const auto& text : lad.vertexGens[v]) gens.push_back(Permutation::fromCycles(xs[v], text));
    g.vertexAction.push_back(PermAction::make(xs[v], std::move(gens)));
  }

  // each X(a) must be an orbit of G(t(a))
  for (int a = 0; a < g.base.arcCount(); ++a) {
    int v = g.base.terminus(a);
    std::set<int> want;
    for (const auto& t : lad.arcPoints[a]) want.insert(tokenIndex[v].at(t));
    bool found = false;
    for (const auto& orbit : g.vertexAction[v].orbits())
      if (std::set<int>(orbit.begin(), orbit.end()) == want) { found = true; break; }
    if (!found)
      throw Error("local action diagram: points of arc '" + g.base.arcId(a) + "' are not an orbit");
  }

  // trivial singleton arc actions hitting the first declared point of X(a)
  for (int a = 0; a < g.base.arcCount(); ++a) {
    int r = g.base.reverse(a);
    if (r < a) {
      g.arcAction.push_back(g.arcAction[r]);
    } else {
      PointSetPtr Y = PointSet::make(g.base.arcId(a) + ".y", {"z"});
      g.arcAction.push_back(PermAction::trivial(Y));
    }
    int v = g.base.terminus(a);
    g.embedding.push_back({tokenIndex[v].at(lad.arcPoints[a].front())});
    if (g.base.selfReverse(a))
      g.inversionAgent.emplace(a, Permutation::identity(g.arcAction[a].points()));
  }
  return g;
}

LadDescription toLocalActionDiagram(const Gga& g) {
  if (!isFree(g)) throw Error("toLocalActionDiagram: gga is not free");

  // arc-reduced: adhesion sets must be pairwise disjoint and cover X(v)
  AugmentedDigraph aug = augment(g);
  for (int v = 0; v < g.base.vertexCount(); ++v) {
    std::set<int> covered;
    int total = 0;
    for (int b = 0; b < aug.plus.arcCount(); ++b) {
      if (aug.plus.terminus(b) != v) continue;
      total += static_cast<int>(aug.adhesion[b].size());
      covered.insert(aug.adhesion[b].begin(), aug.adhesion[b].end());
    }
    if (total != static_cast<int>(covered.size()) ||
        static_cast<int>(covered.size()) != g.vertexAction[v].points()->size())
      throw Error("toLocalActionDiagram: gga is not arc-reduced at vertex '" + g.base.vertexId(v) + "'");
  }

  LadDescription lad;
  lad.name = g.name + "-lad";
  lad.graph = g.base;
  lad.arcPoints.resize(g.base.arcCount());
  for (int a = 0; a < g.base.arcCount(); ++a) {
    int v = g.base.terminus(a);
    std::set<int> pts;
    for (int b : aug.fiber[a]) pts.insert(aug.adhesion[b].begin(), aug.adhesion[b].end());
    // designated point first: the embedded representative
    int rep = g.embedding[a][0];
    lad.arcPoints[a].push_back(g.vertexAction[v].points()->token(rep));
    for (int p : pts)
      if (p != rep) lad.arcPoints[a].push_back(g.vertexAction[v].points()->token(p));
  }
  lad.vertexGens.resize(g.base.vertexCount());
  for (int v = 0; v < g.base.vertexCount(); ++v)
    for (const auto& gen : g.vertexAction[v].generators())
      lad.vertexGens[v].push_back(gen.cycleString());
  return lad;
}

}  // namespace gga
