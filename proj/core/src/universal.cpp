#include "gga/universal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace gga {

namespace {

/// The unique quotient-tree arc from one bundle to another (−1 if absent).
int abundleBetween(const Scaffolding& s, int fromBundle, int toBundle) {
  for (int ab = 0; ab < static_cast<int>(s.abundles.size()); ++ab)
    if (s.abundles[ab].origin == fromBundle && s.abundles[ab].terminus == toBundle) return ab;
  return -1;
}

std::vector<int> applySorted(const Permutation& g, const std::vector<int>& set) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int p : set) out.push_back(g(p));
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical-least factorization Ψ = h∘Φ_a (twist = false) or Ψ = h∘Φ_a∘h_a
/// (twist = true); nullopt when the class is empty.
std::optional<Permutation> factorPsi(const Gga& g, int baseArc, const std::vector<int>& psi,
                                     bool twist) {
  const PermAction& G = g.vertexAction[g.base.terminus(baseArc)];
  const std::vector<int>& phi = g.embedding[baseArc];
  const Permutation* ha = nullptr;
  if (twist) {
    auto it = g.inversionAgent.find(baseArc);
    if (it == g.inversionAgent.end()) return std::nullopt;
    ha = &it->second;
  }
  int ny = static_cast<int>(phi.size());
  for (const auto& h : G.elements()) {
    bool ok = true;
    for (int y = 0; y < ny && ok; ++y) {
      int src = twist ? phi[(*ha)(y)] : phi[y];
      if (h(src) != psi[y]) ok = false;
    }
    if (ok) return h;
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> UniversalElement::domain() const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(local.size()); ++b)
    if (local[b].has_value()) out.push_back(b);
  return out;
}

std::vector<int> UniversalElement::key() const {
  std::vector<int> k = bundleImage;
  for (const auto& l : local) {
    if (!l) {
      k.push_back(-2);
    } else {
      k.push_back(-3);
      for (int v : l->images()) k.push_back(v);
    }
  }
  return k;
}

Permutation localActionOf(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                          int bundle, const std::vector<std::pair<int, int>>& vertexMap) {
  int piV = src.bundles[bundle].piVertex;
  const PermAction& X = g.vertexAction[piV];
  std::vector<int> img(X.points()->size(), -1);
  int imageBundle = -1;
  for (auto [sv, dv] : vertexMap) {
    if (src.verts[sv].bundle != bundle) throw Error("localAction: vertex outside the bundle");
    if (imageBundle < 0) imageBundle = dst.verts[dv].bundle;
    if (dst.verts[dv].bundle != imageBundle)
      throw Error("localAction: images are not contained in one bundle");
    img[src.verts[sv].point] = dst.verts[dv].point;
  }
  if (imageBundle < 0 || dst.bundles[imageBundle].piVertex != piV)
    throw Error("localAction: image bundle does not carry the same base vertex");
  for (int v : img)
    if (v < 0) throw Error("localAction: vertex map does not cover the bundle");
  return Permutation(X.points(), std::move(img));
}

std::vector<int> forcedArcImageAll(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                                   int abundle, int imageBundle, const Permutation& gv,
                                   bool reverseScan) {
  (void)g;
  if (!dst.bundles[imageBundle].interior)
    throw Error("truncation: forced arc image needs an interior target vertex");
  std::vector<int> target = applySorted(gv, src.adhesionAt(abundle));
  int piArc = src.abundles[abundle].piArc;
  std::vector<int> cands = dst.arcBundlesAt(imageBundle);
  if (reverseScan) std::reverse(cands.begin(), cands.end());
  std::vector<int> hits;
  for (int ab : cands)
    if (dst.abundles[ab].piArc == piArc && dst.adhesionAt(ab) == target) hits.push_back(ab);
  return hits;
}

int forcedArcImage(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                   int abundle, int imageBundle, const Permutation& gv) {
  std::vector<int> hits = forcedArcImageAll(src, dst, g, abundle, imageBundle, gv);
  if (hits.size() != 1)
    throw Error("forced arc image is not unique (" + std::to_string(hits.size()) +
                " matches) - invalid scaffolding data");
  return hits.front();
}

ExtensionStep oneStepExtend(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                            int bundleV, int imageV, const Permutation& fV, int bundleW) {
  ExtensionStep step;
  step.newBundle = bundleW;
  step.arcBundle = abundleBetween(src, bundleW, bundleV);
  if (step.arcBundle < 0) throw Error("oneStepExtend: bundles are not adjacent");
  int abRev = src.abundles[step.arcBundle].reverse;

  int piA = src.abundles[step.arcBundle].piArc;
  int piARev = src.abundles[abRev].piArc;
  const PermAction& GW = g.vertexAction[src.bundles[bundleW].piVertex];

  step.imageArcBundle = forcedArcImage(src, dst, g, step.arcBundle, imageV, fV);
  step.imageNewBundle = dst.abundles[step.imageArcBundle].origin;
  int abImgRev = dst.abundles[step.imageArcBundle].reverse;

  // induced arc map σ = Ψ'⁻¹ ∘ f_V ∘ Ψ on Y(π⟦a⟧)
  std::vector<int> psiA = src.psi(step.arcBundle);
  std::vector<int> psiAImg = dst.psi(step.imageArcBundle);
  int ny = static_cast<int>(psiA.size());
  std::vector<int> sigma(ny, -1);
  {
    std::vector<int> inv(g.vertexAction[src.bundles[bundleV].piVertex].points()->size(), -1);
    for (int y = 0; y < ny; ++y) inv[psiAImg[y]] = y;
    for (int y = 0; y < ny; ++y) {
      int t = inv[fV(psiA[y])];
      if (t < 0) throw Error("oneStepExtend: adhesion sets do not correspond");
      sigma[y] = t;
    }
  }

  // candidates: all g with g ∘ Ψ_⟦ā⟧ = Ψ_⟦ā'⟧ ∘ σ
  std::vector<int> psiRev = src.psi(abRev);
  std::vector<int> psiRevImg = dst.psi(abImgRev);
  std::vector<int> want(ny);
  for (int y = 0; y < ny; ++y) want[y] = psiRevImg[sigma[y]];
  step.candidates = GW.elementsRestrictingTo(psiRev, want);
  if (step.candidates.empty())
    throw Error("oneStepExtend: empty candidate list - invalid scaffolding data");

  // diagram-chase diagnostics, choosing a coherent adhesion/twisted split
  auto pickFactor = [&](int baseArc, const std::vector<int>& psi, bool preferTwist,
                        std::optional<Permutation>& h, bool& twist) {
    std::optional<Permutation> plain = factorPsi(g, baseArc, psi, false);
    std::optional<Permutation> tw = factorPsi(g, baseArc, psi, true);
    if (preferTwist && tw) { h = tw; twist = true; return; }
    if (plain) { h = plain; twist = false; return; }
    if (tw) { h = tw; twist = true; return; }
    throw Error("oneStepExtend: psi map admits no factorization");
  };
  pickFactor(piA, psiA, false, step.hV, step.twistV);
  pickFactor(piA, psiAImg, false, step.hVp, step.twistVp);
  bool needTwistW = g.base.selfReverse(piA) && !step.twistV;
  bool needTwistWp = g.base.selfReverse(piA) && !step.twistVp;
  pickFactor(piARev, psiRev, needTwistW, step.hW, step.twistW);
  pickFactor(piARev, psiRevImg, needTwistWp, step.hWp, step.twistWp);

  step.qV = step.hVp->inverse().compose(fV).compose(*step.hV);
  step.rV = restrictThroughEmbedding(g.embeddingAt(piA), *step.qV);
  Permutation hWpInv = step.hWp->inverse();
  for (const auto& cand : step.candidates)
    step.qCandidates.push_back(hWpInv.compose(cand).compose(*step.hW));
  step.qW = step.qCandidates.front();
  return step;
}

UniversalElement identityElement(const Scaffolding& s, const Gga& g) {
  UniversalElement e;
  int nb = static_cast<int>(s.bundles.size());
  e.bundleImage.resize(nb);
  e.local.resize(nb);
  for (int b = 0; b < nb; ++b) {
    e.bundleImage[b] = b;
    if (s.bundles[b].interior)
      e.local[b] = Permutation::identity(g.vertexAction[s.bundles[b].piVertex].points());
  }
  return e;
}

UniversalElement extendFull(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                            const Seed& seed) {
  if (src.bundles[seed.bundle].piVertex != dst.bundles[seed.imageBundle].piVertex)
    throw Error("extendFull: seed bundles carry different base vertices");
  const PermAction& G0 = g.vertexAction[src.bundles[seed.bundle].piVertex];
  if (!G0.contains(seed.local)) throw Error("extendFull: seed local action is not acceptable");
  if (!src.bundles[seed.bundle].interior) throw Error("extendFull: seed bundle must be interior");

  UniversalElement e;
  int nb = static_cast<int>(src.bundles.size());
  e.bundleImage.assign(nb, -1);
  e.local.resize(nb);
  e.bundleImage[seed.bundle] = seed.imageBundle;
  e.local[seed.bundle] = seed.local;

  std::vector<int> queue = {seed.bundle};
  for (size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    int imV = e.bundleImage[v];
    if (!dst.bundles[imV].interior) continue;  // cannot force arcs at a frontier image
    for (int ab = 0; ab < static_cast<int>(src.abundles.size()); ++ab) {
      if (src.abundles[ab].terminus != v) continue;
      int w = src.abundles[ab].origin;
      if (e.bundleImage[w] >= 0) continue;
      ExtensionStep step = oneStepExtend(src, dst, g, v, imV, *e.local[v], w);
      e.bundleImage[w] = step.imageNewBundle;
      if (src.bundles[w].interior) {
        e.local[w] = step.chosen();
        queue.push_back(w);
      }
    }
  }
  return e;
}

Diagnostics validateElement(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                            const UniversalElement& e) {
  Diagnostics d;
  int nb = static_cast<int>(src.bundles.size());
  if (static_cast<int>(e.bundleImage.size()) != nb || static_cast<int>(e.local.size()) != nb) {
    d.fail("element tables have wrong size");
    return d;
  }
  std::set<int> used;
  for (int b = 0; b < nb; ++b) {
    if (e.bundleImage[b] < 0) {
      if (e.local[b]) d.fail("local action without tree image at '" + src.bundles[b].id + "'");
      continue;
    }
    if (!used.insert(e.bundleImage[b]).second)
      d.fail("tree map is not injective at '" + src.bundles[b].id + "'");
    if (dst.bundles[e.bundleImage[b]].piVertex != src.bundles[b].piVertex)
      d.fail("tree map does not preserve the base vertex at '" + src.bundles[b].id + "'");
    if (e.local[b] &&
        !g.vertexAction[src.bundles[b].piVertex].contains(*e.local[b]))
      d.fail("local action at '" + src.bundles[b].id + "' is not acceptable");
  }

  for (int ab = 0; ab < static_cast<int>(src.abundles.size()); ++ab) {
    int v = src.abundles[ab].terminus, w = src.abundles[ab].origin;
    if (e.bundleImage[v] < 0 || e.bundleImage[w] < 0) continue;
    int abImg = abundleBetween(dst, e.bundleImage[w], e.bundleImage[v]);
    if (abImg < 0) {
      d.fail("tree map is not a morphism across '" + src.abundles[ab].id + "'");
      continue;
    }
    if (dst.abundles[abImg].piArc != src.abundles[ab].piArc) {
      d.fail("tree map does not preserve the base arc at '" + src.abundles[ab].id + "'");
      continue;
    }
    if (!e.local[v]) continue;
    // terminus-side compatibility: g_v maps the adhesion set onto the image's
    std::vector<int> got = applySorted(*e.local[v], src.adhesionAt(ab));
    if (got != dst.adhesionAt(abImg)) {
      d.fail("adhesion sets do not match across '" + src.abundles[ab].id + "'");
      continue;
    }
    if (!e.local[w]) continue;
    // both endpoints in the domain: induced arc maps must agree
    std::vector<int> psiV = src.psi(ab), psiVImg = dst.psi(abImg);
    std::vector<int> psiW = src.psi(src.abundles[ab].reverse);
    std::vector<int> psiWImg = dst.psi(dst.abundles[abImg].reverse);
    int ny = static_cast<int>(psiV.size());
    std::vector<int> invV(g.vertexAction[src.bundles[v].piVertex].points()->size(), -1);
    for (int y = 0; y < ny; ++y) invV[psiVImg[y]] = y;
    std::vector<int> invW(g.vertexAction[src.bundles[w].piVertex].points()->size(), -1);
    for (int y = 0; y < ny; ++y) invW[psiWImg[y]] = y;
    for (int y = 0; y < ny; ++y) {
      int sv = invV[(*e.local[v])(psiV[y])];
      int sw = invW[(*e.local[w])(psiW[y])];
      if (sv < 0 || sw < 0 || sv != sw) {
        d.fail("arc compatibility fails across '" + src.abundles[ab].id + "'");
        break;
      }
    }
  }
  return d;
}

Permutation arcBundleLocalAction(const Scaffolding& s, const Gga& g,
                                 const UniversalElement& e, int abundle) {
  int v = s.abundles[abundle].terminus, w = s.abundles[abundle].origin;
  if (e.bundleImage[v] < 0 || e.bundleImage[w] < 0 || !e.local[v])
    throw Error("arcBundleLocalAction: bundle is not in the element's domain");
  int abImg = abundleBetween(s, e.bundleImage[w], e.bundleImage[v]);
  if (abImg < 0 || s.abundles[abImg].piArc != s.abundles[abundle].piArc)
    throw Error("arcBundleLocalAction: image bundle is missing");
  std::vector<int> psiA = s.psi(abundle), psiImg = s.psi(abImg);
  int ny = static_cast<int>(psiA.size());
  std::vector<int> inv(g.vertexAction[s.bundles[v].piVertex].points()->size(), -1);
  for (int y = 0; y < ny; ++y) inv[psiImg[y]] = y;
  std::vector<int> img(ny, -1);
  for (int y = 0; y < ny; ++y) {
    int t = inv[(*e.local[v])(psiA[y])];
    if (t < 0) throw Error("arcBundleLocalAction: adhesion sets do not correspond");
    img[y] = t;
  }
  Permutation out(g.arcAction[s.abundles[abundle].piArc].points(), std::move(img));
  if (!g.arcAction[s.abundles[abundle].piArc].contains(out))
    throw Error("arcBundleLocalAction: induced permutation is not in the arc group");
  return out;
}

UniversalElement composeElements(const Scaffolding& s, const Gga& g,
                                 const UniversalElement& outer, const UniversalElement& inner) {
  (void)g;
  int nb = static_cast<int>(s.bundles.size());
  UniversalElement e;
  e.bundleImage.assign(nb, -1);
  e.local.resize(nb);
  for (int b = 0; b < nb; ++b) {
    if (inner.bundleImage[b] < 0) continue;
    int mid = inner.bundleImage[b];
    if (outer.bundleImage[mid] < 0) {
      if (inner.local[b]) throw Error("compose: domains are not compatible (truncation)");
      continue;
    }
    e.bundleImage[b] = outer.bundleImage[mid];
    if (inner.local[b]) {
      if (!outer.local[mid]) throw Error("compose: domains are not compatible (truncation)");
      e.local[b] = outer.local[mid]->compose(*inner.local[b]);
    }
  }
  return e;
}

UniversalElement invertElement(const Scaffolding& s, const Gga& g, const UniversalElement& e) {
  (void)g;
  int nb = static_cast<int>(s.bundles.size());
  UniversalElement out;
  out.bundleImage.assign(nb, -1);
  out.local.resize(nb);
  for (int b = 0; b < nb; ++b) {
    if (e.bundleImage[b] < 0) continue;
    int im = e.bundleImage[b];
    if (out.bundleImage[im] >= 0) throw Error("invert: tree map is not injective");
    out.bundleImage[im] = b;
    if (e.local[b]) out.local[im] = e.local[b]->inverse();
  }
  return out;
}

int elementOrder(const Scaffolding& s, const Gga& g, const UniversalElement& e) {
  UniversalElement id = identityElement(s, g);
  UniversalElement acc = e;
  for (int k = 1; k <= 1000000; ++k) {
    if (acc == id) return k;
    acc = composeElements(s, g, e, acc);
  }
  throw Error("element order exceeds the guard");
}

namespace {

struct Enumerator {
  const Scaffolding& s;
  const Gga& g;
  long long cap;
  std::vector<UniversalElement> out;

  // BFS order of bundles with their parent edge
  std::vector<int> order;          // bundles in BFS order from the root
  std::vector<int> parentOf;       // bundle -> parent bundle (-1 root)

  Enumerator(const Scaffolding& s_, const Gga& g_, long long cap_) : s(s_), g(g_), cap(cap_) {
    int nb = static_cast<int>(s.bundles.size());
    parentOf.assign(nb, -1);
    std::vector<char> seen(nb, 0);
    order.push_back(0);
    seen[0] = 1;
    for (size_t q = 0; q < order.size(); ++q) {
      int v = order[q];
      for (const auto& ab : s.abundles) {
        if (ab.terminus != v) continue;
        int w = ab.origin;
        if (!seen[w]) {
          seen[w] = 1;
          parentOf[w] = v;
          order.push_back(w);
        }
      }
    }
  }

  void dfs(size_t pos, UniversalElement& e) {
    if (pos == order.size()) {
      out.push_back(e);
      if (static_cast<long long>(out.size()) > cap)
        throw Error("enumeration exceeded the cap of " + std::to_string(cap) + " elements");
      return;
    }
    int w = order[pos];
    if (parentOf[w] < 0) {  // root handled by caller
      dfs(pos + 1, e);
      return;
    }
    int v = parentOf[w];
    ExtensionStep step = oneStepExtend(s, s, g, v, e.bundleImage[v], *e.local[v], w);
    e.bundleImage[w] = step.imageNewBundle;
    if (s.bundles[w].interior) {
      for (const auto& cand : step.candidates) {
        e.local[w] = cand;
        dfs(pos + 1, e);
      }
      e.local[w].reset();
    } else {
      dfs(pos + 1, e);
    }
    e.bundleImage[w] = -1;
  }
};

}  // namespace

std::vector<UniversalElement> enumerateUniversal(const Scaffolding& s, const Gga& g,
                                                 EnumerationMode mode, long long cap) {
  int nb = static_cast<int>(s.bundles.size());
  if (nb == 0) throw Error("enumerate: empty scaffolding");
  if (!s.bundles[0].interior)
    throw Error("enumerate: the root bundle is not interior at this radius");

  std::vector<int> rootTargets;
  if (mode == EnumerationMode::FullIfFinite) {
    for (int b = 0; b < nb; ++b)
      if (!s.bundles[b].interior)
        throw Error("enumerate: full mode needs a finite (complete) covering tree");
    for (int b = 0; b < nb; ++b)
      if (s.bundles[b].piVertex == s.bundles[0].piVertex) rootTargets.push_back(b);
  } else {
    rootTargets.push_back(0);
  }

  Enumerator en(s, g, cap);
  const PermAction& G0 = g.vertexAction[s.bundles[0].piVertex];
  for (int target : rootTargets) {
    for (const auto& f0 : G0.elements()) {
      UniversalElement e;
      e.bundleImage.assign(nb, -1);
      e.local.resize(nb);
      e.bundleImage[0] = target;
      e.local[0] = f0;
      en.dfs(0, e);
    }
  }

  if (mode == EnumerationMode::FullIfFinite) {
    for (const auto& e : en.out) {
      std::set<int> hit(e.bundleImage.begin(), e.bundleImage.end());
      if (static_cast<int>(hit.size()) != nb)
        throw Error("internal: enumerated tree map is not bijective");
    }
  }
  std::sort(en.out.begin(), en.out.end());
  for (size_t i = 1; i < en.out.size(); ++i)
    if (en.out[i] == en.out[i - 1]) throw Error("internal: duplicate enumerated element");
  return en.out;
}

std::vector<std::vector<int>> orbitsOnTree(const Scaffolding& s,
                                           const std::vector<UniversalElement>& elements,
                                           bool interiorOnly) {
  int nb = static_cast<int>(s.bundles.size());
  std::vector<int> parent(nb);
  for (int i = 0; i < nb; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : elements)
    for (int b = 0; b < nb; ++b)
      if (e.bundleImage[b] >= 0) parent[find(b)] = find(e.bundleImage[b]);
  std::map<int, std::vector<int>> groups;
  for (int b = 0; b < nb; ++b) {
    if (interiorOnly && !s.bundles[b].interior) continue;
    groups[find(b)].push_back(b);
  }
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  return out;
}

int vertImage(const Scaffolding& src, const Scaffolding& dst, const UniversalElement& e, int vert) {
  int b = src.verts[vert].bundle;
  if (e.bundleImage[b] < 0 || !e.local[b])
    throw Error("vertImage: bundle not in the element's domain");
  int im = dst.vertAt(e.bundleImage[b], (*e.local[b])(src.verts[vert].point));
  if (im < 0) throw Error("vertImage: image vertex is missing");
  return im;
}

int arcImage(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
             const UniversalElement& e, int arc) {
  (void)g;
  int ab = src.arcs[arc].abundle;
  int v = src.abundles[ab].terminus, w = src.abundles[ab].origin;
  if (e.bundleImage[v] < 0 || e.bundleImage[w] < 0 || !e.local[v])
    throw Error("arcImage: bundle not in the element's domain");
  int abImg = abundleBetween(dst, e.bundleImage[w], e.bundleImage[v]);
  if (abImg < 0) throw Error("arcImage: image arc bundle is missing");
  std::vector<int> psiA = src.psi(ab), psiImg = dst.psi(abImg);
  int target = (*e.local[v])(psiA[src.arcs[arc].point]);
  for (int y = 0; y < static_cast<int>(psiImg.size()); ++y)
    if (psiImg[y] == target) {
      int im = dst.arcAt(abImg, y);
      if (im < 0) throw Error("arcImage: image arc is missing");
      return im;
    }
  throw Error("arcImage: adhesion sets do not correspond");
}

std::vector<int> elementSignatureOn(const Scaffolding& s, const UniversalElement& e,
                                    const std::vector<int>& bundles) {
  (void)s;
  std::vector<int> sig;
  for (int b : bundles) {
    sig.push_back(e.bundleImage[b]);
    if (e.local[b]) {
      sig.push_back(-3);
      for (int v : e.local[b]->images()) sig.push_back(v);
    } else {
      sig.push_back(-2);
    }
  }
  return sig;
}

QuotientCheckResult quotientCheck(const Scaffolding& s, const Gga& g) {
  QuotientCheckResult res;
  std::vector<int> interior;
  for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b)
    if (s.bundles[b].interior) interior.push_back(b);

  // surjectivity of π from the interior
  {
    std::set<int> vhit, ahit;
    for (int b : interior) vhit.insert(s.bundles[b].piVertex);
    for (const auto& ab : s.abundles)
      if (s.bundles[ab.origin].interior && s.bundles[ab.terminus].interior)
        ahit.insert(ab.piArc);
    if (static_cast<int>(vhit.size()) != g.base.vertexCount() ||
        static_cast<int>(ahit.size()) != g.base.arcCount()) {
      res.decided = false;
      res.detail = "truncation does not cover the whole base graph";
      return res;
    }
  }

  // vertex witnesses: same-fiber interior bundles are joined by elements
  for (size_t i = 0; i < interior.size(); ++i)
    for (size_t j = i + 1; j < interior.size(); ++j) {
      int u = interior[i], w = interior[j];
      if (s.bundles[u].piVertex != s.bundles[w].piVertex) continue;
      Seed seed{u, w, Permutation::identity(g.vertexAction[s.bundles[u].piVertex].points())};
      UniversalElement witness = extendFull(s, s, g, seed);
      if (witness.bundleImage[u] != w) {
        res.detail = "vertex witness failed between '" + s.bundles[u].id + "' and '" +
                     s.bundles[w].id + "'";
        return res;
      }
      Diagnostics d = validateElement(s, s, g, witness);
      if (!d.ok) {
        res.detail = "vertex witness invalid: " + d.joined();
        return res;
      }
    }

  // arc witnesses: same-label interior arc bundles are joined by elements
  for (int a1 = 0; a1 < static_cast<int>(s.abundles.size()); ++a1)
    for (int a2 = a1 + 1; a2 < static_cast<int>(s.abundles.size()); ++a2) {
      if (s.abundles[a1].piArc != s.abundles[a2].piArc) continue;
      int t1 = s.abundles[a1].terminus, t2 = s.abundles[a2].terminus;
      int o1 = s.abundles[a1].origin, o2 = s.abundles[a2].origin;
      if (!s.bundles[t1].interior || !s.bundles[t2].interior || !s.bundles[o1].interior ||
          !s.bundles[o2].interior)
        continue;
      const PermAction& G = g.vertexAction[s.bundles[t1].piVertex];
      std::vector<int> s1 = s.adhesionAt(a1), s2 = s.adhesionAt(a2);
      std::optional<Permutation> f;
      for (const auto& el : G.elements())
        if (applySorted(el, s1) == s2) { f = el; break; }
      if (!f) {
        res.detail = "no vertex-group element joins the adhesion sets of '" + s.abundles[a1].id +
                     "' and '" + s.abundles[a2].id + "'";
        return res;
      }
      UniversalElement witness = extendFull(s, s, g, Seed{t1, t2, *f});
      if (witness.bundleImage[o1] != o2) {
        res.detail = "arc witness failed between '" + s.abundles[a1].id + "' and '" +
                     s.abundles[a2].id + "'";
        return res;
      }
    }

  res.ok = true;
  res.detail = "orbits match the fibers and the quotient reproduces the base graph";
  return res;
}

BundleActionResult inducedVertexBundleAction(const Scaffolding& s, const Gga& g,
                                             const std::vector<UniversalElement>& elements,
                                             int bundle) {
  if (!s.bundles[bundle].interior) throw Error("inducedVertexBundleAction: bundle not interior");
  int piV = s.bundles[bundle].piVertex;
  const PermAction& X = g.vertexAction[piV];
  int n = X.points()->size();

  std::vector<int> vertsByPoint(n, -1);
  for (int v : s.bundleVerts(bundle)) vertsByPoint[s.verts[v].point] = v;
  std::vector<std::string> ids;
  for (int p = 0; p < n; ++p) {
    if (vertsByPoint[p] < 0) throw Error("inducedVertexBundleAction: colouring not onto");
    ids.push_back(s.verts[vertsByPoint[p]].id);
  }
  PointSetPtr pts = PointSet::make("bundle " + s.bundles[bundle].id, ids);

  std::vector<Permutation> gens;
  for (const auto& gen : X.generators()) {
    // realize the generator by an actual universal element fixing the bundle
    UniversalElement witness = extendFull(s, s, g, Seed{bundle, bundle, gen});
    Diagnostics d = validateElement(s, s, g, witness);
    if (!d.ok) throw Error("inducedVertexBundleAction: witness invalid: " + d.joined());
    gens.emplace_back(pts, witness.local[bundle]->images());
  }
  // contributions of the supplied elements that stabilize the bundle
  for (const auto& e : elements) {
    if (e.bundleImage[bundle] != bundle || !e.local[bundle]) continue;
    gens.emplace_back(pts, e.local[bundle]->images());
  }
  BundleActionResult out{PermAction::make(pts, std::move(gens)), {}, ids};

  out.iso.pointMap.resize(n);
  for (int i = 0; i < n; ++i) out.iso.pointMap[i] = i;  // p is the identity on indices
  out.iso.groupMap.resize(out.action.order());
  for (int i = 0; i < out.action.order(); ++i) {
    Permutation conj(X.points(), out.action.elements()[i].images());
    int idx = X.elementIndex(conj);
    if (idx < 0) throw Error("inducedVertexBundleAction: induced element escapes the vertex group");
    out.iso.groupMap[i] = idx;
  }
  if (out.action.order() != X.order())
    throw Error("inducedVertexBundleAction: induced action has the wrong order");
  if (!verifyActionIsomorphism(out.action, X, out.iso))
    throw Error("inducedVertexBundleAction: witness isomorphism failed verification");
  return out;
}

BundleActionResult inducedArcBundleAction(const Scaffolding& s, const Gga& g,
                                          const std::vector<UniversalElement>& elements,
                                          int abundle) {
  int v = s.abundles[abundle].terminus, w = s.abundles[abundle].origin;
  if (!s.bundles[v].interior || !s.bundles[w].interior)
    throw Error("inducedArcBundleAction: bundle not interior");
  int piA = s.abundles[abundle].piArc;
  const PermAction& H = g.arcAction[piA];
  int ny = H.points()->size();

  std::vector<int> arcsByPoint(ny, -1);
  for (int e : s.bundleArcs(abundle)) arcsByPoint[s.arcs[e].point] = e;
  std::vector<std::string> ids;
  for (int y = 0; y < ny; ++y) {
    if (arcsByPoint[y] < 0) throw Error("inducedArcBundleAction: colouring not onto");
    ids.push_back(s.arcs[arcsByPoint[y]].id);
  }
  PointSetPtr pts = PointSet::make("arc bundle " + s.abundles[abundle].id, ids);

  std::vector<int> psiA = s.psi(abundle);
  const PermAction& GV = g.vertexAction[s.bundles[v].piVertex];
  std::vector<Permutation> gens;
  for (const auto& h : H.generators()) {
    std::vector<int> want(ny);
    for (int y = 0; y < ny; ++y) want[y] = psiA[h(y)];
    std::vector<Permutation> f0s = GV.elementsRestrictingTo(psiA, want);
    if (f0s.empty()) throw Error("inducedArcBundleAction: no acceptable realization of a generator");
    UniversalElement witness = extendFull(s, s, g, Seed{v, v, f0s.front()});
    Permutation induced = arcBundleLocalAction(s, g, witness, abundle);
    gens.emplace_back(pts, induced.images());
  }
  for (const auto& e : elements) {
    if (e.bundleImage[v] != v || e.bundleImage[w] != w || !e.local[v]) continue;
    gens.emplace_back(pts, arcBundleLocalAction(s, g, e, abundle).images());
  }
  BundleActionResult out{PermAction::make(pts, std::move(gens)), {}, ids};
  out.iso.pointMap.resize(ny);
  for (int i = 0; i < ny; ++i) out.iso.pointMap[i] = i;
  out.iso.groupMap.resize(out.action.order());
  for (int i = 0; i < out.action.order(); ++i) {
    Permutation conj(H.points(), out.action.elements()[i].images());
    int idx = H.elementIndex(conj);
    if (idx < 0) throw Error("inducedArcBundleAction: induced element escapes the arc group");
    out.iso.groupMap[i] = idx;
  }
  if (out.action.order() != H.order())
    throw Error("inducedArcBundleAction: induced action has the wrong order");
  if (!verifyActionIsomorphism(out.action, H, out.iso))
    throw Error("inducedArcBundleAction: witness isomorphism failed verification");
  return out;
}

UniversalElement buildAcceptableIso(const Scaffolding& src, const Scaffolding& dst, const Gga& g) {
  if (src.bundles.empty() || dst.bundles.empty())
    throw Error("buildAcceptableIso: empty scaffolding");
  if (src.bundles[0].piVertex != dst.bundles[0].piVertex)
    throw Error("buildAcceptableIso: root labels are incompatible");
  Seed seed{0, 0, Permutation::identity(g.vertexAction[src.bundles[0].piVertex].points())};
  return extendFull(src, dst, g, seed);
}

std::vector<int> elementVertexMap(const Scaffolding& src, const Scaffolding& dst,
                                  const UniversalElement& e) {
  std::vector<int> out(src.verts.size(), -1);
  for (int v = 0; v < static_cast<int>(src.verts.size()); ++v) out[v] = vertImage(src, dst, e, v);
  return out;
}

std::string serializeElement(const Scaffolding& s, const Gga& g, const UniversalElement& e) {
  (void)g;
  std::vector<std::string> lines;
  for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
    if (e.bundleImage[b] < 0) continue;
    std::string line = s.bundles[b].id + " -> " + s.bundles[e.bundleImage[b]].id + " ";
    line += e.local[b] ? e.local[b]->cycleString() : "-";
    lines.push_back(line);
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  for (const auto& l : lines) out << l << "\n";
  return out.str();
}

}  // namespace gga
