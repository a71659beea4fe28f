// Acceptance suite: one line of output per criterion, exit 0 iff all pass.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gga/analysis.hpp"
#include "gga/dot.hpp"
#include "gga/format.hpp"

using namespace gga;

namespace {

struct AcceptanceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw AcceptanceFailure(msg);
}

std::string readFile(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  if (!in) throw AcceptanceFailure("missing data file " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Workspace {
  Gga g;
  AugmentedDigraph aug;
  CoveringTree tree;
  Scaffolding s;
};

Workspace load(const std::string& file, int radius) {
  Workspace w{parseAny(readFile(file)), {}, {}, {}};
  Diagnostics d = validateGga(w.g);
  require(d.ok, file + " invalid: " + d.joined());
  w.aug = augment(w.g);
  w.tree = buildStarCoveringTree(w.g, w.aug, w.g.base.vertexId(0), radius);
  w.s = buildCanonical(w.g, w.aug, w.tree);
  return w;
}

std::map<int, int> orderHistogram(const Workspace& w, const std::vector<UniversalElement>& els) {
  std::map<int, int> hist;
  for (const auto& e : els) ++hist[elementOrder(w.s, w.g, e)];
  return hist;
}

bool isAbelian(const Workspace& w, const std::vector<UniversalElement>& els) {
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = i + 1; j < els.size(); ++j)
      if (!(composeElements(w.s, w.g, els[i], els[j]) ==
            composeElements(w.s, w.g, els[j], els[i])))
        return false;
  return true;
}

// ---------------------------------------------------------------- criterion 1
std::string c01() {
  Workspace w = load("ex-c3-id.gga", 1);
  auto els = enumerateUniversal(w.s, w.g, EnumerationMode::FullIfFinite);
  require(els.size() == 6, "expected order 6, got " + std::to_string(els.size()));
  require(isAbelian(w, els), "group is not abelian");
  std::map<int, int> want = {{1, 1}, {2, 1}, {3, 2}, {6, 2}};
  require(orderHistogram(w, els) == want, "element order multiset is not {1,2,3,3,6,6}");
  return "trivial agent: order 6, abelian, orders {1,2,3,3,6,6}";
}

// ---------------------------------------------------------------- criterion 2
std::string c02() {
  Workspace w = load("ex-c3-swap.gga", 1);
  auto els = enumerateUniversal(w.s, w.g, EnumerationMode::FullIfFinite);
  require(els.size() == 6, "expected order 6");
  require(!isAbelian(w, els), "group is abelian");
  // induced action on the three matching edges
  std::vector<int> reps;
  for (int i = 0; i < static_cast<int>(w.s.arcs.size()); ++i)
    if (w.s.arcs[i].reverse >= i) reps.push_back(i);
  require(reps.size() == 3, "expected three matching edges");
  std::map<int, int> edgeOf;
  for (size_t k = 0; k < reps.size(); ++k) {
    edgeOf[reps[k]] = static_cast<int>(k);
    edgeOf[w.s.arcs[reps[k]].reverse] = static_cast<int>(k);
  }
  std::set<std::vector<int>> edgePerms;
  for (const auto& e : els) {
    std::vector<int> perm(3);
    for (size_t k = 0; k < reps.size(); ++k)
      perm[k] = edgeOf.at(arcImage(w.s, w.s, w.g, e, reps[k]));
    edgePerms.insert(perm);
  }
  require(edgePerms.size() == 6, "edge action is not the full symmetric group");
  return "agent (1 2): order 6, non-abelian, full Sym(3) on the matching edges";
}

// ---------------------------------------------------------------- criterion 3
std::string c03() {
  Workspace w = load("ex-small.gga", 1);
  require(w.s.verts.size() == 11, "scaffolding is not on 11 vertices");
  auto els = enumerateUniversal(w.s, w.g, EnumerationMode::FullIfFinite);

  // independent brute force over S3 x C4 pairs checking the matching arcs
  int vIdx = w.g.base.vertexIndex("v"), wIdx = w.g.base.vertexIndex("w");
  int vB = w.s.bundles[0].piVertex == vIdx ? 0 : 1;
  int wB = 1 - vB;
  std::set<std::pair<std::vector<int>, std::vector<int>>> bruteforce;
  for (const auto& gv : w.g.vertexAction[vIdx].elements())
    for (const auto& gw : w.g.vertexAction[wIdx].elements()) {
      bool ok = true;
      for (const auto& arc : w.s.arcs) {
        if (w.s.verts[arc.terminus].bundle != vB) continue;
        int p = w.s.verts[arc.terminus].point;
        int q = w.s.verts[arc.origin].point;
        // image pair must again be a matching edge
        bool found = false;
        for (const auto& other : w.s.arcs) {
          if (w.s.verts[other.terminus].bundle != vB) continue;
          if (w.s.verts[other.terminus].point == gv(p) &&
              w.s.verts[other.origin].point == gw(q))
            found = true;
        }
        if (!found) { ok = false; break; }
      }
      if (ok) bruteforce.insert({gv.images(), gw.images()});
    }
  require(bruteforce.size() == 12, "brute force over S3 x C4 does not give 12 pairs");
  require(els.size() == 12, "enumerated order is not 12");

  std::set<std::pair<std::vector<int>, std::vector<int>>> enumerated;
  for (const auto& e : els) {
    require(e.bundleImage[vB] == vB && e.bundleImage[wB] == wB, "tree map moves a bundle");
    enumerated.insert({e.local[vB]->images(), e.local[wB]->images()});
  }
  require(enumerated == bruteforce, "enumerated pairs differ from the brute-force oracle");

  std::map<int, int> hist = orderHistogram(w, els);
  require(hist[2] == 1, "expected exactly one element of order 2");
  return "order 12 (= independent S3 x C4 brute force), exactly one involution";
}

// ---------------------------------------------------------------- criterion 4
std::string c04() {
  struct Case { const char* file; int radius; size_t wantOrbits; };
  for (Case c : {Case{"ex-c3-id.gga", 1, 1}, Case{"ex-small.gga", 1, 2}, Case{"bm-c3.bm", 2, 1}}) {
    Workspace w = load(c.file, c.radius);
    QuotientCheckResult q = quotientCheck(w.s, w.g);
    require(q.decided, std::string(c.file) + ": " + q.detail);
    require(q.ok, std::string(c.file) + ": " + q.detail);
    // orbits of the full witness set coincide with the fibers
    std::vector<UniversalElement> witnesses;
    for (int u = 0; u < static_cast<int>(w.s.bundles.size()); ++u) {
      if (!w.s.bundles[u].interior) continue;
      for (int v2 = 0; v2 < static_cast<int>(w.s.bundles.size()); ++v2) {
        if (!w.s.bundles[v2].interior || w.s.bundles[u].piVertex != w.s.bundles[v2].piVertex)
          continue;
        Seed seed{u, v2, Permutation::identity(w.g.vertexAction[w.s.bundles[u].piVertex].points())};
        witnesses.push_back(extendFull(w.s, w.s, w.g, seed));
      }
    }
    auto orbits = orbitsOnTree(w.s, witnesses);
    require(orbits.size() == c.wantOrbits,
            std::string(c.file) + ": orbit count " + std::to_string(orbits.size()));
    for (const auto& orbit : orbits) {
      std::set<int> labels;
      for (int b : orbit) labels.insert(w.s.bundles[b].piVertex);
      require(labels.size() == 1, std::string(c.file) + ": an orbit crosses fibers");
    }
  }
  return "orbits = fibers and quotient = base for ex-c3, ex-small, bm-c3";
}

// ---------------------------------------------------------------- criterion 5
std::string c05() {
  struct Case { const char* file; int radius; EnumerationMode mode; };
  std::vector<Case> corpus = {{"ex-c3-id.gga", 1, EnumerationMode::FullIfFinite},
                              {"ex-c3-swap.gga", 1, EnumerationMode::FullIfFinite},
                              {"ex-small.gga", 1, EnumerationMode::FullIfFinite},
                              {"bm-c3.bm", 2, EnumerationMode::RootStabilizer},
                              {"bm-s3.bm", 2, EnumerationMode::RootStabilizer},
                              {"ex-constlocal-s3.gga", 2, EnumerationMode::RootStabilizer},
                              {"ex-parity.gga", 2, EnumerationMode::RootStabilizer},
                              {"box-s3.box", 2, EnumerationMode::RootStabilizer},
                              {"gog-c2c2.gog", 2, EnumerationMode::RootStabilizer},
                              {"lad-line.lad", 2, EnumerationMode::RootStabilizer}};
  for (const Case& c : corpus) {
    Workspace w = load(c.file, c.radius);
    auto els = enumerateUniversal(w.s, w.g, c.mode);
    for (int b = 0; b < static_cast<int>(w.s.bundles.size()); ++b) {
      if (!w.s.bundles[b].interior) continue;
      BundleActionResult r = inducedVertexBundleAction(w.s, w.g, els, b);
      require(verifyActionIsomorphism(r.action, w.g.vertexAction[w.s.bundles[b].piVertex], r.iso),
              std::string(c.file) + ": vertex bundle witness failed");
    }
    for (int ab = 0; ab < static_cast<int>(w.s.abundles.size()); ++ab) {
      if (!w.s.bundles[w.s.abundles[ab].terminus].interior) continue;
      if (!w.s.bundles[w.s.abundles[ab].origin].interior) continue;
      BundleActionResult r = inducedArcBundleAction(w.s, w.g, els, ab);
      require(verifyActionIsomorphism(r.action, w.g.arcAction[w.s.abundles[ab].piArc], r.iso),
              std::string(c.file) + ": arc bundle witness failed");
    }
  }

  // ex-small: no subgroup of the order-12 group is isomorphic to Sym(3)
  Workspace w = load("ex-small.gga", 1);
  auto els = enumerateUniversal(w.s, w.g, EnumerationMode::FullIfFinite);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(els.size()); ++i) index[els[i].key()] = i;
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = 0; j < els.size(); ++j) {
      // closure of the pair
      std::set<int> members = {index.at(els[i].key()), index.at(els[j].key())};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<int> cur(members.begin(), members.end());
        for (int a : cur)
          for (int b : cur) {
            int p = index.at(composeElements(w.s, w.g, els[a], els[b]).key());
            if (members.insert(p).second) grew = true;
            int inv = index.at(invertElement(w.s, w.g, els[a]).key());
            if (members.insert(inv).second) grew = true;
          }
      }
      if (members.size() != 6) continue;
      bool abelian = true;
      for (int a : members)
        for (int b : members)
          if (!(composeElements(w.s, w.g, els[a], els[b]) ==
                composeElements(w.s, w.g, els[b], els[a])))
            abelian = false;
      require(abelian, "found a non-abelian subgroup of order 6 (a copy of Sym(3))");
    }
  return "all interior bundles carry the prescribed actions; ex-small embeds no Sym(3)";
}

// ---------------------------------------------------------------- criterion 6
// Independent oracle: automorphisms of the legally edge-coloured 3-regular
// radius-2 ball, fixing the root, with all non-leaf local colour actions in F.
// Vertices are colour paths; no scaffolding machinery is involved.
std::map<std::string, std::string> colourBallAutomorphism(
    const std::vector<int>& tau, const std::map<int, std::map<int, int>>& sigma) {
  std::map<std::string, std::string> out;
  out[""] = "";
  for (int k = 1; k <= 3; ++k) {
    out[std::to_string(k)] = std::to_string(tau[k]);
    for (int j = 1; j <= 3; ++j) {
      if (j == k) continue;
      out[std::to_string(k) + "/" + std::to_string(j)] =
          std::to_string(tau[k]) + "/" + std::to_string(sigma.at(k).at(j));
    }
  }
  return out;
}

std::set<std::map<std::string, std::string>> colourBallOracle(const PermAction& f) {
  // F acts on tokens "1","2","3"
  auto inF = [&](const std::map<int, int>& perm) {
    std::vector<int> img(3);
    for (auto [a, b] : perm) img[f.points()->indexOf(std::to_string(a))] =
        f.points()->indexOf(std::to_string(b));
    return f.contains(Permutation(f.points(), img));
  };
  std::set<std::map<std::string, std::string>> out;
  std::vector<int> perm = {1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<int> tau = {0, perm[0], perm[1], perm[2]};  // 1-indexed
    std::map<int, int> rootLocal;
    for (int k = 1; k <= 3; ++k) rootLocal[k] = tau[k];
    if (!inF(rootLocal)) continue;
    // per child k: bijections of the remaining colours
    std::vector<std::map<int, std::map<int, int>>> partials = {{}};
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> src, dst;
      for (int j = 1; j <= 3; ++j)
        if (j != k) src.push_back(j);
      for (int j = 1; j <= 3; ++j)
        if (j != tau[k]) dst.push_back(j);
      std::vector<std::map<int, int>> choices;
      for (int flip = 0; flip < 2; ++flip) {
        std::map<int, int> sk;
        sk[src[0]] = dst[flip];
        sk[src[1]] = dst[1 - flip];
        // the local action at child k also maps the parent colour k to tau[k]
        std::map<int, int> localK = sk;
        localK[k] = tau[k];
        if (inF(localK)) choices.push_back(sk);
      }
      std::vector<std::map<int, std::map<int, int>>> next;
      for (const auto& partial : partials)
        for (const auto& choice : choices) {
          auto copy = partial;
          copy[k] = choice;
          next.push_back(copy);
        }
      partials = std::move(next);
    }
    for (const auto& sigma : partials) out.insert(colourBallAutomorphism(tau, sigma));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string c06() {
  std::ostringstream note;
  for (const char* file : {"bm-c3.bm", "bm-s3.bm"}) {
    Workspace w = load(file, 2);
    auto els = enumerateUniversal(w.s, w.g, EnumerationMode::RootStabilizer);

    // identify augmented arcs with their singleton adhesion colour
    std::map<std::string, std::string> colourOfPlusArc;
    for (int b = 0; b < w.aug.plus.arcCount(); ++b) {
      require(w.aug.adhesion[b].size() == 1, "adhesion set is not a singleton");
      colourOfPlusArc[w.aug.plus.arcId(b)] =
          w.g.vertexAction[0].points()->token(w.aug.adhesion[b][0]);
    }
    auto toColourPath = [&](const std::string& treeId) {
      // "r/a1+2/a1" -> "2/1"
      std::string out;
      size_t pos = 1;
      while (pos < treeId.size()) {
        size_t next = treeId.find('/', pos + 1);
        std::string part = treeId.substr(pos + 1, next == std::string::npos
                                                      ? std::string::npos
                                                      : next - pos - 1);
        if (!out.empty()) out += "/";
        out += colourOfPlusArc.at(part);
        if (next == std::string::npos) break;
        pos = next;
      }
      return out;
    };

    std::set<std::map<std::string, std::string>> ggaSide;
    for (const auto& e : els) {
      std::map<std::string, std::string> vm;
      for (int b = 0; b < static_cast<int>(w.s.bundles.size()); ++b) {
        require(e.bundleImage[b] >= 0, "missing bundle image in a root-stabilizer element");
        vm[toColourPath(w.s.bundles[b].id)] = toColourPath(w.s.bundles[e.bundleImage[b]].id);
      }
      ggaSide.insert(vm);
    }
    require(ggaSide.size() == els.size(), "tree maps do not separate the elements");

    std::set<std::map<std::string, std::string>> oracle = colourBallOracle(
        PermAction::make(w.g.vertexAction[0].points(), w.g.vertexAction[0].generators()));
    require(ggaSide == oracle,
            std::string(file) + ": enumerated tree actions differ from the colour oracle");
    note << (note.str().empty() ? "" : ", ") << file << ": both sides " << oracle.size();
  }
  return "set equality with the brute-force coloured-ball oracle (" + note.str() + ")";
}

// ---------------------------------------------------------------- criterion 7
std::string c07() {
  Workspace bm = load("bm-c3.bm", 2);
  auto bmEls = enumerateUniversal(bm.s, bm.g, EnumerationMode::RootStabilizer);
  int paths = 0;
  for (const auto& ab : bm.s.abundles) {
    if (ab.terminus != 0 || !bm.s.bundles[ab.origin].interior) continue;
    PropertyPResult r = propertyPCheck(bm.s, bm.g, bmEls, {0, ab.origin});
    require(r.verdict == Verdict::Pass, "bm-c3 path failed: " + r.detail);
    ++paths;
  }
  require(paths == 3, "expected three interior edge paths");

  Workspace a1 = load("ex-constlocal-s3.gga", 2);
  auto a1Els = enumerateUniversal(a1.s, a1.g, EnumerationMode::RootStabilizer);
  PropertyPResult r = propertyPCheck(a1.s, a1.g, a1Els, {0, 1});
  require(r.verdict == Verdict::Fail, "coupled family unexpectedly passed");
  require(r.detail.find("branch") != std::string::npos, "missing counterexample detail");
  return "holds on bm-c3 edge paths; fails with a counterexample on the coupled family";
}

// ---------------------------------------------------------------- criterion 8
std::string c08() {
  for (const char* file : {"bm-c3.bm", "bm-s3.bm", "gog-c2c2.gog", "lad-line.lad",
                           "box-s3.box"}) {
    Workspace w = load(file, 2);
    if (!isFree(w.g)) continue;
    auto els = enumerateUniversal(w.s, w.g, EnumerationMode::RootStabilizer);
    for (const auto& ab : w.s.abundles) {
      if (ab.terminus != 0 || !w.s.bundles[ab.origin].interior) continue;
      IpkChain chain =
          ipkDetect(w.s, w.g, els, static_cast<int>(&ab - w.s.abundles.data()), 2);
      require(chain.stabilized && chain.k == 1,
              std::string(file) + ": free gga chain did not stabilize at k=1");
    }
  }
  Workspace a1 = load("ex-constlocal-s3.gga", 3);
  auto els = enumerateUniversal(a1.s, a1.g, EnumerationMode::RootStabilizer);
  int ab = a1.s.arcBundlesAt(0).at(0);
  IpkChain chain = ipkDetect(a1.s, a1.g, els, ab, 3);
  require(chain.stabilized, "coupled family chain did not stabilize within radius 3: " + chain.note);
  require(chain.k == 2, "expected stabilization index 2, got " + std::to_string(chain.k));
  return "k=1 for every free gga; coupled family stabilizes at k=2 within radius 3";
}

// ---------------------------------------------------------------- criterion 9
std::string c09() {
  Workspace w = load("ex-parity.gga", 2);
  auto els = enumerateUniversal(w.s, w.g, EnumerationMode::RootStabilizer);
  ParityResult r = parityCheck(w.s, els);
  require(r.allEqual, "an element mixes parities");
  require(r.bothParities, "only one parity occurs");
  return "all local actions of each element share a sign; both signs occur";
}

// --------------------------------------------------------------- criterion 10
std::string c10() {
  Workspace w = load("ex-constlocal-s3.gga", 2);
  auto els = enumerateUniversal(w.s, w.g, EnumerationMode::RootStabilizer);
  require(constantLocalActionCheck(w.s, els), "local actions are not constant");
  RegularityResult reg = regularityCheck(w.s, w.g, els, hasAllTrivialLocals);
  require(reg.ok, reg.detail);
  return "constant local actions; the trivial-local-action subgroup acts regularly";
}

// --------------------------------------------------------------- criterion 11
std::string c11() {
  Gga g = parseAny(readFile("ex-small.gga"));
  Gga red = reduceGga(g);
  Gga ar = arcReduceGga(g);

  AugmentedDigraph a0 = augment(g), a1 = augment(red), a2 = augment(ar);
  for (const AugmentedDigraph* other : {&a1, &a2}) {
    require(a0.plus.arcCount() == other->plus.arcCount(), "augmented arc counts differ");
    for (int b = 0; b < a0.plus.arcCount(); ++b) {
      require(a0.plus.arcId(b) == other->plus.arcId(b), "augmented arc ids differ");
      require(a0.rho[b] == other->rho[b], "rho differs");
      require(a0.plus.origin(b) == other->plus.origin(b) &&
                  a0.plus.terminus(b) == other->plus.terminus(b),
              "augmented arc endpoints differ");
    }
  }

  auto treeActions = [](const Gga& gga) {
    AugmentedDigraph aug = augment(gga);
    CoveringTree tree = buildStarCoveringTree(gga, aug, gga.base.vertexId(0), 1);
    Scaffolding s = buildCanonical(gga, aug, tree);
    auto els = enumerateUniversal(s, gga, EnumerationMode::FullIfFinite);
    std::set<std::vector<std::string>> out;
    for (const auto& e : els) {
      std::vector<std::string> tm;
      for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b)
        tm.push_back(s.bundles[b].id + ">" + s.bundles[e.bundleImage[b]].id);
      out.insert(tm);
    }
    return out;
  };
  auto t0 = treeActions(g), t1 = treeActions(red), t2 = treeActions(ar);
  require(t0 == t1, "reduced tree action differs");
  require(t0 == t2, "arc-reduced tree action differs");
  return "reductions preserve the augmented digraph and the radius-1 tree action";
}

// --------------------------------------------------------------- criterion 12
std::string c12() {
  for (const char* file : {"ex-c3-id.gga", "ex-c3-swap.gga"}) {
    Workspace w = load(file, 1);
    auto direct = enumerateUniversal(w.s, w.g, EnumerationMode::FullIfFinite);

    Scaffolding t = subdividedScaffoldTransfer(w.g, 1);
    Diagnostics d = checkScaffolding(t, w.g);
    require(d.ok, std::string(file) + ": transfer scaffolding invalid: " + d.joined());
    auto viaSubdivision = enumerateUniversal(t, w.g, EnumerationMode::FullIfFinite);
    require(direct.size() == viaSubdivision.size(), "orders differ");

    UniversalElement phi = buildAcceptableIso(w.s, t, w.g);
    std::vector<int> phiVerts = elementVertexMap(w.s, t, phi);

    std::set<std::vector<int>> conjugated;
    for (const auto& e : direct) {
      std::vector<int> ev = elementVertexMap(w.s, w.s, e);
      std::vector<int> onTransfer(t.verts.size(), -1);
      for (int v = 0; v < static_cast<int>(w.s.verts.size()); ++v)
        onTransfer[phiVerts[v]] = phiVerts[ev[v]];
      conjugated.insert(onTransfer);
    }
    std::set<std::vector<int>> transferSide;
    for (const auto& e : viaSubdivision) transferSide.insert(elementVertexMap(t, t, e));
    require(conjugated == transferSide,
            std::string(file) + ": conjugated vertex actions differ from the transfer group");
  }
  return "subdivision-transfer group is permutation-isomorphic to the direct one (both agents)";
}

// --------------------------------------------------------------- criterion 13
std::string c13() {
  std::vector<std::string> corpus = {"ex-c3-id.gga", "ex-c3-swap.gga", "ex-small.gga",
                                     "bm-c3.bm", "bm-s3.bm", "ex-constlocal-s3.gga",
                                     "ex-parity.gga"};
  std::vector<Workspace> spaces;
  for (const auto& file : corpus) spaces.push_back(load(file, 3));

  std::mt19937 rng(20250810);
  for (int trial = 0; trial < 100; ++trial) {
    Workspace& w = spaces[rng() % spaces.size()];
    const PermAction& G0 = w.g.vertexAction[w.s.bundles[0].piVertex];
    const Permutation& f0 = G0.elements()[rng() % G0.order()];

    UniversalElement e = extendFull(w.s, w.s, w.g, Seed{0, 0, f0});
    require(*e.local[0] == f0, "extension does not restrict to the seed");
    for (int b = 0; b < static_cast<int>(w.s.bundles.size()); ++b)
      if (w.s.bundles[b].interior)
        require(e.local[b].has_value(), "extension misses an interior bundle");
    Diagnostics d = validateElement(w.s, w.s, w.g, e);
    require(d.ok, "extension invalid: " + d.joined());

    // per-edge candidate counts and forced-arc uniqueness/stability
    for (int ab = 0; ab < static_cast<int>(w.s.abundles.size()); ++ab) {
      int v = w.s.abundles[ab].terminus, n = w.s.abundles[ab].origin;
      if (!w.s.bundles[v].interior || !e.local[v]) continue;
      ExtensionStep step = oneStepExtend(w.s, w.s, w.g, v, e.bundleImage[v], *e.local[v], n);
      const PermAction& GW = w.g.vertexAction[w.s.bundles[n].piVertex];
      std::vector<int> image = w.s.psi(w.s.abundles[ab].reverse);
      require(static_cast<int>(step.candidates.size()) ==
                  GW.pointwiseStabilizer(image).order(),
              "candidate list is not a full coset of the pointwise stabilizer");
      auto fwd = forcedArcImageAll(w.s, w.s, w.g, ab, e.bundleImage[v], *e.local[v], false);
      auto bwd = forcedArcImageAll(w.s, w.s, w.g, ab, e.bundleImage[v], *e.local[v], true);
      require(fwd.size() == 1 && bwd.size() == 1 && fwd[0] == bwd[0],
              "forced arc image is not unique or not scan-stable");
    }
  }
  return "100 random seeds extend across the radius-3 interior; coset sizes and forcing exact";
}

// --------------------------------------------------------------- criterion 14
std::string c14() {
  Workspace w = load("ex-c3-id.gga", 1);
  require(checkScaffolding(w.s, w.g).ok, "canonical scaffolding rejected");

  {  // deleted matching arc
    Scaffolding broken = w.s;
    int victim = broken.arcAt(0, 0);
    int mate = broken.arcs[victim].reverse;
    std::vector<Scaffolding::Arc> kept;
    for (int i = 0; i < static_cast<int>(broken.arcs.size()); ++i)
      if (i != victim && i != mate) kept.push_back(broken.arcs[i]);
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) idx[kept[i].id] = i;
    for (auto& a : kept) a.reverse = idx.at(broken.arcs[a.reverse].id);
    broken.arcs = kept;
    Diagnostics d = checkScaffolding(broken, w.g);
    require(!d.ok && d.joined().find("arc-bundle-not-matching") != std::string::npos,
            "deleted arc not reported as a matching failure");
  }
  {  // recoloured bundle
    Scaffolding broken = w.s;
    auto verts = broken.bundleVerts(0);
    std::swap(broken.verts[verts[0]].point, broken.verts[verts[1]].point);
    Diagnostics d = checkScaffolding(broken, w.g);
    require(!d.ok && d.joined().find("psi-not-adhesion") != std::string::npos,
            "recolouring not reported as a psi failure");
  }
  {  // broken psi map
    Scaffolding broken = w.s;
    int a0 = broken.arcAt(0, 0), a1 = broken.arcAt(0, 1);
    std::swap(broken.arcs[a0].terminus, broken.arcs[a1].terminus);
    std::swap(broken.arcs[broken.arcs[a0].reverse].origin,
              broken.arcs[broken.arcs[a1].reverse].origin);
    Diagnostics d = checkScaffolding(broken, w.g);
    require(!d.ok && d.joined().find("psi-not-adhesion") != std::string::npos,
            "rewired matching not reported as a psi failure");
  }
  return "canonical passes; all three mutation classes fail with their named diagnostics";
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    std::function<std::string()> fn;
  };
  std::vector<Criterion> criteria = {
      {"C01", c01}, {"C02", c02}, {"C03", c03}, {"C04", c04}, {"C05", c05},
      {"C06", c06}, {"C07", c07}, {"C08", c08}, {"C09", c09}, {"C10", c10},
      {"C11", c11}, {"C12", c12}, {"C13", c13}, {"C14", c14},
  };
  int passed = 0;
  for (const auto& c : criteria) {
    try {
      std::string detail = c.fn();
      std::cout << "[" << c.id << "] PASS " << detail << "\n";
      ++passed;
    } catch (const std::exception& e) {
      std::cout << "[" << c.id << "] FAIL " << e.what() << "\n";
    }
  }
  std::cout << "ACCEPTANCE: " << passed << "/" << criteria.size() << " criteria passed\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
