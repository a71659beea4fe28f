#include "gga/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace gga {

std::string verdictWord(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "UNDECIDED";
  }
}

namespace {

/// Distances from a set of root bundles over the quotient tree.
std::vector<int> bundleDistances(const Scaffolding& s, const std::vector<int>& sources) {
  std::vector<int> dist(s.bundles.size(), -1);
  std::vector<int> queue;
  for (int b : sources) {
    dist[b] = 0;
    queue.push_back(b);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    for (const auto& ab : s.abundles) {
      if (ab.terminus != v) continue;
      int w = ab.origin;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

PathFixatorData buildPathFixators(const Scaffolding& s,
                                  const std::vector<UniversalElement>& elements,
                                  const std::vector<int>& path) {
  PathFixatorData data;
  data.path = path;
  int nb = static_cast<int>(s.bundles.size());

  // nearest path vertex: BFS from all path vertices at once, ties broken by
  // earlier path position (matches the unique closest vertex on a tree)
  data.projection.assign(nb, -1);
  std::vector<int> dist(nb, -1);
  std::vector<int> queue;
  for (size_t i = 0; i < path.size(); ++i) {
    data.projection[path[i]] = static_cast<int>(i);
    dist[path[i]] = 0;
    queue.push_back(path[i]);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    for (const auto& ab : s.abundles) {
      if (ab.terminus != v) continue;
      int w = ab.origin;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        data.projection[w] = data.projection[v];
        queue.push_back(w);
      }
    }
  }
  data.branches.resize(path.size());
  for (int b = 0; b < nb; ++b)
    if (data.projection[b] >= 0) data.branches[data.projection[b]].push_back(b);

  for (const auto& e : elements) {
    bool fixes = true;
    for (int b : path)
      if (e.bundleImage[b] != b) { fixes = false; break; }
    if (fixes) data.fixator.push_back(&e);
  }
  return data;
}

PropertyPResult propertyPCheck(const Scaffolding& s, const Gga& g,
                               const std::vector<UniversalElement>& elements,
                               const std::vector<int>& path) {
  (void)g;
  PropertyPResult res;
  if (path.empty()) {
    res.verdict = Verdict::Undecided;
    res.detail = "empty path";
    return res;
  }
  for (int b : path)
    if (!s.bundles[b].interior) {
      res.verdict = Verdict::Undecided;
      res.detail = "path leaves the interior; not decidable at this radius";
      return res;
    }
  if (std::find(path.begin(), path.end(), 0) == path.end()) {
    res.verdict = Verdict::Undecided;
    res.detail = "path does not contain the enumeration root";
    return res;
  }

  PathFixatorData data = buildPathFixators(s, elements, path);

  // branch restriction signatures per fixator element
  std::vector<std::vector<std::vector<int>>> sigs(path.size());
  std::vector<std::map<std::vector<int>, int>> sigIndex(path.size());
  std::vector<std::vector<int>> elementSig(data.fixator.size());
  for (size_t ei = 0; ei < data.fixator.size(); ++ei) {
    elementSig[ei].resize(path.size());
    for (size_t x = 0; x < path.size(); ++x) {
      std::vector<int> sig = elementSignatureOn(s, *data.fixator[ei], data.branches[x]);
      auto it = sigIndex[x].find(sig);
      if (it == sigIndex[x].end()) {
        it = sigIndex[x].emplace(sig, static_cast<int>(sigs[x].size())).first;
        sigs[x].push_back(sig);
      }
      elementSig[ei][x] = it->second;
    }
  }

  // injectivity is structural (branches cover the tree); check surjectivity:
  // every combination of branch restrictions must be realized
  long long combos = 1;
  for (size_t x = 0; x < path.size(); ++x) {
    combos *= static_cast<long long>(sigs[x].size());
    if (combos > 2000000) {
      res.verdict = Verdict::Undecided;
      res.detail = "too many branch combinations at this truncation";
      return res;
    }
  }
  std::set<std::vector<int>> realized(elementSig.begin(), elementSig.end());
  std::vector<int> combo(path.size(), 0);
  while (true) {
    if (!realized.count(combo)) {
      res.verdict = Verdict::Fail;
      std::ostringstream out;
      out << "no single element realizes the branch combination (";
      for (size_t x = 0; x < path.size(); ++x)
        out << (x ? ", " : "") << "branch " << s.bundles[path[x]].id << ": restriction #" << combo[x];
      out << ")";
      res.detail = out.str();
      return res;
    }
    size_t x = 0;
    while (x < path.size() && ++combo[x] == static_cast<int>(sigs[x].size())) {
      combo[x] = 0;
      ++x;
    }
    if (x == path.size()) break;
  }
  res.verdict = Verdict::Pass;
  std::ostringstream out;
  out << "fixator of order " << data.fixator.size() << " realizes all branch combinations";
  res.detail = out.str();
  return res;
}

IpkChain ipkDetect(const Scaffolding& s, const Gga& g,
                   const std::vector<UniversalElement>& elements, int abundle, int maxK) {
  IpkChain chain;
  chain.arcBundle = abundle;
  int v = s.abundles[abundle].terminus, w = s.abundles[abundle].origin;
  if (!s.bundles[v].interior || !s.bundles[w].interior)
    throw Error("ipkDetect: arc bundle is not interior");

  std::vector<int> dist = bundleDistances(s, {v, w});

  // H_i: permutations induced on the arc bundle by elements whose tree map
  // fixes every bundle within distance i-1 of the edge
  auto ballFixed = [&](const UniversalElement& e, int radius) {
    for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
      if (dist[b] < 0 || dist[b] > radius) continue;
      if (e.bundleImage[b] != b) return false;
    }
    return true;
  };
  // the ball must be fully present (all vertices at distance <= radius have
  // their images recorded for every element)
  auto ballPresent = [&](int radius) {
    for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
      if (dist[b] < 0 || dist[b] > radius) continue;
      for (const auto& e : elements)
        if (e.bundleImage[b] < 0) return false;
      if (!s.bundles[b].interior) {
        // frontier bundles are fine as fixation targets; their children are
        // not present but also not required at this radius
      }
    }
    return true;
  };

  std::vector<std::set<std::vector<int>>> H;
  for (int i = 1; i <= maxK + 1; ++i) {
    if (!ballPresent(i - 1)) {
      chain.note = "ball of radius " + std::to_string(i - 1) + " exceeds the truncation";
      break;
    }
    std::set<std::vector<int>> Hi;
    for (const auto& e : elements) {
      if (!ballFixed(e, i - 1)) continue;
      Hi.insert(arcBundleLocalAction(s, g, e, abundle).images());
    }
    H.push_back(std::move(Hi));
    chain.orders.push_back(static_cast<int>(H.back().size()));
    if (H.size() >= 2 && H[H.size() - 1] == H[H.size() - 2]) {
      chain.stabilized = true;
      chain.k = static_cast<int>(H.size()) - 1;
      break;
    }
  }
  if (!chain.stabilized && chain.note.empty())
    chain.note = "chain did not stabilize within k <= " + std::to_string(maxK);
  return chain;
}

std::string SubdegreeReport::text() const {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "[SUBDEG] vertex " << row.vertex << " adhesion-orbit-sizes";
    for (int s : row.adhesionOrbitSizes) out << " " << s;
    out << " max-subdegree " << row.maxSubdegree << " max-stabilizer-adhesion-orbit "
        << row.maxStabAdhesionOrbit << " finite " << (row.allFinite ? "yes" : "no") << "\n";
  }
  out << "[SUBDEG] tree-action subdegree-finite: " << (treeActionSubdegreeFinite ? "yes" : "no")
      << "\n";
  out << "[SUBDEG] scaffolding-action subdegree-finite: "
      << (scaffoldingActionSubdegreeFinite ? "yes" : "no") << "\n";
  return out.str();
}

SubdegreeReport subdegreeReport(const Gga& g) {
  SubdegreeReport rep;
  for (int v = 0; v < g.base.vertexCount(); ++v) {
    SubdegreeReport::VertexRow row;
    row.vertex = g.base.vertexId(v);
    const PermAction& G = g.vertexAction[v];

    std::vector<std::vector<int>> allAdhesions;
    for (int a = 0; a < g.base.arcCount(); ++a) {
      if (g.base.terminus(a) != v) continue;
      auto sets = G.orbitOfSet(g.baseAdhesionSet(a));
      row.adhesionOrbitSizes.push_back(static_cast<int>(sets.size()));
      for (auto& s : sets) allAdhesions.push_back(std::move(s));
    }

    for (int x = 0; x < G.points()->size(); ++x) {
      PermAction stab = G.pointwiseStabilizer({x});
      for (const auto& orbit : stab.orbits())
        row.maxSubdegree = std::max(row.maxSubdegree, static_cast<int>(orbit.size()));
      // orbits of the point stabilizer on the adhesion sets
      std::map<std::vector<int>, int> index;
      for (size_t i = 0; i < allAdhesions.size(); ++i) index[allAdhesions[i]] = static_cast<int>(i);
      std::vector<int> comp(allAdhesions.size());
      for (size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
      std::function<int(int)> find = [&](int z) {
        while (comp[z] != z) z = comp[z] = comp[comp[z]];
        return z;
      };
      for (const auto& el : stab.elements())
        for (size_t i = 0; i < allAdhesions.size(); ++i) {
          std::vector<int> im;
          for (int p : allAdhesions[i]) im.push_back(el(p));
          std::sort(im.begin(), im.end());
          auto it = index.find(im);
          if (it != index.end()) comp[find(static_cast<int>(i))] = find(it->second);
        }
      std::map<int, int> sizes;
      for (size_t i = 0; i < comp.size(); ++i) ++sizes[find(static_cast<int>(i))];
      for (auto& [root, size] : sizes)
        row.maxStabAdhesionOrbit = std::max(row.maxStabAdhesionOrbit, size);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool constantLocalActionCheck(const Scaffolding& s,
                              const std::vector<UniversalElement>& elements) {
  for (const auto& e : elements) {
    const Permutation* first = nullptr;
    for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
      if (!e.local[b]) continue;
      if (!first) {
        first = &*e.local[b];
      } else if (!(*first == *e.local[b])) {
        return false;
      }
    }
  }
  return true;
}

ParityResult parityCheck(const Scaffolding& s, const std::vector<UniversalElement>& elements) {
  ParityResult res;
  bool sawOdd = false, sawEven = false;
  for (const auto& e : elements) {
    int sign = 0;
    for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
      if (!e.local[b]) continue;
      int sg = e.local[b]->sign();
      if (sign == 0) sign = sg;
      else if (sign != sg) res.allEqual = false;
    }
    if (sign < 0) sawOdd = true;
    if (sign > 0) sawEven = true;
  }
  res.bothParities = sawOdd && sawEven;
  return res;
}

bool hasAllTrivialLocals(const UniversalElement& e) {
  for (const auto& l : e.local)
    if (l && !l->isIdentity()) return false;
  return true;
}

RegularityResult regularityCheck(const Scaffolding& s, const Gga& g,
                                 const std::vector<UniversalElement>& elements,
                                 bool (*filter)(const UniversalElement&)) {
  RegularityResult res;
  UniversalElement id = identityElement(s, g);
  for (const auto& e : elements) {
    if (!filter(e)) continue;
    if (e.bundleImage[0] == 0 && !(e == id)) {
      res.detail = "a non-identity filtered element fixes the root";
      return res;
    }
  }
  // transitivity witnessed within the interior by construction
  for (int b = 0; b < static_cast<int>(s.bundles.size()); ++b) {
    if (!s.bundles[b].interior || s.bundles[b].piVertex != s.bundles[0].piVertex) continue;
    Seed seed{0, b, Permutation::identity(g.vertexAction[s.bundles[0].piVertex].points())};
    UniversalElement witness = extendFull(s, s, g, seed);
    if (witness.bundleImage[0] != b || !filter(witness)) {
      res.detail = "no filtered witness moves the root to '" + s.bundles[b].id + "'";
      return res;
    }
  }
  res.ok = true;
  res.detail = "root stabilizer trivial within the filtered set; interior transitivity witnessed";
  return res;
}

}  // namespace gga
