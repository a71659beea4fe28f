#pragma once

#include "gga/scaffold.hpp"

namespace gga {

/// A universal-group element on a finite truncation: an injective tree map
/// on the reachable interior subtree together with an acceptable local action
/// at every domain bundle.  Images of frontier bundles adjacent to the domain
/// are recorded (they are forced by the neighbouring local action); local
/// actions are not.
struct UniversalElement {
  std::vector<int> bundleImage;                    // src bundle -> dst bundle, -1 undefined
  std::vector<std::optional<Permutation>> local;   // defined exactly on the domain

  bool inDomain(int b) const { return local[b].has_value(); }
  std::vector<int> domain() const;

  /// Ordering/equality key: images then local image vectors.
  std::vector<int> key() const;
  bool operator==(const UniversalElement& o) const { return key() == o.key(); }
  bool operator<(const UniversalElement& o) const { return key() < o.key(); }
};

/// The local action of a bundle-to-bundle vertex map: the unique permutation
/// with p(g(x)) = g_v(p(x)).  vertexMap sends vert indices of the bundle into
/// vert indices of the image scaffolding.
Permutation localActionOf(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                          int bundle, const std::vector<std::pair<int, int>>& vertexMap);

/// Local action induced on an arc bundle by an element fixing it setwise.
Permutation arcBundleLocalAction(const Scaffolding& s, const Gga& g,
                                 const UniversalElement& e, int abundle);

/// Forced image: the unique arc bundle at the image vertex with
/// the same base label whose adhesion set is the g_v-image of the given one.
/// Throws a truncation error when the image vertex is not interior.
int forcedArcImage(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                   int abundle, int imageBundle, const Permutation& gv);

/// Diagram-chase data of a single extension step across one tree edge.
struct ExtensionStep {
  int arcBundle = -1;        // ⟦a⟧ with terminus at the already-mapped bundle
  int imageArcBundle = -1;   // forced image ⟦a'⟧
  int newBundle = -1;        // ⟦w⟧ = o(⟦a⟧)
  int imageNewBundle = -1;   // ⟦w'⟧ = o(⟦a'⟧)
  std::optional<Permutation> qV, rV, qW;     // chase witnesses
  std::optional<Permutation> hV, hVp, hW, hWp;  // Ψ = h∘Φ (possibly twisted) factors
  bool twistV = false, twistVp = false, twistW = false, twistWp = false;
  std::vector<Permutation> candidates;       // all valid g_⟦w⟧, canonical order
  std::vector<Permutation> qCandidates;      // matching q_⟦w⟧ list
  const Permutation& chosen() const { return candidates.front(); }
};

ExtensionStep oneStepExtend(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                            int bundleV, int imageV, const Permutation& fV, int bundleW);

/// All arc bundles matching the forced-image condition (exactly one for a
/// valid scaffolding); scanning order controlled for stability tests.
std::vector<int> forcedArcImageAll(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                                   int abundle, int imageBundle, const Permutation& gv,
                                   bool reverseScan = false);

struct Seed {
  int bundle = 0;       // usually the root
  int imageBundle = 0;  // same π-label bundle of the target scaffolding
  Permutation local;    // f0 in G(π(bundle))
};

/// Breadth-first full extension of an acceptable seed over the maximal
/// reachable interior subtree, deterministic via the canonical candidate
/// choice at every step.
UniversalElement extendFull(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                            const Seed& seed);

Diagnostics validateElement(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
                            const UniversalElement& e);

UniversalElement composeElements(const Scaffolding& s, const Gga& g,
                                 const UniversalElement& outer, const UniversalElement& inner);
UniversalElement invertElement(const Scaffolding& s, const Gga& g, const UniversalElement& e);
UniversalElement identityElement(const Scaffolding& s, const Gga& g);
int elementOrder(const Scaffolding& s, const Gga& g, const UniversalElement& e);

enum class EnumerationMode { FullIfFinite, RootStabilizer };

/// All universal elements on the truncation: every choice of root image and
/// root local action, branched over the candidate coset at every one-step
/// extension.  Sorted canonically; throws when the cap is exceeded.
std::vector<UniversalElement> enumerateUniversal(const Scaffolding& s, const Gga& g,
                                                 EnumerationMode mode, long long cap = 1000000);

std::vector<std::vector<int>> orbitsOnTree(const Scaffolding& s,
                                           const std::vector<UniversalElement>& elements,
                                           bool interiorOnly = true);

/// Image of a scaffolding vertex / arc under an element whose local action is
/// defined at the relevant bundle.
int vertImage(const Scaffolding& src, const Scaffolding& dst, const UniversalElement& e, int vert);
int arcImage(const Scaffolding& src, const Scaffolding& dst, const Gga& g,
             const UniversalElement& e, int arc);

/// Comparable signature of an element restricted to a bundle subset.
std::vector<int> elementSignatureOn(const Scaffolding& s, const UniversalElement& e,
                                    const std::vector<int>& bundles);

struct QuotientCheckResult {
  bool ok = false;
  bool decided = true;
  std::string detail;
};

/// Whether the constructed witnesses realize the base graph as the quotient:
/// vertex orbits equal π-fibers on the interior and every base vertex and
/// arc is hit.  Witnesses are built per pair by full extension.
QuotientCheckResult quotientCheck(const Scaffolding& s, const Gga& g);

struct BundleActionResult {
  PermAction action;                   // induced on the bundle's verts/arcs
  ActionIsomorphism iso;               // to (G(π v), X(π v)) resp. (H, Y)
  std::vector<std::string> pointIds;   // scaffold vertex/arc ids acted on
};

BundleActionResult inducedVertexBundleAction(const Scaffolding& s, const Gga& g,
                                             const std::vector<UniversalElement>& elements,
                                             int bundle);
BundleActionResult inducedArcBundleAction(const Scaffolding& s, const Gga& g,
                                          const std::vector<UniversalElement>& elements,
                                          int abundle);

/// Acceptable isomorphism between two scaffoldings of one gga, extended from
/// the identity-like seed at the roots.
UniversalElement buildAcceptableIso(const Scaffolding& src, const Scaffolding& dst, const Gga& g);

/// Vertex permutation view (vert index -> vert index in dst); requires every
/// source bundle to be in the domain.
std::vector<int> elementVertexMap(const Scaffolding& src, const Scaffolding& dst,
                                  const UniversalElement& e);

std::string serializeElement(const Scaffolding& s, const Gga& g, const UniversalElement& e);

}  // namespace gga
