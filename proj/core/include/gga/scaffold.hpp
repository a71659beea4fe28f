#pragma once

#include "gga/covering.hpp"

namespace gga {

/// A scaffolding: vertex bundles (empty subgraphs coloured bijectively by the
/// vertex point sets) joined by arc bundles (matchings coloured by the arc
/// point sets), whose bundle quotient is a truncated Star-covering tree.
/// Canonical builds sit over a covering tree; transformed or parsed
/// scaffoldings carry the same data explicitly.
struct Scaffolding {
  std::string ggaName;

  struct Bundle {
    std::string id;     // tree vertex id
    int piVertex;       // base graph vertex
    bool interior;
    int parent;         // bundle index, -1 at the root (tree structure)
  };
  struct ArcBundle {
    std::string id;     // tree arc id
    int origin;         // bundle index
    int terminus;
    int reverse;        // arc bundle index
    int piArc;          // base graph arc
    int plusArc;        // augmented arc label, -1 when not tracked
  };
  struct Vert {
    std::string id;
    int bundle;
    int point;  // index into X(π(bundle))
  };
  struct Arc {
    std::string id;
    int abundle;
    int point;  // index into Y(π(abundle))
    int origin;    // vert index
    int terminus;  // vert index
    int reverse;   // arc index
  };

  std::vector<Bundle> bundles;
  std::vector<ArcBundle> abundles;
  std::vector<Vert> verts;
  std::vector<Arc> arcs;

  int bundleIndex(const std::string& id) const;
  int vertAt(int bundle, int point) const;            // -1 if absent
  int arcAt(int abundle, int point) const;            // -1 if absent
  std::vector<int> bundleVerts(int bundle) const;
  std::vector<int> bundleArcs(int abundle) const;
  std::vector<int> arcBundlesAt(int bundle) const;    // with terminus there

  /// Ψ: Y(π⟦a⟧) -> X(π t⟦a⟧), the unique map with Ψ(p(b)) = p(t(b)).
  /// Requires the bundle to be a p-bijective matching.
  std::vector<int> psi(int abundle) const;
  std::vector<int> adhesionAt(int abundle) const;  // sorted image of psi

  SerreGraph quotientTree() const;
  SerreGraph asSerreGraph() const;
};

Scaffolding buildCanonical(const Gga& g, const AugmentedDigraph& aug, const CoveringTree& t);

Diagnostics checkScaffolding(const Scaffolding& s, const Gga& g);

/// Classification of the Ψ map at an arc bundle: a map of the form γΦ_a is
/// an adhesion map, γΦ_a h_a a twisted one (self-reverse arcs only).  Both
/// flags may hold when h_a lies in H(a).
struct PsiClass {
  std::vector<int> map;
  bool adhesion = false;
  bool twisted = false;
};

PsiClass psiClassify(const Scaffolding& s, const Gga& g, int abundle);

/// T_+: vertex bundles collapsed to single vertices, every scaffolding arc
/// kept (parallel edges preserved).
struct AugmentedTree {
  SerreGraph graph;            // vertices = bundles, arcs = scaffolding arcs
  std::vector<int> arcSource;  // T_+ arc -> scaffolding arc
};

AugmentedTree collapseToTPlus(const Scaffolding& s);

/// Scaffolding for a gga with self-reverse arcs obtained by building the
/// subdivided ggawo's canonical scaffolding and deleting the subdivision
/// bundles, splicing each (+,y)/(-,y) edge pair into a single matching edge.
Scaffolding subdividedScaffoldTransfer(const Gga& g, int radius);

}  // namespace gga
