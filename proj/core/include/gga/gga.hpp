#pragma once

#include <map>
#include <optional>

#include "gga/sgraph.hpp"

namespace gga {

/// Graph of group actions: a connected base graph with a permutation action
/// at every vertex and arc, an embedding Φ_a of each arc action into the
/// action at the arc's terminus, and an inversion agent h_a for every
/// self-reverse arc.  The actions at an arc and its reverse are the same
/// object.
struct Gga {
  std::string name;
  SerreGraph base;
  std::vector<PermAction> vertexAction;              // by vertex index
  std::vector<PermAction> arcAction;                 // by arc index, shared with reverse
  std::vector<std::vector<int>> embedding;           // arc -> point map Y(a) -> X(t(a))
  std::map<int, Permutation> inversionAgent;         // self-reverse arc -> h_a on Y(a)

  const PermAction& actionAtVertex(int v) const { return vertexAction[v]; }
  const PermAction& actionAtArc(int a) const { return arcAction[a]; }
  ActionEmbedding embeddingAt(int a) const {
    return {arcAction[a], vertexAction[base.terminus(a)], embedding[a]};
  }
  std::vector<int> baseAdhesionSet(int a) const;  // sorted image of Φ_a
};

Diagnostics validateGga(const Gga& g);

/// i(a): number of distinct a-adhesion sets (translates of Φ_a(Y(a))).
int adhesionIndex(const Gga& g, int arc);

/// Augmented base digraph: per base arc a, i(a) parallel arcs tagged by the
/// distinct adhesion sets; the original arc keeps γ = identity.
struct AugmentedDigraph {
  Digraph plus;
  std::vector<int> rho;                     // plus arc -> base arc
  std::vector<std::vector<int>> adhesion;   // plus arc -> sorted point set in X(t)
  std::vector<Permutation> gamma;           // plus arc -> γ_b in G(t(ρ(b)))
  std::vector<std::vector<int>> chosenMap;  // plus arc -> Φ_b = γ_b ∘ Φ_ρ(b)
  std::vector<char> selfReverseMark;        // plus arc mirrors ρ(b) self-reverse
  std::vector<std::vector<int>> fiber;      // base arc -> plus arcs, adhesion order
};

/// Transversal choice hook: given the canonical candidate list (all elements
/// mapping the base adhesion set to the target one, canonical order), return
/// the chosen index.  Default picks 0.
using TransversalChooser = int (*)(int candidateCount);

AugmentedDigraph augment(const Gga& g, TransversalChooser chooser = nullptr);

Diagnostics validateAugmented(const Gga& g, const AugmentedDigraph& aug);

/// Barycentric-style removal of self-reverse arcs: each self-reverse arc a
/// becomes a vertex v_a carrying {-1,+1} x Y(a) with the group generated by
/// H(a) and the sign-flipping lift of h_a, joined to t(a) by an ordinary arc
/// pair.
struct SubdivisionResult {
  Gga gga;
  std::vector<std::string> subdivisionVertices;           // new vertex ids
  std::map<std::string, std::string> vertexForArc;        // original arc id -> new vertex id
  bool changed = false;
};

SubdivisionResult subdivideSelfReverse(const Gga& g);

/// Reduced gga: vertex points cut down to the union of adhesion sets, vertex
/// actions replaced by the induced faithful actions.
Gga reduceGga(const Gga& g);

/// Arc-reduced gga: vertex points become the disjoint union of adhesion sets,
/// points tagged by the augmented arc owning the set.
Gga arcReduceGga(const Gga& g);

/// True iff every arc action is the trivial group on a singleton.
bool isFree(const Gga& g);

/// Isomorphism of graphs of group actions: base-graph isomorphism plus
/// compatible per-vertex and per-arc action isomorphisms, with the adhesion
/// condition Θ_{t(a)} Φ_a = Ψ_a Θ_a witnessed per arc.
struct GgaIsomorphism {
  GraphMorphism theta;                              // bijective base morphism
  std::vector<ActionIsomorphism> vertexTheta;       // per vertex
  std::vector<ActionIsomorphism> arcTheta;          // per arc (equal on reverse pairs)
  std::vector<std::vector<int>> psiWitness;         // per arc: Y'(θa) -> X'(θ t(a))
};

std::optional<GgaIsomorphism> ggaIsomorphic(const Gga& g, const Gga& h);
Diagnostics verifyGgaIsomorphism(const Gga& g, const Gga& h, const GgaIsomorphism& iso);

}  // namespace gga
