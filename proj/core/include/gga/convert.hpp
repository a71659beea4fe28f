#pragma once

#include "gga/gga.hpp"

namespace gga {

/// Burger-Mozes data: one vertex carrying F, one self-reverse loop per orbit
/// with a trivial singleton arc action on the least orbit representative.
Gga fromBurgerMozes(const std::string& name, const PermAction& f);

/// Box product of two nontrivial actions: complete bipartite base with the
/// two actions on the sides and trivial singleton arc actions hitting orbit
/// representatives.
Gga fromBoxProduct(const std::string& name, const PermAction& m, const PermAction& n);

/// Graph of groups: finite vertex/arc groups given as permutation groups (a
/// concrete handle for the abstract group), arc homomorphisms given on
/// generators.  No self-reverse arcs.
struct GraphOfGroups {
  std::string name;
  SerreGraph base;
  std::vector<PermAction> vertexGroup;  // by vertex
  std::vector<PermAction> arcGroup;     // by arc, shared on reverse pairs
  // per arc: generator images; hom[a][i] = image in G(t(a)) of arcGroup[a].generators()[i]
  std::vector<std::vector<Permutation>> hom;
};

/// Left-regular translation: X(v) becomes the element list of G(v), Y(a) the
/// element list of H(a), Φ_a the homomorphism θ_a read as a point map.
Gga fromGraphOfGroups(const GraphOfGroups& gog);

/// Local action diagram: per-arc orbit sets partitioning each vertex set.
struct LadDescription {
  std::string name;
  SerreGraph graph;
  std::vector<std::vector<std::string>> arcPoints;  // arc -> tokens of X(a); shared token space per vertex
  std::vector<std::vector<std::string>> vertexGens;  // vertex -> generator cycle strings over X(v)
};

Gga fromLocalActionDiagram(const LadDescription& lad);

/// Inverse translation; requires a free, arc-reduced gga.
LadDescription toLocalActionDiagram(const Gga& g);

}  // namespace gga
