#pragma once

#include "gga/gga.hpp"

namespace gga {

/// Truncated Star-covering tree for an augmented base digraph.  Vertex ids
/// encode the label path from the root, so a radius-R tree embeds in a
/// radius-(R+1) tree by id equality.  A vertex is interior when its star is
/// complete; frontier vertices intentionally have incomplete stars.
struct CoveringTree {
  struct Vertex {
    std::string id;
    int deltaVertex;  // π(v) in the base graph
    int depth;
    int parent;       // tree vertex index, -1 for the root
    int upArc;        // tree arc child -> parent, -1 for the root
    bool interior;    // star complete
  };
  struct Arc {
    std::string id;
    int origin;
    int terminus;
    int reverse;
    int plusArc;  // π+ label into the augmented digraph
  };

  int radius = 0;
  std::vector<Vertex> verts;
  std::vector<Arc> arcs;

  int vertexIndex(const std::string& id) const;
  std::vector<int> star(int v) const;  // arcs with terminus v
  SerreGraph asSerreGraph() const;
  bool finite() const;  // every vertex interior: the tree is complete
};

/// Breadth-first construction of the Star-covering tree to the given radius.
/// Reverse-completing labels follow the compatibility rule: the downward arc
/// of an edge is labelled with the least augmented arc over the reverse of
/// the upward label; over a self-reverse base arc the same label is reused.
CoveringTree buildStarCoveringTree(const Gga& g, const AugmentedDigraph& aug,
                                   const std::string& rootVertex, int radius);

Diagnostics validateCoveringTree(const CoveringTree& t, const Gga& g, const AugmentedDigraph& aug);

struct TreeIsomorphism {
  std::vector<int> vertexMap;
  std::vector<int> arcMap;
};

/// Label-preserving isomorphism (comparing ρ∘π+ labels level by level);
/// absent iff some level's label multisets mismatch.  Radii must agree.
std::optional<TreeIsomorphism> coveringTreesIsomorphic(const CoveringTree& t1,
                                                       const CoveringTree& t2,
                                                       const AugmentedDigraph& aug);

}  // namespace gga
