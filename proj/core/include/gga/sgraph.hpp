#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "gga/perm.hpp"

namespace gga {

struct Diagnostics {
  bool ok = true;
  std::vector<std::string> issues;

  void fail(std::string msg) {
    ok = false;
    issues.push_back(std::move(msg));
  }
  std::string joined() const;
};

struct ArcDecl {
  std::string id;
  std::string origin;
  std::string terminus;
  std::string reverse;
};

/// Graph in Serre's convention: arcs with an involutive reversal satisfying
/// o(a) = t(ā).  Self-reverse arcs (ā = a) are permitted.  Iteration order is
/// declaration order throughout.
class SerreGraph {
public:
  static SerreGraph make(std::vector<std::string> vertices, std::vector<ArcDecl> arcs);

  int vertexCount() const { return static_cast<int>(vertexIds_.size()); }
  int arcCount() const { return static_cast<int>(arcIds_.size()); }
  const std::string& vertexId(int v) const { return vertexIds_[v]; }
  const std::string& arcId(int a) const { return arcIds_[a]; }
  int vertexIndex(const std::string& id) const;  // -1 if absent
  int arcIndex(const std::string& id) const;
  int origin(int a) const { return origin_[a]; }
  int terminus(int a) const { return terminus_[a]; }
  int reverse(int a) const { return reverse_[a]; }
  bool selfReverse(int a) const { return reverse_[a] == a; }

  Diagnostics validate() const;
  bool connected() const;
  bool isTree() const;
  std::vector<int> star(int v) const;     // arcs with terminus v
  std::vector<int> starInv(int v) const;  // arcs with origin v

  /// Edges as arc pairs {a, ā} listed by least arc index (self-reverse arcs
  /// are single-arc edges).
  std::vector<std::pair<int, int>> edges() const;

private:
  std::vector<std::string> vertexIds_;
  std::vector<std::string> arcIds_;
  std::vector<int> origin_, terminus_, reverse_;
  std::unordered_map<std::string, int> vertexIndex_;
  std::unordered_map<std::string, int> arcIndex_;
};

/// Plain digraph (no reversal map); used for augmented base digraphs.
class Digraph {
public:
  static Digraph make(std::vector<std::string> vertices,
                      std::vector<std::string> arcIds,
                      std::vector<int> origin, std::vector<int> terminus);

  int vertexCount() const { return static_cast<int>(vertexIds_.size()); }
  int arcCount() const { return static_cast<int>(arcIds_.size()); }
  const std::string& vertexId(int v) const { return vertexIds_[v]; }
  const std::string& arcId(int a) const { return arcIds_[a]; }
  int vertexIndex(const std::string& id) const;
  int arcIndex(const std::string& id) const;
  int origin(int a) const { return origin_[a]; }
  int terminus(int a) const { return terminus_[a]; }
  std::vector<int> star(int v) const;
  std::vector<int> starInv(int v) const;

private:
  std::vector<std::string> vertexIds_;
  std::vector<std::string> arcIds_;
  std::vector<int> origin_, terminus_;
  std::unordered_map<std::string, int> vertexIndex_;
  std::unordered_map<std::string, int> arcIndex_;
};

/// Partition of vertices and arcs compatible with origin, terminus, reversal.
struct GraphEquivalence {
  std::vector<int> vertexClass;  // vertex -> class id (dense from 0)
  std::vector<int> arcClass;     // arc -> class id

  static GraphEquivalence trivial(const SerreGraph& g);
  /// Arc classes derived from a vertex partition: a ~ b iff endpoints match.
  static GraphEquivalence fromVertexClasses(const SerreGraph& g, std::vector<int> vertexClass);
  Diagnostics validate(const SerreGraph& g) const;
};

struct GraphMorphism {
  std::vector<int> vertexMap;
  std::vector<int> arcMap;
};

bool isDigraphMorphism(const SerreGraph& src, const SerreGraph& dst, const GraphMorphism& m);
bool isGraphMorphism(const SerreGraph& src, const SerreGraph& dst, const GraphMorphism& m);

struct QuotientResult {
  SerreGraph graph;
  GraphMorphism projection;
};

/// Quotient by a graph equivalence; class ids are "[least-member-id]".
QuotientResult quotient(const SerreGraph& g, const GraphEquivalence& e);

/// Contract a reversal-closed arc set: merge components spanned by it, keep
/// the remaining arcs.
SerreGraph contract(const SerreGraph& g, const std::vector<int>& arcSet);

/// Label-preserving isomorphism test on whole Serre graphs (backtracking,
/// desk scale).  Used by small structural tests.
bool graphsIsomorphic(const SerreGraph& a, const SerreGraph& b);

}  // namespace gga
