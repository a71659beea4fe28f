#pragma once

#include "gga/universal.hpp"

namespace gga {

enum class Verdict { Pass, Fail, Undecided };

std::string verdictWord(Verdict v);

/// Branch decomposition data of a path of tree vertices (Tits-style path
/// fixators on the truncation).
struct PathFixatorData {
  std::vector<int> path;                       // bundle indices, consecutive
  std::vector<int> projection;                 // bundle -> index into path
  std::vector<std::vector<int>> branches;      // per path vertex: its branch bundles
  std::vector<const UniversalElement*> fixator;  // elements fixing every path vertex
};

PathFixatorData buildPathFixators(const Scaffolding& s,
                                  const std::vector<UniversalElement>& elements,
                                  const std::vector<int>& path);

struct PropertyPResult {
  Verdict verdict = Verdict::Undecided;
  std::string detail;
};

/// Independence property along a path: the fixator of the path must realize
/// every combination of its branch restrictions.  Elements must contain the
/// enumerated stabilizer of the path's root; the path must lie in the
/// interior and contain the enumeration root.
PropertyPResult propertyPCheck(const Scaffolding& s, const Gga& g,
                               const std::vector<UniversalElement>& elements,
                               const std::vector<int>& path);

struct IpkChain {
  int arcBundle = -1;
  std::vector<int> orders;  // |H_1|, |H_2|, ...
  int k = -1;               // least index with H_k = H_{k+1}
  bool stabilized = false;
  std::string note;
};

/// Descending chain of ball-fixator actions on an arc bundle; stabilization
/// index per the thick-path independence property.
IpkChain ipkDetect(const Scaffolding& s, const Gga& g,
                   const std::vector<UniversalElement>& elements, int abundle, int maxK);

struct SubdegreeReport {
  struct VertexRow {
    std::string vertex;
    std::vector<int> adhesionOrbitSizes;     // one per incident arc: i(a)
    int maxSubdegree = 0;                    // largest point-stabilizer orbit on X(v)
    int maxStabAdhesionOrbit = 0;            // largest point-stabilizer orbit on adhesion sets
    bool allFinite = true;
  };
  std::vector<VertexRow> rows;
  bool treeActionSubdegreeFinite = true;
  bool scaffoldingActionSubdegreeFinite = true;
  std::string text() const;
};

SubdegreeReport subdegreeReport(const Gga& g);

/// All local actions of each element are equal as permutations (single-vertex
/// bases).
bool constantLocalActionCheck(const Scaffolding& s, const std::vector<UniversalElement>& elements);

struct ParityResult {
  bool allEqual = true;      // each element's local actions share one sign
  bool bothParities = false; // some element is odd, some even
};

ParityResult parityCheck(const Scaffolding& s, const std::vector<UniversalElement>& elements);

struct RegularityResult {
  bool ok = false;
  std::string detail;
};

/// The filtered subgroup (elements passing the filter) fixes the root only
/// trivially, and transitivity on the interior is witnessed by construction.
RegularityResult regularityCheck(const Scaffolding& s, const Gga& g,
                                 const std::vector<UniversalElement>& elements,
                                 bool (*filter)(const UniversalElement&));

bool hasAllTrivialLocals(const UniversalElement& e);

}  // namespace gga
