#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gga {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite ordered set of point tokens, owned by a vertex or an arc of a base
/// graph.  Two point sets are disjoint unless they have the same owner; the
/// qualified name "owner:token" is unique across a whole structure.
class PointSet {
public:
  static std::shared_ptr<const PointSet> make(std::string owner,
                                              std::vector<std::string> tokens);

  const std::string& owner() const { return owner_; }
  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(int i) const { return tokens_[i]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  int indexOf(const std::string& token) const;  // -1 if absent
  std::string qualified(int i) const { return owner_ + ":" + tokens_[i]; }

  bool sameAs(const PointSet& other) const;

private:
  std::string owner_;
  std::vector<std::string> tokens_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

/// A permutation of a fixed point set.  Stored as the image vector over point
/// indices; composition follows (a*b)(x) = a(b(x)).
class Permutation {
public:
  Permutation(PointSetPtr domain, std::vector<int> images);
  static Permutation identity(PointSetPtr domain);
  static Permutation fromCycles(PointSetPtr domain, const std::string& text);

  const PointSetPtr& domain() const { return domain_; }
  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;  // this after other
  Permutation inverse() const;
  bool isIdentity() const;
  int order() const;
  int sign() const;  // +1 even, -1 odd

  /// Cycle notation over raw tokens, fixed points omitted, identity "()".
  std::string cycleString() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  PointSetPtr domain_;
  std::vector<int> images_;
};

/// A finite permutation group action (G, X) given by generators.  The full
/// element list is computed at construction in the canonical ordering:
/// breadth-first over generator words in declaration order, elements within a
/// word-length layer sorted by their image vectors.  All tie-breaking rules in
/// the library refer to this ordering.
class PermAction {
public:
  static PermAction make(PointSetPtr points, std::vector<Permutation> generators);
  static PermAction trivial(PointSetPtr points);

  const PointSetPtr& points() const { return points_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Permutation& identity() const { return elements_.front(); }

  int elementIndex(const Permutation& p) const;  // -1 if not a member
  bool contains(const Permutation& p) const { return elementIndex(p) >= 0; }

  /// Orbits on points, each sorted, listed by least representative.
  std::vector<std::vector<int>> orbits() const;

  /// All distinct images g(S), breadth-first over generators starting at S.
  /// Sets are sorted index vectors; the first entry is S itself.
  std::vector<std::vector<int>> orbitOfSet(const std::vector<int>& set) const;

  PermAction setwiseStabilizer(const std::vector<int>& set) const;
  PermAction pointwiseStabilizer(const std::vector<int>& set) const;

  /// Faithful action induced on an invariant-under-its-stabilizer subset:
  /// restrict the setwise stabilizer to the subset and deduplicate.
  PermAction inducedOnSubset(const std::vector<int>& set) const;

  /// All g with g(domain[i]) = target[i] for every i, in canonical order.
  std::vector<Permutation> elementsRestrictingTo(const std::vector<int>& domainPts,
                                                 const std::vector<int>& targetPts) const;

  bool sameActionObject(const PermAction& other) const;

private:
  PointSetPtr points_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Φ: Y -> X embedding a source action into a target action.
struct ActionEmbedding {
  PermAction source;
  PermAction target;
  std::vector<int> pointMap;  // source point index -> target point index

  int apply(int sourcePoint) const { return pointMap[sourcePoint]; }
  std::vector<int> image() const;  // sorted target indices
};

struct EmbeddingCheck {
  bool ok = false;
  std::string witness;  // counterexample description on failure
};

/// Two-sided embedding condition: every source element lifts to a target
/// element on the image, and every setwise stabilizer of the image restricts
/// back to a source element.
EmbeddingCheck isEmbeddingOfActions(const ActionEmbedding& e);

/// The unique r with g∘Φ = Φ∘r.  Throws if g does not stabilize the image
/// setwise or the restriction lands outside the source group.
Permutation restrictThroughEmbedding(const ActionEmbedding& e, const Permutation& g);

/// All group elements restricting to the permutation sigma of the subset
/// (sigma given as parallel vectors).  Empty list signals infeasibility;
/// nonempty results form a coset of the pointwise stabilizer of the subset.
std::vector<Permutation> extendPartialToGroupElement(const PermAction& action,
                                                     const std::vector<int>& subset,
                                                     const std::vector<int>& images);

/// Witness (φ, Φ) for isomorphic actions: Φ a point bijection conjugating the
/// element list of one group onto the other, φ the induced element pairing.
struct ActionIsomorphism {
  std::vector<int> pointMap;  // A point index -> B point index
  std::vector<int> groupMap;  // A element index -> B element index
};

std::optional<ActionIsomorphism> actionsIsomorphic(const PermAction& a, const PermAction& b);
std::vector<ActionIsomorphism> allActionIsomorphisms(const PermAction& a, const PermAction& b,
                                                     int limit = 1 << 20);
bool verifyActionIsomorphism(const PermAction& a, const PermAction& b,
                             const ActionIsomorphism& iso);

}  // namespace gga
