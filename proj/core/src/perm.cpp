#include "gga/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gga {

namespace {
constexpr int kElementCap = 200000;  // desk scale guard
}

PointSetPtr PointSet::make(std::string owner, std::vector<std::string> tokens) {
  auto ps = std::make_shared<PointSet>();
  ps->owner_ = std::move(owner);
  ps->tokens_ = std::move(tokens);
  if (ps->tokens_.empty()) throw Error("point set '" + ps->owner_ + "' is empty");
  std::set<std::string> seen;
  for (const auto& t : ps->tokens_) {
    if (t.empty()) throw Error("empty point token in '" + ps->owner_ + "'");
    if (!seen.insert(t).second)
      throw Error("duplicate point token '" + t + "' in '" + ps->owner_ + "'");
  }
  return ps;
}

int PointSet::indexOf(const std::string& token) const {
  for (int i = 0; i < size(); ++i)
    if (tokens_[i] == token) return i;
  return -1;
}

bool PointSet::sameAs(const PointSet& other) const {
  if (this == &other) return true;
  return owner_ == other.owner_ && tokens_ == other.tokens_;
}

Permutation::Permutation(PointSetPtr domain, std::vector<int> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  const int n = domain_->size();
  if (static_cast<int>(images_.size()) != n)
    throw Error("permutation image vector has wrong length");
  std::vector<char> hit(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || hit[v]) throw Error("permutation images are not a bijection");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(PointSetPtr domain) {
  std::vector<int> img(domain->size());
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(domain), std::move(img));
}

Permutation Permutation::fromCycles(PointSetPtr domain, const std::string& text) {
  std::vector<int> img(domain->size());
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  bool sawCycle = false;
  std::vector<char> moved(domain->size(), 0);
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(') throw Error("bad cycle notation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cyc;
    std::string tok;
    auto flush = [&]() {
      if (tok.empty()) return;
      int idx = domain->indexOf(tok);
      if (idx < 0) throw Error("unknown point '" + tok + "' in permutation");
      if (moved[idx]) throw Error("point '" + tok + "' repeated in permutation");
      moved[idx] = 1;
      cyc.push_back(idx);
      tok.clear();
    };
    bool closed = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == ')') { flush(); closed = true; ++i; break; }
      if (std::isspace(static_cast<unsigned char>(c))) { flush(); continue; }
      if (c == '(') throw Error("bad cycle notation: nested '(' in \"" + text + "\"");
      tok.push_back(c);
    }
    if (!closed) throw Error("bad cycle notation: unclosed '(' in \"" + text + "\"");
    sawCycle = true;
    for (size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!sawCycle) throw Error("empty permutation text; identity is written ()");
  return Permutation(std::move(domain), std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (!domain_->sameAs(*other.domain_))
    throw Error("permutation domain mismatch in compose");
  std::vector<int> img(images_.size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = images_[other.images_[i]];
  return Permutation(domain_, std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<int>(i);
  return Permutation(domain_, std::move(img));
}

bool Permutation::isIdentity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::order() const {
  int n = size();
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do { seen[j] = 1; j = images_[j]; ++len; } while (j != i);
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

int Permutation::sign() const {
  int n = size();
  std::vector<char> seen(n, 0);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do { seen[j] = 1; j = images_[j]; ++len; } while (j != i);
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Permutation::cycleString() const {
  int n = size();
  std::vector<char> seen(n, 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || images_[i] == i) { seen[i] = 1; continue; }
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << domain_->token(j);
      first = false;
      seen[j] = 1;
      j = images_[j];
    } while (j != i);
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

PermAction PermAction::make(PointSetPtr points, std::vector<Permutation> generators) {
  PermAction a;
  a.points_ = std::move(points);
  for (const auto& g : generators)
    if (!g.domain()->sameAs(*a.points_))
      throw Error("generator domain does not match the action's point set");
  a.generators_ = std::move(generators);

  // Canonical enumeration: BFS layers over generator words, each layer sorted
  // by image vector before being appended.
  std::set<std::vector<int>> seen;
  std::vector<Permutation> layer = {Permutation::identity(a.points_)};
  seen.insert(layer[0].images());
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    for (auto& p : layer) a.elements_.push_back(p);
    if (static_cast<int>(a.elements_.size()) > kElementCap)
      throw Error("permutation group exceeds the desk-scale element cap");
    std::vector<Permutation> next;
    for (const auto& w : layer)
      for (const auto& g : a.generators_) {
        Permutation c = w.compose(g);
        if (seen.insert(c.images()).second) next.push_back(std::move(c));
      }
    layer = std::move(next);
  }
  return a;
}

PermAction PermAction::trivial(PointSetPtr points) {
  return make(std::move(points), {});
}

int PermAction::elementIndex(const Permutation& p) const {
  if (!p.domain()->sameAs(*points_)) return -1;
  for (int i = 0; i < order(); ++i)
    if (elements_[i] == p) return i;
  return -1;
}

std::vector<std::vector<int>> PermAction::orbits() const {
  int n = points_->size();
  std::vector<char> done(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::vector<int> orbit = {s};
    done[s] = 1;
    for (size_t q = 0; q < orbit.size(); ++q)
      for (const auto& g : generators_) {
        int im = g(orbit[q]);
        if (!done[im]) { done[im] = 1; orbit.push_back(im); }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<int>> PermAction::orbitOfSet(const std::vector<int>& set) const {
  for (int p : set)
    if (p < 0 || p >= points_->size()) throw Error("orbitOfSet: point outside the action's set");
  std::vector<int> start = set;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  if (static_cast<int>(start.size()) != static_cast<int>(set.size()))
    throw Error("orbitOfSet: argument is not a subset (duplicates)");
  std::vector<std::vector<int>> out = {start};
  std::set<std::vector<int>> seen = {start};
  for (size_t q = 0; q < out.size(); ++q) {
    std::vector<int> cur = out[q];
    for (const auto& g : generators_) {
      std::vector<int> im;
      im.reserve(cur.size());
      for (int p : cur) im.push_back(g(p));
      std::sort(im.begin(), im.end());
      if (seen.insert(im).second) out.push_back(std::move(im));
    }
  }
  return out;
}

PermAction PermAction::setwiseStabilizer(const std::vector<int>& set) const {
  std::vector<int> s = set;
  std::sort(s.begin(), s.end());
  std::vector<Permutation> kept;
  for (const auto& g : elements_) {
    std::vector<int> im;
    im.reserve(s.size());
    for (int p : s) im.push_back(g(p));
    std::sort(im.begin(), im.end());
    if (im == s) kept.push_back(g);
  }
  return make(points_, std::move(kept));
}

PermAction PermAction::pointwiseStabilizer(const std::vector<int>& set) const {
  std::vector<Permutation> kept;
  for (const auto& g : elements_) {
    bool fixes = true;
    for (int p : set)
      if (g(p) != p) { fixes = false; break; }
    if (fixes) kept.push_back(g);
  }
  return make(points_, std::move(kept));
}

PermAction PermAction::inducedOnSubset(const std::vector<int>& set) const {
  std::vector<int> s = set;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int p : s)
    if (p < 0 || p >= points_->size()) throw Error("inducedOnSubset: point outside the set");
  std::vector<std::string> tokens;
  tokens.reserve(s.size());
  for (int p : s) tokens.push_back(points_->token(p));
  PointSetPtr sub = PointSet::make(points_->owner(), std::move(tokens));
  std::vector<int> pos(points_->size(), -1);
  for (size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);

  PermAction stab = setwiseStabilizer(s);
  std::vector<Permutation> restricted;
  std::set<std::vector<int>> seen;
  for (const auto& g : stab.elements()) {
    std::vector<int> img(s.size());
    for (size_t i = 0; i < s.size(); ++i) img[i] = pos[g(s[i])];
    if (seen.insert(img).second) restricted.emplace_back(sub, std::move(img));
  }
  return make(sub, std::move(restricted));
}

std::vector<Permutation> PermAction::elementsRestrictingTo(const std::vector<int>& domainPts,
                                                           const std::vector<int>& targetPts) const {
  if (domainPts.size() != targetPts.size())
    throw Error("elementsRestrictingTo: length mismatch");
  std::vector<Permutation> out;
  for (const auto& g : elements_) {
    bool ok = true;
    for (size_t i = 0; i < domainPts.size(); ++i)
      if (g(domainPts[i]) != targetPts[i]) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return out;
}

bool PermAction::sameActionObject(const PermAction& other) const {
  if (!points_->sameAs(*other.points_)) return false;
  if (order() != other.order()) return false;
  for (int i = 0; i < order(); ++i)
    if (!(elements_[i] == other.elements_[i])) return false;
  return true;
}

std::vector<int> ActionEmbedding::image() const {
  std::vector<int> im = pointMap;
  std::sort(im.begin(), im.end());
  return im;
}

EmbeddingCheck isEmbeddingOfActions(const ActionEmbedding& e) {
  EmbeddingCheck res;
  const int ny = e.source.points()->size();
  if (static_cast<int>(e.pointMap.size()) != ny) {
    res.witness = "point map has wrong length";
    return res;
  }
  std::set<int> imageSet(e.pointMap.begin(), e.pointMap.end());
  if (static_cast<int>(imageSet.size()) != ny) {
    res.witness = "point map is not injective";
    return res;
  }

  // each h lifts to some g agreeing with Φ∘h∘Φ⁻¹ on the image
  for (const auto& h : e.source.elements()) {
    std::vector<int> dom, tgt;
    dom.reserve(ny);
    tgt.reserve(ny);
    for (int y = 0; y < ny; ++y) {
      dom.push_back(e.pointMap[y]);
      tgt.push_back(e.pointMap[h(y)]);
    }
    if (e.target.elementsRestrictingTo(dom, tgt).empty()) {
      res.witness = "source element " + h.cycleString() + " has no lift";
      return res;
    }
  }

  // each setwise stabilizer of the image restricts to a source element
  std::vector<int> image(e.pointMap);
  PermAction stab = e.target.setwiseStabilizer(image);
  std::vector<int> pre(e.target.points()->size(), -1);
  for (int y = 0; y < ny; ++y) pre[e.pointMap[y]] = y;
  for (const auto& g : stab.elements()) {
    std::vector<int> img(ny);
    for (int y = 0; y < ny; ++y) img[y] = pre[g(e.pointMap[y])];
    Permutation r(e.source.points(), img);
    if (!e.source.contains(r)) {
      res.witness = "stabilizing element " + g.cycleString() + " does not restrict into the source group";
      return res;
    }
  }
  res.ok = true;
  return res;
}

Permutation restrictThroughEmbedding(const ActionEmbedding& e, const Permutation& g) {
  if (!e.target.contains(g))
    throw Error("restrictThroughEmbedding: element is not in the target group");
  const int ny = e.source.points()->size();
  std::vector<int> pre(e.target.points()->size(), -1);
  for (int y = 0; y < ny; ++y) pre[e.pointMap[y]] = y;
  std::vector<int> img(ny);
  for (int y = 0; y < ny; ++y) {
    int t = g(e.pointMap[y]);
    if (pre[t] < 0)
      throw Error("restrictThroughEmbedding: element does not stabilize the image setwise");
    img[y] = pre[t];
  }
  Permutation r(e.source.points(), std::move(img));
  if (!e.source.contains(r))
    throw Error("restrictThroughEmbedding: restriction is not in the source group");
  return r;
}

std::vector<Permutation> extendPartialToGroupElement(const PermAction& action,
                                                     const std::vector<int>& subset,
                                                     const std::vector<int>& images) {
  if (subset.size() != images.size())
    throw Error("extendPartialToGroupElement: length mismatch");
  std::vector<int> a = subset, b = images;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error("extendPartialToGroupElement: images are not a permutation of the subset");
  return action.elementsRestrictingTo(subset, images);
}

namespace {

// Backtracking over point bijections Φ with Φ·A·Φ⁻¹ = B as element sets.
struct IsoSearch {
  const PermAction& A;
  const PermAction& B;
  int n;
  std::vector<int> phi;      // A point -> B point, -1 unset
  std::vector<char> used;    // B points already taken
  std::vector<ActionIsomorphism> found;
  int limit;

  IsoSearch(const PermAction& a, const PermAction& b, int lim)
      : A(a), B(b), n(a.points()->size()), phi(n, -1), used(n, 0), limit(lim) {}

  bool compatible() const {
    // every A element must still possibly conjugate into B on the assigned part
    for (const auto& g : A.elements()) {
      bool any = false;
      for (const auto& h : B.elements()) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
          if (phi[x] < 0) continue;
          int gx = g(x);
          if (phi[gx] < 0) continue;
          if (h(phi[x]) != phi[gx]) ok = false;
        }
        if (ok) { any = true; break; }
      }
      if (!any) return false;
    }
    return true;
  }

  bool finish(ActionIsomorphism& iso) const {
    iso.pointMap = phi;
    iso.groupMap.assign(A.order(), -1);
    for (int gi = 0; gi < A.order(); ++gi) {
      const auto& g = A.elements()[gi];
      std::vector<int> img(n);
      for (int x = 0; x < n; ++x) img[phi[x]] = phi[g(x)];
      Permutation conj(B.points(), std::move(img));
      int bi = B.elementIndex(conj);
      if (bi < 0) return false;
      iso.groupMap[gi] = bi;
    }
    // injective by construction; equal orders make it onto
    std::set<int> hit(iso.groupMap.begin(), iso.groupMap.end());
    return static_cast<int>(hit.size()) == B.order();
  }

  bool run(int x, bool all) {
    if (x == n) {
      ActionIsomorphism iso;
      if (finish(iso)) {
        found.push_back(std::move(iso));
        if (!all || static_cast<int>(found.size()) >= limit) return true;
      }
      return false;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      phi[x] = y;
      used[y] = 1;
      if (compatible() && run(x + 1, all)) return true;
      phi[x] = -1;
      used[y] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<ActionIsomorphism> actionsIsomorphic(const PermAction& a, const PermAction& b) {
  if (a.points()->size() != b.points()->size() || a.order() != b.order()) return std::nullopt;
  IsoSearch s(a, b, 1);
  s.run(0, false);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

std::vector<ActionIsomorphism> allActionIsomorphisms(const PermAction& a, const PermAction& b,
                                                     int limit) {
  if (a.points()->size() != b.points()->size() || a.order() != b.order()) return {};
  IsoSearch s(a, b, limit);
  s.run(0, true);
  return s.found;
}

bool verifyActionIsomorphism(const PermAction& a, const PermAction& b,
                             const ActionIsomorphism& iso) {
  int n = a.points()->size();
  if (static_cast<int>(iso.pointMap.size()) != n) return false;
  if (static_cast<int>(iso.groupMap.size()) != a.order()) return false;
  if (a.order() != b.order()) return false;
  std::set<int> pts(iso.pointMap.begin(), iso.pointMap.end());
  if (static_cast<int>(pts.size()) != n) return false;
  std::set<int> els(iso.groupMap.begin(), iso.groupMap.end());
  if (static_cast<int>(els.size()) != a.order()) return false;
  // commuting square φ(h)(Φ(y)) = Φ(h(y))
  for (int gi = 0; gi < a.order(); ++gi) {
    const auto& g = a.elements()[gi];
    const auto& h = b.elements()[iso.groupMap[gi]];
    for (int y = 0; y < n; ++y)
      if (h(iso.pointMap[y]) != iso.pointMap[g(y)]) return false;
  }
  return true;
}

}  // namespace gga
