#include "doctest.h"
#include "gga/covering.hpp"
#include "gga/format.hpp"
#include "helpers.hpp"

#include <map>

using namespace gga;
using testutil::loadGga;

TEST_CASE("ex-c3: the covering tree closes on a single edge") {
  Gga g = loadGga("ex-c3-id.gga");
  AugmentedDigraph aug = augment(g);
  for (int r = 1; r <= 3; ++r) {
    CoveringTree t = buildStarCoveringTree(g, aug, "v", r);
    CHECK(t.verts.size() == 2);
    CHECK(t.arcs.size() == 2);
    CHECK(t.finite());
    CHECK(validateCoveringTree(t, g, aug).ok);
  }
}

TEST_CASE("ex-small: single edge tree") {
  Gga g = loadGga("ex-small.gga");
  AugmentedDigraph aug = augment(g);
  CoveringTree t = buildStarCoveringTree(g, aug, "v", 2);
  CHECK(t.verts.size() == 2);
  CHECK(t.finite());
  CHECK(validateCoveringTree(t, g, aug).ok);
}

TEST_CASE("bm-c3: the 3-regular ball") {
  Gga g = loadGga("bm-c3.bm");
  AugmentedDigraph aug = augment(g);
  CoveringTree t = buildStarCoveringTree(g, aug, "v", 2);
  CHECK(t.verts.size() == 10);  // 1 + 3 + 6
  CHECK_FALSE(t.finite());
  CHECK(validateCoveringTree(t, g, aug).ok);
  int interior = 0;
  for (const auto& v : t.verts) interior += v.interior ? 1 : 0;
  CHECK(interior == 4);

  // interior star labels: i(u,v)-many neighbours per augmented arc
  for (const auto& v : t.verts) {
    if (!v.interior) continue;
    std::map<int, int> counts;
    for (int a : t.star(t.vertexIndex(v.id))) ++counts[aug.rho[t.arcs[a].plusArc]];
    for (auto [base, count] : counts) CHECK(count == adhesionIndex(g, base));
  }
}

TEST_CASE("determinism and radius embedding by vertex id") {
  Gga g = loadGga("bm-s3.bm");
  AugmentedDigraph aug = augment(g);
  CoveringTree t1 = buildStarCoveringTree(g, aug, "v", 2);
  CoveringTree t2 = buildStarCoveringTree(g, aug, "v", 2);
  REQUIRE(t1.verts.size() == t2.verts.size());
  for (size_t i = 0; i < t1.verts.size(); ++i) CHECK(t1.verts[i].id == t2.verts[i].id);

  CoveringTree t3 = buildStarCoveringTree(g, aug, "v", 3);
  for (const auto& v : t1.verts) CHECK(t3.vertexIndex(v.id) >= 0);
}

TEST_CASE("coveringTreesIsomorphic") {
  Gga g = loadGga("bm-c3.bm");
  AugmentedDigraph aug = augment(g);
  CoveringTree t1 = buildStarCoveringTree(g, aug, "v", 2);
  CoveringTree t2 = buildStarCoveringTree(g, aug, "v", 2);
  auto iso = coveringTreesIsomorphic(t1, t2, aug);
  REQUIRE(iso.has_value());
  for (size_t v = 0; v < t1.verts.size(); ++v)
    CHECK(t1.verts[v].deltaVertex == t2.verts[iso->vertexMap[v]].deltaVertex);

  Gga box = loadGga("box-s3.box");
  AugmentedDigraph augBox = augment(box);
  CoveringTree left = buildStarCoveringTree(box, augBox, "L1", 2);
  CoveringTree right = buildStarCoveringTree(box, augBox, "R1", 2);
  CHECK_FALSE(coveringTreesIsomorphic(left, right, augBox).has_value());

  CHECK_THROWS_AS(coveringTreesIsomorphic(left, buildStarCoveringTree(box, augBox, "L1", 3),
                                          augBox),
                  Error);
}

TEST_CASE("validateCoveringTree flags mutations") {
  Gga g = loadGga("bm-c3.bm");
  AugmentedDigraph aug = augment(g);
  CoveringTree t = buildStarCoveringTree(g, aug, "v", 2);

  CoveringTree broken = t;
  broken.arcs[0].plusArc = (broken.arcs[0].plusArc + 1) % aug.plus.arcCount();
  Diagnostics d = validateCoveringTree(broken, g, aug);
  CHECK_FALSE(d.ok);

  CoveringTree dropped = t;
  // delete the last child edge: the parent's star bijection breaks
  dropped.arcs.pop_back();
  dropped.arcs.pop_back();
  dropped.verts.pop_back();
  Diagnostics d2 = validateCoveringTree(dropped, g, aug);
  CHECK_FALSE(d2.ok);
}

TEST_CASE("gog line: the 2-regular tree") {
  Gga g = loadGga("gog-c2c2.gog");
  AugmentedDigraph aug = augment(g);
  CoveringTree t = buildStarCoveringTree(g, aug, "u", 3);
  // the infinite line: the radius-3 ball has 2 vertices per level beyond the root
  CHECK(t.verts.size() == 7);
  CHECK(validateCoveringTree(t, g, aug).ok);
  for (const auto& v : t.verts)
    if (v.interior) CHECK(t.star(t.vertexIndex(v.id)).size() == 2);
}
