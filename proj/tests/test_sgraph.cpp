#include "doctest.h"
#include "gga/sgraph.hpp"
#include "helpers.hpp"

#include <random>
#include <set>

using namespace gga;

namespace {

SerreGraph loopGraph() {
  return SerreGraph::make({"v"}, {{"a", "v", "v", "a"}});
}

SerreGraph edgeGraph() {
  return SerreGraph::make({"u", "w"}, {{"a", "u", "w", "ar"}, {"ar", "w", "u", "a"}});
}

SerreGraph triangle() {
  std::vector<ArcDecl> decls;
  const char* vs[] = {"1", "2", "3"};
  for (int i = 0; i < 3; ++i) {
    std::string a = "e" + std::to_string(i), ar = a + "r";
    decls.push_back({a, vs[i], vs[(i + 1) % 3], ar});
    decls.push_back({ar, vs[(i + 1) % 3], vs[i], a});
  }
  return SerreGraph::make({"1", "2", "3"}, decls);
}

SerreGraph path3() {
  return SerreGraph::make({"1", "2", "3"}, {{"a", "1", "2", "ar"},
                                            {"ar", "2", "1", "a"},
                                            {"b", "2", "3", "br"},
                                            {"br", "3", "2", "b"}});
}

}  // namespace

TEST_CASE("validate flags reversal violations by arc") {
  CHECK(loopGraph().validate().ok);
  CHECK(edgeGraph().validate().ok);
  // a reversal that is not involutive is rejected at construction
  CHECK_THROWS_AS(SerreGraph::make({"u", "w"}, {{"a", "u", "w", "a"}}), Error);
}

TEST_CASE("star counts loops per arc") {
  SerreGraph g = loopGraph();
  CHECK(g.star(0) == std::vector<int>{0});
  CHECK(g.starInv(0) == std::vector<int>{0});
  SerreGraph e = edgeGraph();
  CHECK(e.star(e.vertexIndex("w")) == std::vector<int>{0});

  // non-self-reverse loop pair: both arcs appear in the star
  SerreGraph g2 = SerreGraph::make({"v"}, {{"a", "v", "v", "ar"}, {"ar", "v", "v", "a"}});
  CHECK(g2.star(0).size() == 2);
}

TEST_CASE("isTree") {
  CHECK(edgeGraph().isTree());
  CHECK_FALSE(triangle().isTree());
  CHECK_FALSE(loopGraph().isTree());
  CHECK(path3().isTree());
}

TEST_CASE("quotient by the trivial equivalence is an isomorphic copy") {
  SerreGraph g = triangle();
  auto res = quotient(g, GraphEquivalence::trivial(g));
  CHECK(res.graph.vertexCount() == g.vertexCount());
  CHECK(res.graph.arcCount() == g.arcCount());
  CHECK(isGraphMorphism(g, res.graph, res.projection));
  CHECK(graphsIsomorphic(g, res.graph));
}

TEST_CASE("quotient collapsing all vertices yields one vertex with loops") {
  SerreGraph g = edgeGraph();
  GraphEquivalence e = GraphEquivalence::fromVertexClasses(g, {0, 0});
  auto res = quotient(g, e);
  CHECK(res.graph.vertexCount() == 1);
  CHECK(res.graph.arcCount() == 1);  // both arcs merge into one loop class
  CHECK(res.graph.vertexId(0) == "[u]");
}

TEST_CASE("contract") {
  SerreGraph g = path3();
  CHECK(graphsIsomorphic(contract(g, {}), g));

  SerreGraph all = contract(g, {0, 1, 2, 3});
  CHECK(all.vertexCount() == 1);
  CHECK(all.arcCount() == 0);

  SerreGraph one = contract(g, {0, 1});  // contract the 1-2 edge pair
  CHECK(one.vertexCount() == 2);
  CHECK(one.arcCount() == 2);
  CHECK(one.isTree());

  CHECK_THROWS_AS(contract(g, {0}), Error);  // not reversal-closed
}

TEST_CASE("property: quotient projection is a graph morphism on random data") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 30; ++trial) {
    int nv = 2 + static_cast<int>(rng() % 4);
    std::vector<std::string> vids;
    for (int i = 0; i < nv; ++i) vids.push_back("v" + std::to_string(i));
    std::vector<ArcDecl> decls;
    int ne = 1 + static_cast<int>(rng() % 5);
    for (int e = 0; e < ne; ++e) {
      std::string a = "a" + std::to_string(e), ar = a + "r";
      std::string u = vids[rng() % nv], w = vids[rng() % nv];
      if (u == w && rng() % 2 == 0) {
        decls.push_back({a, u, u, a});  // self-reverse loop
      } else {
        decls.push_back({a, u, w, ar});
        decls.push_back({ar, w, u, a});
      }
    }
    SerreGraph g = SerreGraph::make(vids, decls);
    std::vector<int> cls(nv);
    int nc = 1 + static_cast<int>(rng() % nv);
    for (int i = 0; i < nv; ++i) cls[i] = static_cast<int>(rng() % nc);
    // normalize class ids to be dense
    std::map<int, int> dense;
    for (int& c : cls) {
      auto it = dense.find(c);
      if (it == dense.end()) it = dense.emplace(c, static_cast<int>(dense.size())).first;
      c = it->second;
    }
    GraphEquivalence e = GraphEquivalence::fromVertexClasses(g, cls);
    REQUIRE(e.validate(g).ok);
    auto res = quotient(g, e);
    CHECK(isGraphMorphism(g, res.graph, res.projection));
  }
}

TEST_CASE("property: graphs without self-reverse arcs pair into edges") {
  SerreGraph g = triangle();
  CHECK(g.arcCount() % 2 == 0);
  for (auto [a, r] : g.edges()) {
    CHECK(g.reverse(a) == r);
    CHECK(g.reverse(r) == a);
  }
}
