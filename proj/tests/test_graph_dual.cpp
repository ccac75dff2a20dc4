#include <algorithm>

#include "doctest.h"
#include "matmor/error.hpp"
#include "matmor/fixtures.hpp"
#include "matmor/graph.hpp"
#include "matmor/io.hpp"
#include "matmor/morphism.hpp"

using namespace matmor;

namespace {

RotationSystem from_neighbor_orders(
    const Graph& g, const std::vector<std::vector<int>>& orders) {
  // convenience for simple graphs: neighbors identify edges uniquely
  std::vector<std::vector<Dart>> at(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    for (int u : orders[v - 1]) {
      for (int e = 1; e <= g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if ((a == v && b == u)) at[v - 1].push_back({e, 0});
        if ((b == v && a == u)) at[v - 1].push_back({e, 1});
      }
    }
  }
  return RotationSystem(std::move(at));
}

}  // namespace

TEST_CASE("K4 on the sphere") {
  Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  RotationSystem rot = from_neighbor_orders(
      k4, {{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}});
  GeometricDual dual = geometric_dual(k4, rot);
  CHECK(dual.faces.size() == 4);
  CHECK(dual.euler_characteristic == 2);
  for (const auto& face : dual.faces) CHECK(face.size() == 3);
  CHECK(dual.dual.vertex_count() == 4);
  CHECK(dual.dual.edge_count() == 6);
}

TEST_CASE("loops on the sphere and the torus") {
  // one loop: only one cyclic order exists, and it traces two faces
  Graph loop(1, {{1, 1}});
  RotationSystem loop_rot({{Dart{1, 0}, Dart{1, 1}}});
  GeometricDual d1 = geometric_dual(loop, loop_rot);
  CHECK(d1.faces.size() == 2);
  CHECK(d1.euler_characteristic == 2);
  CHECK(d1.dual.vertex_count() == 2);  // dual of a loop is a bridge
  CHECK(d1.dual.edge(1).first != d1.dual.edge(1).second);

  // two interleaved loops give the one-face torus map
  Graph bouquet(1, {{1, 1}, {1, 1}});
  RotationSystem interleaved(
      {{Dart{1, 0}, Dart{2, 0}, Dart{1, 1}, Dart{2, 1}}});
  GeometricDual d2 = geometric_dual(bouquet, interleaved);
  CHECK(d2.faces.size() == 1);
  CHECK(d2.euler_characteristic == 0);
  CHECK(d2.dual.vertex_count() == 1);
  CHECK(d2.dual.edge(1).first == d2.dual.edge(1).second);
}

TEST_CASE("K7 triangulates the torus with Heawood dual") {
  Graph k7 = io::graph_from_json(fixtures::k7_graph());
  RotationSystem rot = io::rotation_from_json(fixtures::k7_rotation(), k7);
  GeometricDual dual = geometric_dual(k7, rot);

  CHECK(dual.faces.size() == 14);
  for (const auto& face : dual.faces) CHECK(face.size() == 3);
  CHECK(dual.euler_characteristic == 0);

  const Graph& heawood = dual.dual;
  CHECK(heawood.vertex_count() == 14);
  CHECK(heawood.edge_count() == 21);
  CHECK(heawood.is_bipartite());
  CHECK(heawood.girth() == 6);

  // edge bijection: identity indexing between primal and dual edges
  for (int e = 1; e <= 21; ++e) CHECK(dual.edge_bijection[e - 1] == e);
}

TEST_CASE("the dual bijection is a morphism of matroids") {
  // cocycle matroid of the primal -> cycle matroid of the dual
  Graph k7 = io::graph_from_json(fixtures::k7_graph());
  RotationSystem rot = io::rotation_from_json(fixtures::k7_rotation(), k7);
  GeometricDual dual = geometric_dual(k7, rot);
  Matroid source = Matroid::cycle_matroid(k7).dual();
  Matroid target = Matroid::cycle_matroid(dual.dual);
  CHECK(source.rank() == 15);
  CHECK(target.rank() == 13);
  CHECK(is_morphism(GroundMap::identity(21), source, target).ok);
}

TEST_CASE("malformed rotations are rejected") {
  Graph g(2, {{1, 2}});
  CHECK_THROWS_AS(
      (void)trace_faces(g, RotationSystem({{Dart{1, 0}}, {}})), Error);
  CHECK_THROWS_AS(
      (void)trace_faces(
          g, RotationSystem({{Dart{1, 0}, Dart{1, 0}}, {Dart{1, 1}}})),
      Error);
  // end listed at the wrong vertex
  CHECK_THROWS_AS(
      (void)trace_faces(g, RotationSystem({{Dart{1, 1}}, {Dart{1, 0}}})),
      Error);
}
