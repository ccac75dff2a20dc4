#include "matmor/fixtures.hpp"

#include <map>
#include <utility>
#include <vector>

#include "matmor/graph.hpp"
#include "matmor/io.hpp"
#include "matmor/polynomial.hpp"

namespace matmor::fixtures {

using nlohmann::json;

json fano_projection() {
  // Source: the 14 points of the affine space AG(4, 2) minus a line,
  // homogenized to columns (1, x1..x4) over GF(2). Removing the line
  // {0000, 0001} leaves the points with (x1, x2, x3) != 0; projecting to
  // (x1, x2, x3) is the two-to-one map onto the Fano plane.
  std::vector<std::vector<long>> matrix(5);
  std::vector<int> map;
  for (int x = 0; x < 16; ++x) {
    int x1 = (x >> 3) & 1, x2 = (x >> 2) & 1, x3 = (x >> 1) & 1, x4 = x & 1;
    if (x1 == 0 && x2 == 0 && x3 == 0) continue;
    matrix[0].push_back(1);
    matrix[1].push_back(x1);
    matrix[2].push_back(x2);
    matrix[3].push_back(x3);
    matrix[4].push_back(x4);
    map.push_back(x1 + 2 * x2 + 4 * x3);
  }
  // Fano plane: columns are the nonzero vectors of GF(2)^3; column j
  // carries the bits of j.
  std::vector<std::vector<long>> fano(3, std::vector<long>(7));
  for (int j = 1; j <= 7; ++j) {
    fano[0][j - 1] = j & 1;
    fano[1][j - 1] = (j >> 1) & 1;
    fano[2][j - 1] = (j >> 2) & 1;
  }
  return {{"map", map},
          {"source", {{"kind", "linear"}, {"p", 2}, {"matrix", matrix}}},
          {"target", {{"kind", "linear"}, {"p", 2}, {"matrix", fano}}}};
}

json graph_hom() {
  // Triangular prism with crossed spokes; vertex labels 1,2,3,1,2,3 give a
  // homomorphism onto the triangle, and every edge maps onto an edge.
  json source = {{"kind", "graph"},
                 {"vertices", 6},
                 {"edges",
                  {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4},
                   {2, 4}, {3, 5}, {1, 6}}}};
  json target = {{"kind", "graph"},
                 {"vertices", 3},
                 {"edges", {{1, 2}, {2, 3}, {3, 1}}}};
  return {{"map", {1, 2, 3, 1, 2, 3, 1, 2, 3}},
          {"source", source},
          {"target", target}};
}

namespace {

std::vector<std::pair<int, int>> k7_edges() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) edges.push_back({i, j});
  }
  return edges;
}

std::vector<std::vector<Dart>> k7_rotation_darts() {
  auto edges = k7_edges();
  std::map<std::pair<int, int>, int> index;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    index[edges[e]] = static_cast<int>(e) + 1;
  }
  // Minimal triangulation of the torus: at vertex v the neighbors appear
  // in the cyclic order v+1, v+3, v+2, v+6, v+4, v+5 (mod 7).
  std::vector<std::vector<Dart>> at;
  for (int v = 1; v <= 7; ++v) {
    std::vector<Dart> darts;
    for (int step : {1, 3, 2, 6, 4, 5}) {
      int u = (v + step - 1) % 7 + 1;
      int e = index.at({std::min(v, u), std::max(v, u)});
      darts.push_back(Dart{e, v < u ? 0 : 1});
    }
    at.push_back(std::move(darts));
  }
  return at;
}

}  // namespace

json k7_graph() {
  json edges = json::array();
  for (auto [a, b] : k7_edges()) edges.push_back({a, b});
  return {{"kind", "graph"}, {"vertices", 7}, {"edges", edges}};
}

json k7_rotation() {
  json rotations = json::array();
  for (const auto& darts : k7_rotation_darts()) {
    json list = json::array();
    for (const Dart& d : darts) list.push_back({d.edge, d.end});
    rotations.push_back(std::move(list));
  }
  return {{"vertices", 7}, {"rotations", rotations}};
}

json k7_torus() {
  Graph k7(7, k7_edges());
  RotationSystem rot(k7_rotation_darts());
  GeometricDual dual = geometric_dual(k7, rot);
  json dual_edges = json::array();
  for (int e = 1; e <= dual.dual.edge_count(); ++e) {
    auto [a, b] = dual.dual.edge(e);
    dual_edges.push_back({a, b});
  }
  std::vector<int> map;
  for (int e : dual.edge_bijection) map.push_back(e);
  return {{"map", map},
          {"source", {{"kind", "dual"}, {"of", k7_graph()}}},
          {"target",
           {{"kind", "graph"},
            {"vertices", dual.dual.vertex_count()},
            {"edges", dual_edges}}}};
}

json example56_setfunction() {
  // r = rk_M + rk_N on [3] with B(M) = {{1,2},{1,3}}, B(N) = {{1},{2}};
  // table in subset-bitmask order.
  const int table[8] = {0, 2, 2, 3, 1, 3, 2, 3};
  json values = json::array();
  for (int v : table) values.push_back(io::rational_to_json(Rat(v)));
  return {{"n", 3}, {"values", values}};
}

json example56_golden() {
  Polynomial limit(3);
  limit.add_term({0, 0, 0}, Rat(1));
  limit.add_term({1, 0, 0}, Rat(1));
  limit.add_term({0, 1, 0}, Rat(1));
  limit.add_term({0, 0, 1}, Rat(1));
  limit.add_term({1, 0, 1}, Rat(1));
  return {{"limit_scaling", {2, 2, 1}},
          {"limit", io::polynomial_to_json(limit)},
          {"witness_p", io::rational_to_json(Rat(1, 8))},
          {"provenance", "derived"}};
}

}  // namespace matmor::fixtures
