#pragma once

#include <utility>
#include <vector>

#include "matmor/subset.hpp"

namespace matmor {

// Multigraph with vertices 1..V and edges identified with 1..n.
// Loops and multi-edges allowed.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return v_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int i) const { return edges_.at(i - 1); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // |V| - #components of the spanning subgraph (V, S).
  int rank_of(Subset edge_set) const;
  int component_count(Subset edge_set) const;

  bool is_bipartite() const;
  // Length of a shortest cycle; 0 for forests. Loops count as 1-cycles,
  // parallel pairs as 2-cycles.
  int girth() const;

 private:
  int v_;
  std::vector<std::pair<int, int>> edges_;
};

// One side of an edge: end 0 sits at edge(i).first, end 1 at edge(i).second.
struct Dart {
  int edge;  // 1-based
  int end;   // 0 or 1
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Cyclic order of incident edge-ends around each vertex (combinatorial
// embedding in an orientable surface).
class RotationSystem {
 public:
  explicit RotationSystem(std::vector<std::vector<Dart>> at_vertex)
      : at_(std::move(at_vertex)) {}

  int vertex_count() const { return static_cast<int>(at_.size()); }
  const std::vector<Dart>& at(int vertex) const { return at_.at(vertex - 1); }

  // Throws Error("malformed-rotation") unless every edge-end of g appears
  // exactly once, at the vertex it is incident to.
  void validate_against(const Graph& g) const;

 private:
  std::vector<std::vector<Dart>> at_;
};

// Orbits of the face permutation (traverse the edge, then turn to the next
// dart in the rotation at the vertex reached).
std::vector<std::vector<Dart>> trace_faces(const Graph& g,
                                           const RotationSystem& rot);

struct GeometricDual {
  Graph dual;                           // one vertex per face, one edge per primal edge
  std::vector<int> edge_bijection;      // primal edge i -> dual edge (identity indexing)
  std::vector<std::vector<Dart>> faces; // faces of the primal embedding
  int euler_characteristic;             // V - E + F
};

GeometricDual geometric_dual(const Graph& g, const RotationSystem& rot);

}  // namespace matmor
