#include "matmor/graph.hpp"

#include <array>
#include <deque>
#include <limits>
#include <string>

#include "matmor/error.hpp"

namespace matmor {

namespace {

// Small union-find over vertices; enough for ground sets within the
// enumeration bound.
struct UnionFind {
  std::array<int, 64> parent;

  explicit UnionFind(int n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : v_(vertex_count), edges_(std::move(edges)) {
  if (v_ < 0 || v_ > 63) {
    throw Error("out-of-range",
                "vertex count " + std::to_string(v_) + " unsupported");
  }
  for (const auto& [a, b] : edges_) {
    if (a < 1 || a > v_ || b < 1 || b > v_) {
      throw Error("out-of-range", "edge endpoint outside vertex range");
    }
  }
}

int Graph::rank_of(Subset edge_set) const {
  UnionFind uf(v_);
  int rank = 0;
  for (int i = 0; i < edge_count(); ++i) {
    if (!contains(edge_set, i + 1)) continue;
    if (uf.unite(edges_[i].first - 1, edges_[i].second - 1)) ++rank;
  }
  return rank;
}

int Graph::component_count(Subset edge_set) const {
  return v_ - rank_of(edge_set);
}

bool Graph::is_bipartite() const {
  std::vector<int> color(v_ + 1, -1);
  std::vector<std::vector<int>> adj(v_ + 1);
  for (const auto& [a, b] : edges_) {
    if (a == b) return false;  // loop
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int s = 1; s <= v_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : adj[v]) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int Graph::girth() const {
  int best = std::numeric_limits<int>::max();
  // adjacency with edge identities, so parallel edges are distinguished
  std::vector<std::vector<std::pair<int, int>>> adj(v_ + 1);
  for (int i = 0; i < edge_count(); ++i) {
    auto [a, b] = edges_[i];
    if (a == b) return 1;
    adj[a].push_back({b, i});
    adj[b].push_back({a, i});
  }
  for (int s = 1; s <= v_; ++s) {
    std::vector<int> dist(v_ + 1, -1), via_edge(v_ + 1, -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [u, e] : adj[v]) {
        if (e == via_edge[v]) continue;
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          via_edge[u] = e;
          queue.push_back(u);
        } else {
          best = std::min(best, dist[v] + dist[u] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

void RotationSystem::validate_against(const Graph& g) const {
  if (vertex_count() != g.vertex_count()) {
    throw Error("malformed-rotation",
                "rotation lists a different vertex count than the graph");
  }
  // every edge-end exactly once, based at the right vertex
  std::vector<std::array<int, 2>> seen(g.edge_count(), {0, 0});
  for (int v = 1; v <= g.vertex_count(); ++v) {
    for (const Dart& d : at(v)) {
      if (d.edge < 1 || d.edge > g.edge_count() || (d.end != 0 && d.end != 1)) {
        throw Error("malformed-rotation", "dart out of range");
      }
      auto [a, b] = g.edge(d.edge);
      int base = d.end == 0 ? a : b;
      if (base != v) {
        throw Error("malformed-rotation",
                    "edge " + std::to_string(d.edge) + " end " +
                        std::to_string(d.end) + " listed at vertex " +
                        std::to_string(v) + " but is incident to " +
                        std::to_string(base));
      }
      if (++seen[d.edge - 1][d.end] > 1) {
        throw Error("malformed-rotation",
                    "edge-end listed twice: edge " + std::to_string(d.edge));
      }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (seen[e][0] != 1 || seen[e][1] != 1) {
      throw Error("malformed-rotation",
                  "edge " + std::to_string(e + 1) + " has a missing end");
    }
  }
}

std::vector<std::vector<Dart>> trace_faces(const Graph& g,
                                           const RotationSystem& rot) {
  rot.validate_against(g);
  // successor in the rotation at the dart's base vertex
  auto key = [](const Dart& d) { return 2 * (d.edge - 1) + d.end; };
  std::vector<Dart> next(2 * g.edge_count(), Dart{0, 0});
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const auto& ds = rot.at(v);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      next[key(ds[i])] = ds[(i + 1) % ds.size()];
    }
  }
  auto alpha = [](const Dart& d) { return Dart{d.edge, 1 - d.end}; };

  std::vector<bool> visited(2 * g.edge_count(), false);
  std::vector<std::vector<Dart>> faces;
  for (int e = 1; e <= g.edge_count(); ++e) {
    for (int end = 0; end < 2; ++end) {
      Dart start{e, end};
      if (visited[key(start)]) continue;
      std::vector<Dart> face;
      Dart d = start;
      while (!visited[key(d)]) {
        visited[key(d)] = true;
        face.push_back(d);
        d = next[key(alpha(d))];  // cross the edge, then turn
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

GeometricDual geometric_dual(const Graph& g, const RotationSystem& rot) {
  auto faces = trace_faces(g, rot);
  std::vector<int> face_of(2 * g.edge_count(), 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (const Dart& d : faces[f]) {
      face_of[2 * (d.edge - 1) + d.end] = static_cast<int>(f) + 1;
    }
  }
  std::vector<std::pair<int, int>> dual_edges;
  dual_edges.reserve(g.edge_count());
  std::vector<int> bijection(g.edge_count());
  for (int e = 1; e <= g.edge_count(); ++e) {
    dual_edges.push_back({face_of[2 * (e - 1)], face_of[2 * (e - 1) + 1]});
    bijection[e - 1] = e;
  }
  int chi = g.vertex_count() - g.edge_count() + static_cast<int>(faces.size());
  return GeometricDual{Graph(static_cast<int>(faces.size()), dual_edges),
                       std::move(bijection), std::move(faces), chi};
}

}  // namespace matmor
