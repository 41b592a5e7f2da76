#pragma once

// Test fixtures and brute-force oracles shared by the unit and acceptance
// suites. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scramblegraph/graph.hpp"

namespace scramblegraph::testing {

inline RelationTriple triple(int b1, int b2, int b3) { return {b1 != 0, b2 != 0, b3 != 0}; }

// The three-contig locus: purple 5027.0, black 21621.0, cyan 4739.0.
inline std::vector<MacContigView> triad_views() {
  return {MacContigView("5027.0", {{100, 200}, {600, 700}}), MacContigView("21621.0", {{300, 400}, {680, 800}}),
          MacContigView("4739.0", {{450, 500}})};
}

// Seven-vertex graph with valencies <6,5,4,4,3,3,3> and clique numbers
// <11,10,10,7,8,6,6>. v1-v2 is the only antiparallel pair; {v1,v2,v3,v5}
// is a K4. The undirected skeleton was found by exhaustive search over all
// graphs on 7 vertices and is the unique one matching both vectors.
inline SegmentGraph seven_vertex_graph() {
  const std::vector<std::pair<int, int>> undirected = {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3},
                                                       {1, 4}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {5, 6}};
  auto name = [](int i) { return "v" + std::to_string(i + 1); };
  std::vector<DirectedEdge> edges;
  for (const auto& [a, b] : undirected) edges.push_back({name(a), triple(0, 0, 1), name(b)});
  edges.push_back({name(1), triple(1, 0, 0), name(0)});
  edges.front().label = triple(1, 0, 0);
  return SegmentGraph("heptad", std::move(edges));
}

// Random labeled digraph on up to max_vertices vertices; vertices without
// edges are dropped by SegmentGraph itself.
inline SegmentGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, const std::string& id = "rnd",
                                 std::size_t min_vertices = 2) {
  std::uniform_int_distribution<std::size_t> size_dist(min_vertices, max_vertices);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> label(1, 7);
  while (true) {
    const std::size_t n = size_dist(rng);
    const double p = 0.1 + 0.6 * unit(rng);
    std::vector<DirectedEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && unit(rng) < p) {
          edges.push_back({"n" + std::to_string(i), RelationTriple::from_code(label(rng)), "n" + std::to_string(j)});
        }
      }
    }
    SegmentGraph g(id, std::move(edges));
    if (g.vertex_count() >= min_vertices) return g;
  }
}

// Same graph with vertex ids replaced through a random bijection.
inline SegmentGraph relabel(const SegmentGraph& g, std::mt19937_64& rng, const std::string& new_id = "relabelled") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) names.push_back("r" + std::to_string(1000 + i));
  std::shuffle(names.begin(), names.end(), rng);
  std::vector<DirectedEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({names[g.index_of(e.src)], e.label, names[g.index_of(e.dst)]});
  std::shuffle(edges.begin(), edges.end(), rng);
  return SegmentGraph(new_id, std::move(edges));
}

// Brute-force clique counts over all vertex subsets.
struct BruteCliques {
  std::vector<std::int64_t> per_vertex;
  std::int64_t max_clique = 0;
  std::int64_t total = 0;
};

inline BruteCliques brute_force_cliques(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : edges) adj[a][b] = adj[b][a] = true;
  BruteCliques out;
  out.per_vertex.assign(n, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool complete = true;
    for (std::size_t i = 0; i < n && complete; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < n && complete; ++j) {
        if ((mask >> j & 1) && !adj[i][j]) complete = false;
      }
    }
    if (!complete) continue;
    ++out.total;
    out.max_clique = std::max<std::int64_t>(out.max_clique, __builtin_popcountll(mask));
    for (std::size_t i = 0; i < n; ++i) out.per_vertex[i] += (mask >> i) & 1;
  }
  return out;
}

// Connected components of {d <= eps} by boolean transitive closure.
inline std::vector<std::vector<std::size_t>> closure_clusters(const std::vector<std::vector<double>>& pts, double eps) {
  const std::size_t n = pts.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      reach[i][j] = i == j || std::sqrt(s) <= eps;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    out.emplace_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) {
        out.back().push_back(j);
        seen[j] = true;
      }
    }
  }
  return out;
}

inline std::int64_t squared_distance(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace scramblegraph::testing
