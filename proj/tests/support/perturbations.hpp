#pragma once

// Random single-edit perturbations of a graph, one generator per case of
// the distance-gap bounds. Each returns the edited graph or nullopt when the
// random base graph does not admit the edit.

#include <numeric>
#include <optional>
#include <random>

#include "fixtures.hpp"
#include "scramblegraph/features.hpp"

namespace scramblegraph::testing {

inline std::vector<DirectedEdge> edges_of(const SegmentGraph& g) { return g.edges(); }

inline bool has_edge(const SegmentGraph& g, const std::string& a, const std::string& b) {
  for (const auto& e : g.edges()) {
    if (e.src == a && e.dst == b) return true;
  }
  return false;
}

inline RelationTriple random_label(std::mt19937_64& rng) {
  return RelationTriple::from_code(std::uniform_int_distribution<int>(1, 7)(rng));
}

// (a) one new vertex joined by one edge to an existing vertex.
inline std::optional<SegmentGraph> add_pendant(const SegmentGraph& g, std::mt19937_64& rng) {
  if (g.vertex_count() == 0) return std::nullopt;
  const auto& v = g.vertices()[std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng)];
  auto edges = edges_of(g);
  if (rng() % 2) {
    edges.push_back({"zz_new", random_label(rng), v});
  } else {
    edges.push_back({v, random_label(rng), "zz_new"});
  }
  return SegmentGraph(g.mic_contig_id(), std::move(edges));
}

// (b) the reverse of an existing one-way edge, so U(G) and its cliques stay put.
inline std::optional<SegmentGraph> add_antiparallel(const SegmentGraph& g, std::mt19937_64& rng) {
  std::vector<DirectedEdge> one_way;
  for (const auto& e : g.edges()) {
    if (!has_edge(g, e.dst, e.src)) one_way.push_back(e);
  }
  if (one_way.empty()) return std::nullopt;
  const auto& e = one_way[std::uniform_int_distribution<std::size_t>(0, one_way.size() - 1)(rng)];
  auto edges = edges_of(g);
  edges.push_back({e.dst, random_label(rng), e.src});
  return SegmentGraph(g.mic_contig_id(), std::move(edges));
}

// (c) an edge between two existing vertices not adjacent in U(G); this adds
// at least the new 2-clique.
inline std::optional<SegmentGraph> add_clique_edge(const SegmentGraph& g, std::mt19937_64& rng) {
  std::vector<std::pair<std::string, std::string>> candidates;
  for (const auto& a : g.vertices()) {
    for (const auto& b : g.vertices()) {
      if (a != b && !has_edge(g, a, b) && !has_edge(g, b, a)) candidates.emplace_back(a, b);
    }
  }
  if (candidates.empty()) return std::nullopt;
  const auto& [a, b] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
  auto edges = edges_of(g);
  edges.push_back({a, random_label(rng), b});
  return SegmentGraph(g.mic_contig_id(), std::move(edges));
}

// (d) one edge u->v retargeted to u->v' (v' an existing vertex), accepted
// only when the clique structure of U survives: same number of cliques, same
// clique number and same summed per-vertex clique counts.
inline std::optional<SegmentGraph> retarget_edge(const SegmentGraph& g, std::mt19937_64& rng) {
  if (g.edge_count() == 0 || g.vertex_count() < 3) return std::nullopt;
  const auto edges = edges_of(g);
  const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
  const auto& e = edges[pick];
  const auto& target = g.vertices()[std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng)];
  if (target == e.src || target == e.dst || has_edge(g, e.src, target)) return std::nullopt;
  auto moved = edges;
  moved[pick].dst = target;
  SegmentGraph out(g.mic_contig_id(), std::move(moved));
  if (out.vertex_count() != g.vertex_count()) return std::nullopt;
  const auto before = clique_counts(to_undirected(g));
  const auto after = clique_counts(to_undirected(out));
  auto sum = [](const CliqueCounts& c) { return std::accumulate(c.per_vertex.begin(), c.per_vertex.end(), std::int64_t{0}); };
  if (before.total != after.total || before.max_clique != after.max_clique || sum(before) != sum(after)) {
    return std::nullopt;
  }
  return out;
}

inline std::int64_t vector_gap2(const SegmentGraph& a, const SegmentGraph& b) {
  const std::size_t d = std::max(a.vertex_count(), b.vertex_count());
  return squared_distance(graph_vector(a, d).entries, graph_vector(b, d).entries);
}

inline std::int64_t global_gap2(const SegmentGraph& a, const SegmentGraph& b) {
  const auto x = global_vector(a);
  const auto y = global_vector(b);
  return squared_distance({x.n_vertices, x.n_edges, x.max_clique}, {y.n_vertices, y.n_edges, y.max_clique});
}

}  // namespace scramblegraph::testing
