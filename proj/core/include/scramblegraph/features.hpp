#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scramblegraph/graph.hpp"

namespace scramblegraph {

inline constexpr std::int64_t kDefaultCliqueCap = 10'000'000;

struct GlobalVector {
  std::int64_t n_vertices = 0;
  std::int64_t n_edges = 0;
  std::int64_t max_clique = 0;

  friend bool operator==(const GlobalVector&, const GlobalVector&) = default;
};

struct VertexStats {
  std::string id;
  std::int64_t valency = 0;       // in + out degree; antiparallel edges count twice
  std::int64_t clique_count = 0;  // complete subgraphs of U(G) containing the vertex, all sizes

  friend bool operator==(const VertexStats&, const VertexStats&) = default;
};

struct CliqueCounts {
  std::vector<std::int64_t> per_vertex;  // indexed like UndirectedGraph::vertices
  std::int64_t max_clique = 0;
  std::int64_t total = 0;
};

// Counts every vertex subset that induces a complete subgraph, singletons
// and edges included. Each clique is generated once by extending in
// ascending vertex order. Throws CliqueExplosionError (naming `graph_name`)
// once more than `cap` cliques have been generated.
CliqueCounts clique_counts(const UndirectedGraph& u, std::int64_t cap = kDefaultCliqueCap,
                           std::string_view graph_name = {});

// Per-vertex stats in the order of g.vertices().
std::vector<VertexStats> vertex_stats(const SegmentGraph& g, std::int64_t cap = kDefaultCliqueCap);

// Valency descending, then clique count descending, then id ascending.
std::vector<VertexStats> vertex_order(std::vector<VertexStats> stats);

GlobalVector global_vector(const SegmentGraph& g, std::int64_t cap = kDefaultCliqueCap);

// <|V|, |E|, CN, valencies..., 0..., clique counts..., 0...>, length 2d+3.
struct FeatureVector {
  std::vector<std::int64_t> entries;
  std::string source;
  std::size_t d = 0;
};

// Throws DimensionError if |V(G)| > d.
FeatureVector graph_vector(const SegmentGraph& g, std::size_t d, std::int64_t cap = kDefaultCliqueCap);

enum class FeatureMode { kFull, kGlobalOnly };

struct CloudPoint {
  std::vector<std::int64_t> entries;
  std::vector<std::string> sources;  // contributing MIC contigs, input order

  std::size_t multiplicity() const { return sources.size(); }
  friend bool operator==(const CloudPoint&, const CloudPoint&) = default;
};

// Deduplicated feature vectors. Points keep first-occurrence order.
struct PointCloud {
  FeatureMode mode = FeatureMode::kFull;
  std::size_t padding = 0;  // d; 0 in global-only mode
  std::size_t dimension = 0;
  std::vector<CloudPoint> points;

  std::size_t size() const { return points.size(); }
  friend bool operator==(const PointCloud&, const PointCloud&) = default;
};

// d = max |V(G)| over the input. Throws InputError on empty input.
PointCloud build_point_cloud(const std::vector<SegmentGraph>& graphs, FeatureMode mode,
                             std::int64_t cap = kDefaultCliqueCap);

// Header row then one row per point: index, multiplicity, sources (';'-joined), x0..x{n-1}.
std::string point_cloud_csv(const PointCloud& cloud);
std::string point_cloud_json(const PointCloud& cloud);
PointCloud point_cloud_from_json(std::string_view text);

// Coordinates as doubles, one row per point.
std::vector<std::vector<double>> coordinates(const PointCloud& cloud);

}  // namespace scramblegraph
