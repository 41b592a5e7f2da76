#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scramblegraph/relations.hpp"

namespace scramblegraph {

struct DirectedEdge {
  std::string src;
  RelationTriple label;
  std::string dst;

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Labeled directed graph of one MIC contig. Vertices are the MAC contigs
// with at least one incident edge; the remaining MAC contigs of the locus
// are kept in isolated_vertices. All lists are sorted.
class SegmentGraph {
 public:
  SegmentGraph() = default;

  // Validates: no self-loops, no (0,0,0) labels, at most one edge per
  // ordered pair, isolated vertices disjoint from edge endpoints.
  // Throws InputError otherwise.
  SegmentGraph(std::string mic_contig_id, std::vector<DirectedEdge> edges,
               std::vector<std::string> isolated_vertices = {});

  const std::string& mic_contig_id() const { return mic_contig_id_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  const std::vector<std::string>& isolated_vertices() const { return isolated_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  // Position of `id` in vertices(), or vertex_count() when absent.
  std::size_t index_of(std::string_view id) const;

  friend bool operator==(const SegmentGraph&, const SegmentGraph&) = default;

 private:
  std::string mic_contig_id_;
  std::vector<std::string> vertices_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::string> isolated_;
};

// Simple undirected graph; edges hold index pairs (i < j) into vertices.
struct UndirectedGraph {
  std::vector<std::string> vertices;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> adjacency() const;
};

// red=(1,1,1) green=(1,1,0) blue=(1,0,1) orange=(0,1,1) purple=(1,0,0)
// cyan=(0,1,0) black=(0,0,1). Empty for (0,0,0).
std::string_view edge_color(const RelationTriple& label);

// Throws InputError on duplicate MAC ids.
SegmentGraph build_graph(const std::string& mic_contig_id, const std::vector<MacContigView>& views,
                         const RelationConfig& cfg);

UndirectedGraph to_undirected(const SegmentGraph& g);

// Components of U(G) as subgraphs, ordered by their smallest vertex id.
std::vector<SegmentGraph> connected_components(const SegmentGraph& g);

std::string export_dot(const SegmentGraph& g);

// {"mic", "vertices", "edges":[{"src","dst","label":[b1,b2,b3]}], "isolated"}
std::string graph_to_json(const SegmentGraph& g);
// Array of graph objects, one per line group; inverse of graphs_from_json.
std::string graphs_to_json(const std::vector<SegmentGraph>& graphs);
std::vector<SegmentGraph> graphs_from_json(std::string_view text);

struct CanonicalCode {
  std::string code;
  bool exact = false;  // false: invariant hash only (equal codes necessary, not sufficient)

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// Color- and direction-preserving isomorphism class code. Exact for graphs
// with at most max_exact vertices.
CanonicalCode canonical_code(const SegmentGraph& g, std::size_t max_exact = 12);

}  // namespace scramblegraph
