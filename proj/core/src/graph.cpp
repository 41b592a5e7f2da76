#include "scramblegraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "scramblegraph/errors.hpp"

namespace scramblegraph {

using nlohmann::json;

SegmentGraph::SegmentGraph(std::string mic_contig_id, std::vector<DirectedEdge> edges,
                           std::vector<std::string> isolated_vertices)
    : mic_contig_id_(std::move(mic_contig_id)),
      edges_(std::move(edges)),
      isolated_(std::move(isolated_vertices)) {
  std::sort(edges_.begin(), edges_.end(), [](const DirectedEdge& a, const DirectedEdge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.src == e.dst) throw InputError("graph " + mic_contig_id_ + ": self-loop on " + e.src);
    if (!e.label.any()) throw InputError("graph " + mic_contig_id_ + ": (0,0,0) edge " + e.src + " -> " + e.dst);
    if (i > 0 && edges_[i - 1].src == e.src && edges_[i - 1].dst == e.dst) {
      throw InputError("graph " + mic_contig_id_ + ": parallel edges " + e.src + " -> " + e.dst);
    }
    vertices_.push_back(e.src);
    vertices_.push_back(e.dst);
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  std::sort(isolated_.begin(), isolated_.end());
  if (std::adjacent_find(isolated_.begin(), isolated_.end()) != isolated_.end()) {
    throw InputError("graph " + mic_contig_id_ + ": duplicate isolated vertex");
  }
  for (const auto& v : isolated_) {
    if (std::binary_search(vertices_.begin(), vertices_.end(), v)) {
      throw InputError("graph " + mic_contig_id_ + ": vertex " + v + " is both isolated and incident to an edge");
    }
  }
}

std::size_t SegmentGraph::index_of(std::string_view id) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return vertices_.size();
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::vector<std::size_t>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::string_view edge_color(const RelationTriple& label) {
  static constexpr std::string_view kColors[8] = {"", "black", "cyan", "orange", "purple", "blue", "green", "red"};
  return kColors[label.code()];
}

SegmentGraph build_graph(const std::string& mic_contig_id, const std::vector<MacContigView>& views,
                         const RelationConfig& cfg) {
  std::vector<std::string> ids;
  for (const auto& v : views) ids.push_back(v.mac_contig_id());
  std::sort(ids.begin(), ids.end());
  if (const auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end()) {
    throw InputError("MIC contig " + mic_contig_id + ": duplicate MAC contig " + *dup);
  }

  std::vector<DirectedEdge> edges;
  std::vector<bool> incident(views.size(), false);
  for (std::size_t i = 0; i < views.size(); ++i) {
    for (std::size_t j = 0; j < views.size(); ++j) {
      if (i == j) continue;
      const auto label = relation_triple(views[i], views[j], cfg);
      if (!label.any()) continue;
      edges.push_back({views[i].mac_contig_id(), label, views[j].mac_contig_id()});
      incident[i] = incident[j] = true;
    }
  }
  std::vector<std::string> isolated;
  for (std::size_t i = 0; i < views.size(); ++i) {
    if (!incident[i]) isolated.push_back(views[i].mac_contig_id());
  }
  return SegmentGraph(mic_contig_id, std::move(edges), std::move(isolated));
}

UndirectedGraph to_undirected(const SegmentGraph& g) {
  UndirectedGraph u;
  u.vertices = g.vertices();
  for (const auto& e : g.edges()) {
    auto a = g.index_of(e.src);
    auto b = g.index_of(e.dst);
    if (a > b) std::swap(a, b);
    u.edges.emplace(a, b);
  }
  return u;
}

std::vector<SegmentGraph> connected_components(const SegmentGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    const auto a = find(g.index_of(e.src));
    const auto b = find(g.index_of(e.dst));
    // Smallest index becomes the root, so roots order components by smallest id.
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::map<std::size_t, std::vector<DirectedEdge>> by_root;
  for (const auto& e : g.edges()) by_root[find(g.index_of(e.src))].push_back(e);

  std::vector<SegmentGraph> out;
  for (auto& [root, edges] : by_root) out.emplace_back(g.mic_contig_id(), std::move(edges));
  return out;
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string label_text(const RelationTriple& t) {
  return "(" + std::to_string(t.overlap) + "," + std::to_string(t.containment) + "," +
         std::to_string(t.interleave) + ")";
}

json graph_json(const SegmentGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"src", e.src},
                     {"dst", e.dst},
                     {"label", {int(e.label.overlap), int(e.label.containment), int(e.label.interleave)}}});
  }
  return {{"mic", g.mic_contig_id()}, {"vertices", g.vertices()}, {"edges", edges}, {"isolated", g.isolated_vertices()}};
}

SegmentGraph graph_from(const json& j) {
  std::vector<DirectedEdge> edges;
  for (const auto& e : j.at("edges")) {
    const auto& l = e.at("label");
    if (!l.is_array() || l.size() != 3) throw InputError("graph JSON: label must have three entries");
    edges.push_back({e.at("src").get<std::string>(),
                     RelationTriple{l[0].get<int>() != 0, l[1].get<int>() != 0, l[2].get<int>() != 0},
                     e.at("dst").get<std::string>()});
  }
  SegmentGraph g(j.at("mic").get<std::string>(), std::move(edges),
                 j.at("isolated").get<std::vector<std::string>>());
  if (j.at("vertices").get<std::vector<std::string>>() != g.vertices()) {
    throw InputError("graph JSON " + g.mic_contig_id() + ": vertex list does not match edge endpoints");
  }
  return g;
}

}  // namespace

std::string export_dot(const SegmentGraph& g) {
  std::ostringstream out;
  out << "digraph " << dot_quote(g.mic_contig_id()) << " {\n";
  for (const auto& v : g.vertices()) out << "  " << dot_quote(v) << ";\n";
  for (const auto& v : g.isolated_vertices()) out << "  " << dot_quote(v) << " [style=dashed];\n";
  for (const auto& e : g.edges()) {
    out << "  " << dot_quote(e.src) << " -> " << dot_quote(e.dst) << " [color=" << edge_color(e.label)
        << ", label=\"" << label_text(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const SegmentGraph& g) { return graph_json(g).dump(2) + "\n"; }

std::string graphs_to_json(const std::vector<SegmentGraph>& graphs) {
  json all = json::array();
  for (const auto& g : graphs) all.push_back(graph_json(g));
  return all.dump(2) + "\n";
}

std::vector<SegmentGraph> graphs_from_json(std::string_view text) {
  json all;
  try {
    all = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  if (!all.is_array()) throw InputError("graph JSON: expected an array of graphs");
  std::vector<SegmentGraph> graphs;
  try {
    for (const auto& j : all) graphs.push_back(graph_from(j));
  } catch (const json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  return graphs;
}

}  // namespace scramblegraph
