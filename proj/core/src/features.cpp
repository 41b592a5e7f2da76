#include "scramblegraph/features.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "scramblegraph/errors.hpp"

namespace scramblegraph {

using nlohmann::json;

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  // Clears bits 0..i.
  void clear_through(std::size_t i) {
    for (std::size_t w = 0; w < i / 64; ++w) words_[w] = 0;
    const std::size_t bit = i % 64;
    words_[i / 64] &= bit == 63 ? 0 : ~((std::uint64_t{2} << bit) - 1);
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int b = __builtin_ctzll(word);
        f(w * 64 + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class CliqueEnumerator {
 public:
  CliqueEnumerator(const UndirectedGraph& u, std::int64_t cap, std::string_view name)
      : n_(u.vertices.size()), cap_(cap), name_(name) {
    neighbours_.assign(n_, Bitset(n_));
    for (const auto& [a, b] : u.edges) {
      neighbours_[a].set(b);
      neighbours_[b].set(a);
    }
    result_.per_vertex.assign(n_, 0);
  }

  CliqueCounts run() {
    Bitset all(n_);
    for (std::size_t v = 0; v < n_; ++v) all.set(v);
    extend(all);
    return result_;
  }

 private:
  void extend(const Bitset& candidates) {
    candidates.for_each([&](std::size_t v) {
      clique_.push_back(v);
      record();
      Bitset next = candidates & neighbours_[v];
      next.clear_through(v);
      if (next.any()) extend(next);
      clique_.pop_back();
    });
  }

  void record() {
    if (++result_.total > cap_) {
      throw CliqueExplosionError("graph " + std::string(name_) + ": more than " + std::to_string(cap_) +
                                 " cliques");
    }
    for (const auto v : clique_) ++result_.per_vertex[v];
    result_.max_clique = std::max<std::int64_t>(result_.max_clique, static_cast<std::int64_t>(clique_.size()));
  }

  std::size_t n_;
  std::int64_t cap_;
  std::string_view name_;
  std::vector<Bitset> neighbours_;
  std::vector<std::size_t> clique_;
  CliqueCounts result_;
};

std::vector<VertexStats> collect_stats(const SegmentGraph& g, const CliqueCounts& cliques) {
  std::vector<VertexStats> stats(g.vertex_count());
  for (std::size_t i = 0; i < stats.size(); ++i) {
    stats[i].id = g.vertices()[i];
    stats[i].clique_count = cliques.per_vertex[i];
  }
  for (const auto& e : g.edges()) {
    ++stats[g.index_of(e.src)].valency;
    ++stats[g.index_of(e.dst)].valency;
  }
  return stats;
}

std::vector<std::int64_t> to_entries(const json& j) { return j.get<std::vector<std::int64_t>>(); }

}  // namespace

CliqueCounts clique_counts(const UndirectedGraph& u, std::int64_t cap, std::string_view graph_name) {
  return CliqueEnumerator(u, cap, graph_name).run();
}

std::vector<VertexStats> vertex_stats(const SegmentGraph& g, std::int64_t cap) {
  return collect_stats(g, clique_counts(to_undirected(g), cap, g.mic_contig_id()));
}

std::vector<VertexStats> vertex_order(std::vector<VertexStats> stats) {
  std::sort(stats.begin(), stats.end(), [](const VertexStats& a, const VertexStats& b) {
    if (a.valency != b.valency) return a.valency > b.valency;
    if (a.clique_count != b.clique_count) return a.clique_count > b.clique_count;
    return a.id < b.id;
  });
  return stats;
}

GlobalVector global_vector(const SegmentGraph& g, std::int64_t cap) {
  const auto cliques = clique_counts(to_undirected(g), cap, g.mic_contig_id());
  return {static_cast<std::int64_t>(g.vertex_count()), static_cast<std::int64_t>(g.edge_count()),
          cliques.max_clique};
}

FeatureVector graph_vector(const SegmentGraph& g, std::size_t d, std::int64_t cap) {
  if (g.vertex_count() > d) {
    throw DimensionError("graph " + g.mic_contig_id() + " has " + std::to_string(g.vertex_count()) +
                         " vertices, exceeding padding dimension " + std::to_string(d));
  }
  const auto cliques = clique_counts(to_undirected(g), cap, g.mic_contig_id());
  const auto ordered = vertex_order(collect_stats(g, cliques));

  FeatureVector fv;
  fv.source = g.mic_contig_id();
  fv.d = d;
  fv.entries.assign(2 * d + 3, 0);
  fv.entries[0] = static_cast<std::int64_t>(g.vertex_count());
  fv.entries[1] = static_cast<std::int64_t>(g.edge_count());
  fv.entries[2] = cliques.max_clique;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    fv.entries[3 + i] = ordered[i].valency;
    fv.entries[3 + d + i] = ordered[i].clique_count;
  }
  return fv;
}

PointCloud build_point_cloud(const std::vector<SegmentGraph>& graphs, FeatureMode mode, std::int64_t cap) {
  if (graphs.empty()) throw InputError("point cloud needs at least one graph");

  PointCloud cloud;
  cloud.mode = mode;
  if (mode == FeatureMode::kFull) {
    for (const auto& g : graphs) cloud.padding = std::max(cloud.padding, g.vertex_count());
    cloud.dimension = 2 * cloud.padding + 3;
  } else {
    cloud.dimension = 3;
  }

  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (const auto& g : graphs) {
    std::vector<std::int64_t> entries;
    if (mode == FeatureMode::kFull) {
      entries = graph_vector(g, cloud.padding, cap).entries;
    } else {
      const auto gl = global_vector(g, cap);
      entries = {gl.n_vertices, gl.n_edges, gl.max_clique};
    }
    auto [it, inserted] = index.emplace(entries, cloud.points.size());
    if (inserted) cloud.points.push_back({std::move(entries), {}});
    cloud.points[it->second].sources.push_back(g.mic_contig_id());
  }
  return cloud;
}

std::string point_cloud_csv(const PointCloud& cloud) {
  std::ostringstream out;
  out << "point,multiplicity,sources";
  for (std::size_t i = 0; i < cloud.dimension; ++i) out << ",x" << i;
  out << '\n';
  for (std::size_t p = 0; p < cloud.points.size(); ++p) {
    const auto& pt = cloud.points[p];
    out << p << ',' << pt.multiplicity() << ',';
    for (std::size_t s = 0; s < pt.sources.size(); ++s) out << (s ? ";" : "") << pt.sources[s];
    for (const auto x : pt.entries) out << ',' << x;
    out << '\n';
  }
  return out.str();
}

std::string point_cloud_json(const PointCloud& cloud) {
  json points = json::array();
  for (const auto& pt : cloud.points) {
    points.push_back({{"entries", pt.entries}, {"multiplicity", pt.multiplicity()}, {"sources", pt.sources}});
  }
  return json{{"mode", cloud.mode == FeatureMode::kFull ? "full" : "global_only"},
              {"padding", cloud.padding},
              {"dimension", cloud.dimension},
              {"points", points}}
             .dump(2) +
         "\n";
}

PointCloud point_cloud_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    PointCloud cloud;
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "full" && mode != "global_only") throw InputError("point cloud JSON: unknown mode " + mode);
    cloud.mode = mode == "full" ? FeatureMode::kFull : FeatureMode::kGlobalOnly;
    cloud.padding = j.at("padding").get<std::size_t>();
    cloud.dimension = j.at("dimension").get<std::size_t>();
    for (const auto& p : j.at("points")) {
      CloudPoint pt{to_entries(p.at("entries")), p.at("sources").get<std::vector<std::string>>()};
      if (pt.entries.size() != cloud.dimension) throw InputError("point cloud JSON: entry count != dimension");
      if (pt.sources.empty()) throw InputError("point cloud JSON: point without sources");
      cloud.points.push_back(std::move(pt));
    }
    return cloud;
  } catch (const json::exception& e) {
    throw InputError(std::string("point cloud JSON: ") + e.what());
  }
}

std::vector<std::vector<double>> coordinates(const PointCloud& cloud) {
  std::vector<std::vector<double>> out;
  out.reserve(cloud.points.size());
  for (const auto& pt : cloud.points) out.emplace_back(pt.entries.begin(), pt.entries.end());
  return out;
}

}  // namespace scramblegraph
