#include "scramblegraph/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "scramblegraph/errors.hpp"
#include "scramblegraph/format.hpp"
#include "scramblegraph/union_find.hpp"

namespace scramblegraph {

using nlohmann::json;

DistanceMatrix DistanceMatrix::euclidean(const std::vector<std::vector<double>>& points) {
  DistanceMatrix d(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].size() != points[j].size()) throw InputError("points of different dimension");
      double sum = 0.0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        const double diff = points[i][k] - points[j][k];
        sum += diff * diff;
      }
      d.set(i, j, std::sqrt(sum));
    }
  }
  return d;
}

DistanceMatrix DistanceMatrix::euclidean(const PointCloud& cloud) { return euclidean(coordinates(cloud)); }

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  DistanceMatrix d(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InputError("distance matrix is not square");
    std::copy(rows[i].begin(), rows[i].end(), d.data_.begin() + static_cast<std::ptrdiff_t>(i * d.n_));
  }
  return d;
}

void DistanceMatrix::validate(double tol) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) throw InputError("distance matrix has a nonzero diagonal entry");
    for (std::size_t j = 0; j < n_; ++j) {
      const double a = (*this)(i, j);
      const double b = (*this)(j, i);
      if (!(a >= 0.0) || !std::isfinite(a)) throw InputError("distance matrix has a negative or non-finite entry");
      if (std::abs(a - b) > tol * std::max({1.0, a, b})) throw InputError("distance matrix is not symmetric");
    }
  }
}

Filtration::Filtration(std::vector<double> eps_values) : values_(std::move(eps_values)) {
  if (values_.empty() || values_.front() != 0.0) throw InputError("filtration must start at 0");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i] > values_[i - 1])) throw InputError("filtration values must strictly increase");
  }
}

Filtration Filtration::uniform(double step, double max_height) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InputError("filtration step must be positive");
  std::vector<double> values{0.0};
  for (std::size_t k = 1; values.back() < max_height; ++k) values.push_back(static_cast<double>(k) * step);
  return Filtration(std::move(values));
}

std::optional<std::size_t> Filtration::level_of(double height) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), height);
  if (it == values_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

MergeTrace single_linkage(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - (n > 0)) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(dist(i, j), i, j);
  }
  std::sort(pairs.begin(), pairs.end());

  MergeTrace trace;
  trace.n_points = n;
  UnionFind uf(n);
  for (const auto& [h, i, j] : pairs) {
    const std::size_t a = uf.find(i);
    const std::size_t b = uf.find(j);
    if (a == b) continue;
    uf.unite(a, b);
    trace.merges.push_back({h, std::min(a, b), std::max(a, b)});
    if (trace.merges.size() + 1 == n) break;
  }
  return trace;
}

UndirectedGraph neighborhood_graph(const DistanceMatrix& dist, double eps) {
  UndirectedGraph g;
  for (std::size_t i = 0; i < dist.size(); ++i) g.vertices.push_back(std::to_string(i));
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = i + 1; j < dist.size(); ++j) {
      if (dist(i, j) <= eps) g.edges.emplace(i, j);
    }
  }
  return g;
}

namespace {

Clusters collect(UnionFind& uf) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < uf.size(); ++i) groups[uf.find(i)].push_back(i);
  Clusters out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace

Clusters clusters_at(const DistanceMatrix& dist, double eps) {
  UnionFind uf(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = i + 1; j < dist.size(); ++j) {
      if (dist(i, j) <= eps) uf.unite(i, j);
    }
  }
  return collect(uf);
}

Clusters cut(const MergeTrace& trace, double eps) {
  UnionFind uf(trace.n_points);
  for (const auto& m : trace.merges) {
    if (m.height <= eps) uf.unite(m.a, m.b);
  }
  return collect(uf);
}

double Bar::length() const {
  return death ? *death - birth : std::numeric_limits<double>::infinity();
}

std::size_t Barcode::components_at(double eps) const {
  return static_cast<std::size_t>(
      std::count_if(bars.begin(), bars.end(), [eps](const Bar& b) { return !b.death || *b.death > eps; }));
}

Barcode barcode(const MergeTrace& trace, const Filtration* schedule) {
  Barcode bc;
  bc.bars.resize(trace.n_points);
  for (std::size_t i = 0; i < trace.n_points; ++i) bc.bars[i].representative = i;
  for (const auto& m : trace.merges) {
    double death = m.height;
    if (schedule) {
      const auto level = schedule->level_of(m.height);
      if (!level) throw IncompleteScheduleError("merge at " + format_real(m.height) + " lies past the last filtration level");
      death = schedule->values()[*level];
    }
    bc.bars[m.b].death = death;
  }
  std::stable_sort(bc.bars.begin(), bc.bars.end(),
                   [](const Bar& x, const Bar& y) { return x.length() < y.length(); });
  return bc;
}

Dendrogram dendrogram(const MergeTrace& trace, const Filtration& schedule) {
  const std::size_t n = trace.n_points;
  Dendrogram tree;
  if (n == 0) throw InputError("dendrogram of an empty point set");

  // Merges grouped by the level that first contains them.
  std::map<std::size_t, std::vector<Merge>> by_level;
  for (const auto& m : trace.merges) {
    const auto level = schedule.level_of(m.height);
    if (!level) {
      throw IncompleteScheduleError("filtration ends at " + format_real(schedule.values().back()) +
                                    " before the merge at " + format_real(m.height));
    }
    by_level[*level].push_back(m);
  }
  if (trace.merges.size() + 1 != n) throw IncompleteScheduleError("merge trace does not reach a single cluster");

  for (std::size_t i = 0; i < n; ++i) tree.nodes.push_back({0.0, i, {i}, {}});

  UnionFind uf(n);
  std::vector<std::size_t> node_of(n);  // current node of each root
  for (std::size_t i = 0; i < n; ++i) node_of[i] = i;

  for (const auto& [level, merges] : by_level) {
    // Roots present before this level that take part in a merge.
    std::map<std::size_t, std::vector<std::size_t>> joined;  // new root -> old roots
    std::vector<std::pair<std::size_t, std::size_t>> old_roots;
    for (const auto& m : merges) old_roots.emplace_back(uf.find(m.a), uf.find(m.b));
    UnionFind level_uf = uf;
    for (const auto& m : merges) level_uf.unite(m.a, m.b);
    for (const auto& [a, b] : old_roots) {
      for (const auto r : {a, b}) {
        auto& list = joined[level_uf.find(r)];
        if (std::find(list.begin(), list.end(), r) == list.end()) list.push_back(r);
      }
    }
    uf = level_uf;

    // Cluster index at this level: rank of the root among all roots.
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) {
      if (uf.find(i) == i) roots.push_back(i);
    }
    for (auto& [root, parts] : joined) {
      std::sort(parts.begin(), parts.end());
      DendrogramNode node;
      node.level = schedule.values()[level];
      node.cluster_index = static_cast<std::size_t>(std::lower_bound(roots.begin(), roots.end(), root) - roots.begin());
      for (const auto p : parts) {
        const auto& child = tree.nodes[node_of[p]];
        node.members.insert(node.members.end(), child.members.begin(), child.members.end());
        node.children.push_back(node_of[p]);
      }
      std::sort(node.members.begin(), node.members.end());
      node_of[root] = tree.nodes.size();
      tree.nodes.push_back(std::move(node));
    }
  }
  tree.root = node_of[0];
  return tree;
}

std::string merge_trace_csv(const MergeTrace& trace) {
  std::ostringstream out;
  out << "height,survivor,absorbed\n";
  for (const auto& m : trace.merges) out << format_real(m.height) << ',' << m.a << ',' << m.b << '\n';
  return out.str();
}

std::string barcode_csv(const Barcode& bc) {
  std::ostringstream out;
  out << "birth,death,representative\n";
  for (const auto& b : bc.bars) {
    out << format_real(b.birth) << ',' << (b.death ? format_real(*b.death) : "inf") << ',' << b.representative
        << '\n';
  }
  return out.str();
}

std::string barcode_svg(const Barcode& bc, double eps_max) {
  constexpr double kWidth = 800.0;
  constexpr double kLeft = 40.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 20.0;
  constexpr double kBottom = 40.0;
  constexpr double kRow = 6.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double height = kTop + kBottom + kRow * static_cast<double>(std::max<std::size_t>(bc.bars.size(), 1));
  const double span = eps_max > 0.0 ? eps_max : 1.0;
  auto x_of = [&](double eps) { return kLeft + plot_w * std::min(eps, span) / span; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(kWidth, 0) << "\" height=\""
      << format_fixed(height, 0) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Shortest bar at the bottom row.
  for (std::size_t i = 0; i < bc.bars.size(); ++i) {
    const auto& b = bc.bars[i];
    const double y = height - kBottom - kRow * (static_cast<double>(i) + 0.5);
    const double x2 = b.death ? x_of(*b.death) : kWidth - kRight;
    out << "  <line x1=\"" << format_fixed(x_of(b.birth), 2) << "\" y1=\"" << format_fixed(y, 2) << "\" x2=\""
        << format_fixed(x2, 2) << "\" y2=\"" << format_fixed(y, 2) << "\" stroke=\""
        << (b.death ? "black" : "red") << "\" stroke-width=\"3\"/>\n";
  }
  const double axis_y = height - kBottom + 4.0;
  out << "  <line x1=\"" << format_fixed(kLeft, 2) << "\" y1=\"" << format_fixed(axis_y, 2) << "\" x2=\""
      << format_fixed(kWidth - kRight, 2) << "\" y2=\"" << format_fixed(axis_y, 2) << "\" stroke=\"gray\"/>\n";
  const int ticks = static_cast<int>(std::floor(span));
  const int every = std::max(1, ticks / 10);
  for (int t = 0; t <= ticks; t += every) {
    const double x = x_of(t);
    out << "  <text x=\"" << format_fixed(x, 2) << "\" y=\"" << format_fixed(axis_y + 16.0, 2)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

json node_json(const Dendrogram& tree, std::size_t id) {
  const auto& node = tree.nodes[id];
  json j{{"level", node.level}, {"cluster", node.cluster_index}, {"size", node.members.size()}};
  if (node.children.empty()) {
    j["point"] = node.members.front();
  } else {
    json children = json::array();
    for (const auto c : node.children) children.push_back(node_json(tree, c));
    j["children"] = std::move(children);
  }
  return j;
}

std::vector<std::size_t> by_size(const Clusters& clusters) {
  std::vector<std::size_t> order(clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return clusters[a].size() > clusters[b].size(); });
  return order;
}

}  // namespace

std::string dendrogram_json(const Dendrogram& tree) { return node_json(tree, tree.root).dump(2) + "\n"; }

std::string dendrogram_dot(const Dendrogram& tree) {
  std::ostringstream out;
  out << "digraph dendrogram {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    out << "  n" << i << " [label=\"(" << node.cluster_index << ", " << format_real(node.level) << ")\"";
    if (node.children.empty()) out << ", shape=point";
    out << "];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    for (const auto c : tree.nodes[i].children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string cluster_report_text(const Clusters& clusters, const PointCloud& cloud, double eps) {
  std::ostringstream out;
  out << "eps\t" << format_real(eps) << "\nclusters\t" << clusters.size() << "\npoints\t" << cloud.size() << '\n';
  const auto order = by_size(clusters);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& members = clusters[order[rank]];
    std::size_t graphs = 0;
    for (const auto p : members) graphs += cloud.points.at(p).multiplicity();
    out << "cluster\t" << rank + 1 << "\tsize\t" << members.size() << "\tgraphs\t" << graphs << '\n';
    for (const auto p : members) {
      out << "  point\t" << p << '\t';
      const auto& sources = cloud.points[p].sources;
      for (std::size_t s = 0; s < sources.size(); ++s) out << (s ? "," : "") << sources[s];
      out << '\n';
    }
  }
  return out.str();
}

std::string cluster_report_json(const Clusters& clusters, const PointCloud& cloud, double eps) {
  json list = json::array();
  for (const auto idx : by_size(clusters)) {
    json points = json::array();
    for (const auto p : clusters[idx]) points.push_back({{"point", p}, {"sources", cloud.points.at(p).sources}});
    list.push_back({{"size", clusters[idx].size()}, {"points", points}});
  }
  return json{{"eps", eps}, {"clusters", list}, {"n_points", cloud.size()}}.dump(2) + "\n";
}

}  // namespace scramblegraph
