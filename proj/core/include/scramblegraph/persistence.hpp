#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scramblegraph/features.hpp"
#include "scramblegraph/graph.hpp"

namespace scramblegraph {

// Dense symmetric matrix of pairwise distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static DistanceMatrix euclidean(const std::vector<std::vector<double>>& points);
  static DistanceMatrix euclidean(const PointCloud& cloud);
  // Square input only; symmetry and signs are checked by validate().
  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  // Throws InputError unless symmetric (within tol), non-negative and zero
  // on the diagonal.
  void validate(double tol = 1e-9) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// 0 = eps_0 < eps_1 < ... ; a point enters a cluster at the first level
// >= its merge height.
class Filtration {
 public:
  // Throws InputError unless values start at 0 and strictly increase.
  explicit Filtration(std::vector<double> eps_values);
  // 0, step, 2*step, ... up to the first multiple >= max_height.
  static Filtration uniform(double step, double max_height);

  const std::vector<double>& values() const { return values_; }
  // Index of the first level >= height, nullopt if past the last level.
  std::optional<std::size_t> level_of(double height) const;

 private:
  std::vector<double> values_;
};

// Single-linkage merge; a and b are the smallest point indices of the two
// merging components (a < b). Component b dies.
struct Merge {
  double height = 0.0;
  std::size_t a = 0;
  std::size_t b = 0;
};

struct MergeTrace {
  std::size_t n_points = 0;
  std::vector<Merge> merges;  // heights non-decreasing
};

// Kruskal over all pairs in (distance, i, j) order.
MergeTrace single_linkage(const DistanceMatrix& dist);

// Components of the eps-neighborhood graph, each sorted, ordered by
// smallest member.
using Clusters = std::vector<std::vector<std::size_t>>;

UndirectedGraph neighborhood_graph(const DistanceMatrix& dist, double eps);
Clusters clusters_at(const DistanceMatrix& dist, double eps);
// Flat clustering from merges with height <= eps.
Clusters cut(const MergeTrace& trace, double eps);

struct Bar {
  double birth = 0.0;
  std::optional<double> death;  // nullopt: never dies
  std::size_t representative = 0;

  double length() const;
};

// Bars sorted shortest first (bottom of the diagram), ties by representative.
struct Barcode {
  std::vector<Bar> bars;

  // Bars alive at eps, i.e. not dead at or before it.
  std::size_t components_at(double eps) const;
};

// Exact deaths without a schedule; with one, deaths snap up to the next
// filtration level.
Barcode barcode(const MergeTrace& trace, const Filtration* schedule = nullptr);

struct DendrogramNode {
  double level = 0.0;
  std::size_t cluster_index = 0;        // rank among the clusters at `level`
  std::vector<std::size_t> members;     // point indices, sorted
  std::vector<std::size_t> children;    // node ids, ordered by smallest member
};

// Leaves are nodes 0..n-1 (point i at level 0). A node at level eps_i joins
// the clusters of level eps_{i-1}; clusters that do not change keep their
// node. Throws IncompleteScheduleError if the schedule ends before a single
// cluster remains.
struct Dendrogram {
  std::vector<DendrogramNode> nodes;
  std::size_t root = 0;
};

Dendrogram dendrogram(const MergeTrace& trace, const Filtration& schedule);

std::string merge_trace_csv(const MergeTrace& trace);
std::string barcode_csv(const Barcode& bc);
std::string barcode_svg(const Barcode& bc, double eps_max);
std::string dendrogram_json(const Dendrogram& tree);
std::string dendrogram_dot(const Dendrogram& tree);

// Clusters by size (largest first, ties by smallest member) with the MIC
// contigs behind each point.
std::string cluster_report_text(const Clusters& clusters, const PointCloud& cloud, double eps);
std::string cluster_report_json(const Clusters& clusters, const PointCloud& cloud, double eps);

}  // namespace scramblegraph
