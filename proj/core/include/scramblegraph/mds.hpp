#pragma once

#include <array>
#include <string>
#include <vector>

#include "scramblegraph/features.hpp"
#include "scramblegraph/persistence.hpp"

namespace scramblegraph {

struct Projection2D {
  std::vector<std::array<double, 2>> coordinates;
  std::array<double, 2> eigenvalues{};  // leading eigenvalues of the centred Gram matrix
  double stress = 0.0;                  // sum (d - d_hat)^2 / sum d^2
};

struct MdsOptions {
  double tolerance = 1e-10;
  int max_iterations = 10000;
};

// Classical (Torgerson) scaling: double-centre the squared distances, take
// the two leading eigenpairs by block power iteration, scale eigenvectors
// by sqrt(eigenvalue). Negative eigenvalues give a zero axis. Each axis is
// flipped so its largest-magnitude coordinate is positive.
// Throws InputError if dist is not a valid distance matrix.
Projection2D classical_mds(const DistanceMatrix& dist, const MdsOptions& options = {});

double stress(const DistanceMatrix& dist, const std::vector<std::array<double, 2>>& coords);

struct ScatterPalette {
  std::string largest = "#d62728";
  std::string second = "#2ca02c";
  std::string singleton = "#1f77b4";
  std::vector<std::string> others = {"#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
};

// 800x800 scatter. Clusters ranked by size (ties: smallest member): rank 1
// gets `largest`, rank 2 `second`, further multi-point clusters cycle
// through `others`; singletons always use `singleton`.
std::string export_scatter(const Projection2D& proj, const Clusters& clusters, const ScatterPalette& palette = {});

// point,x,y,cluster,multiplicity,sources with the same cluster ranking.
std::string projection_csv(const Projection2D& proj, const Clusters& clusters, const PointCloud& cloud);

}  // namespace scramblegraph
