#include "scramblegraph/mds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "scramblegraph/errors.hpp"
#include "scramblegraph/format.hpp"

namespace scramblegraph {
namespace {

using Vector = std::vector<double>;
using Matrix = std::vector<Vector>;  // row-major, square

double dot(const Vector& a, const Vector& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

Vector multiply(const Matrix& m, const Vector& v) {
  Vector out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

// Cyclic Jacobi on a small symmetric matrix. Returns eigenvalues and
// eigenvectors (as columns of `vectors`).
void jacobi_eigen(Matrix a, Vector& values, Matrix& vectors) {
  const std::size_t k = a.size();
  vectors.assign(k, Vector(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) vectors[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-300) break;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < k; ++r) {
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = c * arp - s * arq;
          a[r][q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < k; ++r) {
          const double apr = a[p][r];
          const double aqr = a[q][r];
          a[p][r] = c * apr - s * aqr;
          a[q][r] = s * apr + c * aqr;
        }
        for (std::size_t r = 0; r < k; ++r) {
          const double vrp = vectors[r][p];
          const double vrq = vectors[r][q];
          vectors[r][p] = c * vrp - s * vrq;
          vectors[r][q] = s * vrp + c * vrq;
        }
      }
    }
  }
  values.resize(k);
  for (std::size_t i = 0; i < k; ++i) values[i] = a[i][i];
}

// Deterministic start vectors (no RNG, so output is reproducible).
Vector start_vector(std::size_t n, std::size_t column) {
  Vector v(n);
  std::uint64_t state = 0x9E3779B97F4A7C15ULL * (column + 1);
  for (auto& x : v) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    x = static_cast<double>(state % 2001) / 1000.0 - 1.0;
  }
  return v;
}

void remove_mean(Vector& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (auto& x : v) x -= mean;
}

// Modified Gram-Schmidt against the constant vector and earlier columns.
// Columns that vanish are replaced by fresh start vectors; returns false
// if a column could not be filled.
bool orthonormalize(std::vector<Vector>& cols, std::size_t n, std::size_t& seed) {
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      auto& v = cols[c];
      const double before = std::sqrt(dot(v, v));
      remove_mean(v);
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t p = 0; p < c; ++p) {
          const double proj = dot(v, cols[p]);
          for (std::size_t i = 0; i < n; ++i) v[i] -= proj * cols[p][i];
        }
      }
      const double norm = std::sqrt(dot(v, v));
      if (norm > 1e-12 * std::max(before, 1e-300) && norm > 1e-300) {
        for (auto& x : v) x /= norm;
        break;
      }
      v = start_vector(n, seed++);
      if (attempt == 7) return false;
    }
  }
  return true;
}

}  // namespace

double stress(const DistanceMatrix& dist, const std::vector<std::array<double, 2>>& coords) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = i + 1; j < dist.size(); ++j) {
      const double dx = coords[i][0] - coords[j][0];
      const double dy = coords[i][1] - coords[j][1];
      const double diff = dist(i, j) - std::sqrt(dx * dx + dy * dy);
      num += diff * diff;
      den += dist(i, j) * dist(i, j);
    }
  }
  return den > 0.0 ? num / den : 0.0;
}

Projection2D classical_mds(const DistanceMatrix& dist, const MdsOptions& options) {
  dist.validate();
  const std::size_t n = dist.size();
  if (n == 0) throw InputError("multidimensional scaling of an empty point set");
  Projection2D proj;
  proj.coordinates.assign(n, {0.0, 0.0});
  if (n < 2) return proj;

  // B = -1/2 J D^2 J
  Matrix b(n, Vector(n));
  Vector row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[i][j] = dist(i, j) * dist(i, j);
      row_mean[i] += b[i][j];
    }
    grand += row_mean[i];
    row_mean[i] /= static_cast<double>(n);
  }
  grand /= static_cast<double>(n) * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i][j] = -0.5 * (b[i][j] - row_mean[i] - row_mean[j] + grand);
  }

  // Subspace iteration on a block slightly wider than the two wanted axes.
  const std::size_t k = std::min<std::size_t>(n - 1, 4);
  std::size_t seed = 0;
  std::vector<Vector> q;
  for (std::size_t c = 0; c < k; ++c) q.push_back(start_vector(n, seed++));
  orthonormalize(q, n, seed);

  double scale = 0.0;
  for (const auto& row : b) {
    for (const double x : row) scale = std::max(scale, std::abs(x));
  }
  scale = std::max(scale, 1e-300);

  Vector ritz(k, 0.0);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    std::vector<Vector> z(k);
    for (std::size_t c = 0; c < k; ++c) z[c] = multiply(b, q[c]);
    if (!orthonormalize(z, n, seed)) break;

    std::vector<Vector> bz(k);
    for (std::size_t c = 0; c < k; ++c) bz[c] = multiply(b, z[c]);
    Matrix h(k, Vector(k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) h[r][c] = 0.5 * (dot(z[r], bz[c]) + dot(z[c], bz[r]));
    }
    Vector values;
    Matrix vectors;
    jacobi_eigen(h, values, vectors);
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });

    // Ritz vectors, descending Ritz value.
    for (std::size_t c = 0; c < k; ++c) {
      Vector v(n, 0.0);
      Vector bv(n, 0.0);
      for (std::size_t r = 0; r < k; ++r) {
        const double w = vectors[r][order[c]];
        for (std::size_t i = 0; i < n; ++i) {
          v[i] += w * z[r][i];
          bv[i] += w * bz[r][i];
        }
      }
      q[c] = std::move(v);
      z[c] = std::move(bv);  // reuse as B q
      ritz[c] = values[order[c]];
    }

    double residual = 0.0;
    for (std::size_t c = 0; c < std::min<std::size_t>(k, 2); ++c) {
      double r2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double r = z[c][i] - ritz[c] * q[c][i];
        r2 += r * r;
      }
      residual = std::max(residual, std::sqrt(r2));
    }
    if (residual <= options.tolerance * scale) break;
  }

  for (std::size_t axis = 0; axis < 2; ++axis) {
    if (axis >= k) continue;
    const double lambda = ritz[axis];
    proj.eigenvalues[axis] = lambda;
    if (lambda <= 0.0) continue;
    Vector v = q[axis];
    remove_mean(v);
    const double norm = std::sqrt(dot(v, v));
    if (norm == 0.0) continue;
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(v[i]) > std::abs(v[pivot]) * (1.0 + 1e-12)) pivot = i;
    }
    const double sign = v[pivot] < 0.0 ? -1.0 : 1.0;
    const double factor = sign * std::sqrt(lambda) / norm;
    for (std::size_t i = 0; i < n; ++i) proj.coordinates[i][axis] = v[i] * factor;
  }
  proj.stress = stress(dist, proj.coordinates);
  return proj;
}

namespace {

// Cluster rank (0 = largest) per point.
std::vector<std::size_t> cluster_ranks(const Clusters& clusters, std::size_t n_points, std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return clusters[a].size() > clusters[b].size(); });
  std::vector<std::size_t> rank_of(n_points, 0);
  sizes.clear();
  for (std::size_t r = 0; r < order.size(); ++r) {
    sizes.push_back(clusters[order[r]].size());
    for (const auto p : clusters[order[r]]) {
      if (p >= n_points) throw InputError("cluster member " + std::to_string(p) + " out of range");
      rank_of[p] = r;
    }
  }
  return rank_of;
}

}  // namespace

std::string export_scatter(const Projection2D& proj, const Clusters& clusters, const ScatterPalette& palette) {
  constexpr double kSize = 800.0;
  constexpr double kMargin = 40.0;
  const std::size_t n = proj.coordinates.size();
  std::vector<std::size_t> sizes;
  const auto rank_of = cluster_ranks(clusters, n, sizes);

  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x, y] = proj.coordinates[i];
    if (i == 0 || x < min_x) min_x = x;
    if (i == 0 || x > max_x) max_x = x;
    if (i == 0 || y < min_y) min_y = y;
    if (i == 0 || y > max_y) max_y = y;
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = (kSize - 2.0 * kMargin) / span;
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);

  auto color_for = [&](std::size_t rank) -> const std::string& {
    if (sizes[rank] == 1) return palette.singleton;
    if (rank == 0) return palette.largest;
    if (rank == 1) return palette.second;
    return palette.others.empty() ? palette.singleton : palette.others[(rank - 2) % palette.others.size()];
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double sx = kSize / 2.0 + (proj.coordinates[i][0] - cx) * scale;
    const double sy = kSize / 2.0 - (proj.coordinates[i][1] - cy) * scale;
    out << "  <circle cx=\"" << format_fixed(sx, 2) << "\" cy=\"" << format_fixed(sy, 2) << "\" r=\"4\" fill=\""
        << xml_escape(color_for(rank_of[i])) << "\"><title>point " << i << " cluster " << rank_of[i] + 1
        << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string projection_csv(const Projection2D& proj, const Clusters& clusters, const PointCloud& cloud) {
  std::vector<std::size_t> sizes;
  const auto rank_of = cluster_ranks(clusters, proj.coordinates.size(), sizes);
  std::ostringstream out;
  out << "point,x,y,cluster,multiplicity,sources\n";
  for (std::size_t i = 0; i < proj.coordinates.size(); ++i) {
    const auto& pt = cloud.points.at(i);
    out << i << ',' << format_real(proj.coordinates[i][0]) << ',' << format_real(proj.coordinates[i][1]) << ','
        << rank_of[i] + 1 << ',' << pt.multiplicity() << ',';
    for (std::size_t s = 0; s < pt.sources.size(); ++s) out << (s ? ";" : "") << pt.sources[s];
    out << '\n';
  }
  return out.str();
}

}  // namespace scramblegraph
