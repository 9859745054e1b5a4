#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "lefvol/complex.hpp"
#include "lefvol/errors.hpp"
#include "lefvol/estimate.hpp"

namespace lefvol {

/// Relative scale below which a Cayley-Menger volume counts as degenerate:
/// vol < kDegeneracyScale * (longest edge)^dim.
inline constexpr double kDegeneracyScale = 1e-12;

/// Geometric realization: coordinates in R^n for every vertex label.
class Embedding {
 public:
  Embedding(int ambient_dim, std::map<VertexId, Eigen::VectorXd> coords);

  int ambient_dim() const { return ambient_dim_; }
  const Eigen::VectorXd& point(const VertexId& v) const;
  bool has_vertex(const VertexId& v) const;
  const std::map<VertexId, Eigen::VectorXd>& coords() const { return coords_; }

  /// Vertex points of a simplex as columns, canonical vertex order.
  Eigen::MatrixXd points_of(const Simplex& s) const;

  /// True when every vertex of X has coordinates.
  bool covers(const Complex& X) const;

 private:
  int ambient_dim_;
  std::map<VertexId, Eigen::VectorXd> coords_;
};

/// Throws ConfigError when a vertex of X has no coordinates and
/// DegenerateSimplexError when a simplex of X is realized with affinely
/// dependent vertices (Cayley-Menger volume below threshold).
void validate_embedding(const Complex& X, const Embedding& e);

/// k-volume of a simplex from squared pairwise distances.
struct SimplexVolume {
  double value = 0.0;
  bool degenerate = false;
};

/// Intrinsic k-volume via the Cayley-Menger determinant; independent of the
/// ambient dimension. Degenerate input gives value 0 and the flag set.
SimplexVolume simplex_volume(const Simplex& s, const Embedding& e);

/// (mu_0, ..., mu_d) of a simplex or open simplex with per-entry provenance.
struct IntrinsicVolumeVector {
  std::vector<Estimate> mu;

  int top_dim() const { return static_cast<int>(mu.size()) - 1; }
  const Estimate& operator[](int k) const { return mu[k]; }
};

/// Normalized external angle of face F in simplex P: the fraction of the
/// unit sphere in span(P-P) ∩ (F-F)^⊥ covered by the normal cone of P along
/// F. Exact in codimension <= 2, Monte Carlo direction sampling beyond.
Estimate external_angle(const Simplex& F, const Simplex& P, const Embedding& e,
                        const MonteCarloConfig& mc);

/// mu_k(s) for one k; exact 1 at k = 0, exact for codimension <= 2,
/// Monte Carlo otherwise, 0 for k > dim s.
Estimate intrinsic_volume(const Simplex& s, const Embedding& e, int k,
                          const MonteCarloConfig& mc);

/// All intrinsic volumes (mu_0, ..., mu_dim) of a closed simplex.
IntrinsicVolumeVector intrinsic_volumes(const Simplex& s, const Embedding& e,
                                        const MonteCarloConfig& mc);

/// Intrinsic volumes of the open simplex by the sign rule
/// mu_k(interior) = (-1)^(dim-k) mu_k(closure).
IntrinsicVolumeVector open_intrinsic_volumes(const Simplex& s, const Embedding& e,
                                             const MonteCarloConfig& mc);

/// Independent route to the same quantities: closure minus boundary complex,
/// with the boundary expanded recursively over open faces. Exposed so the
/// two paths can be cross-checked.
IntrinsicVolumeVector open_intrinsic_volumes_by_boundary(const Simplex& s,
                                                         const Embedding& e,
                                                         const MonteCarloConfig& mc);

/// Volume of the j-dimensional unit ball, pi^(j/2) / Gamma(j/2 + 1).
double unit_ball_volume(int j);

/// Monte Carlo estimate of the volume of the radius-rho tube around a
/// simplex, by uniform sampling in its inflated bounding box.
struct TubeEstimate {
  double rho = 0.0;
  double volume_estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

TubeEstimate tube_volume_mc(const Simplex& s, const Embedding& e, double rho,
                            std::uint64_t samples, std::uint64_t seed);

/// Euclidean distance from a point to the convex hull of a simplex.
double point_simplex_distance(const Eigen::VectorXd& p, const Simplex& s,
                              const Embedding& e);

/// An ambient isometry x -> rotation * x + translation. The rotation may
/// include a reflection (determinant -1).
struct IsometrySpec {
  Eigen::MatrixXd rotation;
  Eigen::VectorXd translation;

  static IsometrySpec identity(int n);
};

/// Rotation from QR-orthonormalized standard normals, translation uniform in
/// [-translation_scale, translation_scale]^n; deterministic per seed.
IsometrySpec sample_isometry(int n, std::uint64_t seed, double translation_scale);

Embedding apply_isometry(const Embedding& e, const IsometrySpec& phi);

/// Precomputed face projections for repeated distance queries against one
/// simplex (used by the tube estimator).
class PointSimplexDistancer {
 public:
  PointSimplexDistancer(const Simplex& s, const Embedding& e);
  double distance(const Eigen::VectorXd& p) const;

 private:
  struct Face {
    Eigen::VectorXd base;        // first vertex of the face
    Eigen::MatrixXd edges;       // edge vectors from base (n x r)
    Eigen::MatrixXd solver;      // (edges^T edges)^-1 edges^T
  };
  std::vector<Face> faces_;
  Eigen::MatrixXd points_;
};

}  // namespace lefvol
