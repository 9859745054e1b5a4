#include "lefvol/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "lefvol/rng.hpp"

namespace lefvol {

namespace {

constexpr std::uint64_t kMcChunk = 1 << 16;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Gram-Schmidt over a vector chain, keeping only directions that extend the
/// span. Returns an n x r matrix of orthonormal columns.
Eigen::MatrixXd orthonormal_chain(const std::vector<Eigen::VectorXd>& vectors, int n) {
  Eigen::MatrixXd basis(n, static_cast<Eigen::Index>(vectors.size()));
  Eigen::Index r = 0;
  for (const Eigen::VectorXd& v : vectors) {
    Eigen::VectorXd w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < r; ++j) {
        w -= basis.col(j).dot(w) * basis.col(j);
      }
    }
    if (w.norm() > 1e-10 * std::max(1.0, v.norm())) {
      basis.col(r++) = w / w.norm();
    }
  }
  return basis.leftCols(r);
}

std::uint64_t label_stream(const Simplex& s) { return fnv1a64(s.to_string()); }

}  // namespace

Embedding::Embedding(int ambient_dim, std::map<VertexId, Eigen::VectorXd> coords)
    : ambient_dim_(ambient_dim), coords_(std::move(coords)) {
  if (ambient_dim_ < 1) {
    throw ConfigError("ambient dimension must be at least 1");
  }
  for (const auto& [v, x] : coords_) {
    if (x.size() != ambient_dim_) {
      throw ConfigError("vertex '" + v.label + "' has " + std::to_string(x.size()) +
                        " coordinates, expected " + std::to_string(ambient_dim_));
    }
  }
}

const Eigen::VectorXd& Embedding::point(const VertexId& v) const {
  auto it = coords_.find(v);
  if (it == coords_.end()) {
    throw ConfigError("embedding has no coordinates for vertex '" + v.label + "'");
  }
  return it->second;
}

bool Embedding::has_vertex(const VertexId& v) const { return coords_.count(v) > 0; }

Eigen::MatrixXd Embedding::points_of(const Simplex& s) const {
  Eigen::MatrixXd pts(ambient_dim_, s.dim() + 1);
  for (int i = 0; i <= s.dim(); ++i) {
    pts.col(i) = point(s.vertices()[i]);
  }
  return pts;
}

bool Embedding::covers(const Complex& X) const {
  for (const VertexId& v : X.vertices()) {
    if (!has_vertex(v)) return false;
  }
  return true;
}

void validate_embedding(const Complex& X, const Embedding& e) {
  for (const VertexId& v : X.vertices()) {
    if (!e.has_vertex(v)) {
      throw ConfigError("embedding has no coordinates for vertex '" + v.label + "'");
    }
  }
  for (const Simplex& s : X.all_simplices()) {
    if (s.dim() == 0) continue;
    if (simplex_volume(s, e).degenerate) {
      throw DegenerateSimplexError("degenerate realization of simplex " + s.to_string());
    }
  }
}

SimplexVolume simplex_volume(const Simplex& s, const Embedding& e) {
  const int k = s.dim();
  const Eigen::MatrixXd pts = e.points_of(s);

  // Cayley-Menger: bordered matrix of squared pairwise distances.
  Eigen::MatrixXd B = Eigen::MatrixXd::Ones(k + 2, k + 2);
  B(0, 0) = 0.0;
  double longest_sq = 0.0;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      const double d2 = (pts.col(i) - pts.col(j)).squaredNorm();
      B(i + 1, j + 1) = d2;
      longest_sq = std::max(longest_sq, d2);
    }
  }
  const double det = B.determinant();
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k+1)
  const double f = factorial(k);
  const double vol_sq = sign * det / (std::ldexp(1.0, k) * f * f);
  const double vol = std::sqrt(std::max(0.0, vol_sq));

  SimplexVolume out;
  out.value = vol;
  const double scale = std::pow(std::sqrt(longest_sq), k);
  out.degenerate = (k > 0) && (vol < kDegeneracyScale * std::max(scale, 1e-300));
  if (out.degenerate) out.value = 0.0;
  return out;
}

namespace {

/// Coordinates, in the orthogonal complement of span(F-F) inside span(P-P),
/// of the vertices of P not in F, measured from F's affine hull. The normal
/// cone of P along F is the polar of the cone spanned by these vectors.
Eigen::MatrixXd reduced_off_face_vectors(const Simplex& F, const Simplex& P,
                                         const Embedding& e) {
  const Eigen::VectorXd base = e.point(F.vertices()[0]);
  std::vector<Eigen::VectorXd> chain;
  for (std::size_t i = 1; i < F.vertices().size(); ++i) {
    chain.push_back(e.point(F.vertices()[i]) - base);
  }
  std::vector<Eigen::VectorXd> off;
  for (const VertexId& v : P.vertices()) {
    if (!F.has_vertex(v)) off.push_back(e.point(v) - base);
  }
  for (const Eigen::VectorXd& w : off) chain.push_back(w);

  const Eigen::MatrixXd basis = orthonormal_chain(chain, e.ambient_dim());
  const int k = F.dim();
  const int d = P.dim();
  if (basis.cols() != d) {
    throw DegenerateSimplexError("degenerate realization of simplex " + P.to_string());
  }
  const Eigen::MatrixXd W = basis.rightCols(d - k);

  Eigen::MatrixXd reduced(d - k, static_cast<Eigen::Index>(off.size()));
  for (std::size_t j = 0; j < off.size(); ++j) {
    reduced.col(static_cast<Eigen::Index>(j)) = W.transpose() * off[j];
  }
  return reduced;
}

Estimate normal_cone_fraction_mc(const Eigen::MatrixXd& generators,
                                 const MonteCarloConfig& mc, const Rng& stream) {
  if (mc.samples == 0) {
    throw ConfigError("Monte Carlo sample count must be positive");
  }
  const Eigen::Index m = generators.rows();
  std::uint64_t hits = 0;
  Eigen::VectorXd u(m);
  for (std::uint64_t start = 0, chunk = 0; start < mc.samples; start += kMcChunk, ++chunk) {
    Rng rng = stream.child(chunk);
    const std::uint64_t count = std::min<std::uint64_t>(kMcChunk, mc.samples - start);
    for (std::uint64_t i = 0; i < count; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) u(j) = rng.normal();
      hits += ((generators.transpose() * u).array() <= 0.0).all() ? 1 : 0;
    }
  }
  const double n = static_cast<double>(mc.samples);
  const double p = static_cast<double>(hits) / n;
  const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / n);
  return Estimate::monte_carlo(p, se);
}

}  // namespace

Estimate external_angle(const Simplex& F, const Simplex& P, const Embedding& e,
                        const MonteCarloConfig& mc) {
  if (!P.has_face(F)) {
    throw FaceRelationError("simplex " + F.to_string() + " is not a face of " +
                            P.to_string());
  }
  const int codim = P.dim() - F.dim();
  if (codim == 0) return Estimate::exact(1.0);
  if (codim == 1) return Estimate::exact(0.5);

  const Eigen::MatrixXd w = reduced_off_face_vectors(F, P, e);
  if (codim == 2) {
    // Planar wedge: the normal cone angle is pi minus the angle between the
    // two off-face directions.
    const double c = w.col(0).normalized().dot(w.col(1).normalized());
    const double interior = std::acos(std::clamp(c, -1.0, 1.0));
    return Estimate::exact((std::numbers::pi - interior) / (2.0 * std::numbers::pi));
  }
  const Rng stream =
      Rng(mc.seed).child(label_stream(P)).child(label_stream(F));
  return normal_cone_fraction_mc(w, mc, stream);
}

Estimate intrinsic_volume(const Simplex& s, const Embedding& e, int k,
                          const MonteCarloConfig& mc) {
  if (k < 0) throw ConfigError("intrinsic volume index must be nonnegative");
  if (k > s.dim()) return Estimate::exact(0.0);
  if (k == 0) return Estimate::exact(1.0);

  const SimplexVolume top = simplex_volume(s, e);
  if (top.degenerate) {
    throw DegenerateSimplexError("degenerate realization of simplex " + s.to_string());
  }
  Estimate sum = Estimate::exact(0.0);
  for (const Simplex& F : s.faces_of_dim(k)) {
    const double volF = simplex_volume(F, e).value;
    sum.accumulate(external_angle(F, s, e, mc), volF);
  }
  return sum;
}

IntrinsicVolumeVector intrinsic_volumes(const Simplex& s, const Embedding& e,
                                        const MonteCarloConfig& mc) {
  IntrinsicVolumeVector out;
  out.mu.reserve(s.dim() + 1);
  for (int k = 0; k <= s.dim(); ++k) {
    out.mu.push_back(intrinsic_volume(s, e, k, mc));
  }
  return out;
}

IntrinsicVolumeVector open_intrinsic_volumes(const Simplex& s, const Embedding& e,
                                             const MonteCarloConfig& mc) {
  IntrinsicVolumeVector closed = intrinsic_volumes(s, e, mc);
  for (int k = 0; k <= s.dim(); ++k) {
    if ((s.dim() - k) % 2 != 0) closed.mu[k].value = -closed.mu[k].value;
  }
  return closed;
}

IntrinsicVolumeVector open_intrinsic_volumes_by_boundary(const Simplex& s,
                                                         const Embedding& e,
                                                         const MonteCarloConfig& mc) {
  const int d = s.dim();
  // open(a) = mu(closure a) - sum of open(b) over proper faces b, evaluated
  // bottom-up over the face poset of s.
  std::map<Simplex, std::vector<Estimate>, CanonicalSimplexOrder> open;
  std::vector<Simplex> faces = s.faces();
  std::sort(faces.begin(), faces.end(), CanonicalSimplexOrder{});
  for (const Simplex& a : faces) {
    std::vector<Estimate> value(d + 1, Estimate::exact(0.0));
    const IntrinsicVolumeVector closed = intrinsic_volumes(a, e, mc);
    for (int k = 0; k <= a.dim(); ++k) value[k] = closed.mu[k];
    for (const Simplex& b : a.faces()) {
      if (b == a) continue;
      const std::vector<Estimate>& sub = open.at(b);
      for (int k = 0; k <= d; ++k) value[k].accumulate(sub[k], -1.0);
    }
    open.emplace(a, std::move(value));
  }
  IntrinsicVolumeVector out;
  out.mu = open.at(s);
  return out;
}

double unit_ball_volume(int j) {
  if (j < 0) throw ConfigError("unit ball dimension must be nonnegative");
  return std::pow(std::numbers::pi, j / 2.0) / std::tgamma(j / 2.0 + 1.0);
}

PointSimplexDistancer::PointSimplexDistancer(const Simplex& s, const Embedding& e)
    : points_(e.points_of(s)) {
  const int m = s.dim() + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
    }
    if (idx.size() == 1) continue;  // vertices handled directly in distance()
    Face f;
    f.base = points_.col(idx[0]);
    f.edges.resize(points_.rows(), static_cast<Eigen::Index>(idx.size()) - 1);
    for (std::size_t i = 1; i < idx.size(); ++i) {
      f.edges.col(static_cast<Eigen::Index>(i) - 1) = points_.col(idx[i]) - f.base;
    }
    const Eigen::MatrixXd gram = f.edges.transpose() * f.edges;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    if (!lu.isInvertible()) continue;  // affinely dependent subset; skip
    f.solver = lu.inverse() * f.edges.transpose();
    faces_.push_back(std::move(f));
  }
}

double PointSimplexDistancer::distance(const Eigen::VectorXd& p) const {
  double best_sq = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < points_.cols(); ++i) {
    best_sq = std::min(best_sq, (p - points_.col(i)).squaredNorm());
  }
  constexpr double kBaryTol = 1e-12;
  for (const Face& f : faces_) {
    const Eigen::VectorXd lambda = f.solver * (p - f.base);
    if ((lambda.array() < -kBaryTol).any() || lambda.sum() > 1.0 + kBaryTol) continue;
    const double d_sq = (p - f.base - f.edges * lambda).squaredNorm();
    best_sq = std::min(best_sq, d_sq);
  }
  return std::sqrt(best_sq);
}

double point_simplex_distance(const Eigen::VectorXd& p, const Simplex& s,
                              const Embedding& e) {
  return PointSimplexDistancer(s, e).distance(p);
}

TubeEstimate tube_volume_mc(const Simplex& s, const Embedding& e, double rho,
                            std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw ConfigError("tube estimate needs a positive sample count");
  if (rho <= 0.0) throw ConfigError("tube radius must be positive");

  const Eigen::MatrixXd pts = e.points_of(s);
  const Eigen::VectorXd lo = pts.rowwise().minCoeff().array() - rho;
  const Eigen::VectorXd hi = pts.rowwise().maxCoeff().array() + rho;
  const double box_volume = (hi - lo).prod();

  const PointSimplexDistancer distancer(s, e);
  const Rng stream = Rng(seed).child(label_stream(s));
  const Eigen::Index n = pts.rows();
  Eigen::VectorXd p(n);
  std::uint64_t hits = 0;
  for (std::uint64_t start = 0, chunk = 0; start < samples; start += kMcChunk, ++chunk) {
    Rng rng = stream.child(chunk);
    const std::uint64_t count = std::min<std::uint64_t>(kMcChunk, samples - start);
    for (std::uint64_t i = 0; i < count; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) p(j) = rng.uniform(lo(j), hi(j));
      if (distancer.distance(p) <= rho) ++hits;
    }
  }

  const double n_samples = static_cast<double>(samples);
  const double p_hat = static_cast<double>(hits) / n_samples;
  double indicator_sd = 0.0;
  if (samples > 1) {
    indicator_sd = std::sqrt(std::max(0.0, p_hat * (1.0 - p_hat)) * n_samples /
                             (n_samples - 1.0));
  }
  TubeEstimate out;
  out.rho = rho;
  out.volume_estimate = box_volume * p_hat;
  out.std_error = box_volume * indicator_sd / std::sqrt(n_samples);
  out.samples = samples;
  out.seed = seed;
  return out;
}

IsometrySpec IsometrySpec::identity(int n) {
  return {Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n)};
}

IsometrySpec sample_isometry(int n, std::uint64_t seed, double translation_scale) {
  if (n < 1) throw ConfigError("isometry dimension must be at least 1");
  Rng rng(seed);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  IsometrySpec phi;
  phi.rotation = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  phi.translation.resize(n);
  for (int i = 0; i < n; ++i) {
    phi.translation(i) = rng.uniform(-translation_scale, translation_scale);
  }
  return phi;
}

Embedding apply_isometry(const Embedding& e, const IsometrySpec& phi) {
  if (phi.rotation.rows() != e.ambient_dim()) {
    throw ConfigError("isometry dimension does not match the embedding");
  }
  std::map<VertexId, Eigen::VectorXd> moved;
  for (const auto& [v, x] : e.coords()) {
    moved.emplace(v, phi.rotation * x + phi.translation);
  }
  return Embedding(e.ambient_dim(), std::move(moved));
}

}  // namespace lefvol
