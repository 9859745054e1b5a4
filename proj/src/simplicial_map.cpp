#include "lefvol/simplicial_map.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lefvol {

const VertexId& SelfMap::image(const VertexId& v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) {
    throw MapError("map has no image for vertex '" + v.label + "'");
  }
  return it->second;
}

Simplex SelfMap::image(const Simplex& s) const {
  std::set<VertexId> images;
  for (const VertexId& v : s.vertices()) images.insert(image(v));
  return Simplex(std::vector<VertexId>(images.begin(), images.end()));
}

bool SelfMap::is_identity() const {
  return std::all_of(assignment_.begin(), assignment_.end(),
                     [](const auto& kv) { return kv.first == kv.second; });
}

SelfMap validate_map(const Complex& X, const std::map<VertexId, VertexId>& assignment) {
  const std::vector<VertexId> vertices = X.vertices();
  const std::set<VertexId> vertex_set(vertices.begin(), vertices.end());
  for (const VertexId& v : vertices) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw MapError("map has no image for vertex '" + v.label + "'");
    }
    if (!vertex_set.count(it->second)) {
      throw MapError("image vertex '" + it->second.label +
                     "' is not a vertex of the complex");
    }
  }
  for (const auto& [v, w] : assignment) {
    if (!vertex_set.count(v)) {
      throw MapError("map assigns vertex '" + v.label +
                     "' which is not in the complex");
    }
  }
  SelfMap f(X, assignment);
  for (const Simplex& s : X.all_simplices()) {
    if (!X.contains(f.image(s))) {
      throw MapError("image of simplex " + s.to_string() +
                     " is not a simplex of the complex");
    }
  }
  return f;
}

SelfMap identity_map(const Complex& X) {
  std::map<VertexId, VertexId> assignment;
  for (const VertexId& v : X.vertices()) assignment.emplace(v, v);
  return validate_map(X, assignment);
}

namespace {

/// Sign of the permutation sending position i to perm[i], by inversion count.
int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Positions of the image vertices within the canonical order of the image
/// simplex, for a dimension-preserving image.
std::vector<int> image_positions(const SelfMap& f, const Simplex& x, const Simplex& y) {
  std::vector<int> positions;
  positions.reserve(x.vertices().size());
  for (const VertexId& v : x.vertices()) {
    const VertexId& w = f.image(v);
    const auto& yv = y.vertices();
    positions.push_back(
        static_cast<int>(std::lower_bound(yv.begin(), yv.end(), w) - yv.begin()));
  }
  return positions;
}

}  // namespace

int orientation_coefficient(const SelfMap& f, const Simplex& x) {
  if (!f.complex().contains(x)) {
    throw MapError("simplex " + x.to_string() + " is not in the complex");
  }
  const Simplex y = f.image(x);
  if (y != x) return 0;
  return permutation_sign(image_positions(f, x, y));
}

ChainMapMatrix chain_matrix(const SelfMap& f, const Complex& X, int q) {
  ChainMapMatrix out;
  out.q = q;
  const auto& basis = (q >= 0) ? X.simplices_of_dim(q) : std::vector<Simplex>{};
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  out.matrix = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const Simplex& x = basis[col];
    const Simplex y = f.image(x);
    if (y.dim() != q) continue;
    const int row = X.index_of(y);
    if (row < 0) continue;
    out.matrix(row, col) = permutation_sign(image_positions(f, x, y));
  }
  return out;
}

AdmissiblePair::AdmissiblePair(Complex X, Embedding e,
                               const std::map<VertexId, VertexId>& assignment)
    : embedding_(std::move(e)), map_(validate_map(X, assignment)) {
  validate_embedding(map_.complex(), embedding_);
}

AdmissiblePair AdmissiblePair::with_identity(Complex X, Embedding e) {
  std::map<VertexId, VertexId> assignment;
  for (const VertexId& v : X.vertices()) assignment.emplace(v, v);
  return AdmissiblePair(std::move(X), std::move(e), assignment);
}

}  // namespace lefvol
