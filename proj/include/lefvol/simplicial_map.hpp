#pragma once

#include <map>

#include <Eigen/Dense>

#include "lefvol/complex.hpp"
#include "lefvol/errors.hpp"
#include "lefvol/geometry.hpp"

namespace lefvol {

/// A validated simplicial self-map, specified by its vertex assignment.
/// Carries the complex it was validated against so simplex images and
/// orientation coefficients can be queried directly.
class SelfMap {
 public:
  const Complex& complex() const { return complex_; }
  const std::map<VertexId, VertexId>& assignment() const { return assignment_; }

  const VertexId& image(const VertexId& v) const;
  /// Image simplex: the simplex spanned by the image vertex set (dimension
  /// may drop when vertices collide).
  Simplex image(const Simplex& s) const;

  bool is_identity() const;

 private:
  SelfMap(Complex X, std::map<VertexId, VertexId> assignment)
      : complex_(std::move(X)), assignment_(std::move(assignment)) {}

  friend SelfMap validate_map(const Complex& X,
                              const std::map<VertexId, VertexId>& assignment);

  Complex complex_;
  std::map<VertexId, VertexId> assignment_;
};

/// Checks that the assignment covers exactly the vertices of X, maps into
/// the vertices of X, and sends every simplex of X to a simplex of X.
/// Throws MapError naming the first violation.
SelfMap validate_map(const Complex& X, const std::map<VertexId, VertexId>& assignment);

/// The identity self-map on X.
SelfMap identity_map(const Complex& X);

/// c(f,x): 0 when f does not map x onto itself; otherwise the parity of the
/// induced vertex permutation (+1 even, -1 odd). Equals the coefficient of x
/// in the chain image f(x). Throws MapError when x is not in f's complex.
int orientation_coefficient(const SelfMap& f, const Simplex& x);

/// Integer matrix of the induced chain map in dimension q over the canonical
/// q-simplex basis of X.
struct ChainMapMatrix {
  int q = 0;
  Eigen::MatrixXi matrix;

  long trace() const {
    return matrix.size() == 0 ? 0 : matrix.diagonal().cast<long>().sum();
  }
};

/// Matrix of f on q-chains of X. X may be a subcomplex of f's complex: the
/// column of a simplex whose image leaves X is zero, while diagonal entries
/// always equal c(f,x). Out-of-range q gives an empty matrix.
ChainMapMatrix chain_matrix(const SelfMap& f, const Complex& X, int q);

/// A geometrically realized complex together with a simplicial self-map:
/// the domain on which Lefschetz volumes are defined.
class AdmissiblePair {
 public:
  /// Validates the assignment and the embedding against X.
  AdmissiblePair(Complex X, Embedding e, const std::map<VertexId, VertexId>& assignment);

  static AdmissiblePair with_identity(Complex X, Embedding e);

  const Complex& complex() const { return map_.complex(); }
  const Embedding& embedding() const { return embedding_; }
  const SelfMap& map() const { return map_; }

 private:
  Embedding embedding_;
  SelfMap map_;
};

}  // namespace lefvol
