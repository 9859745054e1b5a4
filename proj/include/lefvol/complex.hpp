#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lefvol/errors.hpp"

namespace lefvol {

/// A vertex of an abstract complex, identified by its label. Labels carry a
/// total (lexicographic) order that fixes the canonical orientation of every
/// simplex.
struct VertexId {
  std::string label;

  auto operator<=>(const VertexId&) const = default;
};

/// An abstract simplex: a strictly ascending list of vertices.
class Simplex {
 public:
  /// Sorts the vertices; throws MalformedSimplexError on duplicates or an
  /// empty list (the empty set is not a simplex).
  explicit Simplex(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }

  bool has_vertex(const VertexId& v) const;
  /// True if every vertex of `other` is a vertex of this simplex.
  bool has_face(const Simplex& other) const;

  /// All nonempty subsets of the vertex set, including the simplex itself.
  std::vector<Simplex> faces() const;
  /// Faces of dimension exactly k.
  std::vector<Simplex> faces_of_dim(int k) const;

  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

/// Canonical order used everywhere simplices are enumerated: by dimension,
/// then lexicographically on the vertex list.
struct CanonicalSimplexOrder {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.vertices() < b.vertices();
  }
};

/// Integer boundary matrix from q-chains to (q-1)-chains over the canonical
/// simplex bases. Entries lie in {-1, 0, +1} and consecutive boundaries
/// compose to zero.
struct ChainBoundary {
  int q = 0;
  Eigen::MatrixXi matrix;
};

/// A finite abstract simplicial complex: a set of simplices closed under
/// taking faces. The empty complex is allowed and stands for the empty set.
class Complex {
 public:
  Complex() = default;

  static Complex empty() { return Complex(); }

  /// Builds a complex from an already face-closed simplex set; throws if the
  /// set is not closed under faces.
  static Complex from_simplices(std::vector<Simplex> simplices);

  bool is_empty() const { return by_dim_.empty(); }
  /// Dimension of the complex; -1 for the empty complex.
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// Simplices of dimension q in canonical order (empty for q out of range).
  const std::vector<Simplex>& simplices_of_dim(int q) const;
  /// All simplices, dimension-major, canonical order within each dimension.
  std::vector<Simplex> all_simplices() const;
  std::size_t size() const;
  std::size_t count_of_dim(int q) const { return simplices_of_dim(q).size(); }

  bool contains(const Simplex& s) const;
  /// Position of s within simplices_of_dim(s.dim()); -1 when absent.
  int index_of(const Simplex& s) const;

  /// Vertices of the complex in canonical label order.
  std::vector<VertexId> vertices() const;

  bool operator==(const Complex& other) const { return by_dim_ == other.by_dim_; }

 private:
  // by_dim_[q] holds the q-simplices, sorted lexicographically.
  std::vector<std::vector<Simplex>> by_dim_;

  friend Complex closure(const std::vector<Simplex>& generators);
  friend Complex complex_union(const Complex& a, const Complex& b);
  friend Complex complex_intersection(const Complex& a, const Complex& b);
  static Complex from_sorted_unchecked(std::vector<std::vector<Simplex>> by_dim);
};

/// Smallest complex containing all generators.
Complex closure(const std::vector<Simplex>& generators);

/// Standard simplicial boundary operator with sign (-1)^i for omitting the
/// i-th vertex in canonical order. Out-of-range q yields an empty matrix of
/// the correct shape.
ChainBoundary boundary_matrix(const Complex& X, int q);

Complex complex_union(const Complex& a, const Complex& b);
Complex complex_intersection(const Complex& a, const Complex& b);

/// (X ∪ Y, X ∩ Y) in one call.
std::pair<Complex, Complex> subcomplex_union_intersection(const Complex& X,
                                                          const Complex& Y);

}  // namespace lefvol
