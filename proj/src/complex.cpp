#include "lefvol/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lefvol {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw MalformedSimplexError("a simplex needs at least one vertex");
  }
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw MalformedSimplexError("duplicate vertex '" + dup->label + "' in simplex");
  }
}

bool Simplex::has_vertex(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::has_face(const Simplex& other) const {
  return std::includes(vertices_.begin(), vertices_.end(),
                       other.vertices().begin(), other.vertices().end());
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t n = vertices_.size();
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(vertices_[i]);
    }
    out.emplace_back(std::move(sub));
  }
  return out;
}

std::vector<Simplex> Simplex::faces_of_dim(int k) const {
  std::vector<Simplex> out;
  for (auto& f : faces()) {
    if (f.dim() == k) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), CanonicalSimplexOrder{});
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i].label;
  }
  os << '}';
  return os.str();
}

Complex Complex::from_sorted_unchecked(std::vector<std::vector<Simplex>> by_dim) {
  Complex X;
  X.by_dim_ = std::move(by_dim);
  while (!X.by_dim_.empty() && X.by_dim_.back().empty()) X.by_dim_.pop_back();
  return X;
}

Complex Complex::from_simplices(std::vector<Simplex> simplices) {
  std::set<Simplex> present(simplices.begin(), simplices.end());
  for (const Simplex& s : present) {
    for (const Simplex& f : s.faces()) {
      if (!present.count(f)) {
        throw MalformedSimplexError("simplex set is not closed under faces: missing " +
                                    f.to_string() + " below " + s.to_string());
      }
    }
  }
  std::vector<std::vector<Simplex>> by_dim;
  for (const Simplex& s : present) {
    if (static_cast<int>(by_dim.size()) <= s.dim()) by_dim.resize(s.dim() + 1);
    by_dim[s.dim()].push_back(s);
  }
  for (auto& level : by_dim) {
    std::sort(level.begin(), level.end(), CanonicalSimplexOrder{});
  }
  return from_sorted_unchecked(std::move(by_dim));
}

const std::vector<Simplex>& Complex::simplices_of_dim(int q) const {
  static const std::vector<Simplex> kNone;
  if (q < 0 || q >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[q];
}

std::vector<Simplex> Complex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (const auto& level : by_dim_) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::size_t Complex::size() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

bool Complex::contains(const Simplex& s) const {
  return index_of(s) >= 0;
}

int Complex::index_of(const Simplex& s) const {
  const auto& level = simplices_of_dim(s.dim());
  auto it = std::lower_bound(level.begin(), level.end(), s, CanonicalSimplexOrder{});
  if (it == level.end() || !(*it == s)) return -1;
  return static_cast<int>(it - level.begin());
}

std::vector<VertexId> Complex::vertices() const {
  std::vector<VertexId> out;
  for (const Simplex& v : simplices_of_dim(0)) out.push_back(v.vertices()[0]);
  return out;
}

Complex closure(const std::vector<Simplex>& generators) {
  std::set<Simplex> present;
  for (const Simplex& g : generators) {
    for (Simplex& f : g.faces()) present.insert(std::move(f));
  }
  std::vector<std::vector<Simplex>> by_dim;
  for (const Simplex& s : present) {
    if (static_cast<int>(by_dim.size()) <= s.dim()) by_dim.resize(s.dim() + 1);
    by_dim[s.dim()].push_back(s);
  }
  for (auto& level : by_dim) {
    std::sort(level.begin(), level.end(), CanonicalSimplexOrder{});
  }
  return Complex::from_sorted_unchecked(std::move(by_dim));
}

ChainBoundary boundary_matrix(const Complex& X, int q) {
  const auto& rows = X.simplices_of_dim(q - 1);
  const auto& cols = X.simplices_of_dim(q);
  ChainBoundary b;
  b.q = q;
  b.matrix = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(rows.size()),
                                   static_cast<Eigen::Index>(cols.size()));
  if (q < 1) return b;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& verts = cols[j].vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::vector<VertexId> face;
      face.reserve(verts.size() - 1);
      for (std::size_t t = 0; t < verts.size(); ++t) {
        if (t != i) face.push_back(verts[t]);
      }
      const int row = X.index_of(Simplex(std::move(face)));
      const int sign = (i % 2 == 0) ? 1 : -1;
      b.matrix(row, static_cast<Eigen::Index>(j)) = sign;
    }
  }
  return b;
}

namespace {

std::vector<std::vector<Simplex>> merge_levels(
    const Complex& a, const Complex& b,
    const std::function<std::vector<Simplex>(const std::vector<Simplex>&,
                                             const std::vector<Simplex>&)>& op) {
  const int top = std::max(a.dim(), b.dim());
  std::vector<std::vector<Simplex>> by_dim;
  for (int q = 0; q <= top; ++q) {
    by_dim.push_back(op(a.simplices_of_dim(q), b.simplices_of_dim(q)));
  }
  return by_dim;
}

}  // namespace

Complex complex_union(const Complex& a, const Complex& b) {
  auto by_dim = merge_levels(a, b, [](const auto& x, const auto& y) {
    std::vector<Simplex> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out),
                   CanonicalSimplexOrder{});
    return out;
  });
  return Complex::from_sorted_unchecked(std::move(by_dim));
}

Complex complex_intersection(const Complex& a, const Complex& b) {
  auto by_dim = merge_levels(a, b, [](const auto& x, const auto& y) {
    std::vector<Simplex> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                          std::back_inserter(out), CanonicalSimplexOrder{});
    return out;
  });
  return Complex::from_sorted_unchecked(std::move(by_dim));
}

std::pair<Complex, Complex> subcomplex_union_intersection(const Complex& X,
                                                          const Complex& Y) {
  return {complex_union(X, Y), complex_intersection(X, Y)};
}

}  // namespace lefvol
