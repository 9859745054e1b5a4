#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lefvol/complex.hpp"
#include "lefvol/estimate.hpp"
#include "lefvol/geometry.hpp"
#include "lefvol/simplicial_map.hpp"

namespace lefvol {

/// (v_0, ..., v_n) of an admissible pair, n the ambient dimension. Entries
/// with k > dim X are exactly 0; v_0 is always an integer-valued sum.
struct LefschetzVolumeVector {
  std::vector<Estimate> values;

  int top_index() const { return static_cast<int>(values.size()) - 1; }
  const Estimate& operator[](int k) const { return values[k]; }

  Eigen::VectorXd to_vector() const;
};

/// Coefficients a_0..a_n of a linear combination of Lefschetz volumes.
struct ValuationSpec {
  Eigen::VectorXd coefficients;
};

/// V_{q,k}: the diagonal matrix of mu_k over the canonical q-simplex basis.
struct DiagonalVolumeMatrix {
  int q = 0;
  int k = 0;
  std::vector<Estimate> diagonal;

  Eigen::MatrixXd dense() const;
};

DiagonalVolumeMatrix diagonal_volume_matrix(const Complex& X, const Embedding& e,
                                            int q, int k, const MonteCarloConfig& mc);

/// v_k(f,X) by the defining sum over simplices:
/// sum over x of (-1)^(dim x - k) c(f,x) mu_k(x).
Estimate lefschetz_volume(const AdmissiblePair& pair, int k, const MonteCarloConfig& mc);

/// The same sum restricted to the simplices of a subcomplex of pair's
/// complex; c(f,x) still refers to the full map. This is the valuation
/// v_k(f, region) that the additivity axiom quantifies over.
Estimate lefschetz_volume_on(const AdmissiblePair& pair, const Complex& region, int k,
                             const MonteCarloConfig& mc);

/// v_k(f,X) by the independent trace path:
/// sum over q of (-1)^(q-k) tr(f_q V_{q,k}).
Estimate lefschetz_volume_trace(const AdmissiblePair& pair, int k,
                                const MonteCarloConfig& mc);

/// All of v_0..v_n by the defining sum, n = ambient dimension.
LefschetzVolumeVector lefschetz_volumes(const AdmissiblePair& pair,
                                        const MonteCarloConfig& mc);

/// v_k(f, interior of x) = v_k(f, closure x) - v_k(f, boundary complex of x).
/// Equals c(f,x) mu_k(interior x). Throws MapError when x is not in X.
Estimate open_valuation(const AdmissiblePair& pair, const Simplex& x, int k,
                        const MonteCarloConfig& mc);

/// sum over k of a_k v_k(pair).
Estimate evaluate_linear_valuation(const ValuationSpec& spec, const AdmissiblePair& pair,
                                   const MonteCarloConfig& mc);

/// One observed value of an unknown valuation on one admissible pair.
struct Observation {
  AdmissiblePair pair;
  double value = 0.0;
};

struct DecompositionResult {
  ValuationSpec coefficients;
  double residual_norm = 0.0;
  /// Ratio of extreme singular values of the feature matrix.
  double condition = 0.0;
  int rank = 0;
};

/// Least-squares recovery of the coefficients a_0..a_n from observations
/// value_i of an unknown valuation: solve observed ~ sum_k a_k v_k(pair_i).
/// Throws RankDeficientError when the feature vectors do not span R^(n+1).
DecompositionResult hadwiger_decompose(const std::vector<Observation>& samples, int n,
                                       const MonteCarloConfig& mc);

/// All simplices x with c(f,x) != 0 and mu_k(x) != 0. For a nondegenerate
/// embedding mu_k(x) > 0 exactly when k <= dim x, so no sampling is needed.
/// Nonempty whenever |v_k| exceeds its tolerance, and every witness has
/// dimension at least k.
std::vector<Simplex> fixed_point_witnesses(const AdmissiblePair& pair, int k);

}  // namespace lefvol
