#include "lefvol/valuations.hpp"

#include <algorithm>
#include <string>

namespace lefvol {

namespace {

double parity_sign(int exponent) { return (exponent % 2 == 0) ? 1.0 : -1.0; }

void check_index(const AdmissiblePair& pair, int k) {
  if (k < 0 || k > pair.embedding().ambient_dim()) {
    throw ConfigError("volume index " + std::to_string(k) +
                      " is outside [0, ambient dimension]");
  }
}

}  // namespace

Eigen::VectorXd LefschetzVolumeVector::to_vector() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i].value;
  return v;
}

Eigen::MatrixXd DiagonalVolumeMatrix::dense() const {
  const Eigen::Index n = static_cast<Eigen::Index>(diagonal.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diagonal[i].value;
  return m;
}

DiagonalVolumeMatrix diagonal_volume_matrix(const Complex& X, const Embedding& e,
                                            int q, int k, const MonteCarloConfig& mc) {
  DiagonalVolumeMatrix out;
  out.q = q;
  out.k = k;
  for (const Simplex& x : X.simplices_of_dim(q)) {
    out.diagonal.push_back(intrinsic_volume(x, e, k, mc));
  }
  return out;
}

Estimate lefschetz_volume_on(const AdmissiblePair& pair, const Complex& region, int k,
                             const MonteCarloConfig& mc) {
  check_index(pair, k);
  Estimate sum = Estimate::exact(0.0);
  for (int q = k; q <= region.dim(); ++q) {
    for (const Simplex& x : region.simplices_of_dim(q)) {
      const int c = orientation_coefficient(pair.map(), x);
      if (c == 0) continue;
      sum.accumulate(intrinsic_volume(x, pair.embedding(), k, mc),
                     parity_sign(q - k) * c);
    }
  }
  return sum;
}

Estimate lefschetz_volume(const AdmissiblePair& pair, int k, const MonteCarloConfig& mc) {
  return lefschetz_volume_on(pair, pair.complex(), k, mc);
}

Estimate lefschetz_volume_trace(const AdmissiblePair& pair, int k,
                                const MonteCarloConfig& mc) {
  check_index(pair, k);
  const Complex& X = pair.complex();
  Estimate sum = Estimate::exact(0.0);
  for (int q = 0; q <= X.dim(); ++q) {
    const ChainMapMatrix fq = chain_matrix(pair.map(), X, q);
    const DiagonalVolumeMatrix vqk =
        diagonal_volume_matrix(X, pair.embedding(), q, k, mc);
    const double sign = parity_sign(q - k);
    const double value = (fq.matrix.cast<double>() * vqk.dense()).trace();
    Estimate term = Estimate::exact(value);
    for (Eigen::Index i = 0; i < fq.matrix.rows(); ++i) {
      if (fq.matrix(i, i) != 0 && !vqk.diagonal[i].is_exact()) {
        term.std_error = std::sqrt(term.std_error * term.std_error +
                                   vqk.diagonal[i].std_error * vqk.diagonal[i].std_error);
        term.provenance = Provenance::kMonteCarlo;
      }
    }
    sum.accumulate(term, sign);
  }
  return sum;
}

LefschetzVolumeVector lefschetz_volumes(const AdmissiblePair& pair,
                                        const MonteCarloConfig& mc) {
  LefschetzVolumeVector out;
  const int n = pair.embedding().ambient_dim();
  out.values.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    out.values.push_back(lefschetz_volume(pair, k, mc));
  }
  return out;
}

Estimate open_valuation(const AdmissiblePair& pair, const Simplex& x, int k,
                        const MonteCarloConfig& mc) {
  if (!pair.complex().contains(x)) {
    throw MapError("simplex " + x.to_string() + " is not in the complex");
  }
  const Complex closed = closure({x});
  Complex boundary = Complex::empty();
  if (x.dim() > 0) {
    boundary = closure(x.faces_of_dim(x.dim() - 1));
  }
  Estimate out = lefschetz_volume_on(pair, closed, k, mc);
  out.accumulate(lefschetz_volume_on(pair, boundary, k, mc), -1.0);
  return out;
}

Estimate evaluate_linear_valuation(const ValuationSpec& spec, const AdmissiblePair& pair,
                                   const MonteCarloConfig& mc) {
  const int n = pair.embedding().ambient_dim();
  if (spec.coefficients.size() != n + 1) {
    throw ConfigError("valuation spec has " + std::to_string(spec.coefficients.size()) +
                      " coefficients, expected " + std::to_string(n + 1));
  }
  Estimate sum = Estimate::exact(0.0);
  for (int k = 0; k <= n; ++k) {
    if (spec.coefficients(k) == 0.0) continue;
    sum.accumulate(lefschetz_volume(pair, k, mc), spec.coefficients(k));
  }
  return sum;
}

DecompositionResult hadwiger_decompose(const std::vector<Observation>& samples, int n,
                                       const MonteCarloConfig& mc) {
  if (n < 0) throw ConfigError("ambient dimension must be nonnegative");
  const Eigen::Index rows = static_cast<Eigen::Index>(samples.size());
  const Eigen::Index cols = n + 1;
  if (rows == 0) {
    throw RankDeficientError("no observations given", 0, static_cast<int>(cols));
  }
  Eigen::MatrixXd features(rows, cols);
  Eigen::VectorXd observed(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Observation& obs = samples[static_cast<std::size_t>(i)];
    if (obs.pair.embedding().ambient_dim() != n) {
      throw ConfigError("observation " + std::to_string(i) +
                        " lives in ambient dimension " +
                        std::to_string(obs.pair.embedding().ambient_dim()) +
                        ", expected " + std::to_string(n));
    }
    for (int k = 0; k <= n; ++k) {
      features(i, k) = lefschetz_volume(obs.pair, k, mc).value;
    }
    observed(i) = obs.value;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(features,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double sigma_max = (sigma.size() > 0) ? sigma(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > sigma_max * 1e-10 && sigma(i) > 0.0) ++rank;
  }
  if (rank < cols) {
    throw RankDeficientError(
        "feature vectors span only a rank-" + std::to_string(rank) +
            " subspace of the " + std::to_string(cols) + " coefficients",
        rank, static_cast<int>(cols) - rank);
  }

  DecompositionResult out;
  out.coefficients.coefficients = svd.solve(observed);
  out.residual_norm = (features * out.coefficients.coefficients - observed).norm();
  out.condition = sigma_max / sigma(sigma.size() - 1);
  out.rank = rank;
  return out;
}

std::vector<Simplex> fixed_point_witnesses(const AdmissiblePair& pair, int k) {
  check_index(pair, k);
  std::vector<Simplex> out;
  for (int q = k; q <= pair.complex().dim(); ++q) {
    for (const Simplex& x : pair.complex().simplices_of_dim(q)) {
      if (orientation_coefficient(pair.map(), x) != 0) out.push_back(x);
    }
  }
  return out;
}

}  // namespace lefvol
