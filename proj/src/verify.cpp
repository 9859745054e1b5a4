#include "lefvol/verify.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "lefvol/fixtures.hpp"
#include "lefvol/geometry.hpp"
#include "lefvol/rng.hpp"
#include "lefvol/valuations.hpp"

namespace lefvol {

namespace {

using nlohmann::ordered_json;

constexpr double kExactTol = 1e-9;
constexpr std::uint64_t kMcSamples = 1000000;

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

ordered_json cfg_json(const RandomComplexConfig& cfg) {
  return ordered_json{{"max_vertices", cfg.max_vertices},
                      {"max_dim", cfg.max_dim},
                      {"ambient_dim", cfg.ambient_dim},
                      {"edge_scale", cfg.edge_scale},
                      {"seed", cfg.seed}};
}

bool same_matrix(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.size() == 0 || (a - b).cwiseAbs().maxCoeff() == 0;
}

/// Collects checks for one suite run; each check counts as a case.
class SuiteRun {
 public:
  SuiteRun(std::string name, std::uint64_t seed) {
    report_.suite = std::move(name);
    report_.seed = seed;
    stream_seed_ = Rng(seed).child(fnv1a64(report_.suite)).seed();
  }

  /// Deterministic seed for the i-th random case of this suite.
  std::uint64_t case_seed(std::uint64_t i) const {
    return Rng(stream_seed_).child(i).seed();
  }

  void check_close(const std::string& case_id, const ordered_json& inputs,
                   double expected, double got, double tol) {
    ++report_.cases;
    if (std::abs(expected - got) <= tol && std::isfinite(got)) return;
    report_.failures.push_back(
        SuiteFailure{case_id, inputs.dump(), fmt(expected), fmt(got), tol});
  }

  void check_true(const std::string& case_id, const ordered_json& inputs, bool ok,
                  const std::string& expected, const std::string& got) {
    ++report_.cases;
    if (ok) return;
    report_.failures.push_back(SuiteFailure{case_id, inputs.dump(), expected, got, 0.0});
  }

  SuiteReport finish(std::chrono::steady_clock::time_point start) {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::uint64_t stream_seed_ = 0;
};

RandomComplexConfig corpus_config(std::uint64_t seed) {
  RandomComplexConfig cfg;
  cfg.max_vertices = 12;
  cfg.max_dim = 3;
  cfg.ambient_dim = 3;
  cfg.edge_scale = 2.0;
  cfg.seed = seed;
  return cfg;
}

Complex random_subcomplex(const Complex& X, Rng& rng) {
  std::vector<Simplex> generators;
  for (const Simplex& s : X.all_simplices()) {
    if (rng.uniform01() < 0.35) generators.push_back(s);
  }
  return closure(generators);
}

/// A random nondegenerate d-simplex with vertices in [-2, 2]^ambient.
std::pair<Simplex, Embedding> random_simplex(int d, int ambient, std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
    Rng rng = Rng(seed).child(attempt);
    std::vector<VertexId> vertices;
    std::map<VertexId, Eigen::VectorXd> coords;
    for (int i = 0; i <= d; ++i) {
      std::ostringstream label;
      label << "v" << std::setw(2) << std::setfill('0') << (i + 1);
      VertexId v{label.str()};
      Eigen::VectorXd x(ambient);
      for (int j = 0; j < ambient; ++j) x(j) = rng.uniform(-2.0, 2.0);
      vertices.push_back(v);
      coords.emplace(std::move(v), std::move(x));
    }
    Simplex s(vertices);
    Embedding e(ambient, std::move(coords));
    if (!simplex_volume(s, e).degenerate) return {std::move(s), std::move(e)};
  }
  throw GenerationError("could not sample a nondegenerate simplex");
}

void suite_boundary(SuiteRun& run, int budget) {
  for (int i = 0; i < budget; ++i) {
    RandomComplexConfig cfg = corpus_config(run.case_seed(static_cast<std::uint64_t>(i)));
    const AdmissiblePair pair = generate_random_pair(cfg);
    const Complex& X = pair.complex();
    const std::string id = "boundary/" + std::to_string(i);
    const ordered_json inputs{{"config", cfg_json(cfg)}};

    for (int q = 1; q <= X.dim(); ++q) {
      const ChainBoundary bq = boundary_matrix(X, q);
      run.check_true(id + "/entries_q" + std::to_string(q), inputs,
                     (bq.matrix.array().abs() <= 1).all(),
                     "all boundary entries in {-1,0,+1}", "an entry out of range");
      if (q >= 2) {
        const ChainBoundary bq1 = boundary_matrix(X, q - 1);
        const Eigen::MatrixXi product = bq1.matrix * bq.matrix;
        run.check_true(id + "/dd_zero_q" + std::to_string(q), inputs,
                       same_matrix(product, Eigen::MatrixXi::Zero(product.rows(),
                                                                  product.cols())),
                       "boundary composed with boundary is zero",
                       "a nonzero composition entry");
      }
    }
    if (X.dim() >= 1) {
      const ChainBoundary b1 = boundary_matrix(X, 1);
      bool columns_ok = true;
      for (Eigen::Index c = 0; c < b1.matrix.cols(); ++c) {
        columns_ok = columns_ok && b1.matrix.col(c).sum() == 0 &&
                     b1.matrix.col(c).cwiseAbs().sum() == 2;
      }
      run.check_true(id + "/edge_columns", inputs, columns_ok,
                     "each edge column holds one -1 and one +1", "a malformed column");
    }
  }
}

void suite_chain(SuiteRun& run, int budget) {
  for (int i = 0; i < budget; ++i) {
    RandomComplexConfig cfg = corpus_config(run.case_seed(static_cast<std::uint64_t>(i)));
    const AdmissiblePair pair = generate_random_pair(cfg);
    const Complex& X = pair.complex();
    const SelfMap& f = pair.map();
    const std::string id = "chain/" + std::to_string(i);
    const ordered_json inputs{{"config", cfg_json(cfg)}};

    std::map<VertexId, VertexId> squared;
    for (const auto& [v, w] : f.assignment()) squared.emplace(v, f.image(w));
    const SelfMap ff = validate_map(X, squared);
    const SelfMap id_map = identity_map(X);

    for (int q = 0; q <= X.dim(); ++q) {
      const ChainMapMatrix fq = chain_matrix(f, X, q);
      if (q >= 1) {
        const ChainMapMatrix fq1 = chain_matrix(f, X, q - 1);
        const ChainBoundary bq = boundary_matrix(X, q);
        run.check_true(id + "/functorial_q" + std::to_string(q), inputs,
                       same_matrix(bq.matrix * fq.matrix, fq1.matrix * bq.matrix),
                       "boundary commutes with the chain map", "a mismatch");
      }
      long coefficient_sum = 0;
      for (const Simplex& x : X.simplices_of_dim(q)) {
        coefficient_sum += orientation_coefficient(f, x);
      }
      run.check_true(id + "/trace_q" + std::to_string(q), inputs,
                     fq.trace() == coefficient_sum,
                     "trace equals the orientation coefficient sum",
                     std::to_string(fq.trace()) + " vs " +
                         std::to_string(coefficient_sum));
      run.check_true(id + "/identity_q" + std::to_string(q), inputs,
                     same_matrix(chain_matrix(id_map, X, q).matrix,
                                 Eigen::MatrixXi::Identity(fq.matrix.rows(),
                                                           fq.matrix.cols())),
                     "identity map gives the identity matrix",
                     "a non-identity matrix");
      run.check_true(id + "/compose_q" + std::to_string(q), inputs,
                     same_matrix(chain_matrix(ff, X, q).matrix,
                                 fq.matrix * fq.matrix),
                     "chain matrix of the squared map equals the squared matrix",
                     "a mismatch");
    }
  }
}

void suite_additivity(SuiteRun& run, int budget) {
  const MonteCarloConfig mc{kMcSamples, 0};
  for (int i = 0; i < budget; ++i) {
    RandomComplexConfig cfg = corpus_config(run.case_seed(static_cast<std::uint64_t>(i)));
    const AdmissiblePair pair = generate_random_pair(cfg);
    Rng rng = Rng(cfg.seed).child(fnv1a64("subcomplexes"));
    const Complex A = random_subcomplex(pair.complex(), rng);
    const Complex B = random_subcomplex(pair.complex(), rng);
    const auto [u, n] = subcomplex_union_intersection(A, B);
    const std::string id = "additivity/" + std::to_string(i);
    const ordered_json inputs{{"config", cfg_json(cfg)},
                              {"subcomplex_sizes", {A.size(), B.size()}}};

    for (int k = 0; k <= pair.embedding().ambient_dim(); ++k) {
      Estimate lhs = lefschetz_volume_on(pair, A, k, mc);
      lhs.accumulate(lefschetz_volume_on(pair, B, k, mc));
      Estimate rhs = lefschetz_volume_on(pair, u, k, mc);
      rhs.accumulate(lefschetz_volume_on(pair, n, k, mc));
      run.check_close(id + "/k" + std::to_string(k), inputs, lhs.value, rhs.value,
                      kExactTol);
    }
  }
}

void suite_simplex_property(SuiteRun& run, int budget) {
  const MonteCarloConfig mc{kMcSamples, 0};
  for (int i = 0; i < budget; ++i) {
    RandomComplexConfig cfg = corpus_config(run.case_seed(static_cast<std::uint64_t>(i)));
    const AdmissiblePair pair = generate_random_pair(cfg);
    const std::vector<Simplex> all = pair.complex().all_simplices();
    Rng rng = Rng(cfg.seed).child(fnv1a64("sampled simplices"));
    const std::size_t picks = std::min<std::size_t>(all.size(), 12);
    const std::string id = "simplex_property/" + std::to_string(i);

    for (std::size_t pick = 0; pick < picks; ++pick) {
      const Simplex& x = all[rng.below(all.size())];
      const int c = orientation_coefficient(pair.map(), x);
      const Complex closed = closure({x});
      const Complex boundary = (x.dim() > 0)
                                   ? closure(x.faces_of_dim(x.dim() - 1))
                                   : Complex::empty();
      const ordered_json inputs{{"config", cfg_json(cfg)}, {"simplex", x.to_string()}};
      for (int k = 0; k <= pair.embedding().ambient_dim(); ++k) {
        const double lhs = lefschetz_volume_on(pair, closed, k, mc).value;
        double rhs = lefschetz_volume_on(pair, boundary, k, mc).value;
        if (c != 0 && k <= x.dim()) {
          rhs += c * open_intrinsic_volumes(x, pair.embedding(), mc)[k].value;
        }
        run.check_close(id + "/" + x.to_string() + "/k" + std::to_string(k), inputs,
                        lhs, rhs, kExactTol);
      }
    }
  }
}

void suite_open_decomp(SuiteRun& run, int budget) {
  const MonteCarloConfig mc{kMcSamples, 0};
  for (int i = 0; i < budget; ++i) {
    RandomComplexConfig cfg = corpus_config(run.case_seed(static_cast<std::uint64_t>(i)));
    const AdmissiblePair pair = generate_random_pair(cfg);
    const AdmissiblePair id_pair =
        AdmissiblePair::with_identity(pair.complex(), pair.embedding());
    const std::string id = "open_decomp/" + std::to_string(i);
    const ordered_json inputs{{"config", cfg_json(cfg)}};

    for (int k = 0; k <= pair.embedding().ambient_dim(); ++k) {
      double open_sum = 0.0;
      for (const Simplex& x : pair.complex().all_simplices()) {
        open_sum += open_valuation(pair, x, k, mc).value;
      }
      run.check_close(id + "/open_sum_k" + std::to_string(k), inputs,
                      lefschetz_volume(pair, k, mc).value, open_sum, kExactTol);

      double open_mu_sum = 0.0;
      for (const Simplex& x : pair.complex().all_simplices()) {
        if (k <= x.dim()) {
          open_mu_sum += open_intrinsic_volumes(x, pair.embedding(), mc)[k].value;
        }
      }
      run.check_close(id + "/identity_k" + std::to_string(k), inputs,
                      lefschetz_volume(id_pair, k, mc).value, open_mu_sum, kExactTol);
    }
  }
}

void suite_int_vol_open(SuiteRun& run, int budget) {
  const int cases = std::min(budget, 24);
  for (int i = 0; i < cases; ++i) {
    const int d = 1 + (i % 4);
    const std::uint64_t seed = run.case_seed(static_cast<std::uint64_t>(i));
    const auto [s, e] = random_simplex(d, 4, seed);
    const MonteCarloConfig mc{kMcSamples, seed};
    const IntrinsicVolumeVector sign_path = open_intrinsic_volumes(s, e, mc);
    const IntrinsicVolumeVector boundary_path =
        open_intrinsic_volumes_by_boundary(s, e, mc);
    const std::string id = "int_vol_open/" + std::to_string(i);
    const ordered_json inputs{{"dim", d}, {"ambient_dim", 4}, {"seed", seed}};

    for (int k = 0; k <= d; ++k) {
      const Estimate& a = sign_path[k];
      const Estimate& b = boundary_path[k];
      // The two paths share Monte Carlo estimates, so their errors are
      // correlated; the sum of standard errors bounds the error of the
      // difference for any correlation.
      const double tol = std::max(kExactTol, 3.0 * (a.std_error + b.std_error));
      run.check_close(id + "/k" + std::to_string(k), inputs, a.value, b.value, tol);
    }
  }
}

void suite_invariance(SuiteRun& run, int budget) {
  const MonteCarloConfig mc{kMcSamples, 0};
  const int pairs = std::min(budget, 20);
  for (int i = 0; i < pairs; ++i) {
    RandomComplexConfig cfg = corpus_config(run.case_seed(static_cast<std::uint64_t>(i)));
    const AdmissiblePair pair = generate_random_pair(cfg);
    const LefschetzVolumeVector base = lefschetz_volumes(pair, mc);
    const int n = pair.embedding().ambient_dim();
    const std::string id = "invariance/" + std::to_string(i);

    for (int j = 0; j < 100; ++j) {
      const std::uint64_t phi_seed =
          Rng(cfg.seed).child(fnv1a64("isometry")).child(static_cast<std::uint64_t>(j)).seed();
      const IsometrySpec phi = sample_isometry(n, phi_seed, 3.0);
      const AdmissiblePair moved(pair.complex(), apply_isometry(pair.embedding(), phi),
                                 pair.map().assignment());
      const LefschetzVolumeVector after = lefschetz_volumes(moved, mc);
      const ordered_json inputs{{"config", cfg_json(cfg)}, {"isometry_seed", phi_seed}};
      for (int k = 0; k <= n; ++k) {
        run.check_close(id + "/phi" + std::to_string(j) + "/k" + std::to_string(k),
                        inputs, base[k].value, after[k].value, 1e-6);
      }
    }
  }
}

std::pair<Simplex, Embedding> steiner_shape(const std::string& name) {
  const double h = std::sqrt(3.0) / 2.0;
  std::map<VertexId, Eigen::VectorXd> coords;
  if (name == "segment") {
    coords.emplace(VertexId{"v01"}, Eigen::Vector2d(0.0, 0.0));
    coords.emplace(VertexId{"v02"}, Eigen::Vector2d(1.0, 0.0));
    return {Simplex({VertexId{"v01"}, VertexId{"v02"}}), Embedding(2, std::move(coords))};
  }
  if (name == "triangle") {
    coords.emplace(VertexId{"v01"}, Eigen::Vector2d(0.0, 0.0));
    coords.emplace(VertexId{"v02"}, Eigen::Vector2d(1.0, 0.0));
    coords.emplace(VertexId{"v03"}, Eigen::Vector2d(0.5, h));
    return {Simplex({VertexId{"v01"}, VertexId{"v02"}, VertexId{"v03"}}),
            Embedding(2, std::move(coords))};
  }
  coords.emplace(VertexId{"v01"}, Eigen::Vector3d(0.0, 0.0, 0.0));
  coords.emplace(VertexId{"v02"}, Eigen::Vector3d(1.0, 0.0, 0.0));
  coords.emplace(VertexId{"v03"}, Eigen::Vector3d(0.5, h, 0.0));
  coords.emplace(VertexId{"v04"},
                 Eigen::Vector3d(0.5, std::sqrt(3.0) / 6.0, std::sqrt(6.0) / 3.0));
  return {Simplex({VertexId{"v01"}, VertexId{"v02"}, VertexId{"v03"}, VertexId{"v04"}}),
          Embedding(3, std::move(coords))};
}

void suite_steiner(SuiteRun& run, int /*budget*/) {
  const std::vector<std::string> shapes = {"segment", "triangle", "tetrahedron"};
  const std::vector<double> radii = {0.1, 0.5, 1.0};
  int index = 0;
  for (const std::string& shape : shapes) {
    const auto [s, e] = steiner_shape(shape);
    const MonteCarloConfig mc{kMcSamples, 0};
    const IntrinsicVolumeVector mu = intrinsic_volumes(s, e, mc);
    const int n = e.ambient_dim();
    for (double rho : radii) {
      const std::uint64_t seed = run.case_seed(static_cast<std::uint64_t>(index++));
      double steiner_sum = 0.0;
      for (int k = 0; k <= s.dim(); ++k) {
        steiner_sum += std::pow(rho, n - k) * unit_ball_volume(n - k) * mu[k].value;
      }
      const TubeEstimate tube = tube_volume_mc(s, e, rho, kMcSamples, seed);
      const ordered_json inputs{
          {"shape", shape}, {"rho", rho}, {"samples", kMcSamples}, {"seed", seed}};
      run.check_close("steiner/" + shape + "/rho" + std::to_string(rho), inputs,
                      steiner_sum, tube.volume_estimate, 3.0 * tube.std_error);
    }
  }
}

void suite_vertex_angles(SuiteRun& run, int budget) {
  const int cases = std::min(budget, 24);
  for (int i = 0; i < cases; ++i) {
    const int d = 1 + (i % 4);
    const std::uint64_t seed = run.case_seed(static_cast<std::uint64_t>(i));
    const auto [s, e] = random_simplex(d, 4, seed);
    const MonteCarloConfig mc{kMcSamples, seed};
    Estimate sum = Estimate::exact(0.0);
    for (const Simplex& v : s.faces_of_dim(0)) {
      sum.accumulate(external_angle(v, s, e, mc));
    }
    const ordered_json inputs{{"dim", d}, {"ambient_dim", 4}, {"seed", seed}};
    const double tol = (d <= 2) ? kExactTol : comparison_tolerance(sum, Estimate::exact(1.0));
    run.check_close("vertex_angles/" + std::to_string(i), inputs, 1.0, sum.value, tol);
  }
}

void suite_trace_equiv(SuiteRun& run, int budget) {
  const MonteCarloConfig mc{kMcSamples, 0};
  for (int i = 0; i < budget; ++i) {
    RandomComplexConfig cfg = corpus_config(run.case_seed(static_cast<std::uint64_t>(i)));
    const AdmissiblePair pair = generate_random_pair(cfg);
    const std::string id = "trace_equiv/" + std::to_string(i);
    const ordered_json inputs{{"config", cfg_json(cfg)}};
    for (int k = 0; k <= pair.embedding().ambient_dim(); ++k) {
      const Estimate direct = lefschetz_volume(pair, k, mc);
      const Estimate trace = lefschetz_volume_trace(pair, k, mc);
      run.check_close(id + "/k" + std::to_string(k), inputs, direct.value, trace.value,
                      comparison_tolerance(direct, trace));
    }
  }
}

void suite_hadwiger_fit(SuiteRun& run, int /*budget*/) {
  const MonteCarloConfig mc{kMcSamples, 0};
  constexpr int n = 2;

  std::vector<AdmissiblePair> candidates;
  std::vector<Eigen::RowVector3d> rows;
  int current_rank = 0;
  for (int i = 0; i < 40 && candidates.size() < 10; ++i) {
    RandomComplexConfig cfg;
    cfg.max_vertices = 8;
    cfg.max_dim = 2;
    cfg.ambient_dim = 2;
    cfg.edge_scale = 2.0;
    cfg.seed = run.case_seed(static_cast<std::uint64_t>(i));
    const AdmissiblePair pair = generate_random_pair(cfg);

    Eigen::RowVector3d row;
    for (int k = 0; k <= n; ++k) row(k) = lefschetz_volume(pair, k, mc).value;
    Eigen::MatrixXd features(static_cast<Eigen::Index>(rows.size()) + 1, n + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      features.row(static_cast<Eigen::Index>(r)) = rows[r];
    }
    features.row(features.rows() - 1) = row;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(features);
    const Eigen::VectorXd& sigma = svd.singularValues();
    int rank = 0;
    for (Eigen::Index j = 0; j < sigma.size(); ++j) {
      if (sigma(j) > sigma(0) * 1e-10 && sigma(j) > 0.0) ++rank;
    }
    // Keep a pair while it raises the feature rank, then pad freely once the
    // features span all coefficients.
    if (rank > current_rank || current_rank >= n + 1) {
      candidates.push_back(pair);
      rows.push_back(row);
      current_rank = rank;
    }
  }
  run.check_true("hadwiger_fit/observations", ordered_json{{"wanted", 10}},
                 candidates.size() == 10, "10 full-rank observations",
                 std::to_string(candidates.size()) + " observations");
  if (candidates.size() < 10) return;

  const std::vector<Eigen::Vector3d> planted = {
      {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {2.0, 3.0, 0.0}, {-1.0, 0.5, 4.0}};
  for (const Eigen::Vector3d& coeffs : planted) {
    ValuationSpec spec;
    spec.coefficients = coeffs;
    std::vector<Observation> observations;
    for (const AdmissiblePair& pair : candidates) {
      observations.push_back(
          Observation{pair, evaluate_linear_valuation(spec, pair, mc).value});
    }
    const std::string id = "hadwiger_fit/planted(" + fmt(coeffs(0)) + "," +
                           fmt(coeffs(1)) + "," + fmt(coeffs(2)) + ")";
    const ordered_json inputs{{"planted", {coeffs(0), coeffs(1), coeffs(2)}},
                              {"observations", candidates.size()}};
    try {
      const DecompositionResult result = hadwiger_decompose(observations, n, mc);
      for (int k = 0; k <= n; ++k) {
        run.check_close(id + "/a" + std::to_string(k), inputs, coeffs(k),
                        result.coefficients.coefficients(k), 1e-6);
      }
      run.check_close(id + "/residual", inputs, 0.0, result.residual_norm, 1e-6);
    } catch (const RankDeficientError& e) {
      run.check_true(id, inputs, false, "a full-rank decomposition", e.what());
    }
  }

  bool rejected = false;
  int null_dim = 0;
  std::vector<Observation> degenerate;
  for (int copy = 0; copy < 4; ++copy) {
    degenerate.push_back(Observation{candidates[0], static_cast<double>(copy)});
  }
  try {
    hadwiger_decompose(degenerate, n, mc);
  } catch (const RankDeficientError& e) {
    rejected = true;
    null_dim = e.null_space_dim;
  }
  run.check_true("hadwiger_fit/rank_deficient",
                 ordered_json{{"rows", 4}, {"distinct_pairs", 1}},
                 rejected && null_dim == 2,
                 "rejection with null space dimension 2",
                 rejected ? "null space dimension " + std::to_string(null_dim)
                          : "no rejection");
}

void suite_paper_examples(SuiteRun& run, int /*budget*/) {
  const MonteCarloConfig mc{kMcSamples, 0};
  const ordered_json no_inputs = ordered_json::object();
  const double root3_4 = std::sqrt(3.0) / 4.0;

  {
    const AdmissiblePair pair = fixtures::example_pair("example1");
    const std::vector<long> expected_traces = {3, 2, -1};
    for (int q = 0; q <= 2; ++q) {
      const long trace = chain_matrix(pair.map(), pair.complex(), q).trace();
      run.check_true("example1/trace_q" + std::to_string(q),
                     ordered_json{{"fixture", "example1"}},
                     trace == expected_traces[static_cast<std::size_t>(q)],
                     std::to_string(expected_traces[static_cast<std::size_t>(q)]),
                     std::to_string(trace));
    }
    const std::vector<double> expected_v = {0.0, 3.5, -root3_4};
    for (int k = 0; k <= 2; ++k) {
      run.check_close("example1/v" + std::to_string(k),
                      ordered_json{{"fixture", "example1"}}, expected_v[k],
                      lefschetz_volume(pair, k, mc).value, kExactTol);
      run.check_close("example1/v" + std::to_string(k) + "_trace",
                      ordered_json{{"fixture", "example1"}}, expected_v[k],
                      lefschetz_volume_trace(pair, k, mc).value, kExactTol);
    }
    const AdmissiblePair id_pair =
        AdmissiblePair::with_identity(pair.complex(), pair.embedding());
    run.check_close("example1/identity_v0", no_inputs, 0.0,
                    lefschetz_volume(id_pair, 0, mc).value, kExactTol);
    run.check_close("example1/identity_v1", no_inputs, 4.5,
                    lefschetz_volume(id_pair, 1, mc).value, kExactTol);
  }

  {
    const AdmissiblePair pair = fixtures::example_pair("example2");
    run.check_close("example2/v0", ordered_json{{"fixture", "example2"}}, 0.0,
                    lefschetz_volume(pair, 0, mc).value, kExactTol);
    run.check_close("example2/v1", ordered_json{{"fixture", "example2"}}, 0.0,
                    lefschetz_volume(pair, 1, mc).value, kExactTol);
    const std::vector<Simplex> witnesses = fixed_point_witnesses(pair, 0);
    run.check_true("example2/witnesses_k0", ordered_json{{"fixture", "example2"}},
                   !witnesses.empty(), "a nonempty witness list", "an empty list");
  }

  {
    const AdmissiblePair x = fixtures::example_pair("example3_X");
    const AdmissiblePair y = fixtures::example_pair("example3_Y");
    run.check_close("example3_X/v0", ordered_json{{"fixture", "example3_X"}}, 1.0,
                    lefschetz_volume(x, 0, mc).value, kExactTol);
    run.check_close("example3_X/v1", ordered_json{{"fixture", "example3_X"}}, -2.0,
                    lefschetz_volume(x, 1, mc).value, kExactTol);
    run.check_close("example3_Y/v0", ordered_json{{"fixture", "example3_Y"}}, 1.0,
                    lefschetz_volume(y, 0, mc).value, kExactTol);
    run.check_close("example3_Y/v1", ordered_json{{"fixture", "example3_Y"}}, 0.0,
                    lefschetz_volume(y, 1, mc).value, kExactTol);
  }
}

}  // namespace

AdmissiblePair generate_random_pair(const RandomComplexConfig& cfg) {
  if (cfg.max_vertices < 1 || cfg.max_vertices > 99) {
    throw ConfigError("max_vertices must lie in [1, 99]");
  }
  if (cfg.max_dim < 0) throw ConfigError("max_dim must be nonnegative");
  if (cfg.ambient_dim < 1) throw ConfigError("ambient_dim must be at least 1");
  if (cfg.max_dim > cfg.ambient_dim) {
    throw ConfigError("max_dim must not exceed ambient_dim");
  }
  if (!(cfg.edge_scale > 0.0)) throw ConfigError("edge_scale must be positive");

  for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
    Rng rng = Rng(cfg.seed).child(attempt);
    const int nv = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.max_vertices)));

    std::vector<VertexId> vertices;
    std::map<VertexId, Eigen::VectorXd> coords;
    for (int i = 0; i < nv; ++i) {
      std::ostringstream label;
      label << "v" << std::setw(2) << std::setfill('0') << (i + 1);
      VertexId v{label.str()};
      Eigen::VectorXd x(cfg.ambient_dim);
      for (int j = 0; j < cfg.ambient_dim; ++j) {
        x(j) = rng.uniform(-cfg.edge_scale, cfg.edge_scale);
      }
      vertices.push_back(v);
      coords.emplace(std::move(v), std::move(x));
    }

    std::vector<Simplex> generators;
    for (const VertexId& v : vertices) generators.push_back(Simplex({v}));
    const int max_size = std::min(cfg.max_dim + 1, nv);
    const std::uint64_t extra = rng.below(static_cast<std::uint64_t>(2 * nv + 1));
    for (std::uint64_t g = 0; g < extra && max_size >= 2; ++g) {
      const int size = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size - 1)));
      std::vector<int> indices(static_cast<std::size_t>(nv));
      for (int i = 0; i < nv; ++i) indices[static_cast<std::size_t>(i)] = i;
      std::vector<VertexId> picked;
      for (int i = 0; i < size; ++i) {
        const std::uint64_t j = static_cast<std::uint64_t>(i) +
                                rng.below(static_cast<std::uint64_t>(nv - i));
        std::swap(indices[static_cast<std::size_t>(i)], indices[j]);
        picked.push_back(vertices[static_cast<std::size_t>(indices[static_cast<std::size_t>(i)])]);
      }
      generators.emplace_back(std::move(picked));
    }

    const Complex X = closure(generators);
    Embedding e(cfg.ambient_dim, coords);
    try {
      validate_embedding(X, e);
    } catch (const DegenerateSimplexError&) {
      continue;
    }

    const std::vector<Simplex> all = X.all_simplices();
    std::map<VertexId, VertexId> assignment;
    const std::uint64_t kind = rng.below(4);
    if (kind == 0) {
      for (const VertexId& v : vertices) assignment.emplace(v, v);
    } else if (kind == 1) {
      const Simplex& target = all[rng.below(all.size())];
      for (const VertexId& v : vertices) {
        assignment.emplace(v, target.vertices()[rng.below(target.vertices().size())]);
      }
    } else if (kind == 2) {
      for (const VertexId& v : vertices) assignment.emplace(v, v);
      if (nv >= 2) {
        const std::uint64_t a = rng.below(static_cast<std::uint64_t>(nv));
        std::uint64_t b = rng.below(static_cast<std::uint64_t>(nv - 1));
        if (b >= a) ++b;
        assignment[vertices[a]] = vertices[b];
        assignment[vertices[b]] = vertices[a];
      }
    } else {
      for (const VertexId& v : vertices) {
        assignment.emplace(v, vertices[rng.below(static_cast<std::uint64_t>(nv))]);
      }
    }
    if (rng.uniform01() < 0.5) {
      const Simplex& fixed = all[rng.below(all.size())];
      for (const VertexId& v : fixed.vertices()) assignment[v] = v;
    }

    try {
      return AdmissiblePair(X, std::move(e), assignment);
    } catch (const MapError&) {
      continue;
    }
  }
  throw GenerationError("no admissible pair found in 10,000 attempts");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "boundary",      "chain",    "additivity",    "simplex_property",
      "open_decomp",   "int_vol_open", "invariance", "steiner",
      "vertex_angles", "trace_equiv",  "hadwiger_fit", "paper_examples"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int budget) {
  if (budget < 1) throw ConfigError("budget must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteRun run(name, seed);
  if (name == "boundary") {
    suite_boundary(run, budget);
  } else if (name == "chain") {
    suite_chain(run, budget);
  } else if (name == "additivity") {
    suite_additivity(run, budget);
  } else if (name == "simplex_property") {
    suite_simplex_property(run, budget);
  } else if (name == "open_decomp") {
    suite_open_decomp(run, budget);
  } else if (name == "int_vol_open") {
    suite_int_vol_open(run, budget);
  } else if (name == "invariance") {
    suite_invariance(run, budget);
  } else if (name == "steiner") {
    suite_steiner(run, budget);
  } else if (name == "vertex_angles") {
    suite_vertex_angles(run, budget);
  } else if (name == "trace_equiv") {
    suite_trace_equiv(run, budget);
  } else if (name == "hadwiger_fit") {
    suite_hadwiger_fit(run, budget);
  } else if (name == "paper_examples") {
    suite_paper_examples(run, budget);
  } else {
    throw ConfigError("unknown suite '" + name + "'");
  }
  return run.finish(start);
}

std::vector<SuiteReport> run_all_suites(std::uint64_t seed, int budget) {
  std::vector<SuiteReport> reports;
  for (const std::string& name : suite_names()) {
    reports.push_back(run_suite(name, seed, budget));
  }
  return reports;
}

namespace {

ordered_json report_json(const SuiteReport& report) {
  ordered_json failures = ordered_json::array();
  for (const SuiteFailure& f : report.failures) {
    failures.push_back(ordered_json{{"case", f.case_id},
                                    {"inputs", f.inputs},
                                    {"expected", f.expected},
                                    {"got", f.got},
                                    {"tolerance", f.tolerance}});
  }
  return ordered_json{{"suite", report.suite},
                      {"seed", report.seed},
                      {"cases", report.cases},
                      {"failures", failures},
                      {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace

std::string report_to_json(const SuiteReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<SuiteReport>& reports) {
  ordered_json out = ordered_json::array();
  for (const SuiteReport& r : reports) out.push_back(report_json(r));
  return out.dump(2) + "\n";
}

}  // namespace lefvol
