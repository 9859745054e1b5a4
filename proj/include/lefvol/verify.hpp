#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lefvol/simplicial_map.hpp"

namespace lefvol {

/// Bounds for the random admissible-pair generator.
struct RandomComplexConfig {
  int max_vertices = 12;
  int max_dim = 3;
  int ambient_dim = 3;
  double edge_scale = 2.0;
  std::uint64_t seed = 0;
};

/// Deterministically generates a nondegenerate embedded complex with a valid
/// random self-map. Proposals are biased toward maps with fixed simplices
/// (with probability 1/2 a random simplex is forced pointwise fixed) and are
/// filtered through validate_map; after 10,000 rejected attempts a
/// GenerationError is thrown.
AdmissiblePair generate_random_pair(const RandomComplexConfig& cfg);

/// One failed check with enough serialized state to re-run it in isolation.
struct SuiteFailure {
  std::string case_id;
  std::string inputs;
  std::string expected;
  std::string got;
  double tolerance = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<SuiteFailure> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// The available suites, in canonical execution order:
/// boundary, chain, additivity, simplex_property, open_decomp, int_vol_open,
/// invariance, steiner, vertex_angles, trace_equiv, hadwiger_fit,
/// paper_examples.
const std::vector<std::string>& suite_names();

/// Runs one named suite. `budget` is the random-case count for the algebraic
/// suites; Monte Carlo suites cap it at small fixed counts so a full run
/// stays bounded. Deterministic given (name, seed, budget). Throws
/// ConfigError on an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int budget);

/// All suites with the same seed and budget, in canonical order. Each suite
/// derives its own stream from its name, so a single-suite run reproduces
/// exactly the cases it sees inside a full run.
std::vector<SuiteReport> run_all_suites(std::uint64_t seed, int budget);

std::string report_to_json(const SuiteReport& report);
std::string reports_to_json(const std::vector<SuiteReport>& reports);

}  // namespace lefvol
