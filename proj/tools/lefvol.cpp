#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lefvol/io.hpp"
#include "lefvol/valuations.hpp"
#include "lefvol/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240814;

std::uint64_t default_seed() {
  const char* env = std::getenv("LEFVOL_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw lefvol::ConfigError("LEFVOL_SEED must be an unsigned integer");
  }
  return static_cast<std::uint64_t>(value);
}

std::string provenance_name(const lefvol::Estimate& e) {
  return e.is_exact() ? "exact" : "monte_carlo";
}

struct ComputeOptions {
  std::string complex_path;
  std::string map_source = "inline";
  std::string k = "all";
  std::uint64_t mc_samples = 1000000;
  std::optional<std::uint64_t> seed;
  std::string format = "table";
  bool coefficients = false;
};

lefvol::AdmissiblePair build_pair(const lefvol::ComplexFile& file,
                                  const std::string& map_source) {
  std::map<lefvol::VertexId, lefvol::VertexId> assignment;
  if (map_source == "inline") {
    assignment = lefvol::assignment_from_file(file);
  } else if (map_source == "identity") {
    for (const auto& [label, coords] : file.vertices) {
      assignment.emplace(lefvol::VertexId{label}, lefvol::VertexId{label});
    }
  } else {
    assignment = lefvol::load_map_file(map_source);
  }
  return lefvol::AdmissiblePair(lefvol::complex_from_file(file),
                                lefvol::embedding_from_file(file), assignment);
}

int run_compute(const ComputeOptions& opt) {
  const lefvol::ComplexFile file = lefvol::load_complex_file(opt.complex_path);
  const lefvol::AdmissiblePair pair = build_pair(file, opt.map_source);
  const lefvol::Complex& X = pair.complex();
  const int n = pair.embedding().ambient_dim();

  int k_lo = 0;
  int k_hi = n;
  if (opt.k != "all") {
    try {
      k_lo = k_hi = std::stoi(opt.k);
    } catch (const std::exception&) {
      throw lefvol::ConfigError("--k expects 'all' or a volume index");
    }
    if (k_lo < 0 || k_hi > n) {
      throw lefvol::ConfigError("--k must lie in [0, ambient dimension]");
    }
  }
  const lefvol::MonteCarloConfig mc{opt.mc_samples,
                                    opt.seed ? *opt.seed : default_seed()};

  std::vector<long> traces;
  for (int q = 0; q <= X.dim(); ++q) {
    traces.push_back(lefvol::chain_matrix(pair.map(), X, q).trace());
  }

  struct Row {
    int k;
    lefvol::Estimate direct;
    lefvol::Estimate trace;
  };
  std::vector<Row> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    rows.push_back(Row{k, lefvol::lefschetz_volume(pair, k, mc),
                       lefvol::lefschetz_volume_trace(pair, k, mc)});
  }

  if (opt.format == "json") {
    ordered_json doc;
    doc["complex"] = opt.complex_path;
    doc["ambient_dim"] = n;
    doc["dim"] = X.dim();
    ordered_json counts = ordered_json::array();
    for (int q = 0; q <= X.dim(); ++q) counts.push_back(X.count_of_dim(q));
    doc["simplex_counts"] = counts;
    doc["traces"] = traces;
    doc["volumes"] = ordered_json::array();
    for (const Row& row : rows) {
      doc["volumes"].push_back(ordered_json{
          {"k", row.k},
          {"direct", row.direct.value},
          {"trace", row.trace.value},
          {"difference", row.direct.value - row.trace.value},
          {"std_error", row.direct.std_error},
          {"provenance", provenance_name(row.direct)}});
    }
    if (opt.coefficients) {
      doc["coefficients"] = ordered_json::array();
      for (const lefvol::Simplex& x : X.all_simplices()) {
        doc["coefficients"].push_back(
            ordered_json{{"simplex", x.to_string()},
                         {"c", lefvol::orientation_coefficient(pair.map(), x)}});
      }
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "complex: " << opt.complex_path << " (dim " << X.dim() << ", ambient "
            << n << ")\n";
  std::cout << "traces:";
  for (std::size_t q = 0; q < traces.size(); ++q) {
    std::cout << " tr(f_" << q << ")=" << traces[q];
  }
  std::cout << "\n";
  std::cout << std::setprecision(12);
  for (const Row& row : rows) {
    std::cout << "v_" << row.k << ": direct=" << row.direct.value
              << " trace=" << row.trace.value
              << " difference=" << (row.direct.value - row.trace.value);
    if (!row.direct.is_exact()) {
      std::cout << " std_error=" << row.direct.std_error;
    }
    std::cout << "\n";
  }
  if (opt.coefficients) {
    for (const lefvol::Simplex& x : X.all_simplices()) {
      std::cout << "c(f," << x.to_string()
                << ") = " << lefvol::orientation_coefficient(pair.map(), x) << "\n";
    }
  }
  return 0;
}

struct VerifyOptions {
  std::string suite;
  std::optional<std::uint64_t> seed;
  int budget = 200;
  std::string format = "json";
};

int run_verify(const VerifyOptions& opt) {
  const std::uint64_t seed = opt.seed ? *opt.seed : default_seed();
  std::vector<lefvol::SuiteReport> reports;
  if (opt.suite == "all") {
    reports = lefvol::run_all_suites(seed, opt.budget);
  } else {
    reports.push_back(lefvol::run_suite(opt.suite, seed, opt.budget));
  }

  bool passed = true;
  for (const lefvol::SuiteReport& r : reports) passed = passed && r.passed();

  if (opt.format == "json") {
    if (opt.suite == "all") {
      std::cout << lefvol::reports_to_json(reports);
    } else {
      std::cout << lefvol::report_to_json(reports.front());
    }
  } else {
    for (const lefvol::SuiteReport& r : reports) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.cases
                << " cases, " << r.failures.size() << " failures, " << r.elapsed_ms
                << " ms\n";
      for (const lefvol::SuiteFailure& f : r.failures) {
        std::cout << "  " << f.case_id << ": expected " << f.expected << ", got "
                  << f.got << " (tolerance " << f.tolerance << ")\n"
                  << "    inputs: " << f.inputs << "\n";
      }
    }
  }
  return passed ? 0 : 1;
}

struct DecomposeOptions {
  std::string observations_path;
  std::optional<int> ambient;
  std::uint64_t mc_samples = 1000000;
  std::optional<std::uint64_t> seed;
  std::string format = "table";
};

int run_decompose(const DecomposeOptions& opt) {
  const std::vector<lefvol::Observation> observations =
      lefvol::load_observations(opt.observations_path);
  const int n = opt.ambient ? *opt.ambient
                            : observations.front().pair.embedding().ambient_dim();
  const lefvol::MonteCarloConfig mc{opt.mc_samples,
                                    opt.seed ? *opt.seed : default_seed()};
  const lefvol::DecompositionResult result =
      lefvol::hadwiger_decompose(observations, n, mc);

  if (opt.format == "json") {
    ordered_json doc;
    doc["coefficients"] = ordered_json::array();
    for (Eigen::Index k = 0; k < result.coefficients.coefficients.size(); ++k) {
      doc["coefficients"].push_back(result.coefficients.coefficients(k));
    }
    doc["residual_norm"] = result.residual_norm;
    doc["condition"] = result.condition;
    doc["rank"] = result.rank;
    doc["observations"] = observations.size();
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << std::setprecision(12);
  for (Eigen::Index k = 0; k < result.coefficients.coefficients.size(); ++k) {
    std::cout << "a_" << k << " = " << result.coefficients.coefficients(k) << "\n";
  }
  std::cout << "residual_norm = " << result.residual_norm << "\n"
            << "condition = " << result.condition << "\n"
            << "rank = " << result.rank << " (" << observations.size()
            << " observations)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lefschetz volumes of simplicial self-maps"};
  app.require_subcommand(1);

  ComputeOptions copt;
  CLI::App* compute = app.add_subcommand(
      "compute", "Lefschetz volumes and traces of one realized complex");
  compute->add_option("--complex", copt.complex_path, "complex JSON file")->required();
  compute->add_option("--map", copt.map_source,
                      "map file path, 'inline' (file's own map, default), or 'identity'");
  compute->add_option("--k", copt.k, "volume index or 'all' (default)");
  compute->add_option("--mc-samples", copt.mc_samples, "Monte Carlo sample count");
  compute->add_option("--seed", copt.seed, "Monte Carlo seed");
  compute->add_option("--format", copt.format, "json or table (default)")
      ->check(CLI::IsMember({"json", "table"}));
  compute->add_flag("--coefficients", copt.coefficients,
                    "also print c(f,x) for every simplex");

  VerifyOptions vopt;
  CLI::App* verify =
      app.add_subcommand("verify", "run named verification suites");
  verify->add_option("--suite", vopt.suite, "suite name or 'all'")->required();
  verify->add_option("--seed", vopt.seed, "suite seed");
  verify->add_option("--budget", vopt.budget, "random case budget per suite");
  verify->add_option("--format", vopt.format, "json (default) or table")
      ->check(CLI::IsMember({"json", "table"}));

  DecomposeOptions dopt;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "recover valuation coefficients from observations");
  decompose->add_option("--observations", dopt.observations_path,
                        "observations JSON file")
      ->required();
  decompose->add_option("--ambient", dopt.ambient,
                        "coefficient count minus one (default: from the data)");
  decompose->add_option("--mc-samples", dopt.mc_samples, "Monte Carlo sample count");
  decompose->add_option("--seed", dopt.seed, "Monte Carlo seed");
  decompose->add_option("--format", dopt.format, "json or table (default)")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(copt);
    if (verify->parsed()) return run_verify(vopt);
    return run_decompose(dopt);
  } catch (const lefvol::RankDeficientError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "rank = " << e.rank << ", null space dimension = " << e.null_space_dim
              << "\n";
    return 5;
  } catch (const lefvol::DegenerateSimplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const lefvol::MapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lefvol::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lefvol::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lefvol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
