// End-to-end checks of the lefvol command line tool: output contents,
// JSON schemas, seeding, and the documented exit codes.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int g_checks = 0;
int g_failures = 0;

void check(bool ok, const std::string& what) {
  ++g_checks;
  if (ok) {
    std::cout << "[PASS] " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "[FAIL] " << what << "\n";
  }
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("lefvol_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the CLI through the shell; `envs` is a prefix like "LEFVOL_SEED=7 ".
RunResult run(const std::string& args, const std::string& envs = "") {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = envs + std::string(LEFVOL_CLI_PATH) + " " + args +
                          " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream f(p);
  f << text;
  return p;
}

std::string fixture(const std::string& name) {
  return (fs::path(LEFVOL_FIXTURES_DIR) / name).string();
}

std::string scrub_elapsed(std::string text) {
  std::size_t pos = 0;
  while ((pos = text.find("\"elapsed_ms\":", pos)) != std::string::npos) {
    std::size_t end = text.find_first_not_of("0123456789", pos + 14);
    text.replace(pos, end - pos, "\"elapsed_ms\": 0");
    pos += 14;
  }
  return text;
}

void test_compute_face_flip() {
  const RunResult r = run("compute --complex " + fixture("example1.json") +
                          " --format json");
  check(r.code == 0, "compute example1 exits 0");
  const json doc = json::parse(r.out, nullptr, false);
  if (doc.is_discarded()) {
    check(false, "compute example1 emits valid JSON");
    return;
  }
  check(doc.at("traces") == json::array({3, 2, -1}), "example1 chain traces");
  const auto& vols = doc.at("volumes");
  check(vols.size() == 3, "example1 reports v_0..v_2");
  check(std::abs(vols[0].at("direct").get<double>() - 0.0) < 1e-9, "example1 v_0");
  check(std::abs(vols[1].at("direct").get<double>() - 3.5) < 1e-9, "example1 v_1");
  check(std::abs(vols[2].at("direct").get<double>() + 0.4330127018922193) < 1e-9,
        "example1 v_2");
  for (int k = 0; k <= 2; ++k) {
    check(std::abs(vols[k].at("difference").get<double>()) < 1e-9,
          "example1 path agreement at k=" + std::to_string(k));
    check(vols[k].at("provenance") == "exact",
          "example1 exact provenance at k=" + std::to_string(k));
  }
}

void test_compute_identity_and_table() {
  const RunResult r = run("compute --complex " + fixture("example1.json") +
                          " --map identity --format json");
  check(r.code == 0, "compute with identity map exits 0");
  const json doc = json::parse(r.out);
  check(std::abs(doc.at("volumes")[0].at("direct").get<double>() - 0.0) < 1e-9,
        "identity v_0 equals Euler characteristic");
  check(std::abs(doc.at("volumes")[1].at("direct").get<double>() - 4.5) < 1e-9,
        "identity v_1 is the open length sum");

  const RunResult table = run("compute --complex " + fixture("example1.json"));
  check(table.code == 0, "table format exits 0");
  check(table.out.find("v_1") != std::string::npos &&
            table.out.find("3.5") != std::string::npos,
        "table format shows v_1 = 3.5");

  const RunResult coeff = run("compute --complex " + fixture("example1.json") +
                              " --coefficients --format json");
  const json cdoc = json::parse(coeff.out);
  check(cdoc.contains("coefficients") && cdoc.at("coefficients").size() == 12,
        "per-simplex coefficients listed on request");
}

void test_compute_single_index_and_mc_flags() {
  const RunResult r = run("compute --complex " + fixture("example3_X.json") +
                          " --k 1 --format json");
  check(r.code == 0, "compute --k 1 exits 0");
  const json doc = json::parse(r.out);
  check(doc.at("volumes").size() == 1, "single k reports one entry");
  check(doc.at("volumes")[0].at("k") == 1, "single k labels the entry");
  check(std::abs(doc.at("volumes")[0].at("direct").get<double>() + 2.0) < 1e-9,
        "flipped long edge has v_1 = -2");

  const RunResult seeded = run("compute --complex " + fixture("example1.json") +
                               " --mc-samples 50000 --seed 9 --format json");
  check(seeded.code == 0, "mc flags accepted");
}

void test_separate_map_file() {
  write_file("plain_edge.json", R"({
    "ambient_dim": 1,
    "vertices": {"a": [0.0], "b": [2.0]},
    "maximal_simplices": [["a", "b"]]
  })");
  const fs::path swap = write_file("swap.json", R"({"map": {"a": "b", "b": "a"}})");
  const RunResult r = run("compute --complex " +
                          (scratch_dir() / "plain_edge.json").string() +
                          " --map " + swap.string() + " --format json");
  check(r.code == 0, "separate map file accepted");
  const json doc = json::parse(r.out);
  check(std::abs(doc.at("volumes")[1].at("direct").get<double>() + 2.0) < 1e-9,
        "separate map file drives the computation");
}

void test_verify_subcommand() {
  const RunResult r = run("verify --suite paper_examples --seed 42 --budget 5");
  check(r.code == 0, "verify paper_examples exits 0");
  const json doc = json::parse(r.out, nullptr, false);
  check(!doc.is_discarded() && doc.at("failures").empty(),
        "verify stdout is the JSON report");
  check(doc.at("suite") == "paper_examples", "report names its suite");
  check(doc.at("seed") == 42, "report echoes the seed");

  const RunResult table = run("verify --suite boundary --seed 1 --budget 5 --format table");
  check(table.code == 0 && table.out.find("boundary") != std::string::npos,
        "verify table format");

  // Same invocation twice: identical bytes after scrubbing wall time.
  const RunResult a = run("verify --suite chain --seed 11 --budget 8");
  const RunResult b = run("verify --suite chain --seed 11 --budget 8");
  check(scrub_elapsed(a.out) == scrub_elapsed(b.out), "verify runs reproduce");
}

void test_seed_environment() {
  const RunResult env = run("verify --suite boundary --budget 5", "LEFVOL_SEED=7 ");
  check(env.code == 0 && json::parse(env.out).at("seed") == 7,
        "LEFVOL_SEED provides the default seed");

  const RunResult flag = run("verify --suite boundary --seed 3 --budget 5",
                             "LEFVOL_SEED=7 ");
  check(flag.code == 0 && json::parse(flag.out).at("seed") == 3,
        "--seed overrides LEFVOL_SEED");

  const RunResult bad = run("verify --suite boundary --budget 5", "LEFVOL_SEED=xyz ");
  check(bad.code == 2, "malformed LEFVOL_SEED exits 2");
}

void test_decompose_subcommand() {
  // Planted valuation a = (0, 1, 0): the observed value of an identity pair
  // is its total open edge length.
  write_file("seg1.json", R"({
    "ambient_dim": 2,
    "vertices": {"a": [0.0, 0.0], "b": [1.0, 0.0]},
    "maximal_simplices": [["a", "b"]]
  })");
  write_file("tri1.json", R"({
    "ambient_dim": 2,
    "vertices": {"a": [0.0, 0.0], "b": [1.0, 0.0], "c": [0.0, 1.0]},
    "maximal_simplices": [["a", "b", "c"]]
  })");
  write_file("path1.json", R"({
    "ambient_dim": 2,
    "vertices": {"a": [0.0, 0.0], "b": [1.0, 0.0], "c": [1.0, 2.0]},
    "maximal_simplices": [["a", "b"], ["b", "c"]]
  })");
  // v_1 values: segment -> 1; right triangle -> (2 + sqrt 2)/2; path -> 3.
  const double tri_v1 = (2.0 + std::sqrt(2.0)) / 2.0;
  std::ostringstream obs;
  obs << std::setprecision(17);
  obs << R"({"observations": [)"
      << R"({"complex": "seg1.json", "value": 1.0},)"
      << R"({"complex": "tri1.json", "value": )" << tri_v1 << "},"
      << R"({"complex": "path1.json", "value": 3.0}]})";
  const fs::path obs_path = write_file("obs.json", obs.str());

  const RunResult r = run("decompose --observations " + obs_path.string() +
                          " --format json");
  check(r.code == 0, "decompose exits 0");
  const json doc = json::parse(r.out);
  const auto& a = doc.at("coefficients");
  check(a.size() == 3, "decompose returns a_0..a_2");
  check(std::abs(a[0].get<double>() - 0.0) < 1e-6 &&
            std::abs(a[1].get<double>() - 1.0) < 1e-6 &&
            std::abs(a[2].get<double>() - 0.0) < 1e-6,
        "decompose recovers the planted coefficients");
  check(doc.at("rank") == 3, "decompose reports full rank");
  check(doc.at("residual_norm").get<double>() < 1e-6, "decompose residual is tiny");

  // Repeats of one complex span a line: rank deficiency is exit 5.
  const fs::path bad = write_file("obs_colinear.json", R"({
    "observations": [
      {"complex": "seg1.json", "value": 1.0},
      {"complex": "seg1.json", "value": 2.0}
    ]
  })");
  const RunResult rd = run("decompose --observations " + bad.string());
  check(rd.code == 5, "rank-deficient observations exit 5");
  check(rd.err.find("null space") != std::string::npos,
        "rank-deficiency reports the null space");
}

void test_error_exit_codes() {
  check(run("compute --complex /nonexistent/x.json").code == 2,
        "missing complex file exits 2");
  check(run("compute").code == 2, "missing required flag exits 2");
  check(run("frobnicate").code == 2, "unknown subcommand exits 2");
  check(run("verify --suite nosuch").code == 2, "unknown suite exits 2");
  check(run("verify --suite boundary --budget 0").code == 2, "zero budget exits 2");

  const fs::path badmap = write_file("badmap.json", R"({
    "ambient_dim": 1,
    "vertices": {"a": [0.0], "b": [1.0]},
    "maximal_simplices": [["a", "b"]],
    "map": {"a": "b", "b": "zz"}
  })");
  check(run("compute --complex " + badmap.string()).code == 3,
        "invalid map exits 3");

  const fs::path nonsimplicial = write_file("nonsimplicial_map.json", R"({
    "ambient_dim": 2,
    "vertices": {"a": [0.0, 0.0], "b": [1.0, 0.0], "c": [0.0, 1.0], "d": [1.0, 1.0]},
    "maximal_simplices": [["a", "b"], ["c", "d"]],
    "map": {"a": "a", "b": "c", "c": "c", "d": "d"}
  })");
  check(run("compute --complex " + nonsimplicial.string()).code == 3,
        "non-simplicial map exits 3");

  const fs::path degenerate = write_file("degenerate.json", R"({
    "ambient_dim": 2,
    "vertices": {"a": [0.0, 0.0], "b": [1.0, 0.0], "c": [2.0, 0.0]},
    "maximal_simplices": [["a", "b", "c"]]
  })");
  check(run("compute --complex " + degenerate.string()).code == 4,
        "degenerate embedding exits 4");

  const fs::path garbled = write_file("garbled.json", "{oops");
  check(run("compute --complex " + garbled.string()).code == 2,
        "unparseable file exits 2");
}

}  // namespace

int main() {
  test_compute_face_flip();
  test_compute_identity_and_table();
  test_compute_single_index_and_mc_flags();
  test_separate_map_file();
  test_verify_subcommand();
  test_seed_environment();
  test_decompose_subcommand();
  test_error_exit_codes();

  std::error_code ec;
  fs::remove_all(scratch_dir(), ec);

  std::cout << g_checks - g_failures << "/" << g_checks << " checks passed\n";
  return g_failures == 0 ? 0 : 1;
}
