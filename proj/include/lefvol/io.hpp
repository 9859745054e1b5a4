#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lefvol/simplicial_map.hpp"
#include "lefvol/valuations.hpp"

namespace lefvol {

/// On-disk description of a realized complex, optionally with a self-map.
/// Schema (JSON, one document per file):
///   {
///     "comment": "...",                      optional
///     "ambient_dim": 2,
///     "vertices": {"p1": [x, y], ...},
///     "maximal_simplices": [["p1", "p2"], ...],
///     "map": {"p1": "p2", ...}               optional, identity when absent
///   }
struct ComplexFile {
  std::string comment;
  int ambient_dim = 0;
  std::map<std::string, std::vector<double>> vertices;
  std::vector<std::vector<std::string>> maximal_simplices;
  bool has_map = false;
  std::map<std::string, std::string> map;

  bool operator==(const ComplexFile&) const = default;
};

/// Parses and validates one document; throws ParseError on malformed input,
/// wrong coordinate lengths, or simplex labels that do not resolve, and
/// MapError when a map entry references an undeclared vertex.
ComplexFile parse_complex_file(const std::string& text);
ComplexFile load_complex_file(const std::filesystem::path& path);

/// Canonical serialization; parse(serialize(f)) == f.
std::string serialize_complex_file(const ComplexFile& f);

Complex complex_from_file(const ComplexFile& f);
Embedding embedding_from_file(const ComplexFile& f);
/// The file's map, or the identity assignment when none is present.
std::map<VertexId, VertexId> assignment_from_file(const ComplexFile& f);
AdmissiblePair pair_from_file(const ComplexFile& f);

/// Loads a standalone map document: {"map": {"p1": "p2", ...}}.
std::map<VertexId, VertexId> load_map_file(const std::filesystem::path& path);

/// One row of an observations document: a complex file (with optional
/// separate map file) and the observed valuation value on that pair.
struct ObservationRow {
  std::string complex_path;
  bool has_map_path = false;
  std::string map_path;
  double value = 0.0;

  bool operator==(const ObservationRow&) const = default;
};

/// Schema: {"observations": [{"complex": "f.json", "map": "m.json"?,
/// "value": 1.5}, ...]}. A map file holds a single {"map": {...}} object
/// that overrides the complex file's map.
struct ObservationsFile {
  std::vector<ObservationRow> rows;

  bool operator==(const ObservationsFile&) const = default;
};

ObservationsFile parse_observations_file(const std::string& text);
ObservationsFile load_observations_file(const std::filesystem::path& path);

/// Loads every referenced pair; relative paths resolve against the
/// observations file's directory.
std::vector<Observation> load_observations(const std::filesystem::path& path);

}  // namespace lefvol
