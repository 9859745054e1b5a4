#include "lefvol/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lefvol {

namespace {

using nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void check_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ParseError("unknown key '" + key + "' in " + where);
    }
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

ComplexFile parse_complex_file(const std::string& text) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("complex document must be a JSON object");
  check_keys(doc, {"comment", "ambient_dim", "vertices", "maximal_simplices", "map"},
             "complex document");

  ComplexFile f;
  if (doc.contains("comment")) {
    if (!doc["comment"].is_string()) throw ParseError("'comment' must be a string");
    f.comment = doc["comment"].get<std::string>();
  }
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer()) {
    throw ParseError("'ambient_dim' must be an integer");
  }
  f.ambient_dim = doc["ambient_dim"].get<int>();
  if (f.ambient_dim < 1) throw ParseError("'ambient_dim' must be at least 1");

  if (!doc.contains("vertices") || !doc["vertices"].is_object()) {
    throw ParseError("'vertices' must be an object of label -> coordinates");
  }
  for (const auto& [label, coords] : doc["vertices"].items()) {
    if (!coords.is_array() || coords.size() != static_cast<std::size_t>(f.ambient_dim)) {
      throw ParseError("vertex '" + label + "' needs exactly " +
                       std::to_string(f.ambient_dim) + " coordinates");
    }
    std::vector<double> point;
    for (const auto& c : coords) {
      if (!c.is_number()) throw ParseError("vertex '" + label + "' has a non-numeric coordinate");
      point.push_back(c.get<double>());
    }
    f.vertices.emplace(label, std::move(point));
  }
  if (f.vertices.empty()) throw ParseError("'vertices' must not be empty");

  if (!doc.contains("maximal_simplices") || !doc["maximal_simplices"].is_array()) {
    throw ParseError("'maximal_simplices' must be an array of label arrays");
  }
  for (const auto& entry : doc["maximal_simplices"]) {
    if (!entry.is_array() || entry.empty()) {
      throw ParseError("each maximal simplex must be a nonempty array of labels");
    }
    std::vector<std::string> labels;
    for (const auto& l : entry) {
      if (!l.is_string()) throw ParseError("simplex labels must be strings");
      const std::string label = l.get<std::string>();
      if (!f.vertices.count(label)) {
        throw ParseError("simplex label '" + label + "' is not a declared vertex");
      }
      labels.push_back(label);
    }
    f.maximal_simplices.push_back(std::move(labels));
  }
  if (f.maximal_simplices.empty()) {
    throw ParseError("'maximal_simplices' must not be empty");
  }

  if (doc.contains("map")) {
    if (!doc["map"].is_object()) throw ParseError("'map' must be an object of label -> label");
    f.has_map = true;
    for (const auto& [from, to] : doc["map"].items()) {
      if (!to.is_string()) throw ParseError("map images must be strings");
      const std::string to_label = to.get<std::string>();
      if (!f.vertices.count(from)) {
        throw MapError("map source '" + from + "' is not a declared vertex");
      }
      if (!f.vertices.count(to_label)) {
        throw MapError("map image '" + to_label + "' is not a declared vertex");
      }
      f.map.emplace(from, to_label);
    }
  }
  return f;
}

ComplexFile load_complex_file(const std::filesystem::path& path) {
  try {
    return parse_complex_file(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const MapError& e) {
    throw MapError(path.string() + ": " + e.what());
  }
}

std::string serialize_complex_file(const ComplexFile& f) {
  ordered_json doc;
  if (!f.comment.empty()) doc["comment"] = f.comment;
  doc["ambient_dim"] = f.ambient_dim;
  doc["vertices"] = ordered_json::object();
  for (const auto& [label, coords] : f.vertices) doc["vertices"][label] = coords;
  doc["maximal_simplices"] = f.maximal_simplices;
  if (f.has_map) {
    doc["map"] = ordered_json::object();
    for (const auto& [from, to] : f.map) doc["map"][from] = to;
  }
  return doc.dump(2) + "\n";
}

Complex complex_from_file(const ComplexFile& f) {
  std::vector<Simplex> generators;
  for (const auto& labels : f.maximal_simplices) {
    std::vector<VertexId> vs;
    for (const auto& l : labels) vs.push_back(VertexId{l});
    generators.emplace_back(std::move(vs));
  }
  for (const auto& [label, coords] : f.vertices) {
    generators.emplace_back(std::vector<VertexId>{VertexId{label}});
  }
  return closure(generators);
}

Embedding embedding_from_file(const ComplexFile& f) {
  std::map<VertexId, Eigen::VectorXd> coords;
  for (const auto& [label, point] : f.vertices) {
    Eigen::VectorXd x(f.ambient_dim);
    for (int i = 0; i < f.ambient_dim; ++i) x(i) = point[static_cast<std::size_t>(i)];
    coords.emplace(VertexId{label}, std::move(x));
  }
  return Embedding(f.ambient_dim, std::move(coords));
}

std::map<VertexId, VertexId> assignment_from_file(const ComplexFile& f) {
  std::map<VertexId, VertexId> assignment;
  if (f.has_map) {
    for (const auto& [from, to] : f.map) {
      assignment.emplace(VertexId{from}, VertexId{to});
    }
  } else {
    for (const auto& [label, coords] : f.vertices) {
      assignment.emplace(VertexId{label}, VertexId{label});
    }
  }
  return assignment;
}

AdmissiblePair pair_from_file(const ComplexFile& f) {
  return AdmissiblePair(complex_from_file(f), embedding_from_file(f),
                        assignment_from_file(f));
}

ObservationsFile parse_observations_file(const std::string& text) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("observations document must be a JSON object");
  check_keys(doc, {"comment", "observations"}, "observations document");
  if (!doc.contains("observations") || !doc["observations"].is_array()) {
    throw ParseError("'observations' must be an array");
  }
  ObservationsFile out;
  for (const auto& row : doc["observations"]) {
    if (!row.is_object()) throw ParseError("each observation must be an object");
    check_keys(row, {"complex", "map", "value"}, "observation row");
    ObservationRow r;
    if (!row.contains("complex") || !row["complex"].is_string()) {
      throw ParseError("observation needs a 'complex' file path");
    }
    r.complex_path = row["complex"].get<std::string>();
    if (row.contains("map")) {
      if (!row["map"].is_string()) throw ParseError("'map' must be a file path");
      r.has_map_path = true;
      r.map_path = row["map"].get<std::string>();
    }
    if (!row.contains("value") || !row["value"].is_number()) {
      throw ParseError("observation needs a numeric 'value'");
    }
    r.value = row["value"].get<double>();
    out.rows.push_back(std::move(r));
  }
  if (out.rows.empty()) throw ParseError("'observations' must not be empty");
  return out;
}

ObservationsFile load_observations_file(const std::filesystem::path& path) {
  try {
    return parse_observations_file(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::map<VertexId, VertexId> load_map_file(const std::filesystem::path& path) {
  const ordered_json doc = parse_json(read_file(path));
  if (!doc.is_object()) throw ParseError(path.string() + ": map document must be a JSON object");
  check_keys(doc, {"comment", "map"}, "map document");
  if (!doc.contains("map") || !doc["map"].is_object()) {
    throw ParseError(path.string() + ": 'map' must be an object of label -> label");
  }
  std::map<VertexId, VertexId> assignment;
  for (const auto& [from, to] : doc["map"].items()) {
    if (!to.is_string()) throw ParseError(path.string() + ": map images must be strings");
    assignment.emplace(VertexId{from}, VertexId{to.get<std::string>()});
  }
  return assignment;
}

std::vector<Observation> load_observations(const std::filesystem::path& path) {
  const ObservationsFile file = load_observations_file(path);
  const std::filesystem::path base = path.has_parent_path()
                                         ? path.parent_path()
                                         : std::filesystem::path(".");
  std::vector<Observation> out;
  for (const ObservationRow& row : file.rows) {
    const ComplexFile cf = load_complex_file(base / row.complex_path);
    std::map<VertexId, VertexId> assignment =
        row.has_map_path ? load_map_file(base / row.map_path)
                         : assignment_from_file(cf);
    out.push_back(Observation{
        AdmissiblePair(complex_from_file(cf), embedding_from_file(cf), assignment),
        row.value});
  }
  return out;
}

}  // namespace lefvol
