#include "lefvol/fixtures.hpp"

#include <map>

#include "lefvol/errors.hpp"

namespace lefvol::fixtures {

namespace {

constexpr std::string_view kExample1 = R"({
  "comment": "Five vertices, six unit edges, one equilateral face {p2,p3,p4}; the map fixes p1, p2, p5 and swaps p3 with p4.",
  "ambient_dim": 2,
  "vertices": {
    "p1": [-0.8660254037844386, 0.5],
    "p2": [0.0, 0.0],
    "p3": [0.8660254037844386, 0.5],
    "p4": [0.8660254037844386, -0.5],
    "p5": [-0.8660254037844386, -0.5]
  },
  "maximal_simplices": [
    ["p2", "p3", "p4"],
    ["p1", "p2"],
    ["p1", "p5"],
    ["p2", "p5"]
  ],
  "map": {
    "p1": "p1",
    "p2": "p2",
    "p3": "p4",
    "p4": "p3",
    "p5": "p5"
  }
})";

constexpr std::string_view kExample2 = R"({
  "comment": "A graph whose map swaps p5 with p6 and fixes p1..p4. The five edges among p1..p4 have length 1 and the edge {p5,p6} has length 5, so v_0 and v_1 both vanish although the map has fixed points. The lengths of {p4,p5} and {p4,p6} do not enter any value; here both are sqrt(7.25).",
  "ambient_dim": 2,
  "vertices": {
    "p1": [0.0, 0.0],
    "p2": [0.5, 0.8660254037844386],
    "p3": [0.5, -0.8660254037844386],
    "p4": [1.0, 0.0],
    "p5": [2.0, 2.5],
    "p6": [2.0, -2.5]
  },
  "maximal_simplices": [
    ["p1", "p2"],
    ["p1", "p3"],
    ["p1", "p4"],
    ["p2", "p4"],
    ["p3", "p4"],
    ["p4", "p5"],
    ["p4", "p6"],
    ["p5", "p6"]
  ],
  "map": {
    "p1": "p1",
    "p2": "p2",
    "p3": "p3",
    "p4": "p4",
    "p5": "p6",
    "p6": "p5"
  }
})";

constexpr std::string_view kExample3X = R"({
  "comment": "A single edge of length 2 with its endpoints interchanged: v_0 = 1 and v_1 = -2.",
  "ambient_dim": 1,
  "vertices": {
    "p1": [0.0],
    "p2": [2.0]
  },
  "maximal_simplices": [
    ["p1", "p2"]
  ],
  "map": {
    "p1": "p2",
    "p2": "p1"
  }
})";

constexpr std::string_view kExample3Y = R"({
  "comment": "The length-2 edge subdivided at its midpoint, flipped about p2: v_0 = 1 but v_1 = 0, so v_1 is not invariant under subdivision.",
  "ambient_dim": 1,
  "vertices": {
    "p1": [0.0],
    "p2": [1.0],
    "p3": [2.0]
  },
  "maximal_simplices": [
    ["p1", "p2"],
    ["p2", "p3"]
  ],
  "map": {
    "p1": "p3",
    "p2": "p2",
    "p3": "p1"
  }
})";

const std::map<std::string, std::string_view>& table() {
  static const std::map<std::string, std::string_view> t = {
      {"example1", kExample1},
      {"example2", kExample2},
      {"example3_X", kExample3X},
      {"example3_Y", kExample3Y},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"example1", "example2", "example3_X",
                                                 "example3_Y"};
  return names;
}

std::string_view example_json(std::string_view name) {
  const auto& t = table();
  auto it = t.find(std::string(name));
  if (it == t.end()) {
    throw ConfigError("unknown example fixture '" + std::string(name) + "'");
  }
  return it->second;
}

ComplexFile example_file(std::string_view name) {
  return parse_complex_file(std::string(example_json(name)));
}

AdmissiblePair example_pair(std::string_view name) {
  return pair_from_file(example_file(name));
}

}  // namespace lefvol::fixtures
