#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lefvol/io.hpp"

namespace lefvol::fixtures {

/// Names of the built-in worked examples: "example1" (five vertices, six
/// unit edges, one face, a map flipping the face), "example2" (a map with
/// vanishing v_0 and v_1 that still has fixed points), "example3_X" and
/// "example3_Y" (a flipped edge and its subdivision, distinguishing v_1).
const std::vector<std::string>& example_names();

/// The example as a JSON complex document; identical in content to the file
/// of the same name under fixtures/.
std::string_view example_json(std::string_view name);

ComplexFile example_file(std::string_view name);
AdmissiblePair example_pair(std::string_view name);

}  // namespace lefvol::fixtures
