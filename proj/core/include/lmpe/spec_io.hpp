#pragma once

// JSON code specifications.
//
//   {"variant": "remainder", "k": 12, "l": 1, "t": 1, "q": 27, "r": 2,
//    "w": 2, "w2": 4, "n": 28, "m": 16, "g": 2, "gray_radius": 1,
//    "gray_mapping": "mapping.txt", "critical": [1, 0, 1, 1],
//    "map_overrides": [{"remainder": [0, 0, 0, 0], "element": 3}],
//    "seed": 7}
//
// Every key except "variant" and "k" is optional.  Unknown keys are rejected.

#include <filesystem>
#include <string>
#include <string_view>

#include "lmpe/constructions.hpp"

namespace lmpe {

/// Parses a spec.  A "gray_mapping" path is resolved against `base_dir` and
/// loaded.  Throws `data_format` for malformed JSON or mistyped fields.
LmpeCodeSpec parse_code_spec(std::string_view json_text, const std::filesystem::path& base_dir = {});
LmpeCodeSpec load_code_spec(const std::filesystem::path& file);

/// Canonical JSON for a spec (without any embedded Gray mapping).
std::string format_code_spec(const LmpeCodeSpec& spec);

}  // namespace lmpe
