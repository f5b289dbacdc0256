#pragma once

#include "hhw/betti.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hhw {

/// Built-in names: weyl, trig, qweyl, z2_weyl, z2_trig, z2_qweyl. Also
/// "gamma:<nu>" (nu >= 1), "surface:<b0>,<b1>,<b2>" and paths to JSON preset
/// files (anything ending in ".json"). Throws std::invalid_argument for
/// unknown names and invalid data.
AlgebraPreset load_preset(std::string_view name);

std::vector<std::string> builtin_preset_names();

/// The Z_2 crossed-product preset used for type B (weyl -> z2_weyl, ...).
/// Throws std::invalid_argument if there is none.
std::string type_b_preset(std::string_view type_a_name);

/// {"name": str, "d": int, "betti": [int, ...]} with index = degree.
AlgebraPreset parse_preset_json(std::string_view text);
std::string preset_to_json(const AlgebraPreset& preset);

} // namespace hhw
