#include "hhw/presets.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hhw {

namespace {

using json = nlohmann::json;

const std::map<std::string, std::vector<long>, std::less<>>& builtins() {
  static const std::map<std::string, std::vector<long>, std::less<>> table{
      {"weyl", {1}},          {"trig", {1, 1}},       {"qweyl", {1, 2, 1}},
      {"z2_weyl", {1, 0, 1}}, {"z2_trig", {1, 0, 2}}, {"z2_qweyl", {1, 0, 5}},
  };
  return table;
}

long parse_long(std::string_view s, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(std::string(s), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(std::string(what) + ": not an integer: " + std::string(s));
  return v;
}

AlgebraPreset make(std::string name, int d, const std::vector<long>& betti) {
  for (long b : betti)
    if (b < 0) throw std::invalid_argument("preset " + name + ": negative dimension");
  AlgebraPreset p{std::move(name), d, BettiTable::from_vector(betti)};
  p.validate();
  return p;
}

} // namespace

AlgebraPreset parse_preset_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("preset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("d") || !j.contains("betti"))
    throw std::invalid_argument("preset JSON needs \"name\", \"d\" and \"betti\"");
  if (!j["name"].is_string() || !j["d"].is_number_integer() || !j["betti"].is_array())
    throw std::invalid_argument("preset JSON has fields of the wrong type");
  std::vector<long> betti;
  for (const auto& v : j["betti"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("preset JSON: betti entries must be integers");
    betti.push_back(v.get<long>());
  }
  return make(j["name"].get<std::string>(), j["d"].get<int>(), betti);
}

std::string preset_to_json(const AlgebraPreset& preset) {
  json betti = json::array();
  for (const auto& b : preset.betti.to_vector()) betti.push_back(b.get_si());
  json j;
  j["name"] = preset.name;
  j["d"] = preset.d;
  j["betti"] = betti;
  return j.dump();
}

AlgebraPreset load_preset(std::string_view name) {
  if (auto it = builtins().find(name); it != builtins().end()) return make(it->first, 2, it->second);
  if (name.starts_with("gamma:")) {
    const long nu = parse_long(name.substr(6), "gamma preset");
    if (nu < 1) throw std::invalid_argument("gamma preset needs nu >= 1");
    return make(std::string(name), 2, {1, 0, nu - 1});
  }
  if (name.starts_with("surface:")) {
    std::vector<long> betti;
    std::string_view rest = name.substr(8);
    while (true) {
      const auto comma = rest.find(',');
      betti.push_back(parse_long(rest.substr(0, comma), "surface preset"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (betti.size() != 3) throw std::invalid_argument("surface preset needs exactly three Betti numbers b0,b1,b2");
    return make(std::string(name), 2, betti);
  }
  if (name.ends_with(".json")) {
    std::ifstream in{std::string(name)};
    if (!in) throw std::invalid_argument("cannot open preset file: " + std::string(name));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_preset_json(buf.str());
  }
  throw std::invalid_argument("unknown preset: " + std::string(name));
}

std::vector<std::string> builtin_preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, betti] : builtins()) out.push_back(name);
  return out;
}

std::string type_b_preset(std::string_view type_a_name) {
  if (type_a_name == "weyl" || type_a_name == "trig" || type_a_name == "qweyl") return "z2_" + std::string(type_a_name);
  throw std::invalid_argument("no type B preset for " + std::string(type_a_name));
}

} // namespace hhw
