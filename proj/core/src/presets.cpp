#include "cuttrees/presets.hpp"

#include <map>

#include "cuttrees/errors.hpp"

namespace cuttrees {

namespace {

const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> table = {
      {"z2_z3", R"({
  "kind": "amalgam",
  "H": {"elements": ["1", "a"], "table": [["1", "a"], ["a", "1"]]},
  "J": {"elements": ["1", "b", "bb"],
        "table": [["1", "b", "bb"], ["b", "bb", "1"], ["bb", "1", "b"]]},
  "A": ["1"],
  "B": ["1"],
  "phi": {"1": "1"},
  "generators": ["a", "b"]
})"},
      {"z2_z2", R"({
  "kind": "amalgam",
  "H": {"elements": ["1", "a"], "table": [["1", "a"], ["a", "1"]]},
  "J": {"elements": ["1", "b"], "table": [["1", "b"], ["b", "1"]]},
  "A": ["1"],
  "B": ["1"],
  "phi": {"1": "1"},
  "generators": ["a", "b"]
})"},
      {"z4_z2_z4", R"({
  "kind": "amalgam",
  "H": {"elements": ["1", "h", "hh", "hhh"],
        "table": [["1", "h", "hh", "hhh"],
                  ["h", "hh", "hhh", "1"],
                  ["hh", "hhh", "1", "h"],
                  ["hhh", "1", "h", "hh"]]},
  "J": {"elements": ["1", "j", "jj", "jjj"],
        "table": [["1", "j", "jj", "jjj"],
                  ["j", "jj", "jjj", "1"],
                  ["jj", "jjj", "1", "j"],
                  ["jjj", "1", "j", "jj"]]},
  "A": ["1", "hh"],
  "B": ["1", "jj"],
  "phi": {"1": "1", "hh": "jj"},
  "generators": ["h", "j"]
})"},
      {"z_hnn", R"({
  "kind": "hnn",
  "H": {"elements": ["1"], "table": [["1"]]},
  "A": ["1"],
  "B": ["1"],
  "phi": {"1": "1"},
  "stable_letter": "t",
  "generators": ["t"]
})"},
      {"z_hnn_23", R"({
  "kind": "hnn",
  "H": {"elements": ["1"], "table": [["1"]]},
  "A": ["1"],
  "B": ["1"],
  "phi": {"1": "1"},
  "stable_letter": "t",
  "generators": ["t t", "t t t"]
})"},
      {"z4_hnn_z2", R"({
  "kind": "hnn",
  "H": {"elements": ["1", "h", "hh", "hhh"],
        "table": [["1", "h", "hh", "hhh"],
                  ["h", "hh", "hhh", "1"],
                  ["hh", "hhh", "1", "h"],
                  ["hhh", "1", "h", "hh"]]},
  "A": ["1", "hh"],
  "B": ["1", "hh"],
  "phi": {"1": "1", "hh": "hh"},
  "stable_letter": "t",
  "generators": ["h", "t"]
})"},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : presets()) out.push_back(k);
    return out;
  }();
  return names;
}

std::string preset_presentation(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw InputError("unknown preset presentation: " + name);
  return it->second;
}

}  // namespace cuttrees
