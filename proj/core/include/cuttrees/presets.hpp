#ifndef CUTTREES_PRESETS_HPP
#define CUTTREES_PRESETS_HPP

#include <string>
#include <vector>

namespace cuttrees {

// Bundled example presentations, keyed by name. Used by the property-check
// command and the test suites.
const std::vector<std::string>& preset_names();
std::string preset_presentation(const std::string& name);  // throws InputError

}  // namespace cuttrees

#endif
