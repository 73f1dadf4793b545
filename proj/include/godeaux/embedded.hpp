#pragma once

// Data files compiled into the library: golden coefficient files and the
// example scenes.

#include <optional>
#include <string>
#include <vector>

namespace godeaux {

/// Content of a shipped file such as "golden/ex-z4-degree12.txt" or "scenes/ex-z4.scene".
std::optional<std::string> embedded_file(const std::string& name);

std::vector<std::string> embedded_names();

}  // namespace godeaux
