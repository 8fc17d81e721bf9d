#pragma once

#include <string>

namespace spinflux {

// Writes to `path.partial` and renames into place, so an interrupted run
// leaves only the marker file behind.
void write_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace spinflux
