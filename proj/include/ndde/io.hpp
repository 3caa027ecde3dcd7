#pragma once

#include <filesystem>
#include <string>

namespace ndde {

/// Shortest decimal form with 17 significant digits, enough to round-trip
/// a double exactly.
[[nodiscard]] std::string format_g17(double x);

/// Write content to path atomically: write a sibling temp file, flush,
/// then rename over the target. Readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

} // namespace ndde
