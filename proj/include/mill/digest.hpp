#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace mill {

// SHA-256, hex-encoded. Used for manifest provenance only.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

}  // namespace mill
