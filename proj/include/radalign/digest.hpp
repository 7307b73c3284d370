#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace radalign {

// SHA-256 hex digest of a byte string.
std::string sha256_hex(std::string_view bytes);

// Streaming SHA-256 hex digest of a file. Throws std::runtime_error when the
// file cannot be read.
std::string file_sha256_hex(const std::filesystem::path& path);

}  // namespace radalign
