#pragma once

#include <filesystem>
#include <string>

namespace monge::io {

/// Whole-file read; throws ParseError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory and renames it over
/// the target, so readers never observe a partial file. Throws
/// std::runtime_error on I/O failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace monge::io
