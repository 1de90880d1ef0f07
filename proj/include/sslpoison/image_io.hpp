#pragma once

#include "sslpoison/image.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace sslpoison {

// 8-bit quantization shared by every codec: round(v * 255).
std::uint8_t to_byte(float v);

Image read_png(const std::filesystem::path& path);
void write_png(const Image& image, const std::filesystem::path& path);

std::vector<std::uint8_t> encode_jpeg(const Image& image, int quality);
Image decode_jpeg(const std::vector<std::uint8_t>& bytes);
Image read_jpeg(const std::filesystem::path& path);
void write_jpeg(const Image& image, const std::filesystem::path& path, int quality);

// Reads a whole file, transparently gunzipping when the name ends in ".gz".
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

} // namespace sslpoison
