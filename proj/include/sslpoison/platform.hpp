#pragma once

#include "sslpoison/image.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace sslpoison::platform {

// Geometry needed to undo a stack: tile grid, square padding and resize.
struct Layout {
    int rows = 0;
    int cols = 0;
    int tile_height = 0;
    int tile_width = 0;
    int channels = 0;
    std::size_t count = 0;
    float pad_value = 0.0f;
    // Grid area sits at (pad_top, pad_left) inside a padded_height x padded_width canvas.
    int pad_top = 0;
    int pad_left = 0;
    int padded_height = 0;
    int padded_width = 0;
    // Size after the platform resize (equal to padded size when none).
    int stored_height = 0;
    int stored_width = 0;
    std::string resize_filter = "bilinear";

    void write(const std::filesystem::path& path) const;
    static Layout read(const std::filesystem::path& path);
    bool operator==(const Layout&) const = default;
};

// Tiles images row-major; unused cells (and square padding) get pad_value.
std::pair<Image, Layout> stack_images(const std::vector<Image>& images, int gridRows, int gridCols,
                                      float padValue = 0.0f, bool square = false);
// Inverse of stack_images; accepts the canvas at padded or stored size.
std::vector<Image> unstack(const Image& canvas, const Layout& layout);

struct PlatformProfile {
    std::string name;
    int target_size = 0;     // longest side after resize; 0 keeps the size
    bool enforce_square = false;
    int jpeg_quality = 0;    // 0: lossless (no recompression)
    std::string resize_filter = "bilinear";
    int grid = 0;            // tiles per side; 0 picks target_size / tile size

    void validate() const;
};

// instagram, facebook, pinterest, identity.
PlatformProfile profile(const std::string& name);
std::vector<std::string> profile_names();

struct Upload {
    Image canvas;
    Layout layout;
};
// Stack, pad to square if required and resize; one upload per full grid.
std::vector<Upload> prepare_upload(const std::vector<Image>& images, const PlatformProfile& profile);
// Recompression step of the platform (identity at quality 0).
Image platform_recompress(const Image& canvas, const PlatformProfile& profile);
// Undo the resize and unstack.
std::vector<Image> restore_download(const Image& canvas, const Layout& layout);

std::vector<Image> platform_roundtrip(const std::vector<Image>& images, const PlatformProfile& profile);

} // namespace sslpoison::platform
