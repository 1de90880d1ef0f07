#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sslpoison {

struct Shape {
    int height = 0;
    int width = 0;
    int channels = 0;

    std::size_t size() const noexcept
    {
        return static_cast<std::size_t>(height) * width * channels;
    }
    bool operator==(const Shape&) const = default;
};

// Dense HWC float image. Pixel values are expected in [0,1]; the class does
// not clamp on write, callers that can leave the range call clamp().
class Image {
public:
    Image() = default;
    explicit Image(Shape shape, float fill = 0.0f);
    Image(Shape shape, std::vector<float> pixels);

    const Shape& shape() const noexcept { return shape_; }
    int height() const noexcept { return shape_.height; }
    int width() const noexcept { return shape_.width; }
    int channels() const noexcept { return shape_.channels; }
    bool empty() const noexcept { return pixels_.empty(); }

    float& at(int y, int x, int c) noexcept
    {
        return pixels_[(static_cast<std::size_t>(y) * shape_.width + x) * shape_.channels + c];
    }
    float at(int y, int x, int c) const noexcept
    {
        return pixels_[(static_cast<std::size_t>(y) * shape_.width + x) * shape_.channels + c];
    }

    std::span<float> pixels() noexcept { return pixels_; }
    std::span<const float> pixels() const noexcept { return pixels_; }

    float min_value() const;
    float max_value() const;
    bool in_unit_range() const;
    void clamp();

    bool operator==(const Image&) const = default;

private:
    Shape shape_;
    std::vector<float> pixels_;
};

// Bilinear sample with edge clamping at fractional coordinates.
float sample_bilinear(const Image& image, float y, float x, int c);

Image resize_bilinear(const Image& image, int height, int width);
Image resize_nearest(const Image& image, int height, int width);

// Copies the window [top, top+height) x [left, left+width).
Image crop(const Image& image, int top, int left, int height, int width);

// Pastes `tile` with its top-left corner at (top, left).
void paste(Image& canvas, const Image& tile, int top, int left);

// Converts between channel counts (gray <-> rgb by replication / luma mean).
Image convert_channels(const Image& image, int channels);

double max_abs_diff(const Image& a, const Image& b);

} // namespace sslpoison
