#pragma once

#include "sslpoison/image.hpp"
#include "sslpoison/nn.hpp"

#include <optional>
#include <vector>

namespace sslpoison {

// H x W saliency in [0,1] (row-major), from the channel-weighted positive
// activations of a spatial layer.
struct SaliencyMap {
    int height = 0;
    int width = 0;
    std::vector<float> values;

    float at(int y, int x) const { return values[static_cast<std::size_t>(y) * width + x]; }
    Image to_image() const;
};

// `layer` indexes Network layers; its output must be spatial (conv stage).
// The target class defaults to the model's prediction.
SaliencyMap gradcam(nn::Network& model, const Image& sample, int layer, std::optional<int> targetClass = {});

// Last layer whose output is still spatial, for the default selector.
int last_spatial_layer(nn::Network& model, const Shape& input);

// Share of saliency mass in the columns [left, left + width).
double column_mass(const SaliencyMap& map, int left, int width);

} // namespace sslpoison
