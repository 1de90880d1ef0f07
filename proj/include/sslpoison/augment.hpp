#pragma once

#include "sslpoison/image.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sslpoison {

struct WeakPolicy {
    double flip_probability = 0.5;
    // Max translation as a fraction of width/height; vacated pixels take the
    // nearest edge value.
    double max_shift = 0.125;
};

struct WeakParams {
    bool flip = false;
    int dy = 0;
    int dx = 0;
};

WeakParams sample_weak(const Shape& shape, std::uint64_t seed, const WeakPolicy& policy = {});
Image apply_weak(const Image& image, const WeakParams& params);
Image weak_augment(const Image& image, std::uint64_t seed, const WeakPolicy& policy = {});

enum class StrongOp { invert, posterize, solarize, brightness, contrast, occlude, rotate };

std::string to_string(StrongOp op);
StrongOp strong_op_from_string(const std::string& name);

// One sampled operation. `magnitude` is op specific: posterize bits,
// solarize threshold, brightness/contrast factor, rotation degrees, or the
// occlusion side length in pixels (with top/left giving its position).
struct OpCall {
    StrongOp op = StrongOp::invert;
    double magnitude = 0.0;
    int top = 0;
    int left = 0;
};

struct StrongPolicy {
    std::vector<StrongOp> ops = {StrongOp::invert,     StrongOp::posterize, StrongOp::solarize, StrongOp::brightness,
                                 StrongOp::contrast,   StrongOp::occlude,   StrongOp::rotate};
    int n = 2;
    int posterize_min_bits = 4;
    double solarize_min_threshold = 0.3;
    double factor_min = 0.5;
    double factor_max = 1.5;
    double max_rotation = 30.0;
    // Occlusion side as a fraction of min(H, W); 0.5 bounds the area at 25%.
    double occlude_min_side = 0.25;
    double occlude_max_side = 0.5;
    float occlude_fill = 0.5f;
    // Apply a weak flip/shift before the ops (the usual strong pipeline).
    bool base_weak = true;
    WeakPolicy weak;
};

std::vector<OpCall> sample_strong(const Shape& shape, std::uint64_t seed, const StrongPolicy& policy = {});
Image apply_op(const Image& image, const OpCall& call, const StrongPolicy& policy = {});
Image strong_augment(const Image& image, std::uint64_t seed, const StrongPolicy& policy = {});

Image rotate_image(const Image& image, double degrees, float fill);
Image gaussian_blur(const Image& image, double sigma);

enum class CorruptionKind { smoothing, jpeg, rotation, noise };

CorruptionKind corruption_from_string(const std::string& name);
std::string to_string(CorruptionKind kind);

struct CorruptionParams {
    CorruptionKind kind = CorruptionKind::noise;
    double sigma = 0.05;       // smoothing (pixels) or noise (intensity)
    int quality = 75;          // jpeg
    double angle_min = -15.0;  // rotation range in degrees
    double angle_max = 15.0;
    std::uint64_t seed = 0;
};

Image corrupt(const Image& image, const CorruptionParams& params);

} // namespace sslpoison
