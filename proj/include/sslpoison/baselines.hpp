#pragma once

#include "sslpoison/data_model.hpp"
#include "sslpoison/nn.hpp"
#include "sslpoison/poisoncraft.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sslpoison::baselines {

// Interpolation weight density on [0,1], normalized before sampling.
class DensityFn {
public:
    DensityFn(std::string id, std::function<double(double)> p);

    // Built-ins: const1 (1), one_minus_x (1-x), one_point_five_minus_x (1.5-x), bump (1-x^2+0.5).
    static DensityFn builtin(const std::string& id);
    static std::vector<std::string> builtin_ids();

    const std::string& id() const noexcept { return id_; }
    double raw(double x) const { return p_(x); }
    double mass() const noexcept { return mass_; }
    double pdf(double x) const { return p_(x) / mass_; }
    double cdf(double x) const;
    // Inverse-transform sample for u in [0,1).
    double quantile(double u) const;

private:
    double partial(std::size_t cell, double x) const;

    std::string id_;
    std::function<double(double)> p_;
    std::vector<double> cumulative_;  // unnormalized mass up to each grid node
    double mass_ = 0.0;
};

// Every attack returns the modified bundle plus an audit manifest. Baselines
// without guesses leave guess_ids empty; removal lists removed ids with an
// empty poisoned_id.
struct AttackOutput {
    DatasetBundle bundle;
    poison::PoisonManifest manifest;
};

AttackOutput attack_empty(const DatasetBundle& bundle, double pdr, std::uint64_t seed);
AttackOutput attack_remove(const DatasetBundle& bundle, double fraction, std::uint64_t seed);
// Endpoints come from the attacker pool (labels visible to the attacker).
AttackOutput attack_interpolate(const DatasetBundle& bundle, const poison::GuessSet& pool, double pdr,
                                const DensityFn& density, std::uint64_t seed);

struct WarpField {
    int height = 0;
    int width = 0;
    std::vector<double> dy;  // row-major H*W
    std::vector<double> dx;
};
// Random displacements on a grid x grid lattice, bilinearly upsampled.
WarpField warp_field(int height, int width, double strength, int gridSize, std::uint64_t seed);
Image apply_warp(const Image& image, const WarpField& field);
AttackOutput attack_warp(const DatasetBundle& bundle, double pdr, double strength, int gridSize, std::uint64_t seed);

struct FgsmOptions {
    double epsilon = 0.1;
    nn::ModelSpec surrogate;  // input/classes overwritten from the bundle
    int surrogate_epochs = 30;
    int surrogate_steps_per_epoch = 10;
};
// Perturbs x + eps * sign(grad_x CE(surrogate(x), surrogate's own label)).
Image fgsm_perturb(nn::Network& model, const Image& image, double epsilon);
AttackOutput attack_fgsm(const DatasetBundle& bundle, const poison::GuessSet& pool, double pdr,
                         const FgsmOptions& options, std::uint64_t seed);

// Quadrant pattern from one guess (random quadrant) and three other unlabeled samples.
AttackOutput attack_3u1l(const DatasetBundle& bundle, const poison::GuessSet& guesses, double pv, double pdr,
                         std::uint64_t seed);
// Experimental: half/half pattern from two other unlabeled samples.
AttackOutput attack_two_unlabeled(const DatasetBundle& bundle, double pv, double pdr, std::uint64_t seed);

} // namespace sslpoison::baselines
