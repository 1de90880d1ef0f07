#pragma once

#include "sslpoison/augment.hpp"
#include "sslpoison/image.hpp"
#include "sslpoison/nn.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sslpoison::ssl {

// Probability vector over the label space; entries >= 0 summing to 1 (1e-6).
class ProbDist {
public:
    explicit ProbDist(std::vector<double> probs);
    const std::vector<double>& probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    std::size_t argmax() const;

private:
    std::vector<double> probs_;
};

// p_i^(1/T) / sum_c p_c^(1/T), evaluated in log space.
ProbDist sharpen(const ProbDist& dist, double temperature);

enum class Algorithm { mixmatch, uda, fixmatch };
std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

struct SSLConfig {
    Algorithm algorithm = Algorithm::fixmatch;
    double temperature = 0.5;
    double lambda_u = 1.0;
    double tau = 0.8;
    int augmentations = 2;          // K, MixMatch label-guess views
    bool mixmatch_threshold = false;
    bool mixup = false;             // reserved, must stay off

    void validate() const;
};

SSLConfig default_config(Algorithm a);

// Logit-level losses run in double so finite-difference checks are meaningful.
using Logits = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Loss parts and d(L)/d(logits) for the rows that receive gradient.
struct LossGrad {
    double l_x = 0.0;
    double l_u = 0.0;
    double total = 0.0;
    double mask_rate = 0.0;
    Logits grad_labeled;                // B_x x C
    std::vector<Logits> grad_unlabeled;     // one per unlabeled view carrying gradient
};

// Mean cross-entropy of labeled logits; gradients included.
LossGrad supervised_loss(const Logits& labeledLogits, const std::vector<int>& labels);

// Weak logits are targets only (stop-gradient); gradients flow to strong.
LossGrad fixmatch_loss(const Logits& labeledLogits, const std::vector<int>& labels,
                       const Logits& weakLogits, const Logits& strongLogits, const SSLConfig& config);
LossGrad uda_loss(const Logits& labeledLogits, const std::vector<int>& labels, const Logits& weakLogits,
                  const Logits& strongLogits, const SSLConfig& config);

// Sharpened mean of the K views' softmax; rows are samples.
Logits mixmatch_guess(const std::vector<Logits>& viewLogits, double temperature);
// `guesses` are held fixed; gradients flow to every view.
LossGrad mixmatch_loss(const Logits& labeledLogits, const std::vector<int>& labels,
                       const std::vector<Logits>& viewLogits, const Logits& guesses, const SSLConfig& config);

// Index of the largest entry; ties go to the lowest index.
int argmax_row(const Logits& m, Eigen::Index row);

struct LabeledBatch {
    std::vector<const Image*> images;
    std::vector<int> labels;
};

struct UnlabeledBatch {
    std::vector<const Image*> images;
};

struct AugmentSettings {
    WeakPolicy weak;
    StrongPolicy strong;
};

enum class GuessMode { average, weak_single };

// Label guess for one sample from K weak views (average) or a single weak view.
ProbDist guess_label(nn::Network& model, const Image& sample, int views, GuessMode mode, std::uint64_t seed,
                     const WeakPolicy& weak = {});

struct StepResult {
    double l_x = 0.0;
    double l_u = 0.0;
    double total = 0.0;
    double mask_rate = 0.0;
};

// One loss evaluation plus backward pass; gradients accumulate into `model`
// (call zero_grad first). No optimizer step is taken.
StepResult mixmatch_step(nn::Network& model, const LabeledBatch& labeled, const UnlabeledBatch& unlabeled,
                         const SSLConfig& config, const AugmentSettings& aug, std::uint64_t seed);
StepResult uda_step(nn::Network& model, const LabeledBatch& labeled, const UnlabeledBatch& unlabeled,
                    const SSLConfig& config, const AugmentSettings& aug, std::uint64_t seed);
StepResult fixmatch_step(nn::Network& model, const LabeledBatch& labeled, const UnlabeledBatch& unlabeled,
                         const SSLConfig& config, const AugmentSettings& aug, std::uint64_t seed);
StepResult supervised_step(nn::Network& model, const LabeledBatch& labeled, const AugmentSettings& aug,
                           std::uint64_t seed);

StepResult ssl_step(nn::Network& model, const LabeledBatch& labeled, const UnlabeledBatch& unlabeled,
                    const SSLConfig& config, const AugmentSettings& aug, std::uint64_t seed);

} // namespace sslpoison::ssl
