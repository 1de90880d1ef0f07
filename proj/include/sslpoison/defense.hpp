#pragma once

#include "sslpoison/data_model.hpp"
#include "sslpoison/nn.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sslpoison::defense {

struct DetectionMetrics {
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    double tpr = 0.0;
    double tnr = 0.0;
    std::optional<double> prc;  // undefined when nothing is predicted positive
    std::optional<double> f1;   // undefined when prc or tpr is undefined, or both are 0
    double acc = 0.0;
};

DetectionMetrics metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn);
// true = poisoned / flagged.
DetectionMetrics detection_metrics(const std::vector<bool>& predictions, const std::vector<bool>& truth);
std::string format_metric(const std::optional<double>& v);

double gaussian_kernel(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double bandwidth);
// Mean kernel similarity between `feature` and each row of `references`.
double kdensity(const Eigen::VectorXd& feature, const Eigen::MatrixXd& references, double bandwidth);

using FeatureFn = std::function<Eigen::VectorXd(const Image&)>;

// Reference features keyed by the model's predicted class.
struct ReferenceSet {
    std::map<int, Eigen::MatrixXd> by_class;
};

double kdensity(const FeatureFn& features, const Image& x, int predictedClass, const ReferenceSet& refs,
                double bandwidth);

struct Embedding {
    Eigen::MatrixXd features;  // one row per image
    std::vector<int> predicted;
};
// Final-hidden-layer features and predicted classes (inference mode).
Embedding embed(nn::Network& model, const std::vector<const Image*>& images);
FeatureFn feature_fn(nn::Network& model);

// Groups training features by the model's own prediction.
ReferenceSet build_references(const Embedding& training);
// Median pairwise Euclidean distance, over at most `maxPoints` rows.
double median_bandwidth(const Eigen::MatrixXd& features, std::size_t maxPoints = 1000, std::uint64_t seed = 0);
double median_bandwidth(const ReferenceSet& refs, std::size_t maxPoints = 1000, std::uint64_t seed = 0);

// KD of each embedded sample against its predicted class's references.
std::vector<double> kd_scores(const Embedding& samples, const ReferenceSet& refs, double bandwidth);

struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<std::size_t> counts;
};
Histogram histogram(const std::vector<double>& values, double lo, double hi, std::size_t bins);

// P(poison score > benign score) + P(tie)/2.
double roc_auc(const std::vector<double>& benign, const std::vector<double>& poison);
// max(auc, 1 - auc): direction-free distance between the two score sets.
double separability(const std::vector<double>& benign, const std::vector<double>& poison);

// Flags scores strictly above the threshold.
DetectionMetrics metrics_at(const std::vector<double>& benign, const std::vector<double>& poison, double threshold);

struct ThresholdResult {
    double threshold = 0.0;
    DetectionMetrics metrics;
    Histogram benign_hist;
    Histogram poison_hist;
    double auc = 0.5;
};
// Higher score = more suspicious. The threshold keeps benign FPR <= target.
ThresholdResult threshold_test(const std::vector<double>& benign, const std::vector<double>& poison,
                               double targetFpr, std::size_t bins = 20);

struct Detector {
    nn::ModelSpec spec;
    nn::Network network;
};
struct DetectorOptions {
    nn::ModelSpec spec{"vgg-small", {28, 28, 1}, 2, 8, 16, 32};
    int epochs = 15;
    int steps_per_epoch = 0;
    int batch = 64;
    double lr = 0.03;
};
// Binary benign(0)/poisoned(1) classifier.
Detector train_detector(const std::vector<Image>& benign, const std::vector<Image>& poison,
                        const DetectorOptions& options, std::uint64_t seed);
std::vector<double> detector_scores(Detector& detector, const std::vector<Image>& images);
DetectionMetrics evaluate_detector(Detector& detector, const std::vector<Image>& benign,
                                   const std::vector<Image>& poison);

void write_scores_csv(const std::filesystem::path& path, const std::vector<std::string>& ids,
                      const std::vector<double>& scores, const std::vector<bool>& verdicts);
void write_histograms_csv(const std::filesystem::path& path, const Histogram& benign, const Histogram& poison);

} // namespace sslpoison::defense
