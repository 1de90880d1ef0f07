#pragma once

#include "sslpoison/data_model.hpp"
#include "sslpoison/nn.hpp"
#include "sslpoison/ssl.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sslpoison::train {

enum class ScheduleShape { cosine_7_16, half_cosine };

ScheduleShape schedule_shape_from_string(const std::string& name);
std::string to_string(ScheduleShape shape);

// lr0 * cos(7*pi*step / (16*total)) for the default shape; the half-cosine
// variant is lr0 * (1 + cos(pi*step/total)) / 2.
double cosine_lr(long step, long total, double lr0, ScheduleShape shape = ScheduleShape::cosine_7_16);

struct Schedule {
    int epochs = 30;
    int steps_per_epoch = 0;  // 0: one pass over U (or over X when U is empty)
    int batch_labeled = 64;
    int batch_unlabeled = 64;
    double lr = 0.03;
    double momentum = 0.9;
    double weight_decay = 5e-4;
    bool nesterov = true;
    ScheduleShape shape = ScheduleShape::cosine_7_16;
    std::uint64_t seed = 0;
    std::size_t eval_unlabeled_limit = 0;  // 0: evaluate all of U
};

struct EpochRecord {
    int epoch = 0;
    double acc_labeled = 0.0;
    double acc_unlabeled = 0.0;
    double acc_test = 0.0;
    double l_x = 0.0;
    double l_u = 0.0;
    double mask_rate = 0.0;

    bool operator==(const EpochRecord&) const = default;
};

struct EpochTrace {
    std::vector<EpochRecord> epochs;

    // epoch,acc_X,acc_U,acc_test,L_X,L_U,mask_rate
    void write_csv(const std::filesystem::path& path) const;
    static EpochTrace read_csv(const std::filesystem::path& path);
    bool operator==(const EpochTrace&) const = default;
};

struct TrainedModel {
    nn::ModelSpec spec;
    nn::Network network;
};

class TrainingError : public std::runtime_error {
public:
    TrainingError(const std::string& what, EpochTrace trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}
    const EpochTrace& trace() const noexcept { return trace_; }

private:
    EpochTrace trace_;
};

using EpochCallback = std::function<void(int epoch, nn::Network& model)>;

struct TrainResult {
    TrainedModel model;
    EpochTrace trace;
};

TrainResult train(const DatasetBundle& bundle, const nn::ModelSpec& spec, const ssl::SSLConfig& config,
                  const Schedule& schedule, const ssl::AugmentSettings& aug = {}, const EpochCallback& onEpoch = {});

// Plain supervised loop on X with the same sampling streams as train().
TrainResult train_supervised(const DatasetBundle& bundle, const nn::ModelSpec& spec, const Schedule& schedule,
                             const ssl::AugmentSettings& aug = {});

// Fraction of samples whose visible label is among the top-k logits.
double evaluate(nn::Network& model, const std::vector<ImageSample>& samples, int topk = 1);
// Same, against sealed labels of U (samples without one are skipped).
double evaluate_hidden(nn::Network& model, const std::vector<ImageSample>& samples, int topk = 1,
                       std::size_t limit = 0);
// Top-k hit rate for a logits table; ties rank the lower class index first.
double topk_accuracy(const nn::Matrix& logits, const std::vector<int>& labels, int topk);

nn::ModelSpec spec_for(const DatasetBundle& bundle, const std::string& backbone = "small-cnn");

} // namespace sslpoison::train
