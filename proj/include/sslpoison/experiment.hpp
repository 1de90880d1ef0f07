#pragma once

#include "sslpoison/augment.hpp"
#include "sslpoison/baselines.hpp"
#include "sslpoison/data_model.hpp"
#include "sslpoison/nn.hpp"
#include "sslpoison/platform.hpp"
#include "sslpoison/poisoncraft.hpp"
#include "sslpoison/ssl.hpp"
#include "sslpoison/train.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sslpoison::exp {

using nlohmann::json;

struct DatasetConfig {
    std::string id = "mnist";
    std::string root = "data/mnist-desk";
    std::size_t labeled = 10;
    bool stratified = true;
    bool enforce_ratio = true;
    bool superclasses = false;   // CIFAR-10 three-superclass grouping
    std::size_t unlabeled_limit = 0;
    std::size_t test_limit = 0;
};

struct GuessConfig {
    double precision = 1.0;
    double sensitivity = 1.0;
    std::string pool = "unlabeled";  // where false guesses come from: unlabeled | test
};

struct AttackConfig {
    std::string id = "none";  // none phantom empty remove interp warp fgsm two-unlabeled 3u1l
    double pdr = 0.0;
    double pv = 0.1;
    int arity = 2;
    bool distinct_labels = true;
    bool use_victim_label = true;
    std::vector<int> victim_domain;
    std::vector<poison::Offset> offsets;
    GuessConfig guess;
    std::string density = "one_point_five_minus_x";
    double warp_strength = 0.5;
    int warp_grid = 4;
    double epsilon = 0.1;
};

struct CorruptionConfig {
    bool enabled = false;
    CorruptionParams params;
    std::string scope = "poisoned";  // poisoned | unlabeled
};

struct DefenseConfig {
    bool enabled = false;
    int warmup_epochs = 10;
    double bandwidth = 0.0;  // 0: median heuristic
    double target_fpr = 0.05;
    std::size_t max_references = 2000;
    std::size_t max_scored = 1000;
};

struct PlatformConfig {
    bool enabled = false;
    platform::PlatformProfile profile = platform::profile("instagram");
    std::string scope = "poisoned";  // poisoned | unlabeled
};

struct ExperimentConfig {
    std::string name;
    std::uint64_t seed = 0;
    DatasetConfig dataset;
    AttackConfig attack;
    ssl::SSLConfig ssl;
    train::Schedule schedule;
    nn::ModelSpec model;
    ssl::AugmentSettings augment;
    CorruptionConfig corruption;
    DefenseConfig defense;
    PlatformConfig platform;
    int topk = 0;  // 0: top-1 only
    bool export_images = true;
    bool save_model = true;
    std::string out = "runs";

    void validate() const;
};

json to_json(const ExperimentConfig& config);
// Missing keys take defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const json& j);
ExperimentConfig load_config(const std::filesystem::path& path);
// SHA-256 of the canonical resolved config, excluding name and out.
std::string config_hash(const ExperimentConfig& config);
std::string sha256_hex(const std::string& data);

struct ResultRecord {
    std::string hash;
    std::string name;
    std::uint64_t seed = 0;
    std::string status = "ok";  // ok | failed
    std::string failed_stage;
    std::string error;
    double acc_test = 0.0;
    double acc_unlabeled = 0.0;
    std::optional<double> acc_topk;
    int topk = 0;
    double naive_accuracy = 0.0;
    std::size_t poisoned = 0;
    std::string trace_path;
    std::string manifest_path;
    double wall_clock = 0.0;
    json params;  // dataset, algorithm, attack, pdr, pv, labeled, platform
    std::map<std::string, double> extras;

    bool ok() const noexcept { return status == "ok"; }
};

json to_json(const ResultRecord& r);
ResultRecord record_from_json(const json& j);
ResultRecord read_record(const std::filesystem::path& path);

// Data side of a run: load, select, guess set, attack, corruption, platform.
struct PreparedData {
    DatasetBundle bundle;
    std::optional<poison::GuessSet> guesses;
    poison::PoisonManifest manifest;
};

using StageFn = std::function<void(const std::string& stage)>;
PreparedData prepare_data(const ExperimentConfig& config, const StageFn& onStage = {});

// Majority-class share of the test split.
double naive_accuracy(const std::vector<ImageSample>& test);

std::filesystem::path run_dir(const ExperimentConfig& config);

struct RunOptions {
    bool force = false;  // ignore a cached result
    std::function<void(const std::string&)> log;
};
// Never throws for stage failures; they land in the record.
ResultRecord run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

struct SweepAxis {
    std::string pointer;  // JSON pointer into the config, e.g. /attack/pdr
    std::vector<json> values;
};
struct SweepSpec {
    json base;
    std::vector<SweepAxis> axes;
    int parallelism = 1;
};
SweepSpec sweep_from_json(const json& j);
std::vector<ExperimentConfig> expand_grid(const SweepSpec& spec);

struct SweepOptions {
    int parallelism = 1;
    bool force = false;
    std::function<void(const std::string&)> log;
};
// Cells already completed (cached result) are skipped; failures stay in their cell.
std::vector<ResultRecord> sweep(const std::vector<ExperimentConfig>& grid, const SweepOptions& options = {});
// One row per cell: the swept values (by JSON pointer), then hash, status and accuracies.
void write_sweep_csv(const std::vector<ExperimentConfig>& grid, const std::vector<ResultRecord>& records,
                     const std::vector<std::string>& pointers, const std::filesystem::path& path);

// Writes via a temporary file and rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace sslpoison::exp
