#pragma once

#include "sslpoison/data_model.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sslpoison::poison {

// The attacker's suspected labeled samples (X_A).
struct GuessSet {
    std::vector<ImageSample> samples;
    double achieved_precision = 0.0;  // |X_A ∩ X| / |X_A|
    double achieved_sensitivity = 0.0;  // |X_A ∩ X| / |X|
};

// Draws round(s*|X|) members of `trueLabeled` plus enough pool samples to
// reach |X_A| = round(s*|X|/p). Pool samples keep their visible label, or
// the sealed one when the pool comes from U.
GuessSet build_guess_set(const std::vector<ImageSample>& trueLabeled, const std::vector<ImageSample>& candidatePool,
                         double precision, double sensitivity, std::uint64_t seed);

// Wraps an existing sample list (e.g. the true X for a perfect-knowledge run).
GuessSet guess_set_from(std::vector<ImageSample> samples);

enum class CropMode { center, custom };

struct Offset {
    int top = 0;
    int left = 0;
};

struct PoisonConfig {
    double pv = 0.1;
    double pdr = 0.05;
    int pattern_arity = 2;
    bool distinct_label_policy = true;
    CropMode crop_mode = CropMode::center;
    std::vector<Offset> offsets;  // one per guess, custom mode only
    // Classes never used for patterns when the victim's own label is unknown
    // (the attacker's victim domain, e.g. animals when patterns are machines).
    std::vector<int> victim_domain;
    // Use the victim's sealed label to keep pattern classes different from it.
    bool use_victim_label = true;
    std::uint64_t seed = 0;

    void validate() const;
};

struct ManifestEntry {
    std::string poisoned_id;
    std::string source_id;
    std::vector<std::string> guess_ids;
    double pv = 0.0;
    std::vector<int> guess_labels;

    bool operator==(const ManifestEntry&) const = default;
};

struct PoisonManifest {
    std::vector<ManifestEntry> entries;

    // One entry per line: poisoned_id,source_id,pv,guess ids joined by '|',
    // guess labels joined by '|'.
    void write(const std::filesystem::path& path) const;
    static PoisonManifest read(const std::filesystem::path& path);
    bool operator==(const PoisonManifest&) const = default;
};

// k=2: halves, each the center (or offset) half-width crop of its guess.
// k=4: quadrants, each the half-height/half-width crop of its guess.
// Guesses of another size are bilinearly resized to `target` first.
ImageSample make_pattern(std::span<const ImageSample> guesses, const Shape& target, bool distinctLabels = true,
                         CropMode mode = CropMode::center, std::span<const Offset> offsets = {});

// (1 - pv) * r + pv * p per pixel, evaluated in double.
double blend_value(double regular, double pattern, double pv);
ImageSample blend(const ImageSample& regular, const ImageSample& pattern, double pv);

// floor(pdr * n), robust to representation error in pdr (0.29 * 100 = 29).
std::size_t poison_count(double pdr, std::size_t n);

// Victim indices into U chosen without replacement, in increasing order.
std::vector<std::size_t> choose_victims(std::size_t unlabeledSize, std::size_t count, std::uint64_t seed);

// Id given to a manipulated replacement of `sourceId`.
std::string poisoned_id(const std::string& sourceId);

std::pair<DatasetBundle, PoisonManifest> poison_unlabeled(const DatasetBundle& bundle, const GuessSet& guesses,
                                                          const PoisonConfig& config);

// Writes every manifest entry's poisoned image as PNG under `dir`, named by
// its id with '/' replaced by '_'. Entries without a poisoned id (removed
// samples) are skipped. Returns the written paths.
std::vector<std::filesystem::path> export_poisoned(const DatasetBundle& bundle, const PoisonManifest& manifest,
                                                   const std::filesystem::path& dir);
std::string file_stem_for(const std::string& id);

} // namespace sslpoison::poison
