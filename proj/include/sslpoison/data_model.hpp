#pragma once

#include "sslpoison/image.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sslpoison {

// Ground-truth label of an unlabeled sample. Only label_audit::reveal can read
// it, and reveal refuses while a TrainingScope is active on the thread.
class SealedLabel {
public:
    SealedLabel() = default;
    explicit SealedLabel(int label) : value_(label) {}

    bool present() const noexcept { return value_.has_value(); }

private:
    friend std::optional<int> reveal_sealed(const SealedLabel&, std::string_view);
    std::optional<int> value_;
};

struct ImageSample {
    std::string id;
    Image image;
    std::optional<int> label;   // visible label (X and test)
    SealedLabel hidden;         // retained ground truth for U
};

namespace label_audit {

// Reads a sealed label. `purpose` is recorded in the audit counters.
// Throws LabelLeakError inside a TrainingScope.
std::optional<int> reveal(const ImageSample& sample, std::string_view purpose);

std::size_t reads();
bool training_active();

class TrainingScope {
public:
    TrainingScope();
    ~TrainingScope();
    TrainingScope(const TrainingScope&) = delete;
    TrainingScope& operator=(const TrainingScope&) = delete;
};

} // namespace label_audit

class LabelSpace {
public:
    LabelSpace() = default;
    explicit LabelSpace(std::vector<std::string> classes,
                        std::optional<std::map<std::string, std::string>> grouping = std::nullopt);

    std::size_t size() const noexcept { return classes_.size(); }
    const std::vector<std::string>& classes() const noexcept { return classes_; }
    const std::string& name(int index) const { return classes_.at(static_cast<std::size_t>(index)); }
    std::optional<int> index_of(std::string_view name) const;
    const std::optional<std::map<std::string, std::string>>& grouping() const noexcept { return grouping_; }

    bool operator==(const LabelSpace&) const = default;

private:
    std::vector<std::string> classes_;
    std::optional<std::map<std::string, std::string>> grouping_;
};

struct DatasetBundle {
    std::string name;
    std::vector<ImageSample> labeled;
    std::vector<ImageSample> unlabeled;
    std::vector<ImageSample> test;
    LabelSpace label_space;

    Shape sample_shape() const;
};

// Ids: "mnist", "fashion-mnist" (IDX archives), "cifar10" (binary batches),
// "folder" (images/<id>.png + labels.csv, optional test/ subtree).
// The whole train split is returned as `labeled`; `unlabeled` is empty until
// select_labeled partitions it.
DatasetBundle load_dataset(const std::string& name, const std::filesystem::path& root);

struct SelectOptions {
    bool stratified = true;
    // Require |X| <= |U| / 10.
    bool enforce_ratio = true;
};

// Partitions the train pool (labeled plus any unlabeled) into n labeled and
// the rest unlabeled with sealed labels.
DatasetBundle select_labeled(const DatasetBundle& bundle, std::size_t n, std::uint64_t seed,
                             const SelectOptions& options = {});

DatasetBundle map_labels(const DatasetBundle& bundle, const std::map<std::string, std::string>& grouping);

// The three-superclass CIFAR-10 grouping (mechanical / small / large animals).
std::map<std::string, std::string> cifar10_superclass_grouping();

// Writes samples in the generic folder layout (labels from the visible label,
// falling back to the sealed one).
void save_folder_dataset(const std::vector<ImageSample>& samples, const LabelSpace& space,
                         const std::filesystem::path& root);

} // namespace sslpoison
