#pragma once

#include "sslpoison/image.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace sslpoison::nn {

using Matrix = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixMap = Eigen::Map<Matrix>;
using ConstMatrixMap = Eigen::Map<const Matrix>;

// NHWC activation tensor. Dense activations use h = w = 1.
struct Tensor {
    int n = 0;
    int h = 1;
    int w = 1;
    int c = 0;
    std::vector<float> data;

    Tensor() = default;
    Tensor(int n, int h, int w, int c, float fill = 0.0f);

    std::size_t size() const noexcept { return data.size(); }
    std::size_t per_sample() const noexcept { return static_cast<std::size_t>(h) * w * c; }
    float& at(int i, int y, int x, int k) noexcept
    {
        return data[((static_cast<std::size_t>(i) * h + y) * w + x) * c + k];
    }
    float at(int i, int y, int x, int k) const noexcept
    {
        return data[((static_cast<std::size_t>(i) * h + y) * w + x) * c + k];
    }
    // (n*h*w) x c view.
    MatrixMap rows() { return {data.data(), static_cast<Eigen::Index>(n) * h * w, c}; }
    ConstMatrixMap rows() const { return {data.data(), static_cast<Eigen::Index>(n) * h * w, c}; }
    // n x (h*w*c) view.
    MatrixMap samples() { return {data.data(), n, static_cast<Eigen::Index>(per_sample())}; }
    ConstMatrixMap samples() const { return {data.data(), n, static_cast<Eigen::Index>(per_sample())}; }
};

Tensor stack_images(std::span<const Image> images);
Tensor stack_images(std::span<const Image* const> images);
Tensor concat_batches(const Tensor& a, const Tensor& b);
Tensor slice_batch(const Tensor& t, int begin, int end);

struct ParamRef {
    std::string name;
    std::span<float> value;
    std::span<float> grad;
    bool decay = true;
};

class Layer {
public:
    virtual ~Layer() = default;
    virtual std::string kind() const = 0;
    // Caches whatever backward needs; a later forward overwrites the cache.
    virtual Tensor forward(const Tensor& x, bool training) = 0;
    // Accumulates parameter gradients and returns d(loss)/d(input).
    virtual Tensor backward(const Tensor& grad) = 0;
    virtual std::vector<ParamRef> parameters() { return {}; }
    // Non-trainable state persisted in checkpoints (BN running statistics).
    virtual std::vector<std::span<float>> buffers() { return {}; }
    virtual void initialize(std::mt19937_64&) {}
    virtual std::unique_ptr<Layer> clone() const = 0;
};

class Conv2d final : public Layer {
public:
    Conv2d(int in, int out, int kernel, int stride, int padding, bool bias = true);
    std::string kind() const override { return "conv"; }
    Tensor forward(const Tensor& x, bool training) override;
    Tensor backward(const Tensor& grad) override;
    std::vector<ParamRef> parameters() override;
    void initialize(std::mt19937_64& rng) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<Conv2d>(*this); }

    int in_channels() const noexcept { return in_; }
    int out_channels() const noexcept { return out_; }
    // (k*k*in) x out, row index = (ky*k + kx)*in + ci.
    Matrix& weight() noexcept { return weight_; }
    Eigen::VectorXf& bias() noexcept { return bias_; }

private:
    int in_, out_, kernel_, stride_, padding_;
    bool hasBias_;
    Matrix weight_, weightGrad_;
    Eigen::VectorXf bias_, biasGrad_;
    Matrix cols_;
    int inN_ = 0, inH_ = 0, inW_ = 0, outH_ = 0, outW_ = 0;
};

class Dense final : public Layer {
public:
    Dense(int in, int out);
    std::string kind() const override { return "dense"; }
    Tensor forward(const Tensor& x, bool training) override;
    Tensor backward(const Tensor& grad) override;
    std::vector<ParamRef> parameters() override;
    void initialize(std::mt19937_64& rng) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<Dense>(*this); }

    Matrix& weight() noexcept { return weight_; }
    Eigen::VectorXf& bias() noexcept { return bias_; }

private:
    int in_, out_;
    Matrix weight_, weightGrad_;
    Eigen::VectorXf bias_, biasGrad_;
    Tensor input_;
};

class Relu final : public Layer {
public:
    explicit Relu(float negativeSlope = 0.0f) : slope_(negativeSlope) {}
    std::string kind() const override { return "relu"; }
    Tensor forward(const Tensor& x, bool training) override;
    Tensor backward(const Tensor& grad) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<Relu>(*this); }

private:
    float slope_;
    Tensor input_;
};

class MaxPool2 final : public Layer {
public:
    std::string kind() const override { return "maxpool"; }
    Tensor forward(const Tensor& x, bool training) override;
    Tensor backward(const Tensor& grad) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<MaxPool2>(*this); }

private:
    int inN_ = 0, inH_ = 0, inW_ = 0, inC_ = 0;
    std::vector<std::uint32_t> argmax_;
};

class GlobalAvgPool final : public Layer {
public:
    std::string kind() const override { return "gap"; }
    Tensor forward(const Tensor& x, bool training) override;
    Tensor backward(const Tensor& grad) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<GlobalAvgPool>(*this); }

private:
    int inN_ = 0, inH_ = 0, inW_ = 0, inC_ = 0;
};

class BatchNorm final : public Layer {
public:
    explicit BatchNorm(int channels, float momentum = 0.001f, float eps = 1e-5f);
    std::string kind() const override { return "batchnorm"; }
    Tensor forward(const Tensor& x, bool training) override;
    Tensor backward(const Tensor& grad) override;
    std::vector<ParamRef> parameters() override;
    std::vector<std::span<float>> buffers() override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<BatchNorm>(*this); }

private:
    int channels_;
    float momentum_, eps_;
    Eigen::VectorXf gamma_, beta_, gammaGrad_, betaGrad_, runningMean_, runningVar_;
    Tensor normalized_;
    Eigen::VectorXf invStd_;
    bool trainingPass_ = false;
};

// Pre-activation wide-resnet basic block.
class ResidualBlock final : public Layer {
public:
    ResidualBlock(int in, int out, int stride);
    ResidualBlock(const ResidualBlock& other);
    std::string kind() const override { return "residual"; }
    Tensor forward(const Tensor& x, bool training) override;
    Tensor backward(const Tensor& grad) override;
    std::vector<ParamRef> parameters() override;
    std::vector<std::span<float>> buffers() override;
    void initialize(std::mt19937_64& rng) override;
    std::unique_ptr<Layer> clone() const override { return std::make_unique<ResidualBlock>(*this); }

private:
    BatchNorm bn1_, bn2_;
    Relu relu1_, relu2_;
    Conv2d conv1_, conv2_;
    std::unique_ptr<Conv2d> shortcut_;
};

struct ModelSpec {
    std::string backbone = "small-cnn";  // small-cnn | vgg-small | wide-resnet-<depth>-<width>
    Shape input{28, 28, 1};
    int classes = 10;
    // small-cnn / vgg-small widths.
    int conv1 = 16;
    int conv2 = 32;
    int hidden = 64;
};

// Sequential network. `feature_layer` is the index of the layer whose output
// is the final hidden representation.
class Network {
public:
    Network() = default;
    Network(const Network& other);
    Network& operator=(const Network& other);
    Network(Network&&) noexcept = default;
    Network& operator=(Network&&) noexcept = default;

    void add(std::unique_ptr<Layer> layer) { layers_.push_back(std::move(layer)); }
    void set_feature_layer(int index) { featureLayer_ = index; }
    int feature_layer() const noexcept { return featureLayer_; }
    std::size_t layer_count() const noexcept { return layers_.size(); }
    Layer& layer(std::size_t i) { return *layers_.at(i); }
    const Layer& layer(std::size_t i) const { return *layers_.at(i); }

    // activations, when given, receives the output of every layer.
    Tensor forward(const Tensor& x, bool training, std::vector<Tensor>* activations = nullptr);
    // grads, when given, receives d(loss)/d(output of layer i) at index i.
    Tensor backward(const Tensor& gradLogits, std::vector<Tensor>* grads = nullptr);
    Tensor features(const Tensor& x);

    // Inference in chunks; never disturbs a pending backward's caches beyond
    // what forward already does.
    Tensor predict_logits(const Tensor& x, int chunk = 256);

    std::vector<ParamRef> parameters();
    std::vector<std::span<float>> buffers();
    std::size_t parameter_count();
    void zero_grad();
    void initialize(std::uint64_t seed);

    void save(const std::filesystem::path& path);
    void load(const std::filesystem::path& path);

private:
    std::vector<std::unique_ptr<Layer>> layers_;
    int featureLayer_ = -1;
};

Network build_network(const ModelSpec& spec, std::uint64_t seed);
std::size_t parameter_count(const ModelSpec& spec);

// SGD with (Nesterov) momentum and decoupled-from-bias L2 weight decay.
class Sgd {
public:
    Sgd(float momentum = 0.9f, float weightDecay = 5e-4f, bool nesterov = true)
        : momentum_(momentum), weightDecay_(weightDecay), nesterov_(nesterov) {}
    void step(Network& net, float lr);

private:
    float momentum_, weightDecay_;
    bool nesterov_;
    std::vector<std::vector<float>> velocity_;
};

// Row-wise softmax of a logits tensor (n x classes).
Matrix softmax(const Tensor& logits);

} // namespace sslpoison::nn
