#pragma once

#include <stdexcept>
#include <string>

namespace sslpoison {

// Invalid argument to an operation (bad range, shape mismatch, infeasible request).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Unknown ids or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Missing or corrupt dataset/image files. path() names the offending file.
class LoadError : public std::runtime_error {
public:
    LoadError(std::string path, const std::string& what)
        : std::runtime_error(what + ": " + path), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class AttackError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ScoringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a training code path tries to read sealed labels.
class LabelLeakError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sslpoison
