#pragma once

#include <stdexcept>
#include <string>

namespace patern {

// Error taxonomy mirrors the CLI exit codes: config 2, training 3,
// planning 4, extrapolation no-match 5.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BoundsError : ValidationError {
    explicit BoundsError(const std::string& msg) : ValidationError(msg) {}
};

struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PlanningError : std::runtime_error {
    explicit PlanningError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoMatchError : std::runtime_error {
    explicit NoMatchError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace patern
