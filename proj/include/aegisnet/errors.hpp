#pragma once

#include <stdexcept>
#include <string>

namespace aegisnet {

/// Scenario/config rejection. `line` is 0 when the error is not tied to a
/// specific config line (e.g. programmatic construction).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + field + ": " + message
                                      : field + ": " + message),
          field_(std::move(field)),
          line_(line) {}

    const std::string& field() const { return field_; }
    int line() const { return line_; }

private:
    std::string field_;
    int line_;
};

class InsufficientNodes : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateIdentity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aegisnet
