#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mset {

// All library errors carry a stable machine-readable code plus the exit
// class the CLI maps them to (2 = config/domain error, 3 = budget).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg, int exit_code)
        : std::runtime_error(code + ": " + msg),
          code_(std::move(code)),
          exit_code_(exit_code) {}

    const std::string& code() const { return code_; }
    int exit_code() const { return exit_code_; }

private:
    std::string code_;
    int exit_code_;
};

class ConfigError : public Error {
public:
    ConfigError(std::string code, const std::string& msg)
        : Error(std::move(code), msg, 2) {}
};

class BudgetError : public Error {
public:
    BudgetError(std::string code, const std::string& msg)
        : Error(std::move(code), msg, 3) {}
};

} // namespace mset
