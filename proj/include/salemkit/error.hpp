#pragma once

#include <stdexcept>
#include <string>

namespace salemkit {

enum class ErrorKind {
    config,
    domain,
    pole,
    overflow,
    precision_unattainable,
    nonconvergence,
    support_violation,
    grid_mismatch,
    wraparound,
    nonreal_result,
    cancellation,
    truncation_budget,
    tail_bound,
    edge_proximity,
    convention_mismatch,
    excluded_nodes,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind decides how the CLI maps it
/// to an exit code: config/domain errors on user input are exit 2, everything
/// else is a numerical-infrastructure failure (exit 3).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace salemkit
