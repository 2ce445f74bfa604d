#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmsep {

// An iterative routine exhausted its budget before meeting its tolerance.
// Carries the best point seen so callers can still inspect it.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, std::vector<double> best_params,
                      double best_value, long iterations)
        : std::runtime_error(what),
          best_params_(std::move(best_params)),
          best_value_(best_value),
          iterations_(iterations) {}

    const std::vector<double>& best_params() const noexcept { return best_params_; }
    double best_value() const noexcept { return best_value_; }
    long iterations() const noexcept { return iterations_; }

private:
    std::vector<double> best_params_;
    double best_value_;
    long iterations_;
};

// Malformed record in a delimited molecule table; line numbers are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Filesystem failure while reading inputs or emitting outputs.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cmsep
