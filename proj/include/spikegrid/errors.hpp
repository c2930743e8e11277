#pragma once

#include <stdexcept>
#include <string>

namespace spikegrid {

/// Invalid parameter or config value. The message names the offending
/// key and the rule it violates.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structural problem with the network graph (disconnected, self-loop, ...).
class topology_error : public std::runtime_error {
public:
    explicit topology_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// State became non-finite or exceeded the divergence guard. Carries the
/// simulated time at which the failure was detected.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& msg, double t_fail)
        : std::runtime_error(msg + " (t = " + std::to_string(t_fail) + " s)"),
          time(t_fail) {}
    double time;
};

/// Linear system has no solution (e.g. all DERs offline).
class no_solution_error : public std::runtime_error {
public:
    explicit no_solution_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace spikegrid
