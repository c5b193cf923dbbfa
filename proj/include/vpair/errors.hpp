#ifndef VPAIR_ERRORS_HPP
#define VPAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vpair {

// Bad user input: config keys, flag values, malformed state labels.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical invariant (trace, hermiticity, positivity, ...) broke.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invariant violation detected while integrating; carries the step.
class IntegrationError : public InvariantError {
public:
    IntegrationError(std::size_t step, double time, const std::string& what_failed)
        : InvariantError("integration step " + std::to_string(step) + " (t = " +
                         std::to_string(time) + "): " + what_failed),
          step_(step), time_(time) {}
    std::size_t step() const { return step_; }
    double time() const { return time_; }

private:
    std::size_t step_;
    double time_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vpair

#endif
