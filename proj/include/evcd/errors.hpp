#ifndef EVCD_ERRORS_HPP
#define EVCD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evcd {

// Bad input data or configuration (CLI exit code 1).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure: eigensolver breakdown, degenerate ECM system (exit code 2).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace evcd

#endif
