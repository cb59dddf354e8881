#pragma once

#include <stdexcept>
#include <string>

namespace propcal {

// Validation-type failures (bad config, bad input files, bad arguments).
// The CLI maps these to exit code 1.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Runtime-type failures (degenerate data discovered mid-computation, I/O).
// The CLI maps these to exit code 2.
class DegenerateLabelsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StratificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BalanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PairingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace propcal
