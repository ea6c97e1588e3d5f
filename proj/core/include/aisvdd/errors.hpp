#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aisvdd {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

// Byte- or text-level problem in an input file (bad magic, truncated
// payload, row width mismatch, label outside {-1,+1}, empty dataset).
class FormatError : public Error {
public:
    using Error::Error;
};

// Precondition breach on an in-memory value (dimension mismatch, bad
// hyperparameter, unknown config key).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A batch or dataset with label sum <= 0 cannot be stratified or given a
// signed center.
class StratificationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateCenterError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Non-finite loss during training; carries the step at which it happened.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, std::size_t step)
        : Error(what + " at step " + std::to_string(step)), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

}  // namespace aisvdd
