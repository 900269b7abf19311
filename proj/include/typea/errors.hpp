#pragma once

#include <stdexcept>
#include <string>

namespace typea {

/// Root of every error the analysis library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed model file (syntax, unknown key, missing key).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Model parsed but violates a parameter invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a model function (v_w <= 0, s <= -1, lambda <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Compensation susceptance inside the parallel-resonance guard band.
class ResonanceError : public DomainError {
public:
    ResonanceError(const std::string& what, double y_c) : DomainError(what), y_c_(y_c) {}
    double y_c() const noexcept { return y_c_; }

private:
    double y_c_;
};

class DegenerateCircuit : public DomainError {
public:
    using DomainError::DomainError;
};

class StepError : public DomainError {
public:
    using DomainError::DomainError;
};

class WindowExceedsDomain : public DomainError {
public:
    using DomainError::DomainError;
};

/// Numerical procedure failed to produce a result (no root, quadrature budget, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

class NoEquilibrium : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StabilityMismatch : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Regenerated golden output differs from the stored fixture.
class DriftError : public Error {
public:
    using Error::Error;
};

}  // namespace typea
