#pragma once

#include <stdexcept>
#include <string>

namespace fga {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Group construction rejected (empty order list, non-positive order).
class InvalidGroupError : public Error {
public:
    using Error::Error;
};

/// Two arguments live on different groups.
class GroupMismatchError : public Error {
public:
    using Error::Error;
};

/// Lattice construction rejected (non-divisor step, wrong group kind).
class InvalidLatticeError : public Error {
public:
    using Error::Error;
};

/// Matrix / vector dimensions do not conform.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Parameter outside its admissible range (e.g. Schatten p < 1).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// Input violates a mathematical domain requirement (e.g. not Hermitian).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Matrix is singular / indefinite where invertibility is required.
/// Carries the offending eigenvalue (or pivot) magnitude.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, double offending_value)
        : Error(what), offending_value_(offending_value) {}
    double offending_value() const { return offending_value_; }

private:
    double offending_value_;
};

/// Iterative routine failed to converge; carries the iteration count.
class NumericError : public Error {
public:
    NumericError(const std::string& what, int iterations)
        : Error(what), iterations_(iterations) {}
    int iterations() const { return iterations_; }

private:
    int iterations_;
};

/// Linearly dependent input where independence is required.
/// Carries the detected numerical rank.
class RankDeficiencyError : public Error {
public:
    RankDeficiencyError(const std::string& what, int rank)
        : Error(what), rank_(rank) {}
    int rank() const { return rank_; }

private:
    int rank_;
};

}  // namespace fga
