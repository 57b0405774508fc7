#pragma once

#include <stdexcept>
#include <string>

namespace fgrt {

// Base class for everything this library throws on invalid input or data.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotPrimeError : public Error {
public:
    explicit NotPrimeError(int n) : Error("dimension " + std::to_string(n) + " is not prime") {}
};

class EvenPrimeError : public Error {
public:
    EvenPrimeError() : Error("dimension 2 is not supported; the construction requires an odd prime") {}
};

class NonPositiveError : public Error {
public:
    explicit NonPositiveError(int n) : Error("dimension must be positive, got " + std::to_string(n)) {}
};

class ZeroInverseError : public Error {
public:
    ZeroInverseError() : Error("zero has no multiplicative inverse") {}
};

// Raised when an operation needs an XZ^b eigenbasis but got the computational basis.
class BasisError : public Error {
public:
    explicit BasisError(const std::string& what) : Error(what) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

class UnnormalizedTableError : public Error {
public:
    explicit UnnormalizedTableError(const std::string& what) : Error(what) {}
};

class BadRankError : public Error {
public:
    explicit BadRankError(const std::string& what) : Error(what) {}
};

class NegativeProbabilityError : public Error {
public:
    explicit NegativeProbabilityError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

// Global comparison tolerance for entrywise matrix identities. Defaults to
// 1e-10; the FGRT_EPS environment variable overrides it (read once).
double comparison_eps();

}  // namespace fgrt
