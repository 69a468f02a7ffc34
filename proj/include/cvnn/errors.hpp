#pragma once

#include <stdexcept>
#include <string>

namespace cvnn {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation landed on (or within tolerance of) a declared singular locus.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, double re, double im)
        : Error(what), at_re(re), at_im(im) {}
    double at_re, at_im;
};

// Evaluation landed on a non-smooth locus (piecewise boundary, circle, axis).
class KinkError : public Error {
public:
    KinkError(const std::string& what, double re, double im)
        : Error(what), at_re(re), at_im(im) {}
    double at_re, at_im;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// The finite-difference oracle saw a non-finite value at a stencil point.
class OracleError : public Error {
public:
    using Error::Error;
};

// An activation's category is incompatible with the requested backward pass.
class AlgorithmMismatchError : public Error {
public:
    using Error::Error;
};

// A derivation assumption (conjugate commutation) failed numerically.
class AssumptionError : public Error {
public:
    using Error::Error;
};

class NonDifferentiableError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cvnn
