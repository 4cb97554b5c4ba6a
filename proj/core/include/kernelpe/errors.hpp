#pragma once

#include <stdexcept>
#include <string>

namespace kernelpe {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments, malformed files, violated preconditions.
class input_error : public error {
public:
    using error::error;
};

/// Numerical failure: singular systems, non-SPD matrices, integrator blow-up.
class numeric_error : public error {
public:
    using error::error;
};

/// An analysis could not produce a result (no period, no feasible epsilon, ...).
class analysis_error : public error {
public:
    using error::error;
};

/// A geometric query left the manifold model's domain (off-loop point).
class manifold_domain_error : public error {
public:
    using error::error;
};

} // namespace kernelpe
