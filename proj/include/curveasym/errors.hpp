#pragma once

#include <stdexcept>
#include <string>

namespace curveasym {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments, out-of-domain parameters, malformed config.
class input_error : public error {
public:
    using error::error;
};

/// A scan grid was too coarse to resolve the requested feature.
class resolution_error : public error {
public:
    using error::error;
};

/// The requested operation needs data the curve does not carry.
class capability_error : public error {
public:
    using error::error;
};

/// Finite-difference stencil does not fit inside the domain.
class stencil_error : public error {
public:
    using error::error;
};

/// A tolerance could not be met; carries the best estimate obtained.
class accuracy_error : public error {
public:
    accuracy_error(const std::string& msg, double best)
        : error(msg), best_estimate(best) {}
    double best_estimate;
};

/// Expression evaluation left the real domain (ln of non-positive, etc).
class eval_error : public error {
public:
    using error::error;
};

/// Expression text could not be parsed; offset is a byte position.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t off)
        : error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
    std::size_t offset;
};

} // namespace curveasym
