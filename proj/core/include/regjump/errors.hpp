#ifndef REGJUMP_ERRORS_HPP
#define REGJUMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace regjump {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different variable contexts.
class context_mismatch_error : public error {
public:
    using error::error;
};

/// Invalid input: empty generator sets, bad exponents, malformed data.
class validation_error : public error {
public:
    using error::error;
};

/// Exponent arithmetic would leave the representable range.
class exponent_overflow_error : public error {
public:
    using error::error;
};

/// Input is too large for the exact enumeration the operation performs.
class size_error : public error {
public:
    using error::error;
};

/// An internal computation could not be completed exactly.
class computation_error : public error {
public:
    using error::error;
};

} // namespace regjump

#endif
