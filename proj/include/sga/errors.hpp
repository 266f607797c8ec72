#ifndef SGA_ERRORS_HPP
#define SGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sga {

/// Raised when an input structure violates one of its defining axioms.
/// The message names the axiom and the offending items.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sga

#endif
