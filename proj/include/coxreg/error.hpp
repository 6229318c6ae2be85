#ifndef COXREG_ERROR_HPP
#define COXREG_ERROR_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace coxreg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (bad tokens, duplicate vertices, unparsable files).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (face not in complex, non-flag
/// nerve, modulus too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration cap or element budget was exhausted. Nothing is certified
/// from a truncated computation.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A self-check or an asserted identity failed.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

inline constexpr int kInfinity = std::numeric_limits<int>::max();
inline constexpr int kNegativeInfinity = std::numeric_limits<int>::min();

inline std::string format_extended(int value) {
  if (value == kInfinity) return "inf";
  if (value == kNegativeInfinity) return "-inf";
  return std::to_string(value);
}

}  // namespace coxreg

#endif  // COXREG_ERROR_HPP
