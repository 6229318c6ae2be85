#ifndef COXREG_ARITH_HPP
#define COXREG_ARITH_HPP

#include <cstdint>
#include <exception>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxreg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown by the fixed-width fast paths; callers catch it and redo the
/// computation with BigInt.
struct ArithmeticOverflow : std::exception {
  const char* what() const noexcept override { return "64-bit overflow"; }
};

namespace arith {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t div(std::int64_t a, std::int64_t b) {
  if (b == -1 && a == INT64_MIN) throw ArithmeticOverflow{};
  return a / b;
}
inline std::int64_t abs(std::int64_t a) {
  if (a == INT64_MIN) throw ArithmeticOverflow{};
  return a < 0 ? -a : a;
}

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt div(const BigInt& a, const BigInt& b) { return a / b; }
inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt to_big(std::int64_t v) { return BigInt(v); }
inline BigInt to_big(const BigInt& v) { return v; }

inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

inline BigInt pow(BigInt base, unsigned long long exponent) {
  BigInt result = 1;
  while (exponent > 0) {
    if (exponent & 1ULL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

inline BigRational pow(BigRational base, unsigned long long exponent) {
  BigRational result = 1;
  while (exponent > 0) {
    if (exponent & 1ULL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace arith

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace coxreg

#endif  // COXREG_ARITH_HPP
