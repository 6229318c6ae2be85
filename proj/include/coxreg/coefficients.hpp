#ifndef COXREG_COEFFICIENTS_HPP
#define COXREG_COEFFICIENTS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "coxreg/error.hpp"

namespace coxreg {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Coefficient ring for (co)homology: ℤ, ℚ, or 𝔽_p.
class Coefficients {
 public:
  enum class Kind { integers, rationals, prime_field };

  static Coefficients integers() { return Coefficients(Kind::integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
  /// 𝔽_p; p must be a prime below 2^31 so products fit in 64 bits.
  static Coefficients prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 31)) throw DomainError("prime too large: " + std::to_string(p));
    return Coefficients(Kind::prime_field, p);
  }

  /// Parses "q", "z", or "f<p>" (e.g. "f2").
  static Coefficients parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text == "z" || text == "Z") return integers();
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
      std::uint64_t p = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9' || p > (std::uint64_t{1} << 40))
          throw InputError("bad field '" + std::string(text) + "'; expected q, z or f<prime>");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
      return prime(p);
    }
    throw InputError("bad field '" + std::string(text) + "'; expected q, z or f<prime>");
  }

  Kind kind() const noexcept { return kind_; }
  bool is_field() const noexcept { return kind_ != Kind::integers; }
  /// 0 for ℚ and ℤ.
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string name() const {
    switch (kind_) {
      case Kind::integers: return "z";
      case Kind::rationals: return "q";
      case Kind::prime_field: return "f" + std::to_string(p_);
    }
    return "?";
  }

  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Coefficients(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

}  // namespace coxreg

#endif  // COXREG_COEFFICIENTS_HPP
