#ifndef COXREG_BOUNDS_HPP
#define COXREG_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "coxreg/arith.hpp"
#include "coxreg/error.hpp"

// Exact evaluation of the regularity and vertex-count bounds. Every
// comparison is done with rationals; doubles appear only in the `approx`
// fields meant for display.

namespace coxreg::bounds {

namespace detail {

inline BigRational square_times(BigRational x, int times) {
  for (int i = 0; i < times; ++i) {
    x *= x;
    if (msb(numerator(x) + 1) > (std::size_t{1} << 26))
      throw ResourceError("bound evaluation exceeds 2^26 bits");
  }
  return x;
}

inline std::string rational_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double log_rational(const BigRational& q) {
  // log(a/b) with big a, b.
  auto log_big = [](const BigInt& v) {
    const std::size_t bits = msb(v) + 1;
    if (bits < 1000) return std::log(static_cast<double>(v));
    const std::size_t shift = bits - 60;
    BigInt top = v >> shift;
    return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
  };
  return log_big(numerator(q)) - log_big(denominator(q));
}

}  // namespace detail

/// (p+3)^2 / 12, the base of the top-homology bounds.
inline BigRational top_homology_base(int p) { return BigRational((p + 3) * (p + 3), 12); }

/// base^(2^log2_exponent) with a possibly negative log2_exponent.
struct PowerBound {
  BigRational base;
  int log2_exponent = 0;

  /// value > base^(2^e), decided exactly.
  bool exceeded_by(const BigRational& value) const {
    if (value < 0) return false;
    if (log2_exponent >= 0) return value > detail::square_times(base, log2_exponent);
    return detail::square_times(value, -log2_exponent) > base;
  }
  /// value >= base^(2^e).
  bool at_most(const BigRational& value) const {
    if (value < 0) return false;
    if (log2_exponent >= 0) return detail::square_times(base, log2_exponent) <= value;
    return base <= detail::square_times(value, -log2_exponent);
  }

  double approx() const { return std::exp(detail::log_rational(base) * std::ldexp(1.0, log2_exponent)); }

  std::string expression() const {
    return "(" + detail::rational_string(base) + ")^(2^" + std::to_string(log2_exponent) + ")";
  }
};

/// Lower bound on the number of top faces of a d-dimensional (p+3)-large
/// complex with nontrivial top homology.
inline PowerBound facet_bound(int d, int p) {
  if (d < 1) throw DomainError("facet bound needs d >= 1");
  if (p < 2) throw DomainError("facet bound needs p >= 2");
  return {top_homology_base(p), d - 2};
}

/// Lower bound on the number of vertices, same hypotheses.
inline PowerBound vertex_bound(int d, int p) {
  if (d < 1) throw DomainError("vertex bound needs d >= 1");
  if (p < 2) throw DomainError("vertex bound needs p >= 2");
  return {top_homology_base(p), d - 3};
}

/// reg <= log_{(p+3)/2}((n-1)/p) + 2 for a complex on n vertices with N_p.
struct LogBound {
  int n = 0;
  int p = 0;
  int floor = 0;       // largest integer regularity permitted
  double approx = 0;   // the real-valued right-hand side
};

/// Whether reg satisfies the logarithmic bound: ((p+3)/2)^(reg-2) <= (n-1)/p.
inline bool dhs_allows(int n, int p, int reg) {
  if (p < 2) throw DomainError("log bound needs p >= 2");
  if (n < 2) throw DomainError("log bound needs n >= 2");
  const BigRational b(p + 3, 2);
  const BigRational x(n - 1, p);
  const int t = reg - 2;
  if (t >= 0) return arith::pow(b, static_cast<unsigned long long>(t)) <= x;
  return BigRational(1) <= x * arith::pow(b, static_cast<unsigned long long>(-t));
}

inline LogBound dhs(int n, int p) {
  LogBound out{n, p, 2, 0.0};
  if (dhs_allows(n, p, 2)) {
    while (dhs_allows(n, p, out.floor + 1)) ++out.floor;
  } else {
    while (!dhs_allows(n, p, out.floor)) --out.floor;
  }
  out.approx = std::log((n - 1.0) / p) / std::log((p + 3.0) / 2.0) + 2.0;
  return out;
}

/// Whether reg <= log_2 log_b n + 3 with b = (p+3)^2/12, i.e.
/// b^(2^(reg-3)) <= n.
inline bool cm_double_log_allows(int n, int p, int reg) {
  if (p < 2) throw DomainError("double-log bound needs p >= 2");
  if (n < 2) throw DomainError("double-log bound needs n >= 2");
  return PowerBound{top_homology_base(p), reg - 3}.at_most(BigRational(n));
}

inline LogBound cm_double_log(int n, int p) {
  LogBound out{n, p, 3, 0.0};
  if (cm_double_log_allows(n, p, 3)) {
    while (cm_double_log_allows(n, p, out.floor + 1)) ++out.floor;
  } else {
    while (!cm_double_log_allows(n, p, out.floor)) --out.floor;
  }
  const double b = (p + 3.0) * (p + 3.0) / 12.0;
  out.approx = std::log2(std::log(static_cast<double>(n)) / std::log(b)) + 3.0;
  return out;
}

/// 2↑↑height if it has at most `bit_budget` bits.
inline std::optional<BigInt> knuth_tower(unsigned height, std::size_t bit_budget = std::size_t{1} << 20) {
  BigInt value = 1;
  for (unsigned i = 0; i < height; ++i) {
    if (value >= BigInt(bit_budget)) return std::nullopt;
    value = BigInt(1) << static_cast<unsigned>(value);
  }
  return value;
}

/// Smallest c with 2↑↑c > p + 2.
inline unsigned tower_offset(int p) {
  unsigned c = 0;
  while (true) {
    auto t = knuth_tower(c);
    if (!t || *t > p + 2) return c;
    ++c;
  }
}

/// The recursive vertex-count bound N(p, r): N(p,2) = p+3 and
/// N(p, r+1) < (2(2↑↑(r-1)) + 1)^((p+2) N(p,r)^2), evaluated with the
/// right-hand side taken as the value for the next step.
struct TowerBound {
  int p = 0;
  int r = 0;
  std::string expression;          // symbolic form in terms of N(p, r-1)
  std::optional<BigInt> value;     // exact, when within the bit budget
  double log2_value = 0;           // +inf when not representable
  unsigned tower_height = 0;       // N(p, r) < 2↑↑tower_height for r >= 3
};

inline TowerBound tower_N(int p, int r, std::size_t bit_budget = std::size_t{1} << 20) {
  if (p < 0) throw DomainError("tower bound needs p >= 0");
  if (r < 2) throw DomainError("tower bound needs r >= 2");
  TowerBound out;
  out.p = p;
  out.r = r;
  if (r == 2) {
    out.expression = "p+3 = " + std::to_string(p + 3);
    out.value = BigInt(p + 3);
    out.log2_value = std::log2(p + 3.0);
    return out;
  }
  const TowerBound prev = tower_N(p, r - 1, bit_budget);
  const auto inner = knuth_tower(static_cast<unsigned>(r - 2));
  std::ostringstream expr;
  expr << "(2*(2^^" << (r - 2) << ")+1)^(" << (p + 2) << "*N(" << p << "," << (r - 1) << ")^2)";
  out.expression = expr.str();
  out.tower_height = static_cast<unsigned>((r - 1) * (r - 1 + static_cast<int>(tower_offset(p))));
  out.log2_value = std::numeric_limits<double>::infinity();
  if (!inner || !prev.value) return out;
  const BigInt base = 2 * *inner + 1;
  const BigInt exponent = BigInt(p + 2) * *prev.value * *prev.value;
  const double base_bits = std::log2(static_cast<double>(base));
  const double exp_approx = static_cast<double>(exponent);
  out.log2_value = exp_approx * base_bits;
  if (out.log2_value <= static_cast<double>(bit_budget))
    out.value = arith::pow(base, static_cast<unsigned long long>(exponent));
  return out;
}

}  // namespace coxreg::bounds

#endif  // COXREG_BOUNDS_HPP
