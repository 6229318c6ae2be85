#ifndef COXREG_LINALG_HPP
#define COXREG_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "coxreg/arith.hpp"
#include "coxreg/coefficients.hpp"
#include "coxreg/error.hpp"

namespace coxreg {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;

/// Product with overflow-checked arithmetic for fixed-width T.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) = arith::add(c(i, j), arith::mul(aik, b(k, j)));
    }
  return c;
}

template <class T>
IntMatrix to_int_matrix(const Matrix<T>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = arith::to_big(m(i, j));
  return out;
}

/// Column-major sparse integer matrix; each column is sorted by row.
template <class T>
struct SparseMatrix {
  using Column = std::vector<std::pair<std::uint32_t, T>>;
  std::size_t rows = 0;
  std::vector<Column> columns;

  std::size_t cols() const noexcept { return columns.size(); }

  IntMatrix to_dense() const {
    IntMatrix out(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [r, v] : columns[c]) out(r, c) = arith::to_big(v);
    return out;
  }
};

struct SnfResult {
  /// d_1 | d_2 | ... | d_r, all positive.
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;

  std::size_t count_divisible_by(std::uint64_t p) const {
    std::size_t k = 0;
    for (const auto& d : invariant_factors)
      if (d % p == 0) ++k;
    return k;
  }
  /// Invariant factors greater than one.
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> out;
    for (const auto& d : invariant_factors)
      if (d > 1) out.push_back(d);
    return out;
  }
};

namespace detail {

/// Dense Smith normal form diagonal. Pivot: smallest nonzero absolute value,
/// first in row-major order among ties.
template <class T>
std::vector<T> dense_snf(Matrix<T> a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<T> factors;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Re-pick the smallest entry of the whole block each round; keeping
      // stale rows around while swapping in remainders blows up the entries.
      bool found = false;
      std::size_t pi = t, pj = t;
      T best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a(i, j) == 0) continue;
          T v = arith::abs(a(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (!found) return factors;
      a.swap_rows(t, pi);
      a.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const T q = arith::div(a(i, t), a(t, t));
        for (std::size_t j = t; j < n; ++j)
          if (a(t, j) != 0) a(i, j) = arith::sub(a(i, j), arith::mul(q, a(t, j)));
        clean = clean && a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const T q = arith::div(a(t, j), a(t, t));
        for (std::size_t i = t; i < m; ++i)
          if (a(i, t) != 0) a(i, j) = arith::sub(a(i, j), arith::mul(q, a(i, t)));
        clean = clean && a(t, j) == 0;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < n; ++k) a(t, k) = arith::add(a(t, k), a(i, k));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    factors.push_back(arith::abs(a(t, t)));
  }
  return factors;
}

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

/// Sparse elimination of unit pivots followed by dense SNF of the rest.
/// Unit pivots are chosen by smallest Markowitz cost (fill-in estimate).
template <class T>
std::vector<BigInt> sparse_snf(std::size_t rows, std::vector<typename SparseMatrix<T>::Column> cols) {
  using Column = typename SparseMatrix<T>::Column;
  const std::size_t ncols = cols.size();
  std::vector<std::vector<std::uint32_t>> row_cols(rows);
  std::vector<std::size_t> row_count(rows, 0);
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [r, v] : cols[c]) {
      row_cols[r].push_back(static_cast<std::uint32_t>(c));
      ++row_count[r];
    }
  std::vector<char> col_alive(ncols, 1);
  std::size_t units = 0;
  Column scratch;

  auto value_at = [](const Column& col, std::uint32_t r) -> const T* {
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::uint32_t row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? &it->second : nullptr;
  };

  while (true) {
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::size_t pc = 0;
    std::uint32_t pr = 0;
    for (std::size_t c = 0; c < ncols && best_cost > 0; ++c) {
      if (!col_alive[c]) continue;
      for (const auto& [r, v] : cols[c]) {
        if (!is_unit(v)) continue;
        std::size_t cost = (row_count[r] - 1) * (cols[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pc = c;
          pr = r;
          if (cost == 0) break;
        }
      }
    }
    if (best_cost == std::numeric_limits<std::size_t>::max()) break;

    const T pivot = *value_at(cols[pc], pr);
    std::vector<std::uint32_t> targets = row_cols[pr];
    for (std::uint32_t j : targets) {
      if (j == pc || !col_alive[j]) continue;
      const T* a = value_at(cols[j], pr);
      if (!a) continue;
      const T factor = arith::sub(T(0), arith::mul(*a, pivot));  // pivot is its own inverse
      // cols[j] += factor * cols[pc]
      scratch.clear();
      const Column& src = cols[pc];
      Column& dst = cols[j];
      std::size_t x = 0, y = 0;
      while (x < dst.size() || y < src.size()) {
        if (y == src.size() || (x < dst.size() && dst[x].first < src[y].first)) {
          scratch.push_back(dst[x++]);
        } else if (x == dst.size() || src[y].first < dst[x].first) {
          scratch.emplace_back(src[y].first, arith::mul(factor, src[y].second));
          row_cols[src[y].first].push_back(j);
          ++row_count[src[y].first];
          ++y;
        } else {
          T v = arith::add(dst[x].second, arith::mul(factor, src[y].second));
          if (v != 0)
            scratch.emplace_back(dst[x].first, std::move(v));
          else
            --row_count[dst[x].first];
          ++x;
          ++y;
        }
      }
      dst.swap(scratch);
    }
    col_alive[pc] = 0;
    for (const auto& [r, v] : cols[pc]) --row_count[r];
    row_cols[pr].clear();
    ++units;
  }

  std::vector<std::uint32_t> row_index(rows, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t live_rows = 0;
  std::vector<std::size_t> live_cols;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!col_alive[c] || cols[c].empty()) continue;
    live_cols.push_back(c);
    for (const auto& [r, v] : cols[c])
      if (row_index[r] == std::numeric_limits<std::uint32_t>::max()) row_index[r] = live_rows++;
  }
  std::vector<BigInt> factors(units, BigInt(1));
  if (!live_cols.empty()) {
    Matrix<T> rest(live_rows, live_cols.size());
    for (std::size_t k = 0; k < live_cols.size(); ++k)
      for (const auto& [r, v] : cols[live_cols[k]]) rest(row_index[r], k) = v;
    for (auto& d : dense_snf(std::move(rest))) factors.push_back(arith::to_big(d));
  }
  return factors;
}

template <class T>
SnfResult finish_snf(std::vector<BigInt> factors) {
  std::sort(factors.begin(), factors.end());
  SnfResult result;
  result.rank = factors.size();
  result.invariant_factors = std::move(factors);
  return result;
}

}  // namespace detail

/// Smith normal form of a sparse matrix. Runs in 64-bit arithmetic and
/// restarts with unbounded integers on overflow.
template <class T>
SnfResult smith_normal_form(const SparseMatrix<T>& m) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    try {
      return detail::finish_snf<T>(detail::sparse_snf<std::int64_t>(m.rows, m.columns));
    } catch (const ArithmeticOverflow&) {
      std::vector<typename SparseMatrix<BigInt>::Column> big(m.columns.size());
      for (std::size_t c = 0; c < m.columns.size(); ++c)
        for (const auto& [r, v] : m.columns[c]) big[c].emplace_back(r, BigInt(v));
      return detail::finish_snf<BigInt>(detail::sparse_snf<BigInt>(m.rows, std::move(big)));
    }
  } else {
    return detail::finish_snf<T>(detail::sparse_snf<T>(m.rows, m.columns));
  }
}

inline SnfResult smith_normal_form(const IntMatrix& m) {
  bool fits = true;
  for (const auto& v : m.data())
    if (!arith::to_int64(v)) {
      fits = false;
      break;
    }
  if (fits) {
    SparseMatrix<std::int64_t> s;
    s.rows = m.rows();
    s.columns.resize(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) s.columns[j].emplace_back(static_cast<std::uint32_t>(i), static_cast<std::int64_t>(m(i, j)));
    return smith_normal_form(s);
  }
  SparseMatrix<BigInt> s;
  s.rows = m.rows();
  s.columns.resize(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.columns[j].emplace_back(static_cast<std::uint32_t>(i), m(i, j));
  return smith_normal_form(s);
}

namespace detail {

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

inline std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}
inline std::uint64_t reduce_mod(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// Rank over 𝔽_p by column reduction on the lowest nonzero row.
template <class T>
std::size_t rank_mod_p(const SparseMatrix<T>& m, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  using Col = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<Col> pivots;
  std::vector<std::int64_t> pivot_of_row(m.rows, -1);
  Col col, scratch;
  std::size_t rank = 0;
  for (const auto& source : m.columns) {
    col.clear();
    for (const auto& [r, v] : source) {
      std::uint64_t x = detail::reduce_mod(v, p);
      if (x) col.emplace_back(r, x);
    }
    while (!col.empty()) {
      const std::uint32_t low = col.back().first;
      if (pivot_of_row[low] < 0) {
        const std::uint64_t inv = detail::mod_inverse(col.back().second, p);
        for (auto& e : col) e.second = e.second * inv % p;
        pivot_of_row[low] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(col);
        ++rank;
        break;
      }
      const Col& piv = pivots[static_cast<std::size_t>(pivot_of_row[low])];
      const std::uint64_t factor = p - col.back().second;  // piv.back() == 1
      scratch.clear();
      std::size_t x = 0, y = 0;
      while (x < col.size() || y < piv.size()) {
        if (y == piv.size() || (x < col.size() && col[x].first < piv[y].first)) {
          scratch.push_back(col[x++]);
        } else if (x == col.size() || piv[y].first < col[x].first) {
          scratch.emplace_back(piv[y].first, factor * piv[y].second % p);
          ++y;
        } else {
          std::uint64_t v = (col[x].second + factor * piv[y].second) % p;
          if (v) scratch.emplace_back(col[x].first, v);
          ++x;
          ++y;
        }
      }
      col.swap(scratch);
    }
  }
  return rank;
}

inline std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  SparseMatrix<BigInt> s;
  s.rows = m.rows();
  s.columns.resize(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.columns[j].emplace_back(static_cast<std::uint32_t>(i), m(i, j));
  return rank_mod_p(s, p);
}

namespace detail {

/// Fraction-free (Bareiss) row echelon form; returns the rank.
template <class T>
std::size_t bareiss_rank(Matrix<T> a) {
  std::size_t rank = 0;
  T previous = 1;
  for (std::size_t k = 0; k < a.cols() && rank < a.rows(); ++k) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, k) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(rank, pivot);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      for (std::size_t j = k + 1; j < a.cols(); ++j)
        a(i, j) = arith::div(arith::sub(arith::mul(a(i, j), a(rank, k)), arith::mul(a(i, k), a(rank, j))),
                             previous);
      a(i, k) = 0;
    }
    previous = a(rank, k);
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over ℚ by Bareiss elimination.
inline std::size_t rank_rational(const IntMatrix& m) {
  bool fits = std::all_of(m.data().begin(), m.data().end(),
                          [](const BigInt& v) { return arith::to_int64(v).has_value(); });
  if (fits) {
    Matrix<std::int64_t> small(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) small(i, j) = static_cast<std::int64_t>(m(i, j));
    try {
      return detail::bareiss_rank(std::move(small));
    } catch (const ArithmeticOverflow&) {
    }
  }
  return detail::bareiss_rank(m);
}

/// Rank over ℚ, over 𝔽_p, or (for ℤ) the SNF rank, which equals the ℚ rank.
inline std::size_t rank(const IntMatrix& m, const Coefficients& coeff) {
  switch (coeff.kind()) {
    case Coefficients::Kind::rationals: return rank_rational(m);
    case Coefficients::Kind::prime_field: return rank_mod_p(m, coeff.characteristic());
    case Coefficients::Kind::integers: return smith_normal_form(m).rank;
  }
  return 0;
}

}  // namespace coxreg

#endif  // COXREG_LINALG_HPP
