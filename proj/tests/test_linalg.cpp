#include <catch_amalgamated.hpp>

#include "coxreg/coxreg.hpp"
#include "oracles.hpp"

using namespace coxreg;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<std::vector<BigInt>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, int spread) {
  IntMatrix m(rows, cols);
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      state = detail::splitmix64(state);
      const auto r = static_cast<long long>(state % (2 * spread + 1)) - spread;
      m(i, j) = (state >> 40) % 3 == 0 ? 0 : r;
    }
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  const auto id = IntMatrix::identity(3);
  CHECK(rank(id, Coefficients::rationals()) == 3);
  CHECK(rank(id, Coefficients::prime(2)) == 3);
  CHECK(rank(id, Coefficients::prime(7)) == 3);

  const auto two = from_rows({{2}});
  CHECK(rank(two, Coefficients::prime(2)) == 0);
  CHECK(rank(two, Coefficients::rationals()) == 1);

  CHECK(rank(boundary_matrix(cycle(5), 1), Coefficients::rationals()) == 4);
  CHECK_THROWS_AS(rank_mod_p(id, 4), DomainError);
}

TEST_CASE("Smith normal form basics") {
  const auto zero = IntMatrix(3, 4);
  auto z = smith_normal_form(zero);
  CHECK(z.rank == 0);
  CHECK(z.invariant_factors.empty());

  auto d = smith_normal_form(from_rows({{2, 0}, {0, 4}}));
  CHECK(d.invariant_factors == std::vector<BigInt>{2, 4});

  auto e = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(e.invariant_factors == std::vector<BigInt>{1, 6});

  const auto d2 = boundary_matrix(rp2_six(), 2);
  CHECK(d2.rows() == 15);
  CHECK(d2.cols() == 10);
  auto rp = smith_normal_form(d2);
  CHECK(rp.rank == 10);  // nine 1s and one 2; rank 9 only over F2
  CHECK(rp.torsion() == std::vector<BigInt>{2});
  CHECK(oracle::smith_diagonal(to_rows(d2)).size() == 10);
}

TEST_CASE("Smith normal form agrees with the textbook reduction") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t rows = 1 + seed % 7, cols = 1 + (seed / 7) % 7;
    const auto m = random_matrix(rows, cols, seed, seed % 2 ? 3 : 40);
    auto lib = smith_normal_form(m);
    auto ref = oracle::smith_diagonal(to_rows(m));
    std::sort(ref.begin(), ref.end());
    // Invariant factors are unique, so both diagonals must agree exactly.
    CHECK(lib.invariant_factors == ref);
    for (std::size_t i = 1; i < lib.invariant_factors.size(); ++i)
      CHECK(lib.invariant_factors[i] % lib.invariant_factors[i - 1] == 0);
  }
}

TEST_CASE("rank over fields agrees with SNF and with plain elimination") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const std::size_t rows = 2 + seed % 6, cols = 2 + (seed / 6) % 6;
    const auto m = random_matrix(rows, cols, seed, 6);
    const auto snf = smith_normal_form(m);
    CHECK(rank_rational(m) == snf.rank);
    CHECK(rank_rational(m) == oracle::rank(to_rows(m), 0));
    for (std::uint64_t p : {2, 3, 5, 7}) {
      CHECK(rank_mod_p(m, p) == snf.rank - snf.count_divisible_by(p));
      CHECK(rank_mod_p(m, p) == oracle::rank(to_rows(m), p));
    }
  }
}

TEST_CASE("64-bit overflow falls back to unbounded integers") {
  IntMatrix m(2, 2);
  m(0, 0) = BigInt(1) << 62;
  m(0, 1) = (BigInt(1) << 62) + 1;
  m(1, 0) = (BigInt(1) << 62) - 1;
  m(1, 1) = BigInt(1) << 62;
  // det = 2^124 - (2^124 - 1) = 1
  auto s = smith_normal_form(m);
  CHECK(s.invariant_factors == std::vector<BigInt>{1, 1});
  CHECK(rank_rational(m) == 2);

  IntMatrix big(2, 2);
  big(0, 0) = BigInt(1) << 100;
  big(1, 1) = BigInt(3) << 100;
  auto b = smith_normal_form(big);
  CHECK(b.invariant_factors == std::vector<BigInt>{BigInt(1) << 100, BigInt(3) << 100});
}

TEST_CASE("coefficient parsing") {
  CHECK(Coefficients::parse("q") == Coefficients::rationals());
  CHECK(Coefficients::parse("z") == Coefficients::integers());
  CHECK(Coefficients::parse("f2") == Coefficients::prime(2));
  CHECK(Coefficients::parse("f7").characteristic() == 7);
  CHECK_THROWS_AS(Coefficients::parse("f4"), InputError);
  CHECK_THROWS_AS(Coefficients::parse("r"), InputError);
  CHECK_THROWS_AS(Coefficients::parse("f"), InputError);
}
