#include <catch_amalgamated.hpp>

#include <set>

#include "coxreg/coxreg.hpp"

using namespace coxreg;

namespace {

SimplicialComplex two_points() { return from_facets({{"a"}, {"b"}}); }

Matrix<std::int64_t> rows(const std::vector<std::vector<std::int64_t>>& r) {
  Matrix<std::int64_t> m(r.size(), r[0].size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) m(i, j) = r[i][j];
  return m;
}

}  // namespace

TEST_CASE("canonical representation of the pentagon") {
  const auto rep = build_system(cycle(5));
  CHECK(rep.cosine == rows({{1, 0, -1, -1, 0},
                            {0, 1, 0, -1, -1},
                            {-1, 0, 1, 0, -1},
                            {-1, -1, 0, 1, 0},
                            {0, -1, -1, 0, 1}}));
  CHECK(rep.generators[0] == rows({{-1, 0, 2, 2, 0},
                                   {0, 1, 0, 0, 0},
                                   {0, 0, 1, 0, 0},
                                   {0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 1}}));
  CHECK(rep.generators[4] == rows({{1, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 0},
                                   {0, 0, 1, 0, 0},
                                   {0, 0, 0, 1, 0},
                                   {0, 2, 2, 0, -1}}));
  CHECK(rep.coxeter[0][1] == 2);
  CHECK(rep.coxeter[0][2] == kInfinity);
  CHECK(rep.coxeter[3][3] == 1);
}

TEST_CASE("small systems") {
  const auto two = build_system(two_points());
  CHECK(two.generators[0] == rows({{-1, 2}, {0, 1}}));
  CHECK(two.generators[1] == rows({{1, 0}, {2, -1}}));
  const auto one = build_system(simplex(0));
  CHECK(one.generators[0] == rows({{-1}}));
  CHECK_THROWS_AS(build_system(boundary_simplex(2)), DomainError);
}

TEST_CASE("generators are involutions that commute exactly along edges") {
  for (const auto& c : {cycle(5), cycle(6), cross_polytope(3), random_flag(7, 0.5, 5), two_points()}) {
    const auto rep = build_system(c);
    const auto n = rep.rank();
    const auto id = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(evaluate_word(rep, {i, i}) == id);
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool commute = evaluate_word(rep, {i, j}) == evaluate_word(rep, {j, i});
        CHECK(commute == (rep.coxeter[i][j] == 2));
      }
    }
  }
}

TEST_CASE("spherical elements") {
  const auto rep = build_system(cycle(5));
  CHECK(spherical_elements(rep).size() == 10);
  const auto oct = build_system(cross_polytope(3));
  CHECK(spherical_elements(oct).size() == 6 + 12 + 8);
}

TEST_CASE("word balls") {
  const auto pent = build_system(cycle(5));
  const auto table = word_ball(pent, 10);
  const std::vector<long long> expected{1, 2, 4, 8, 18, 39, 84, 180, 388, 836, 1801};
  REQUIRE(table.max_entries.size() == expected.size());
  for (std::size_t l = 0; l < expected.size(); ++l) CHECK(table.max_entries[l] == expected[l]);
  CHECK(table.complete);

  const auto zero = word_ball(pent, 0);
  CHECK(zero.counts == std::vector<std::uint64_t>{1});
  CHECK(zero.max_entries == std::vector<BigInt>{1});

  const auto line = word_ball(build_system(two_points()), 4);
  CHECK(line.counts == std::vector<std::uint64_t>{1, 2, 2, 2, 2});

  const auto truncated = word_ball(pent, 10, GeneratingSet::standard, {100, 1});
  CHECK_FALSE(truncated.complete);
}

TEST_CASE("word balls do not depend on the thread count") {
  const auto rep = build_system(cycle(5));
  const auto a = word_ball(rep, 8, GeneratingSet::standard, {2'000'000, 1});
  const auto b = word_ball(rep, 8, GeneratingSet::standard, {2'000'000, 3});
  CHECK(a.counts == b.counts);
  CHECK(a.max_entries == b.max_entries);
}

TEST_CASE("known kernel words reduce to the identity") {
  const auto pent = build_system(cycle(5));
  std::vector<std::size_t> w;
  for (int i = 0; i < 5; ++i) w.insert(w.end(), {0, 2});
  CHECK(is_identity_mod(evaluate_word(pent, w), 5));
  CHECK_FALSE(is_identity_mod(evaluate_word(pent, w), 7));
  CHECK(displacement_of_reduced_word(pent, w) == 10);

  const auto hept = build_system(cycle(7));
  std::vector<std::size_t> h;
  for (int i = 0; i < 3; ++i) h.insert(h.end(), {0, 2, 0, 4});
  CHECK(is_identity_mod(evaluate_word(hept, h), 7));
  CHECK(evaluate_word(pent, {}) == IntMatrix::identity(5));
}

TEST_CASE("displacement of reduced words") {
  const auto pent = build_system(cycle(5));
  CHECK(displacement_of_reduced_word(pent, {}) == 0);
  CHECK(displacement_of_reduced_word(pent, {0}) == 1);
  CHECK(displacement_of_reduced_word(pent, {0, 1}) == 1);     // commuting: one spherical factor
  CHECK(displacement_of_reduced_word(pent, {0, 2}) == 2);
  CHECK(displacement_of_reduced_word(pent, {0, 1, 2}) == 2);  // s0 s1 | s2 or s0 | s1 s2
}

TEST_CASE("entry growth bound along the displacement ball") {
  // Every product of t spherical elements has entries below (2d+3)^t.
  for (const auto& c : {cycle(5), cross_polytope(3)}) {
    const auto rep = build_system(c);
    const int d = c.dimension();
    const auto ball = word_ball(rep, 4, GeneratingSet::spherical);
    for (std::size_t t = 1; t < ball.max_entries.size(); ++t)
      CHECK(ball.max_entries[t] < arith::pow(BigInt(2 * d + 3), t));
  }
  CHECK(word_ball(build_system(cycle(5)), 4, GeneratingSet::spherical).max_entries.back() < sufficient_modulus(1, 5));
}

TEST_CASE("sufficient modulus") {
  CHECK(sufficient_modulus(0, 4) == 27);
  CHECK(sufficient_modulus(1, 5) == 625);
}

TEST_CASE("kernel search: exact displacement mode") {
  const auto pent = build_system(cycle(5));
  const auto m7 = kernel_displacement_search(pent, 7, 5);
  CHECK(m7.status == DisplacementStatus::certified);
  CHECK(m7.radius == 4);
  // Mod 5 the shortest kernel element (s1 s3)^5 has displacement 10, so the
  // exact ball of displacement <= 4 is clean as well.
  CHECK(kernel_displacement_search(pent, 5, 5).status == DisplacementStatus::certified);
  // Mod 4 there are kernel elements of displacement <= 4.
  const auto m4 = kernel_displacement_search(pent, 4, 5);
  REQUIRE(m4.status == DisplacementStatus::counterexample);
  CHECK(m4.witness_below_k);
  CHECK(is_identity_mod(evaluate_word(pent, m4.witness_word), 4));
  CHECK_FALSE(evaluate_word(pent, m4.witness_word) == IntMatrix::identity(5));

  const auto two = kernel_displacement_search(build_system(two_points()), 5, 4);
  CHECK(two.status == DisplacementStatus::certified);

  CHECK_THROWS_AS(kernel_displacement_search(pent, 2, 5), DomainError);
  CHECK_THROWS_AS(kernel_displacement_search(pent, 7, 3), DomainError);
  const auto starved = kernel_displacement_search(pent, 7, 5, SearchMode::displacement, {50, 1});
  CHECK(starved.status == DisplacementStatus::undecided);
}

TEST_CASE("kernel search: word-length mode") {
  const auto pent = build_system(cycle(5));
  const auto m5 = kernel_displacement_search(pent, 5, 5, SearchMode::word_length);
  REQUIRE(m5.status == DisplacementStatus::counterexample);
  CHECK(m5.radius == 10);
  CHECK(m5.witness_word.size() == 10);
  CHECK(m5.witness_displacement == 10);
  CHECK_FALSE(m5.witness_below_k);
  CHECK(is_identity_mod(evaluate_word(pent, m5.witness_word), 5));

  const auto m7 = kernel_displacement_search(pent, 7, 5, SearchMode::word_length);
  CHECK(m7.status == DisplacementStatus::certified);
  CHECK(m7.elements_checked == 54726);
}
