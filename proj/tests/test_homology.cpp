#include <catch_amalgamated.hpp>

#include "coxreg/coxreg.hpp"
#include "oracles.hpp"

using namespace coxreg;

namespace {

std::vector<SimplicialComplex> small_corpus() {
  std::vector<SimplicialComplex> out{cycle(4),          cycle(5),         cross_polytope(2), cross_polytope(3),
                                     rp2_six(),         simplex(0),       simplex(3),        boundary_simplex(1),
                                     boundary_simplex(3), from_facets({{"a"}, {"b"}})};
  for (std::uint64_t seed = 0; seed < 30; ++seed) out.push_back(random_flag(4 + seed % 6, 0.5, seed));
  // Disconnected union of a triangle boundary and an RP², for mixed torsion and free parts.
  std::vector<Face> facets = rp2_six().facets();
  const auto triangle = boundary_simplex(2);
  for (Face f : triangle.facets()) {
    for (auto& v : f) v += 6;
    facets.push_back(f);
  }
  out.emplace_back(9, facets);
  return out;
}

}  // namespace

TEST_CASE("boundary matrices") {
  auto two = from_facets({{"a"}, {"b"}});
  const auto d0 = boundary_matrix(two, 0);
  REQUIRE(d0.rows() == 1);
  REQUIRE(d0.cols() == 2);
  CHECK(d0(0, 0) == 1);
  CHECK(d0(0, 1) == 1);

  auto edge = simplex(1);
  const auto d1 = boundary_matrix(edge, 1);
  REQUIRE(d1.rows() == 2);
  REQUIRE(d1.cols() == 1);
  CHECK(d1(0, 0) == -1);
  CHECK(d1(1, 0) == 1);
}

TEST_CASE("∂∘∂ = 0") {
  for (const auto& c : small_corpus())
    for (int r = 0; r <= c.dimension(); ++r) {
      const auto a = boundary_matrix(c, r);
      const auto b = boundary_matrix(c, r + 1);
      if (a.cols() == 0 || b.cols() == 0) continue;
      REQUIRE(a.cols() == b.rows());
      CHECK(multiply(a, b) == IntMatrix(a.rows(), b.cols()));
    }
}

TEST_CASE("reduced homology examples") {
  auto c5 = reduced_homology(cycle(5), Coefficients::rationals());
  CHECK(c5.rank(0) == 0);
  CHECK(c5.rank(1) == 1);

  auto rpz = reduced_homology(rp2_six(), Coefficients::integers());
  CHECK(rpz.degree(1).rank == 0);
  CHECK(rpz.degree(1).torsion == std::vector<BigInt>{2});
  CHECK(rpz.degree(2).is_zero());
  auto rp2 = reduced_homology(rp2_six(), Coefficients::prime(2));
  CHECK(rp2.rank(0) == 0);
  CHECK(rp2.rank(1) == 1);
  CHECK(rp2.rank(2) == 1);
  CHECK(reduced_homology(rp2_six(), Coefficients::rationals()).is_trivial());

  for (int d = 0; d <= 4; ++d) CHECK(reduced_homology(simplex(d), Coefficients::integers()).is_trivial());

  auto e = reduced_homology(SimplicialComplex::empty_face_only(), Coefficients::integers());
  CHECK(e.rank(-1) == 1);
  CHECK(reduced_homology(SimplicialComplex::void_complex(), Coefficients::integers()).is_trivial());
}

TEST_CASE("nonzero cohomology degrees") {
  CHECK(nonzero_cohomology_degrees(rp2_six(), Coefficients::integers()) == std::vector<int>{2});
  CHECK(nonzero_cohomology_degrees(cycle(5), Coefficients::integers()) == std::vector<int>{1});
  CHECK(nonzero_cohomology_degrees(simplex(2), Coefficients::integers()).empty());
  CHECK(nonzero_cohomology_degrees(rp2_six(), Coefficients::prime(2)) == std::vector<int>{1, 2});
}

TEST_CASE("library homology matches dense elimination over every field") {
  for (const auto& c : small_corpus()) {
    const int dim = c.dimension();
    const auto full = oracle::full_mask(c);
    for (std::uint64_t p : {0, 2, 3, 5}) {
      const auto coeff = p == 0 ? Coefficients::rationals() : Coefficients::prime(p);
      const auto ref = oracle::betti_numbers(c, full, p, dim);
      const auto shortcut = reduced_homology(c, coeff);
      const auto direct = reduced_homology_direct(c, coeff);
      for (int i = -1; i <= dim; ++i) {
        CHECK(shortcut.rank(i) == ref[static_cast<std::size_t>(i + 1)]);
        CHECK(direct.rank(i) == ref[static_cast<std::size_t>(i + 1)]);
      }
    }
    const auto z = reduced_homology(c, Coefficients::integers());
    const auto zd = reduced_homology_direct(c, Coefficients::integers());
    CHECK(z == zd);
    const auto tors = oracle::torsion(c, dim);
    for (int i = -1; i <= dim; ++i) CHECK(z.degree(i).torsion == tors[static_cast<std::size_t>(i + 1)]);
  }
}

TEST_CASE("universal coefficients agree with direct mod-p computation") {
  for (const auto& c : small_corpus()) {
    const auto z = reduced_homology_direct(c, Coefficients::integers());
    for (std::uint64_t p : {2, 3, 5, 7}) {
      const auto viaUct = z.over(Coefficients::prime(p));
      const auto direct = reduced_homology_direct(c, Coefficients::prime(p));
      for (int i = -1; i <= c.dimension(); ++i) CHECK(viaUct.rank(i) == direct.rank(i));
    }
  }
}

TEST_CASE("reduced Euler characteristic equals the alternating sum of ranks") {
  for (const auto& c : small_corpus()) {
    const auto h = reduced_homology(c, Coefficients::rationals());
    long long alt = 0;
    for (int i = -1; i <= c.dimension(); ++i) alt += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(h.rank(i));
    CHECK(reduced_euler_characteristic(c) == alt);
  }
}
