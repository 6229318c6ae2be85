#include <catch_amalgamated.hpp>

#include <sstream>

#include "coxreg/coxreg.hpp"
#include "oracles.hpp"

using namespace coxreg;

namespace {

SimplicialComplex octahedron() { return cross_polytope(3); }

std::set<oracle::Mask> masks(const std::vector<Face>& faces) {
  std::set<oracle::Mask> out;
  for (const auto& f : faces) {
    oracle::Mask m = 0;
    for (Vertex v : f) m |= oracle::Mask{1} << v;
    out.insert(m);
  }
  return out;
}

// Equality up to the id assignment: same labels, same facets as label sets.
bool same_by_labels(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto facets = [](const SimplicialComplex& c) {
    std::set<std::set<std::string>> out;
    for (const auto& f : c.facets()) {
      std::set<std::string> labels;
      for (Vertex v : f) labels.insert(c.label(v));
      out.insert(labels);
    }
    return out;
  };
  return a.is_void() == b.is_void() && a.vertex_count() == b.vertex_count() && facets(a) == facets(b);
}

}  // namespace

TEST_CASE("from_facets assigns ids by first appearance and drops redundant facets") {
  auto tri = from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.facets().size() == 3);
  CHECK(tri.label(0) == "a");

  auto one = from_facets({{"a", "b"}, {"a", "b", "c"}});
  REQUIRE(one.facets().size() == 1);
  CHECK(one.facets()[0] == Face{0, 1, 2});

  auto edge_point = from_facets({{"1", "2"}, {"3"}});
  CHECK(edge_point.vertex_count() == 3);
  CHECK(edge_point.dimension() == 1);

  CHECK_THROWS_AS(from_facets({{"a", "a"}}), InputError);
}

TEST_CASE("void complex and the complex {∅} are different") {
  auto v = SimplicialComplex::void_complex();
  auto e = SimplicialComplex::empty_face_only();
  CHECK(v.is_void());
  CHECK(v.dimension() == -2);
  CHECK(e.dimension() == -1);
  CHECK_FALSE(v == e);
  CHECK(f_vector(v).empty());
  CHECK(f_vector(e) == std::vector<std::uint64_t>{1});
}

TEST_CASE("links") {
  auto o = octahedron();
  for (Vertex v = 0; v < o.vertex_count(); ++v) {
    auto l = link(o, {v});
    CHECK(l.vertex_count() == 4);
    CHECK(f_vector(l) == std::vector<std::uint64_t>{1, 4, 4});
    auto rep = largeness(l);
    CHECK(rep.shortest_induced_cycle == 4);
  }
  CHECK(link(o, {}) == o);
  auto facet_link = link(o, o.facets()[0]);
  CHECK(facet_link.is_empty_face_only());
  CHECK_THROWS_AS(link(o, {0, 1}), DomainError);  // antipodal pair is not a face
}

TEST_CASE("induced subcomplexes") {
  auto o = octahedron();
  auto square = induced(o, {0, 1, 2, 3});
  CHECK(f_vector(square) == std::vector<std::uint64_t>{1, 4, 4});
  CHECK(largeness(square).shortest_induced_cycle == 4);

  std::vector<Vertex> all(o.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  CHECK(induced(o, all) == o);

  auto edge = induced(boundary_simplex(2), {0, 2});
  CHECK(edge.facets().size() == 1);
  CHECK(edge.dimension() == 1);

  CHECK(induced(o, {}).is_empty_face_only());
  CHECK_THROWS_AS(induced(o, {17}), DomainError);
}

TEST_CASE("face complex has one vertex per nonempty face and one facet per facet") {
  for (const auto& c : {cycle(5), octahedron(), rp2_six(), simplex(2)}) {
    auto f = face_complex(c);
    const auto fv = f_vector(c);
    std::uint64_t nonempty = 0;
    for (std::size_t i = 1; i < fv.size(); ++i) nonempty += fv[i];
    CHECK(f.vertex_count() == nonempty);
    CHECK(f.facets().size() == c.facets().size());
  }
  CHECK_THROWS_AS(face_complex(SimplicialComplex::void_complex()), DomainError);
}

TEST_CASE("Alexander dual matches the brute-force complement construction") {
  auto square = cycle(4);
  auto d = alexander_dual(square);
  CHECK(d.facets().size() == 2);
  CHECK(d.dimension() == 1);
  CHECK(masks(d.faces()) == oracle::alexander_dual_faces(square));

  for (const auto& c : {cycle(5), octahedron(), rp2_six(), boundary_simplex(3), random_flag(7, 0.5, 3)}) {
    auto dual = alexander_dual(c);
    CHECK(masks(dual.faces()) == oracle::alexander_dual_faces(c));
    CHECK(masks(alexander_dual(dual).faces()) == masks(c.faces()));
  }
  CHECK_THROWS_AS(alexander_dual(simplex(3)), DomainError);
}

TEST_CASE("largeness") {
  auto o = largeness(octahedron());
  CHECK(o.flag);
  CHECK(o.shortest_induced_cycle == 4);
  CHECK(o.max_k == 4);

  for (std::size_t k = 4; k <= 9; ++k) {
    auto r = largeness(cycle(k));
    CHECK(r.flag);
    CHECK(r.shortest_induced_cycle == static_cast<int>(k));
    CHECK(r.max_k == static_cast<int>(k));
  }
  auto s = largeness(simplex(3));
  CHECK(s.flag);
  CHECK(s.max_k == kInfinity);

  auto t = largeness(boundary_simplex(2));
  CHECK_FALSE(t.flag);
  CHECK(t.min_nonface_size == 3u);
}

TEST_CASE("largeness agrees with subset enumeration on random flag complexes") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 6;
    auto c = random_flag(n, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
    auto r = largeness(c);
    CHECK(r.flag);
    CHECK(r.shortest_induced_cycle == oracle::shortest_induced_cycle(c));
    if (r.shortest_induced_cycle != kInfinity) CHECK(r.cycle_witness.size() == std::size_t(r.shortest_induced_cycle));
    std::size_t min_nonface = 0;
    for (auto m : oracle::minimal_nonfaces(c)) min_nonface = std::max<std::size_t>(min_nonface, oracle::popcount(m));
    if (min_nonface) CHECK(min_nonface == 2);
  }
}

TEST_CASE("f-vectors and generators") {
  CHECK(f_vector(cycle(5)) == std::vector<std::uint64_t>{1, 5, 5});
  CHECK(f_vector(octahedron()) == std::vector<std::uint64_t>{1, 6, 12, 8});
  CHECK(f_vector(rp2_six()) == std::vector<std::uint64_t>{1, 6, 15, 10});
  CHECK_THROWS_AS(cycle(2), DomainError);
  CHECK(random_flag(8, 0.5, 42) == random_flag(8, 0.5, 42));
}

TEST_CASE(".cplx round trip") {
  for (const auto& c : {cycle(5), octahedron(), rp2_six(), SimplicialComplex::empty_face_only(),
                        from_facets({{"a", "b"}}, {"z"})}) {
    const auto text = to_cplx_string(c);
    CHECK(same_by_labels(parse_cplx(text), c));
  }
  auto iso = parse_cplx("# comment\n1 2\nisolated: 3 4\n");
  CHECK(iso.vertex_count() == 4);
  CHECK(iso.facets().size() == 3);
  CHECK(parse_cplx("").is_void());
  CHECK(parse_cplx("{}\n").is_empty_face_only());
  CHECK_THROWS_AS(parse_cplx("a a\n"), InputError);
  CHECK_THROWS_AS(read_cplx_file("/nonexistent/file.cplx"), InputError);
}
