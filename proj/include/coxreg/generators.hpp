#ifndef COXREG_GENERATORS_HPP
#define COXREG_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coxreg/complex.hpp"
#include "coxreg/error.hpp"

namespace coxreg {

/// k-gon: vertices 0..k-1, edges {i, i+1 mod k}.
inline SimplicialComplex cycle(std::size_t k) {
  if (k < 3) throw DomainError("cycle needs k >= 3, got " + std::to_string(k));
  std::vector<Face> edges;
  for (Vertex i = 0; i < k; ++i) edges.push_back(make_face({i, static_cast<Vertex>((i + 1) % k)}));
  return SimplicialComplex(k, std::move(edges));
}

/// The full d-simplex on d+1 vertices.
inline SimplicialComplex simplex(int d) {
  if (d < 0) throw DomainError("simplex needs d >= 0");
  Face f;
  for (Vertex v = 0; v <= static_cast<Vertex>(d); ++v) f.push_back(v);
  return SimplicialComplex(static_cast<std::size_t>(d) + 1, {f});
}

/// Boundary of the d-simplex: all d-subsets of d+1 vertices.
inline SimplicialComplex boundary_simplex(int d) {
  if (d < 1) throw DomainError("boundary_simplex needs d >= 1");
  const auto n = static_cast<Vertex>(d + 1);
  std::vector<Face> facets;
  for (Vertex skip = 0; skip < n; ++skip) {
    Face f;
    for (Vertex v = 0; v < n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(n, std::move(facets));
}

/// Boundary of the d-dimensional cross-polytope. Vertex 2i is +e_i and
/// 2i+1 is -e_i; facets pick one sign per coordinate.
inline SimplicialComplex cross_polytope(int d) {
  if (d < 1) throw DomainError("cross_polytope needs d >= 1");
  if (d > 20) throw ResourceError("cross_polytope: d > 20 has more than 2^20 facets");
  std::vector<Face> facets;
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) {
    labels.push_back("+" + std::to_string(i + 1));
    labels.push_back("-" + std::to_string(i + 1));
  }
  for (std::uint32_t signs = 0; signs < (1U << d); ++signs) {
    Face f;
    for (int i = 0; i < d; ++i) f.push_back(static_cast<Vertex>(2 * i + ((signs >> i) & 1U)));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(2 * static_cast<std::size_t>(d), std::move(facets), std::move(labels));
}

/// The 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2_six() {
  return SimplicialComplex(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                               {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

namespace detail {

inline void bron_kerbosch(const std::vector<std::vector<char>>& adj, Face& r, std::vector<Vertex> p,
                          std::vector<Vertex> x, std::vector<Face>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  Vertex pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (Vertex u : *set) {
      std::size_t k = 0;
      for (Vertex v : p) k += adj[u][v];
      if (k >= best) {
        best = k;
        pivot = u;
      }
    }
  std::vector<Vertex> candidates;
  for (Vertex v : p)
    if (!adj[pivot][v]) candidates.push_back(v);
  for (Vertex v : candidates) {
    std::vector<Vertex> p2, x2;
    for (Vertex w : p)
      if (adj[v][w]) p2.push_back(w);
    for (Vertex w : x)
      if (adj[v][w]) x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

/// SplitMix64 finalizer, used as a counter-based generator.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Clique complex of a graph given by a symmetric adjacency matrix.
inline SimplicialComplex clique_complex(const std::vector<std::vector<char>>& adj) {
  const std::size_t n = adj.size();
  std::vector<Face> cliques;
  Face r;
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  if (n > 0) detail::bron_kerbosch(adj, r, all, {}, cliques);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  return SimplicialComplex(n, std::move(cliques));
}

/// Clique complex of a random graph on n vertices. Edge {i, j} is present
/// when the hash of (seed, i*n + j) falls below the density threshold, so the
/// output depends only on (n, density, seed).
inline SimplicialComplex random_flag(std::size_t n, double edge_density, std::uint64_t seed) {
  if (!(edge_density >= 0.0 && edge_density <= 1.0))
    throw DomainError("edge density must lie in [0, 1]");
  if (n == 0) throw DomainError("random_flag needs n >= 1");
  const std::uint64_t key = detail::splitmix64(seed);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t h = detail::splitmix64(key ^ detail::splitmix64(i * n + j));
      const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
      if (u < edge_density) adj[i][j] = adj[j][i] = 1;
    }
  return clique_complex(adj);
}

}  // namespace coxreg

#endif  // COXREG_GENERATORS_HPP
