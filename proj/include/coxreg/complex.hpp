#ifndef COXREG_COMPLEX_HPP
#define COXREG_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxreg/error.hpp"

namespace coxreg {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids. The empty face is the empty
/// vector.
using Face = std::vector<Vertex>;

/// Sorts `vertices` and rejects repeated ids.
inline Face make_face(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("face lists vertex " +
                     std::to_string(*std::adjacent_find(vertices.begin(), vertices.end())) +
                     " twice");
  return vertices;
}

inline bool is_subface(const Face& small, const Face& big) {
  return small.size() <= big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Orders faces by cardinality first, then lexicographically.
struct GradedFaceLess {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

namespace detail {

/// Keeps only the inclusion-maximal members of `faces`, sorted lexicographically.
inline std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (auto& f : faces) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Face& g) { return is_subface(f, g); });
    if (!redundant) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

inline constexpr std::uint64_t kFaceEnumerationLimit = std::uint64_t{1} << 26;

/// All faces generated by `facets`, grouped by cardinality; each group is
/// sorted lexicographically. Group 0 holds the empty face when `facets` is
/// nonempty.
inline std::vector<std::vector<Face>> enumerate_faces(const std::vector<Face>& facets) {
  std::vector<std::vector<Face>> by_size;
  if (facets.empty()) return by_size;
  std::size_t top = 0;
  std::uint64_t estimate = 0;
  for (const auto& f : facets) {
    top = std::max(top, f.size());
    if (f.size() >= 40) throw ResourceError("face enumeration: facet with " +
                                            std::to_string(f.size()) + " vertices");
    estimate += std::uint64_t{1} << f.size();
    if (estimate > kFaceEnumerationLimit)
      throw ResourceError("face enumeration exceeds 2^26 faces");
  }
  by_size.resize(top + 1);
  Face buffer;
  for (const auto& f : facets) {
    const std::size_t s = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      buffer.clear();
      for (std::size_t i = 0; i < s; ++i)
        if (mask >> i & 1U) buffer.push_back(f[i]);
      by_size[buffer.size()].push_back(buffer);
    }
  }
  for (auto& group : by_size) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
  return by_size;
}

inline bool sorted_contains(const std::vector<Face>& group, const Face& f) {
  return std::binary_search(group.begin(), group.end(), f);
}

}  // namespace detail

/// A finite abstract simplicial complex on the ambient vertex set
/// {0, ..., n-1}, stored as its antichain of facets.
///
/// The void complex has no faces at all; the complex {∅} has the single
/// facet ∅. Ambient vertices that lie in no facet are "ghost" vertices
/// (minimal nonfaces of size one); they only arise from Alexander duality
/// and matter for the Stanley–Reisner ideal.
class SimplicialComplex {
 public:
  /// The void complex on zero vertices.
  SimplicialComplex() = default;

  /// The complex generated by `generators` (redundant faces are dropped).
  SimplicialComplex(std::size_t vertex_count, std::vector<Face> generators,
                    std::vector<std::string> labels = {})
      : n_(vertex_count), labels_(std::move(labels)) {
    for (auto& g : generators) {
      g = make_face(std::move(g));
      if (!g.empty() && g.back() >= n_)
        throw DomainError("vertex id " + std::to_string(g.back()) +
                          " out of range for " + std::to_string(n_) + " vertices");
    }
    facets_ = detail::maximal_faces(std::move(generators));
    if (labels_.empty()) {
      labels_.reserve(n_);
      for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
    } else if (labels_.size() != n_) {
      throw InputError("label table has " + std::to_string(labels_.size()) +
                       " entries for " + std::to_string(n_) + " vertices");
    }
  }

  static SimplicialComplex void_complex(std::size_t vertex_count = 0) {
    return SimplicialComplex(vertex_count, {});
  }
  static SimplicialComplex empty_face_only(std::size_t vertex_count = 0) {
    return SimplicialComplex(vertex_count, {Face{}});
  }

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  bool is_void() const noexcept { return facets_.empty(); }
  bool is_empty_face_only() const noexcept {
    return facets_.size() == 1 && facets_.front().empty();
  }

  /// Dimension; -1 for {∅} and -2 for the void complex.
  int dimension() const noexcept {
    if (facets_.empty()) return -2;
    std::size_t top = 0;
    for (const auto& f : facets_) top = std::max(top, f.size());
    return static_cast<int>(top) - 1;
  }

  bool contains(const Face& face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return is_subface(face, f); });
  }

  /// Vertices lying in some facet, increasing.
  std::vector<Vertex> vertices() const {
    std::vector<char> seen(n_, 0);
    for (const auto& f : facets_)
      for (Vertex v : f) seen[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
      if (seen[v]) out.push_back(v);
    return out;
  }

  std::vector<Vertex> ghost_vertices() const {
    std::vector<char> seen(n_, 0);
    for (const auto& f : facets_)
      for (Vertex v : f) seen[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
      if (!seen[v]) out.push_back(v);
    return out;
  }

  bool is_full_simplex() const {
    return facets_.size() == 1 && facets_.front().size() == n_;
  }

  /// Every face, ordered by cardinality and then lexicographically.
  std::vector<Face> faces() const {
    std::vector<Face> out;
    for (auto& group : detail::enumerate_faces(facets_))
      for (auto& f : group) out.push_back(std::move(f));
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Face> facets_;
  std::vector<std::string> labels_;
};

/// Builds a complex from token lists. Tokens get dense ids in order of first
/// appearance; `isolated` tokens become singleton facets.
inline SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facet_lists,
                                     const std::vector<std::string>& isolated = {}) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  auto id_of = [&](const std::string& token) {
    if (token.empty()) throw InputError("empty vertex token");
    auto [it, inserted] = ids.emplace(token, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };
  std::vector<Face> generators;
  for (const auto& list : facet_lists) {
    Face f;
    for (const auto& token : list) f.push_back(id_of(token));
    std::vector<Vertex> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw InputError("vertex '" + labels[*dup] + "' repeated within one facet");
    generators.push_back(std::move(sorted));
  }
  for (const auto& token : isolated) generators.push_back(Face{id_of(token)});
  const std::size_t n = labels.size();
  return SimplicialComplex(n, std::move(generators), std::move(labels));
}

namespace detail {

inline SimplicialComplex reindexed(const std::vector<Face>& facets, const std::vector<Vertex>& keep,
                                   const SimplicialComplex& parent) {
  std::vector<Vertex> position(parent.vertex_count(), 0);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    position[keep[i]] = static_cast<Vertex>(i);
    labels.push_back(parent.label(keep[i]));
  }
  std::vector<Face> mapped;
  mapped.reserve(facets.size());
  for (const auto& f : facets) {
    Face g;
    g.reserve(f.size());
    for (Vertex v : f) g.push_back(position[v]);
    mapped.push_back(std::move(g));
  }
  return SimplicialComplex(keep.size(), std::move(mapped), std::move(labels));
}

/// Facets of lk σ in the parent's vertex ids (not re-indexed).
inline std::vector<Face> link_facets(const std::vector<Face>& facets, const Face& sigma) {
  std::vector<Face> out;
  for (const auto& f : facets)
    if (is_subface(sigma, f)) out.push_back(face_difference(f, sigma));
  return out;
}

}  // namespace detail

/// lk_Δ σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}, re-indexed densely over its own
/// vertices with labels carried over.
inline SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma) {
  Face s = make_face(sigma);
  if (!complex.contains(s)) throw DomainError("link: face is not in the complex");
  std::vector<Face> facets = detail::link_facets(complex.facets(), s);
  std::vector<Vertex> keep;
  for (const auto& f : facets) keep.insert(keep.end(), f.begin(), f.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return detail::reindexed(facets, keep, complex);
}

/// Δ|_V': all faces inside `subset`, re-indexed by position in the sorted
/// subset. Ghost vertices inside the subset stay ghosts. The empty subset
/// yields {∅} for a nonvoid complex.
inline SimplicialComplex induced(const SimplicialComplex& complex, std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (!subset.empty() && subset.back() >= complex.vertex_count())
    throw DomainError("induced: vertex id " + std::to_string(subset.back()) + " out of range");
  std::vector<Face> facets;
  for (const auto& f : complex.facets()) facets.push_back(face_intersection(f, subset));
  return detail::reindexed(facets, subset, complex);
}

/// F(Δ): vertices are the nonempty faces of Δ (graded order), and a set of
/// them is a face when all lie in a common face of Δ.
inline SimplicialComplex face_complex(const SimplicialComplex& complex) {
  if (complex.is_void() || complex.is_empty_face_only())
    throw DomainError("face complex needs a complex with at least one vertex");
  std::vector<Face> nonempty;
  for (auto& group : detail::enumerate_faces(complex.facets()))
    for (auto& f : group)
      if (!f.empty()) nonempty.push_back(std::move(f));
  std::map<Face, Vertex> index;
  std::vector<std::string> labels;
  for (const auto& f : nonempty) {
    index.emplace(f, static_cast<Vertex>(labels.size()));
    std::string label = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) label += ',';
      label += complex.label(f[i]);
    }
    labels.push_back(label + "}");
  }
  std::vector<Face> facets;
  for (const auto& tau : complex.facets()) {
    Face big;
    for (const auto& group : detail::enumerate_faces({tau}))
      for (const auto& f : group)
        if (!f.empty()) big.push_back(index.at(f));
    facets.push_back(std::move(big));
  }
  const std::size_t n = labels.size();
  return SimplicialComplex(n, std::move(facets), std::move(labels));
}

/// Inclusion-minimal nonfaces over the ambient vertex set, graded order.
/// The void complex has the single minimal nonface ∅.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  if (complex.is_void()) return {Face{}};
  const std::size_t n = complex.vertex_count();
  std::vector<Face> out;
  for (Vertex v : complex.ghost_vertices()) out.push_back(Face{v});

  const auto by_size = detail::enumerate_faces(complex.facets());
  auto is_face = [&](const Face& f) {
    return f.size() < by_size.size() && detail::sorted_contains(by_size[f.size()], f);
  };
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  if (by_size.size() > 2)
    for (const auto& e : by_size[2]) adjacent[e[0]][e[1]] = adjacent[e[1]][e[0]] = 1;
  std::vector<Vertex> verts = complex.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!adjacent[verts[i]][verts[j]]) out.push_back(Face{verts[i], verts[j]});

  // Larger minimal nonfaces are F ∪ {v} with F a face, v > max F, and every
  // codimension-one subset a face.
  for (std::size_t s = 2; s < by_size.size(); ++s) {
    for (const auto& f : by_size[s]) {
      for (Vertex v = f.back() + 1; v < n; ++v) {
        if (!std::all_of(f.begin(), f.end(), [&](Vertex u) { return adjacent[u][v]; })) continue;
        Face candidate = f;
        candidate.push_back(v);
        if (is_face(candidate)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size() && minimal; ++drop) {
          Face sub;
          for (std::size_t i = 0; i < candidate.size(); ++i)
            if (i != drop) sub.push_back(candidate[i]);
          minimal = is_face(sub);
        }
        if (minimal) out.push_back(std::move(candidate));
      }
    }
  }
  std::sort(out.begin(), out.end(), GradedFaceLess{});
  return out;
}

/// Δ^∨ = {F ⊆ [n] : [n] \ F ∉ Δ} on the same ambient vertex set.
inline SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  if (complex.is_full_simplex() || (n == 0 && complex.is_empty_face_only()))
    throw DomainError("Alexander dual of the full simplex has no faces");
  std::vector<Face> facets;
  for (const auto& nonface : minimal_nonfaces(complex)) {
    Face complement;
    std::size_t j = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (j < nonface.size() && nonface[j] == v) {
        ++j;
        continue;
      }
      complement.push_back(v);
    }
    facets.push_back(std::move(complement));
  }
  return SimplicialComplex(n, std::move(facets), complex.labels());
}

/// f_{-1}, f_0, ..., f_d. Empty for the void complex.
inline std::vector<std::uint64_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::uint64_t> out;
  for (const auto& group : detail::enumerate_faces(complex.facets())) out.push_back(group.size());
  return out;
}

/// Adjacency lists of the 1-skeleton over the ambient vertex set.
inline std::vector<std::vector<Vertex>> one_skeleton(const SimplicialComplex& complex) {
  std::vector<std::vector<Vertex>> adj(complex.vertex_count());
  for (const auto& f : complex.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        adj[f[i]].push_back(f[j]);
        adj[f[j]].push_back(f[i]);
      }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

struct InducedCycle {
  int length = kInfinity;
  std::vector<Vertex> vertices;  // in cyclic order
};

/// Shortest chordless cycle of length >= 4 in a simple graph.
///
/// For every vertex b and every pair a, c of non-adjacent neighbours of b, the
/// shortest a–c path avoiding N[b] \ {a, c} closes an induced cycle through
/// b; the minimum over all such triples is exact.
inline InducedCycle shortest_induced_cycle(const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : adj[v]) adjacent[v][w] = 1;

  InducedCycle best;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<char> blocked(n);
  std::deque<Vertex> queue;
  for (Vertex b = 0; b < n; ++b) {
    if (adj[b].size() < 2) continue;
    std::fill(blocked.begin(), blocked.end(), 0);
    blocked[b] = 1;
    for (Vertex x : adj[b]) blocked[x] = 1;
    for (Vertex a : adj[b]) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[a] = 0;
      queue.assign(1, a);
      while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : adj[x]) {
          if (blocked[y] || dist[y] >= 0) continue;
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        }
      }
      for (Vertex c : adj[b]) {
        if (c <= a || adjacent[a][c]) continue;
        int through = kInfinity;
        Vertex last = 0;
        for (Vertex x : adj[c]) {
          if (blocked[x] || dist[x] < 0) continue;
          if (dist[x] + 1 < through) {
            through = dist[x] + 1;
            last = x;
          }
        }
        if (through == kInfinity || through + 2 >= best.length) continue;
        best.length = through + 2;
        best.vertices = {b, c};
        for (Vertex x = last; x != a; x = parent[x]) best.vertices.push_back(x);
        best.vertices.push_back(a);
      }
    }
  }
  return best;
}

struct LargenessReport {
  bool flag = false;
  std::optional<std::size_t> min_nonface_size;  // nullopt: no nonfaces
  int shortest_induced_cycle = kInfinity;       // >= 4 or kInfinity
  std::vector<Vertex> cycle_witness;
  std::optional<int> max_k;                     // set only for flag complexes

  bool is_k_large(int k) const { return flag && max_k && k <= *max_k; }
};

/// Flag test via minimal nonfaces, and the exact shortest induced cycle.
inline LargenessReport largeness(const SimplicialComplex& complex) {
  LargenessReport report;
  const auto nonfaces = minimal_nonfaces(complex);
  report.flag = std::all_of(nonfaces.begin(), nonfaces.end(),
                            [](const Face& f) { return f.size() == 2; });
  if (!nonfaces.empty()) {
    std::size_t smallest = nonfaces.front().size();
    for (const auto& f : nonfaces) smallest = std::min(smallest, f.size());
    report.min_nonface_size = smallest;
  }
  InducedCycle cycle = shortest_induced_cycle(one_skeleton(complex));
  report.shortest_induced_cycle = cycle.length;
  report.cycle_witness = std::move(cycle.vertices);
  if (report.flag) report.max_k = report.shortest_induced_cycle;
  return report;
}

}  // namespace coxreg

#endif  // COXREG_COMPLEX_HPP
