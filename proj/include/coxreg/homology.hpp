#ifndef COXREG_HOMOLOGY_HPP
#define COXREG_HOMOLOGY_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "coxreg/coefficients.hpp"
#include "coxreg/complex.hpp"
#include "coxreg/linalg.hpp"

namespace coxreg {

/// One reduced homology group: free rank plus torsion divisors (ℤ only).
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

/// Reduced homology H̃_i for i = -1 .. dim Δ. For a field, `rank` is the
/// dimension and torsion is empty.
struct HomologyProfile {
  Coefficients coeff = Coefficients::integers();
  int dimension = -2;
  std::vector<HomologyGroup> groups;  // groups[i + 1] is H̃_i

  int min_degree() const { return -1; }
  int max_degree() const { return dimension; }

  HomologyGroup degree(int i) const {
    if (i < -1 || i + 1 >= static_cast<int>(groups.size())) return {};
    return groups[static_cast<std::size_t>(i + 1)];
  }
  std::size_t rank(int i) const { return degree(i).rank; }

  bool is_trivial() const {
    return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.is_zero(); });
  }

  /// Field coefficients from an integral profile by universal coefficients.
  HomologyProfile over(const Coefficients& field) const {
    if (coeff.kind() != Coefficients::Kind::integers)
      throw DomainError("universal coefficients need an integral profile");
    HomologyProfile out;
    out.coeff = field;
    out.dimension = dimension;
    out.groups.resize(groups.size());
    for (std::size_t k = 0; k < groups.size(); ++k) {
      std::size_t dim = groups[k].rank;
      if (field.kind() == Coefficients::Kind::prime_field) {
        const auto p = field.characteristic();
        auto divisible = [p](const std::vector<BigInt>& t) {
          return static_cast<std::size_t>(
              std::count_if(t.begin(), t.end(), [p](const BigInt& d) { return d % p == 0; }));
        };
        dim += divisible(groups[k].torsion);
        if (k > 0) dim += divisible(groups[k - 1].torsion);
      } else if (field.kind() == Coefficients::Kind::integers) {
        out.groups[k] = groups[k];
        continue;
      }
      out.groups[k].rank = dim;
    }
    return out;
  }

  /// Degrees i with H̃^i ≠ 0. Over ℤ, H̃^i ≅ Hom(H̃_i, ℤ) ⊕ Ext(H̃_{i-1}, ℤ).
  std::vector<int> nonzero_cohomology_degrees() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < groups.size(); ++k) {
      bool nonzero = groups[k].rank > 0;
      if (k > 0 && !groups[k - 1].torsion.empty()) nonzero = true;
      if (nonzero) out.push_back(static_cast<int>(k) - 1);
    }
    return out;
  }

  /// Largest i with H̃^i ≠ 0, or kNegativeInfinity.
  int top_cohomology_degree() const {
    auto degs = nonzero_cohomology_degrees();
    return degs.empty() ? kNegativeInfinity : degs.back();
  }

  /// Primes dividing some torsion coefficient.
  std::set<std::uint64_t> torsion_primes() const {
    std::set<std::uint64_t> primes;
    for (const auto& g : groups)
      for (BigInt d : g.torsion) {
        for (std::uint64_t q = 2; BigInt(q) * q <= d; ++q)
          while (d % q == 0) {
            primes.insert(q);
            d /= q;
          }
        if (d > 1) primes.insert(static_cast<std::uint64_t>(d));
      }
    return primes;
  }

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    return a.coeff == b.coeff && a.dimension == b.dimension && a.groups == b.groups;
  }
};

namespace detail {

inline std::size_t face_index(const std::vector<Face>& group, const Face& f) {
  return static_cast<std::size_t>(std::lower_bound(group.begin(), group.end(), f) - group.begin());
}

/// ∂_r from r-faces (size r+1) to (r-1)-faces, sign (-1)^position.
inline SparseMatrix<std::int64_t> sparse_boundary(const std::vector<std::vector<Face>>& by_size, int r) {
  SparseMatrix<std::int64_t> m;
  const bool has_cols = r >= -1 && static_cast<std::size_t>(r + 1) < by_size.size();
  const bool has_rows = r >= 0 && static_cast<std::size_t>(r) < by_size.size();
  m.rows = has_rows ? by_size[static_cast<std::size_t>(r)].size() : 0;
  if (!has_cols) return m;
  const auto cols = static_cast<std::size_t>(r + 1);
  m.columns.resize(by_size[cols].size());
  if (!has_rows) return m;
  const auto rows = static_cast<std::size_t>(r);
  Face sub;
  for (std::size_t c = 0; c < by_size[cols].size(); ++c) {
    const Face& f = by_size[cols][c];
    auto& col = m.columns[c];
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
      sub.assign(f.begin(), f.end());
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(pos));
      col.emplace_back(static_cast<std::uint32_t>(face_index(by_size[rows], sub)), pos % 2 ? -1 : 1);
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

inline std::uint64_t face_estimate(const std::vector<Face>& facets) {
  std::uint64_t total = 0;
  for (const auto& f : facets) {
    if (f.size() >= 62) return UINT64_MAX;
    total += std::uint64_t{1} << f.size();
    if (total > (std::uint64_t{1} << 62)) return UINT64_MAX;
  }
  return total;
}

/// Nerve of the facet cover: one vertex per facet; its facets are the sets
/// of facets through a common vertex.
inline std::vector<Face> nerve_facets(const SimplicialComplex& c) {
  std::vector<Face> through(c.vertex_count());
  for (std::size_t k = 0; k < c.facets().size(); ++k)
    for (Vertex v : c.facets()[k]) through[v].push_back(static_cast<Vertex>(k));
  std::vector<Face> out;
  for (auto& s : through)
    if (!s.empty()) out.push_back(std::move(s));
  return out;
}

inline bool is_cone(const SimplicialComplex& c) {
  if (c.facets().empty() || c.facets().front().empty()) return false;
  Face common = c.facets().front();
  for (const auto& f : c.facets()) {
    common = face_intersection(common, f);
    if (common.empty()) return false;
  }
  return true;
}

inline HomologyProfile integral_homology_of_facets(std::size_t n, const std::vector<Face>& facets, int dimension,
                                                   bool shortcuts);

inline HomologyProfile integral_homology_direct(const std::vector<std::vector<Face>>& by_size, int dimension) {
  HomologyProfile out;
  out.dimension = dimension;
  out.groups.resize(static_cast<std::size_t>(dimension + 2));
  // SNF of ∂_r for r = 0 .. dim; ∂_{dim+1} = 0.
  std::vector<SnfResult> snf(static_cast<std::size_t>(dimension + 2));
  for (int r = 0; r <= dimension; ++r)
    snf[static_cast<std::size_t>(r)] = smith_normal_form(sparse_boundary(by_size, r));
  for (int i = -1; i <= dimension; ++i) {
    const std::size_t faces = by_size[static_cast<std::size_t>(i + 1)].size();
    const std::size_t rank_out = i >= 0 ? snf[static_cast<std::size_t>(i)].rank : 0;
    const SnfResult& in = snf[static_cast<std::size_t>(i + 1)];
    auto& g = out.groups[static_cast<std::size_t>(i + 1)];
    g.rank = faces - rank_out - in.rank;
    g.torsion = in.torsion();
  }
  return out;
}

inline HomologyProfile integral_homology_of_facets(std::size_t n, const std::vector<Face>& facets, int dimension,
                                                   bool shortcuts) {
  HomologyProfile out;
  out.dimension = dimension;
  if (facets.empty()) return out;
  out.groups.resize(static_cast<std::size_t>(dimension + 2));
  SimplicialComplex c(n, facets);
  if (c.is_empty_face_only()) {
    out.groups[0].rank = 1;
    return out;
  }
  if (shortcuts) {
    if (is_cone(c)) return out;
    auto nerve = nerve_facets(c);
    if (face_estimate(nerve) < face_estimate(c.facets())) {
      // Nerve lemma: the facet cover has simplicial (contractible) overlaps.
      int nerve_dim = 0;
      for (const auto& f : nerve) nerve_dim = std::max(nerve_dim, static_cast<int>(f.size()) - 1);
      HomologyProfile viaNerve =
          integral_homology_of_facets(c.facets().size(), nerve, nerve_dim, true);
      for (std::size_t k = 0; k < out.groups.size() && k < viaNerve.groups.size(); ++k)
        out.groups[k] = viaNerve.groups[k];
      return out;
    }
  }
  return integral_homology_direct(enumerate_faces(c.facets()), dimension);
}

}  // namespace detail

/// Boundary matrix ∂_r as a dense integer matrix. Columns are r-faces and
/// rows (r-1)-faces, both in lexicographic order; ∂_0 maps every vertex to ∅.
inline IntMatrix boundary_matrix(const SimplicialComplex& c, int r) {
  auto by_size = detail::enumerate_faces(c.facets());
  return detail::sparse_boundary(by_size, r).to_dense();
}

/// Reduced integral homology; field coefficients follow by universal
/// coefficients. Cones and complexes whose facet nerve is smaller are
/// short-cut.
inline HomologyProfile reduced_homology(const SimplicialComplex& c,
                                        const Coefficients& coeff = Coefficients::integers()) {
  HomologyProfile integral =
      detail::integral_homology_of_facets(c.vertex_count(), c.facets(), c.dimension(), true);
  if (coeff.kind() == Coefficients::Kind::integers) return integral;
  return integral.over(coeff);
}

/// Independent route: ranks of every boundary matrix computed directly over
/// the requested field (Bareiss over ℚ, elimination mod p), no shortcuts.
/// Over ℤ this is the SNF computation without shortcuts.
inline HomologyProfile reduced_homology_direct(const SimplicialComplex& c, const Coefficients& coeff) {
  if (coeff.kind() == Coefficients::Kind::integers)
    return detail::integral_homology_of_facets(c.vertex_count(), c.facets(), c.dimension(), false);
  HomologyProfile out;
  out.coeff = coeff;
  out.dimension = c.dimension();
  if (c.is_void()) return out;
  auto by_size = detail::enumerate_faces(c.facets());
  const int d = c.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(d + 2), 0);
  for (int r = 0; r <= d; ++r) {
    auto m = detail::sparse_boundary(by_size, r);
    ranks[static_cast<std::size_t>(r)] = coeff.kind() == Coefficients::Kind::rationals
                                             ? rank_rational(m.to_dense())
                                             : rank_mod_p(m, coeff.characteristic());
  }
  out.groups.resize(static_cast<std::size_t>(d + 2));
  for (int i = -1; i <= d; ++i) {
    const std::size_t faces = by_size[static_cast<std::size_t>(i + 1)].size();
    const std::size_t out_rank = i >= 0 ? ranks[static_cast<std::size_t>(i)] : 0;
    out.groups[static_cast<std::size_t>(i + 1)].rank = faces - out_rank - ranks[static_cast<std::size_t>(i + 1)];
  }
  return out;
}

inline std::vector<int> nonzero_cohomology_degrees(const SimplicialComplex& c, const Coefficients& coeff) {
  return reduced_homology(c, coeff).nonzero_cohomology_degrees();
}

/// Σ (-1)^i f_i over i >= -1.
inline long long reduced_euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  int i = -1;
  for (auto f : f_vector(c)) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f);
    ++i;
  }
  return chi;
}

}  // namespace coxreg

#endif  // COXREG_HOMOLOGY_HPP
