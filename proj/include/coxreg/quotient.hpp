#ifndef COXREG_QUOTIENT_HPP
#define COXREG_QUOTIENT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxreg/complex.hpp"
#include "coxreg/error.hpp"
#include "coxreg/racg.hpp"

namespace coxreg {

/// Image of the Coxeter group in GL_n(ℤ/m). Elements are row-major entry
/// vectors in [0, m); element 0 is the identity.
struct ImageGroup {
  std::uint64_t modulus = 0;
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> elements;
  /// right[g][s] = index of g·ρ(s_s).
  std::vector<std::vector<std::uint32_t>> right;
  /// Shortest generator word reaching each element (BFS tree).
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> parent_generator;

  std::size_t order() const noexcept { return elements.size(); }

  std::optional<std::uint32_t> find(const std::vector<std::uint32_t>& e) const {
    auto it = lookup.find(e);
    if (it == lookup.end()) return std::nullopt;
    return it->second;
  }

  /// Index of elements[a] · elements[b].
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
    const auto& x = elements[a];
    const auto& y = elements[b];
    std::vector<std::uint32_t> z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t xik = x[i * n + k];
        if (!xik) continue;
        for (std::size_t j = 0; j < n; ++j)
          z[i * n + j] = static_cast<std::uint32_t>((z[i * n + j] + xik * y[k * n + j]) % modulus);
      }
    auto idx = find(z);
    if (!idx) throw PropertyViolation("image group is not closed under multiplication");
    return *idx;
  }

  std::vector<std::uint32_t> word_to(std::uint32_t g) const {
    std::vector<std::uint32_t> w;
    while (g != 0) {
      w.push_back(parent_generator[g]);
      g = parent[g];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::EntriesHash<std::uint32_t>> lookup;
};

/// Closure of the generator images mod m by breadth-first search.
inline ImageGroup image_group(const RacgRepresentation& rep, std::uint64_t m, std::uint64_t budget) {
  if (m < 2) throw DomainError("image group needs m >= 2");
  if (m >= (std::uint64_t{1} << 31)) throw ResourceError("modulus " + std::to_string(m) + " exceeds 2^31");
  ImageGroup g;
  g.modulus = m;
  g.n = rep.rank();
  const std::size_t n = g.n;
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& s : rep.generators) {
    std::vector<std::uint32_t> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t r = s(i, j) % static_cast<std::int64_t>(m);
        e[i * n + j] = static_cast<std::uint32_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
      }
    gens.push_back(std::move(e));
  }
  std::vector<std::uint32_t> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = static_cast<std::uint32_t>(1 % m);
  g.elements.push_back(id);
  g.lookup.emplace(id, 0);
  g.parent.push_back(0);
  g.parent_generator.push_back(0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    g.right.emplace_back(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      // Right multiplication by a generator only changes column entries via row s.
      const auto& x = g.elements[head];
      std::vector<std::uint32_t> z(n * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const std::uint64_t xik = x[i * n + k];
          if (!xik) continue;
          for (std::size_t j = 0; j < n; ++j)
            z[i * n + j] = static_cast<std::uint32_t>((z[i * n + j] + xik * gens[s][k * n + j]) % m);
        }
      auto it = g.lookup.find(z);
      std::uint32_t idx;
      if (it == g.lookup.end()) {
        if (g.elements.size() >= budget)
          throw ResourceError("image group mod " + std::to_string(m) + " exceeds the element budget " +
                              std::to_string(budget));
        idx = static_cast<std::uint32_t>(g.elements.size());
        g.lookup.emplace(z, idx);
        g.elements.push_back(std::move(z));
        g.parent.push_back(static_cast<std::uint32_t>(head));
        g.parent_generator.push_back(static_cast<std::uint32_t>(s));
      } else {
        idx = it->second;
      }
      g.right[head][s] = idx;
    }
  }
  return g;
}

/// Cells of the quotient of the Davis complex: for each face T of the nerve
/// (including ∅) the distinct cosets g·W_T, each stored as a sorted element
/// list.
struct QuotientComplex {
  std::vector<Face> faces;                                      // graded order
  std::vector<std::vector<std::vector<std::uint32_t>>> cells;   // cells[t] for faces[t]
  std::size_t group_order = 0;
  bool coset_sizes_ok = true;  // every coset of T has 2^|T| elements

  std::size_t cell_count() const {
    std::size_t c = 0;
    for (const auto& v : cells) c += v.size();
    return c;
  }
};

inline QuotientComplex quotient_complex(const RacgRepresentation& rep, const ImageGroup& group) {
  if (group.n != rep.rank()) throw DomainError("image group and representation have different ranks");
  QuotientComplex q;
  q.group_order = group.order();
  q.faces = rep.nerve.faces();
  q.cells.resize(q.faces.size());
  for (std::size_t t = 0; t < q.faces.size(); ++t) {
    const Face& face = q.faces[t];
    std::set<std::vector<std::uint32_t>> distinct;
    for (std::uint32_t g = 0; g < group.order(); ++g) {
      std::vector<std::uint32_t> coset{g};
      for (Vertex s : face) {
        const std::size_t size = coset.size();
        for (std::size_t i = 0; i < size; ++i) coset.push_back(group.right[coset[i]][s]);
      }
      std::sort(coset.begin(), coset.end());
      coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
      if (coset.size() != (std::size_t{1} << face.size())) q.coset_sizes_ok = false;
      distinct.insert(std::move(coset));
    }
    q.cells[t].assign(distinct.begin(), distinct.end());
  }
  return q;
}

/// Simplicial complex on the group elements whose facets are the vertex
/// sets of the maximal cells.
inline SimplicialComplex thicken(const QuotientComplex& q) {
  std::vector<Face> generators;
  for (const auto& cells : q.cells)
    for (const auto& cell : cells) generators.push_back(Face(cell.begin(), cell.end()));
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < q.group_order; ++g) labels.push_back("g" + std::to_string(g));
  return SimplicialComplex(q.group_order, std::move(generators), std::move(labels));
}

struct ConstructionCertificate {
  int k = 0;
  std::uint64_t modulus = 0;
  bool modulus_defaulted = false;
  DisplacementStatus displacement_status = DisplacementStatus::not_run;
  bool torsion_free = false;
  bool coset_sizes_ok = false;
  bool link_check = false;
  std::size_t vertices_checked = 0;
  std::uint64_t link_hash = 0;         // FNV-1a of the link of the identity, translated
  std::size_t group_order = 0;
  int output_max_k = 0;                // largeness of the output (kInfinity possible)
  bool output_flag = false;
  KernelSearchResult kernel;
  std::string note;
};

/// Thrown when the pipeline declines to emit S(Δ, k); carries the
/// certificate explaining why.
class ConstructionRejected : public Error {
 public:
  ConstructionRejected(const std::string& what, ConstructionCertificate cert)
      : Error(what), certificate(std::move(cert)) {}
  ConstructionCertificate certificate;
};

struct ConstructionBudgets {
  std::uint64_t kernel_elements = 2'000'000;
  std::uint64_t group_elements = 1'000'000;
  unsigned threads = 1;
  SearchMode search = SearchMode::displacement;
};

struct ConstructionResult {
  SimplicialComplex complex;
  ConstructionCertificate certificate;
};

namespace detail {

inline std::uint64_t fnv1a(const std::vector<Face>& facets) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& f : facets) {
    mix(f.size());
    for (Vertex v : f) mix(v);
  }
  return h;
}

/// Facets of lk_S(g) in S's vertex ids (no re-indexing).
inline std::vector<Face> vertex_link_facets(const SimplicialComplex& s, Vertex g) {
  std::vector<Face> out;
  for (const auto& f : s.facets())
    if (std::binary_search(f.begin(), f.end(), g)) out.push_back(face_difference(f, Face{g}));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Builds S(Δ, k): the thickened quotient of the Davis complex by the kernel
/// of reduction mod m, after certifying that this kernel has no nontrivial
/// element of displacement < k.
inline ConstructionResult s_construction(const SimplicialComplex& delta, int k, std::optional<std::uint64_t> modulus,
                                         const ConstructionBudgets& budgets = {}) {
  if (k < 4) throw DomainError("S(Δ,k) needs k >= 4");
  const LargenessReport large = largeness(delta);
  if (!large.is_k_large(k))
    throw DomainError("input is not " + std::to_string(k) + "-large (" +
                      (large.flag ? "shortest induced cycle " + format_extended(large.shortest_induced_cycle)
                                  : std::string("not flag")) +
                      ")");
  ConstructionCertificate cert;
  cert.k = k;
  if (modulus) {
    cert.modulus = *modulus;
  } else {
    const BigInt m = sufficient_modulus(std::max(delta.dimension(), 0), k);
    if (m >= (BigInt(1) << 31))
      throw ResourceError("default modulus " + m.str() + " exceeds 2^31; pass an explicit modulus");
    cert.modulus = static_cast<std::uint64_t>(m);
    cert.modulus_defaulted = true;
  }
  cert.torsion_free = cert.modulus > 2;
  if (!cert.torsion_free) {
    cert.note = "modulus <= 2: the kernel of reduction contains torsion";
    throw ConstructionRejected("rejected: modulus " + std::to_string(cert.modulus) + " is not > 2", cert);
  }

  const RacgRepresentation rep = build_system(delta);
  cert.kernel =
      kernel_displacement_search(rep, cert.modulus, k, budgets.search, {budgets.kernel_elements, budgets.threads});
  cert.displacement_status = cert.kernel.status;
  if (cert.displacement_status != DisplacementStatus::certified) {
    cert.note = cert.displacement_status == DisplacementStatus::counterexample
                    ? (cert.kernel.witness_below_k
                           ? "a nontrivial element of displacement < k reduces to the identity"
                           : "the word-length cover contains a kernel element; certification fails")
                    : "kernel search budget exhausted";
    throw ConstructionRejected(std::string("rejected: displacement ") + to_string(cert.displacement_status), cert);
  }

  const ImageGroup group = image_group(rep, cert.modulus, budgets.group_elements);
  cert.group_order = group.order();
  const QuotientComplex q = quotient_complex(rep, group);
  cert.coset_sizes_ok = q.coset_sizes_ok;
  if (!q.coset_sizes_ok) throw PropertyViolation("coset of size != 2^|T| despite a certified displacement");
  SimplicialComplex s = thicken(q);

  // Link of the identity against F(Δ): the face T of Δ maps to w_T.
  const SimplicialComplex fd = face_complex(delta);
  std::vector<Vertex> image_of(fd.vertex_count());
  {
    std::size_t next = 0;
    for (const auto& face : delta.faces()) {
      if (face.empty()) continue;
      std::uint32_t e = 0;
      for (Vertex v : face) e = group.right[e][v];
      image_of[next++] = e;
    }
  }
  std::vector<Face> expected;
  for (const auto& f : fd.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(image_of[v]);
    std::sort(g.begin(), g.end());
    expected.push_back(std::move(g));
  }
  std::sort(expected.begin(), expected.end());
  const auto identity_link = detail::vertex_link_facets(s, 0);
  bool ok = identity_link == expected;
  cert.link_hash = detail::fnv1a(identity_link);

  // Every other vertex g: lk(g) must be g · lk(e).
  cert.vertices_checked = 1;
  for (std::uint32_t g = 1; g < group.order() && ok; ++g, ++cert.vertices_checked) {
    std::vector<Face> translated;
    for (const auto& f : identity_link) {
      Face t;
      for (Vertex x : f) t.push_back(group.multiply(g, x));
      std::sort(t.begin(), t.end());
      translated.push_back(std::move(t));
    }
    std::sort(translated.begin(), translated.end());
    ok = translated == detail::vertex_link_facets(s, g);
  }
  cert.link_check = ok;
  if (!ok) throw PropertyViolation("vertex link differs from the face complex of the input");

  const LargenessReport out_large = largeness(s);
  cert.output_flag = out_large.flag;
  cert.output_max_k = out_large.max_k ? *out_large.max_k : 0;
  if (!out_large.is_k_large(k))
    throw PropertyViolation("output is not " + std::to_string(k) + "-large");
  return {std::move(s), std::move(cert)};
}

}  // namespace coxreg

#endif  // COXREG_QUOTIENT_HPP
