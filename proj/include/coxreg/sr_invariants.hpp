#ifndef COXREG_SR_INVARIANTS_HPP
#define COXREG_SR_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxreg/bounds.hpp"
#include "coxreg/coefficients.hpp"
#include "coxreg/complex.hpp"
#include "coxreg/error.hpp"
#include "coxreg/homology.hpp"
#include "coxreg/parallel.hpp"

namespace coxreg {

/// Maximum number of induced subcomplexes a subset scan may visit.
inline constexpr std::uint64_t kSubsetCap = std::uint64_t{1} << 22;

struct ScanOptions {
  unsigned threads = 1;
  std::uint64_t subset_cap = kSubsetCap;
};

namespace detail {

inline void check_subset_cap(const SimplicialComplex& c, const ScanOptions& opt) {
  const std::size_t n = c.vertex_count();
  if (n >= 63 || (std::uint64_t{1} << n) > opt.subset_cap)
    throw ResourceError("subset enumeration cap exceeded: 2^" + std::to_string(n) +
                        " induced subcomplexes, cap " + std::to_string(opt.subset_cap));
}

inline std::vector<Vertex> mask_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1U) out.push_back(v);
  return out;
}

/// Visits every induced subcomplex Δ|_A (A as a bitmask) with its integral
/// homology. Chunks are merged in mask order.
template <class Acc, class Visit, class Merge>
Acc scan_induced(const SimplicialComplex& c, const ScanOptions& opt, const Acc& init, Visit visit, Merge merge) {
  check_subset_cap(c, opt);
  const std::uint64_t count = std::uint64_t{1} << c.vertex_count();
  return parallel_chunks(
      count, opt.threads, init,
      [&](Acc& acc, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          SimplicialComplex sub = induced(c, mask_vertices(mask));
          visit(acc, mask, reduced_homology(sub));
        }
      },
      merge);
}

/// Faces σ whose link is not a cone: the intersections of nonempty families
/// of facets. Other faces have contractible links.
inline std::vector<Face> closed_faces(const SimplicialComplex& c) {
  std::set<Face, GradedFaceLess> closed(c.facets().begin(), c.facets().end());
  std::vector<Face> frontier(c.facets().begin(), c.facets().end());
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (const auto& f : frontier)
      for (const auto& g : c.facets()) {
        Face h = face_intersection(f, g);
        if (closed.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

inline void require_field(const Coefficients& k, const char* what) {
  if (!k.is_field()) throw DomainError(std::string(what) + " needs a field (q or f<p>), not z");
}

inline int field_top_degree(const HomologyProfile& integral, const Coefficients& k) {
  return integral.over(k).top_cohomology_degree();
}

}  // namespace detail

/// Graded Betti numbers β_{i,j} of k[Δ], stored sparsely.
struct BettiTable {
  Coefficients field = Coefficients::rationals();
  std::map<std::pair<int, int>, std::uint64_t> entries;  // (i, j) -> β_{i,j}

  std::uint64_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int regularity() const {
    int reg = 0;
    for (const auto& [ij, b] : entries) reg = std::max(reg, ij.second - ij.first);
    return reg;
  }
  int projective_dimension() const {
    int pd = 0;
    for (const auto& [ij, b] : entries) pd = std::max(pd, ij.first);
    return pd;
  }
  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.field == b.field && a.entries == b.entries;
  }
};

/// Betti tables over several fields from one integral scan (Hochster's
/// formula: β_{i,j} = Σ_{|A|=j} dim H̃^{j-i-1}(Δ|_A)).
inline std::vector<BettiTable> betti_tables(const SimplicialComplex& c, const std::vector<Coefficients>& fields,
                                            const ScanOptions& opt = {}) {
  for (const auto& k : fields) detail::require_field(k, "Betti table");
  if (c.is_void()) throw DomainError("the void complex has the zero Stanley-Reisner ring");
  using Acc = std::vector<std::map<std::pair<int, int>, std::uint64_t>>;
  Acc init(fields.size());
  Acc acc = detail::scan_induced(
      c, opt, init,
      [&](Acc& a, std::uint64_t mask, const HomologyProfile& h) {
        const int j = __builtin_popcountll(mask);
        for (std::size_t f = 0; f < fields.size(); ++f) {
          HomologyProfile over = h.over(fields[f]);
          for (int deg = -1; deg <= over.dimension; ++deg) {
            const std::size_t dim = over.rank(deg);
            if (dim) a[f][{j - deg - 1, j}] += dim;
          }
        }
      },
      [](Acc& into, Acc&& from) {
        for (std::size_t f = 0; f < into.size(); ++f)
          for (const auto& [ij, b] : from[f]) into[f][ij] += b;
      });
  std::vector<BettiTable> out;
  for (std::size_t f = 0; f < fields.size(); ++f) out.push_back({fields[f], std::move(acc[f])});
  return out;
}

inline BettiTable betti_table(const SimplicialComplex& c, const Coefficients& field, const ScanOptions& opt = {}) {
  return betti_tables(c, {field}, opt).front();
}

enum class RegMethod { induced, links, betti };

inline const char* to_string(RegMethod m) {
  switch (m) {
    case RegMethod::induced: return "induced";
    case RegMethod::links: return "links";
    case RegMethod::betti: return "betti";
  }
  return "?";
}

inline RegMethod parse_reg_method(const std::string& s) {
  if (s == "induced") return RegMethod::induced;
  if (s == "links") return RegMethod::links;
  if (s == "betti") return RegMethod::betti;
  throw InputError("unknown method '" + s + "'; expected induced, links or betti");
}

struct RegularityReport {
  int value = 0;
  RegMethod method = RegMethod::induced;
  Coefficients field = Coefficients::rationals();
  /// Subset A (induced) or face σ (links) attaining the value; empty for betti.
  std::vector<Vertex> witness;
  /// Cohomological degree i-1 at the witness, value = degree + 1.
  int witness_degree = -1;
  bool void_complex = false;
};

/// reg k[Δ] = max{i : H̃^{i-1}(Δ|_A; k) ≠ 0}. Ties go to the smallest mask.
inline RegularityReport regularity_induced(const SimplicialComplex& c, const Coefficients& field,
                                           const ScanOptions& opt = {}) {
  detail::require_field(field, "regularity");
  RegularityReport rep;
  rep.method = RegMethod::induced;
  rep.field = field;
  if (c.is_void()) {
    rep.void_complex = true;
    return rep;
  }
  struct Best {
    int degree = kNegativeInfinity;
    std::uint64_t mask = 0;
  };
  Best best = detail::scan_induced(
      c, opt, Best{},
      [&](Best& b, std::uint64_t mask, const HomologyProfile& h) {
        const int top = detail::field_top_degree(h, field);
        if (top != kNegativeInfinity && (b.degree == kNegativeInfinity || top > b.degree)) b = {top, mask};
      },
      [](Best& into, Best&& from) {
        if (from.degree != kNegativeInfinity && (into.degree == kNegativeInfinity || from.degree > into.degree))
          into = from;
      });
  rep.witness = detail::mask_vertices(best.mask);
  rep.witness_degree = best.degree;
  rep.value = best.degree + 1;
  return rep;
}

/// reg k[Δ] = max{i : H̃^{i-1}(lk σ; k) ≠ 0, σ ∈ Δ}. Only faces that are
/// intersections of facets are visited; ties go to the first in graded order.
inline RegularityReport regularity_links(const SimplicialComplex& c, const Coefficients& field,
                                         const ScanOptions& opt = {}) {
  detail::require_field(field, "regularity");
  RegularityReport rep;
  rep.method = RegMethod::links;
  rep.field = field;
  if (c.is_void()) {
    rep.void_complex = true;
    return rep;
  }
  const auto faces = detail::closed_faces(c);
  struct Best {
    int degree = kNegativeInfinity;
    std::size_t index = 0;
  };
  Best best = parallel_chunks(
      faces.size(), opt.threads, Best{},
      [&](Best& b, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; ++k) {
          const int top = reduced_homology(link(c, faces[k]), field).top_cohomology_degree();
          if (top != kNegativeInfinity && (b.degree == kNegativeInfinity || top > b.degree))
            b = {top, static_cast<std::size_t>(k)};
        }
      },
      [](Best& into, Best&& from) {
        if (from.degree != kNegativeInfinity && (into.degree == kNegativeInfinity || from.degree > into.degree))
          into = from;
      });
  rep.witness = faces[best.index];
  rep.witness_degree = best.degree;
  rep.value = best.degree + 1;
  return rep;
}

inline RegularityReport regularity(const SimplicialComplex& c, const Coefficients& field, RegMethod method,
                                   const ScanOptions& opt = {}) {
  switch (method) {
    case RegMethod::induced: return regularity_induced(c, field, opt);
    case RegMethod::links: return regularity_links(c, field, opt);
    case RegMethod::betti: {
      detail::require_field(field, "regularity");
      RegularityReport rep;
      rep.method = RegMethod::betti;
      rep.field = field;
      if (c.is_void()) {
        rep.void_complex = true;
        return rep;
      }
      BettiTable t = betti_table(c, field, opt);
      rep.value = t.regularity();
      rep.witness_degree = rep.value - 1;
      return rep;
    }
  }
  return {};
}

/// Green–Lazarsfeld index from largeness: 0 unless flag, else
/// (shortest induced cycle) - 3, infinite without induced cycles.
inline int gl_index_combinatorial(const SimplicialComplex& c) {
  const LargenessReport l = largeness(c);
  if (!l.flag) return 0;
  if (*l.max_k == kInfinity) return kInfinity;
  return *l.max_k - 3;
}

/// Largest p with β_{i,j} = 0 for 1 <= i <= p and j ≠ i+1.
inline int gl_index_from_betti(const BettiTable& t) {
  int first_bad = kInfinity;
  for (const auto& [ij, b] : t.entries)
    if (ij.first >= 1 && b != 0 && ij.second != ij.first + 1) first_bad = std::min(first_bad, ij.first);
  return first_bad == kInfinity ? kInfinity : first_bad - 1;
}

inline int gl_index_algebraic(const SimplicialComplex& c, const Coefficients& field, const ScanOptions& opt = {}) {
  return gl_index_from_betti(betti_table(c, field, opt));
}

/// Reisner: H̃_i(lk σ; k) = 0 for i < dim lk σ, for every face σ (including
/// ∅). Faces with cone links pass trivially and are skipped.
inline bool is_cohen_macaulay(const SimplicialComplex& c, const Coefficients& field) {
  detail::require_field(field, "Cohen-Macaulay test");
  if (c.is_void()) return true;
  for (const auto& sigma : detail::closed_faces(c)) {
    const SimplicialComplex lk = link(c, sigma);
    const HomologyProfile h = reduced_homology(lk, field);
    for (int i = -1; i < lk.dimension(); ++i)
      if (h.rank(i) != 0) return false;
  }
  return true;
}

struct VcdReport {
  int value = 0;
  std::vector<Vertex> witness_face;  // σ, possibly empty
  int witness_degree = kNegativeInfinity;
  std::set<std::uint64_t> torsion_primes;
  std::map<std::uint64_t, int> reg_by_char;  // 0 stands for ℚ
};

namespace detail {

/// Per-characteristic regularity from one integral scan. A prime first seen
/// in a later chunk behaves like ℚ on every earlier subset.
struct CharScan {
  int top_q = kNegativeInfinity;
  std::map<std::uint64_t, int> top_p;

  static int top_over_prime(const HomologyProfile& h, std::uint64_t p) {
    return h.over(Coefficients::prime(p)).top_cohomology_degree();
  }
  void visit(const HomologyProfile& h) {
    const int q = h.over(Coefficients::rationals()).top_cohomology_degree();
    for (auto p : h.torsion_primes())
      if (!top_p.count(p)) top_p[p] = top_q;
    for (auto& [p, top] : top_p) top = std::max(top, top_over_prime(h, p));
    top_q = std::max(top_q, q);
  }
  void merge(CharScan&& other) {
    for (auto& [p, top] : top_p)
      top = std::max(top, other.top_p.count(p) ? other.top_p[p] : other.top_q);
    for (auto& [p, top] : other.top_p)
      if (!top_p.count(p)) top_p[p] = std::max(top, top_q);
    top_q = std::max(top_q, other.top_q);
  }
};

}  // namespace detail

/// vcd of the right-angled Coxeter group with nerve Δ:
/// max{i : H̃^{i-1}(Δ|_{V∖σ}; ℤ) ≠ 0, σ ∈ Δ ∪ {∅}}, together with reg over
/// ℚ and every torsion prime met in the integral subset scan.
inline VcdReport vcd_nerve(const SimplicialComplex& c, const ScanOptions& opt = {}) {
  if (c.is_void()) throw DomainError("vcd needs a nonvoid nerve");
  VcdReport rep;
  const auto faces = c.faces();
  std::vector<Vertex> all(c.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  struct Best {
    int degree = kNegativeInfinity;
    std::size_t index = 0;
  };
  Best best = parallel_chunks(
      faces.size(), opt.threads, Best{},
      [&](Best& b, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; ++k) {
          Face rest = face_difference(all, faces[k]);
          const int top = reduced_homology(induced(c, rest)).top_cohomology_degree();
          if (top != kNegativeInfinity && (b.degree == kNegativeInfinity || top > b.degree))
            b = {top, static_cast<std::size_t>(k)};
        }
      },
      [](Best& into, Best&& from) {
        if (from.degree != kNegativeInfinity && (into.degree == kNegativeInfinity || from.degree > into.degree))
          into = from;
      });
  rep.witness_face = faces[best.index];
  rep.witness_degree = best.degree;
  rep.value = best.degree + 1;

  detail::CharScan scan = detail::scan_induced(
      c, opt, detail::CharScan{}, [](detail::CharScan& s, std::uint64_t, const HomologyProfile& h) { s.visit(h); },
      [](detail::CharScan& into, detail::CharScan&& from) { into.merge(std::move(from)); });
  rep.reg_by_char[0] = scan.top_q + 1;
  for (const auto& [p, top] : scan.top_p) {
    rep.torsion_primes.insert(p);
    rep.reg_by_char[p] = top + 1;
  }
  return rep;
}

struct ClaimReport {
  Coefficients coeff = Coefficients::integers();
  int lhs = kNegativeInfinity;  // max over σ ∈ Δ ∪ {∅} of top degree of H̃^•(Δ|_{V∖σ})
  int rhs = kNegativeInfinity;  // max over V' ⊆ V of top degree of H̃^•(Δ|_{V'})
  std::vector<Vertex> lhs_witness;
  std::vector<Vertex> rhs_witness;

  bool holds() const { return lhs == rhs; }
};

inline ClaimReport cdreg_claim_check(const SimplicialComplex& c, const Coefficients& coeff,
                                     const ScanOptions& opt = {}) {
  ClaimReport rep;
  rep.coeff = coeff;
  if (c.is_void()) return rep;
  struct Best {
    int degree = kNegativeInfinity;
    std::uint64_t mask = 0;
    bool set = false;
  };
  auto better = [](const Best& a, int degree) { return !a.set || degree > a.degree; };
  std::set<std::uint64_t> complements;
  const std::uint64_t full = (c.vertex_count() >= 64) ? ~std::uint64_t{0}
                                                       : ((std::uint64_t{1} << c.vertex_count()) - 1);
  for (const auto& f : c.faces()) {
    std::uint64_t m = 0;
    for (Vertex v : f) m |= std::uint64_t{1} << v;
    complements.insert(full & ~m);
  }
  struct Pair {
    Best lhs, rhs;
  };
  Pair result = detail::scan_induced(
      c, opt, Pair{},
      [&](Pair& acc, std::uint64_t mask, const HomologyProfile& h) {
        const int top = coeff.kind() == Coefficients::Kind::integers ? h.top_cohomology_degree()
                                                                     : h.over(coeff).top_cohomology_degree();
        if (better(acc.rhs, top)) acc.rhs = {top, mask, true};
        if (complements.count(mask) && better(acc.lhs, top)) acc.lhs = {top, mask, true};
      },
      [&](Pair& into, Pair&& from) {
        if (from.rhs.set && better(into.rhs, from.rhs.degree)) into.rhs = from.rhs;
        if (from.lhs.set && better(into.lhs, from.lhs.degree)) into.lhs = from.lhs;
      });
  rep.rhs = result.rhs.degree;
  rep.rhs_witness = detail::mask_vertices(result.rhs.mask);
  rep.lhs = result.lhs.degree;
  rep.lhs_witness = detail::mask_vertices(full & ~result.lhs.mask);  // σ itself
  return rep;
}

/// Outcome of checking the top-homology face-count bounds on one complex.
struct TopHomologyCheck {
  int p = 0;            // Green–Lazarsfeld index (kInfinity possible)
  int d = -2;           // dimension
  bool top_homology = false;
  bool hypotheses_met = false;
  bool facet_bound_holds = false;
  bool vertex_bound_holds = false;
  std::uint64_t f_d = 0;
  std::uint64_t f_0 = 0;
  std::string reason;   // why the hypotheses fail, if they do

  bool passes() const { return !hypotheses_met || (facet_bound_holds && vertex_bound_holds); }
};

/// Requires a finite index p >= 2, dimension d >= 1 and H̃_d ≠ 0.
inline TopHomologyCheck verify_top_homology_bound(const SimplicialComplex& c, const Coefficients& field) {
  TopHomologyCheck out;
  out.p = gl_index_combinatorial(c);
  out.d = c.dimension();
  if (out.d >= 0) out.top_homology = reduced_homology(c, field).rank(out.d) != 0;
  const auto f = f_vector(c);
  if (out.d >= 0) {
    out.f_d = f[static_cast<std::size_t>(out.d + 1)];
    out.f_0 = f.size() > 1 ? f[1] : 0;
  }
  if (out.p == kInfinity || out.p < 2)
    out.reason = "index p = " + format_extended(out.p) + " (need finite p >= 2)";
  else if (out.d < 1)
    out.reason = "dimension " + std::to_string(out.d) + " < 1";
  else if (!out.top_homology)
    out.reason = "trivial top homology";
  if (!out.reason.empty()) return out;
  out.hypotheses_met = true;
  out.facet_bound_holds = bounds::facet_bound(out.d, out.p).exceeded_by(BigRational(out.f_d));
  out.vertex_bound_holds = bounds::vertex_bound(out.d, out.p).exceeded_by(BigRational(out.f_0));
  return out;
}

}  // namespace coxreg

#endif  // COXREG_SR_INVARIANTS_HPP
