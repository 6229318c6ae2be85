#ifndef COXREG_RACG_HPP
#define COXREG_RACG_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxreg/arith.hpp"
#include "coxreg/complex.hpp"
#include "coxreg/error.hpp"
#include "coxreg/linalg.hpp"
#include "coxreg/parallel.hpp"

namespace coxreg {

/// Right-angled Coxeter system with flag nerve Δ and its canonical integer
/// representation: ρ(s_i) is the identity except row i, which has -1 on the
/// diagonal, 2 at non-neighbours of i and 0 at neighbours.
struct RacgRepresentation {
  SimplicialComplex nerve;
  std::vector<std::vector<int>> coxeter;  // 1, 2, or kInfinity
  Matrix<std::int64_t> cosine;            // 1 on the diagonal, 0 on edges, -1 otherwise
  std::vector<Matrix<std::int64_t>> generators;

  std::size_t rank() const noexcept { return generators.size(); }
};

inline RacgRepresentation build_system(const SimplicialComplex& nerve) {
  if (nerve.vertex_count() == 0) throw DomainError("the nerve needs at least one vertex");
  const LargenessReport l = largeness(nerve);
  if (!l.flag)
    throw DomainError("right-angled Coxeter systems need a flag nerve; this complex is not flag");
  const std::size_t n = nerve.vertex_count();
  RacgRepresentation rep;
  rep.nerve = nerve;
  const auto adj = one_skeleton(nerve);
  rep.coxeter.assign(n, std::vector<int>(n, kInfinity));
  rep.cosine = Matrix<std::int64_t>(n, n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    rep.coxeter[i][i] = 1;
    rep.cosine(i, i) = 1;
    for (Vertex j : adj[i]) {
      rep.coxeter[i][j] = 2;
      rep.cosine(i, j) = 0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<std::int64_t> g = Matrix<std::int64_t>::identity(n);
    for (std::size_t j = 0; j < n; ++j) g(i, j) = (i == j ? 1 : 0) - 2 * rep.cosine(i, j);
    rep.generators.push_back(std::move(g));
  }
  return rep;
}

struct SphericalElement {
  Face face;
  Matrix<std::int64_t> matrix;
};

/// ∏_{i ∈ F} ρ(s_i) for every nonempty face F of the nerve, graded order.
/// Entries are checked to lie in {0, ±1, 2} with at most |F| twos per column.
inline std::vector<SphericalElement> spherical_elements(const RacgRepresentation& rep) {
  std::vector<SphericalElement> out;
  const std::size_t n = rep.rank();
  for (const auto& face : rep.nerve.faces()) {
    if (face.empty()) continue;
    Matrix<std::int64_t> m = Matrix<std::int64_t>::identity(n);
    for (Vertex v : face) m = multiply(m, rep.generators[v]);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t twos = 0;
      for (std::size_t r = 0; r < n; ++r) {
        const auto x = m(r, c);
        if (x != 0 && x != 1 && x != -1 && x != 2)
          throw PropertyViolation("spherical element has entry " + std::to_string(x));
        twos += (x == 2);
      }
      if (twos > face.size()) throw PropertyViolation("spherical element column has too many twos");
    }
    out.push_back({face, std::move(m)});
  }
  return out;
}

/// Product of generator matrices left to right, exactly.
inline IntMatrix evaluate_word(const RacgRepresentation& rep, const std::vector<std::size_t>& word) {
  IntMatrix m = IntMatrix::identity(rep.rank());
  for (std::size_t s : word) {
    if (s >= rep.rank()) throw DomainError("generator index " + std::to_string(s) + " out of range");
    m = multiply(m, to_int_matrix(rep.generators[s]));
  }
  return m;
}

inline IntMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt r = m(i, j) % modulus;
      if (r < 0) r += modulus;
      out(i, j) = r;
    }
  return out;
}

inline bool is_identity_mod(const IntMatrix& m, std::uint64_t modulus) {
  return reduce_mod(m, modulus) == reduce_mod(IntMatrix::identity(m.rows()), modulus);
}

enum class GeneratingSet { standard, spherical };

inline const char* to_string(GeneratingSet g) { return g == GeneratingSet::standard ? "standard" : "spherical"; }

struct BallOptions {
  std::uint64_t budget = 2'000'000;  // maximum number of stored elements
  unsigned threads = 1;
};

/// Per-level statistics of a ball in the Cayley graph. Level l holds the
/// distinct group elements at geodesic distance exactly l.
struct BallReport {
  GeneratingSet generating_set = GeneratingSet::standard;
  std::size_t max_length = 0;
  std::vector<std::uint64_t> counts;
  std::vector<BigInt> max_entries;
  bool complete = true;  // false when the budget stopped the search

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
};

namespace detail {

inline std::uint64_t hash_entry(std::int64_t v) { return static_cast<std::uint64_t>(v); }
inline std::uint64_t hash_entry(const BigInt& v) {
  BigInt low = v & BigInt(UINT64_MAX);
  return static_cast<std::uint64_t>(low) ^ (v < 0 ? 0x9e3779b97f4a7c15ULL : 0);
}

template <class T>
struct EntriesHash {
  std::size_t operator()(const std::vector<T>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& x : v) {
      h ^= hash_entry(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct BallNode {
  std::uint32_t parent = 0;
  std::uint32_t generator = 0;
  std::uint32_t level = 0;
};

/// Breadth-first ball with exact deduplication. Elements are stored as
/// row-major entry vectors; `on_new(index)` may return true to stop early.
template <class T>
struct Ball {
  std::size_t n = 0;
  std::vector<std::vector<T>> elements;
  std::vector<BallNode> nodes;
  std::unordered_map<std::vector<T>, std::uint32_t, EntriesHash<T>> index;

  std::vector<std::uint32_t> word_to(std::uint32_t e) const {
    std::vector<std::uint32_t> w;
    while (e != 0) {
      w.push_back(nodes[e].generator);
      e = nodes[e].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
};

template <class T>
std::vector<T> multiply_flat(const std::vector<T>& a, const Matrix<T>& b, std::size_t n) {
  std::vector<T> c(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const T& aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) c[i * n + j] = arith::add(c[i * n + j], arith::mul(aik, b(k, j)));
    }
  return c;
}

template <class T, class OnNew>
BallReport grow_ball(const std::vector<Matrix<T>>& gens, std::size_t n, std::size_t max_length,
                     const BallOptions& opt, Ball<T>& ball, OnNew on_new) {
  BallReport report;
  report.max_length = max_length;
  ball.n = n;
  std::vector<T> id(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = T(1);
  ball.elements.push_back(id);
  ball.nodes.push_back({});
  ball.index.emplace(id, 0);
  report.counts.push_back(1);
  report.max_entries.push_back(BigInt(1));
  if (on_new(std::uint32_t{0})) return report;

  std::vector<std::uint32_t> frontier{0};
  struct Candidate {
    std::vector<T> entries;
    std::uint32_t parent;
    std::uint32_t generator;
  };
  for (std::size_t level = 1; level <= max_length; ++level) {
    auto candidates = parallel_chunks(
        frontier.size(), opt.threads, std::vector<Candidate>{},
        [&](std::vector<Candidate>& out, std::uint64_t begin, std::uint64_t end) {
          for (std::uint64_t f = begin; f < end; ++f)
            for (std::size_t s = 0; s < gens.size(); ++s)
              out.push_back({multiply_flat(ball.elements[frontier[f]], gens[s], n), frontier[f],
                             static_cast<std::uint32_t>(s)});
        },
        [](std::vector<Candidate>& into, std::vector<Candidate>&& from) {
          into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
        });
    std::vector<std::uint32_t> next;
    BigInt level_max = 0;
    for (auto& c : candidates) {
      if (ball.index.count(c.entries)) continue;
      if (ball.elements.size() >= opt.budget) {
        report.complete = false;
        break;
      }
      const auto idx = static_cast<std::uint32_t>(ball.elements.size());
      for (const auto& x : c.entries) {
        BigInt a = arith::to_big(x);
        if (a < 0) a = -a;
        if (a > level_max) level_max = a;
      }
      ball.index.emplace(c.entries, idx);
      ball.elements.push_back(std::move(c.entries));
      ball.nodes.push_back({c.parent, c.generator, static_cast<std::uint32_t>(level)});
      next.push_back(idx);
      if (on_new(idx)) {
        report.counts.push_back(next.size());
        report.max_entries.push_back(level_max);
        report.complete = false;
        return report;
      }
    }
    report.counts.push_back(next.size());
    report.max_entries.push_back(level_max);
    if (!report.complete) return report;
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return report;
}

template <class T>
std::vector<Matrix<T>> generating_matrices(const RacgRepresentation& rep, GeneratingSet set) {
  std::vector<Matrix<T>> out;
  auto convert = [](const Matrix<std::int64_t>& m) {
    Matrix<T> c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = T(m(i, j));
    return c;
  };
  if (set == GeneratingSet::standard) {
    for (const auto& g : rep.generators) out.push_back(convert(g));
  } else {
    for (const auto& s : spherical_elements(rep)) out.push_back(convert(s.matrix));
  }
  return out;
}

}  // namespace detail

/// Ball of radius L in the Cayley graph of the chosen generating set.
/// 64-bit entries are used until an overflow forces a restart with BigInt.
inline BallReport word_ball(const RacgRepresentation& rep, std::size_t max_length,
                            GeneratingSet set = GeneratingSet::standard, const BallOptions& opt = {}) {
  try {
    detail::Ball<std::int64_t> ball;
    auto r = detail::grow_ball(detail::generating_matrices<std::int64_t>(rep, set), rep.rank(), max_length, opt,
                               ball, [](std::uint32_t) { return false; });
    r.generating_set = set;
    return r;
  } catch (const ArithmeticOverflow&) {
    detail::Ball<BigInt> ball;
    auto r = detail::grow_ball(detail::generating_matrices<BigInt>(rep, set), rep.rank(), max_length, opt, ball,
                               [](std::uint32_t) { return false; });
    r.generating_set = set;
    return r;
  }
}

/// (2d+3)^(k-1): entries of products of at most k-1 spherical elements stay
/// below this bound.
inline BigInt sufficient_modulus(int d, int k) {
  if (d < 0) throw DomainError("sufficient modulus needs d >= 0");
  if (k < 4) throw DomainError("sufficient modulus needs k >= 4");
  return arith::pow(BigInt(2 * d + 3), static_cast<unsigned long long>(k - 1));
}

enum class DisplacementStatus { certified, counterexample, undecided, not_run };

inline const char* to_string(DisplacementStatus s) {
  switch (s) {
    case DisplacementStatus::certified: return "CERTIFIED";
    case DisplacementStatus::counterexample: return "COUNTEREXAMPLE";
    case DisplacementStatus::undecided: return "UNDECIDED";
    case DisplacementStatus::not_run: return "NOT_RUN";
  }
  return "?";
}

/// Which ball the kernel search covers.
///  - displacement: products of at most k-1 spherical elements, i.e. exactly
///    the elements of displacement < k that must avoid the kernel;
///  - word_length: every standard-generator word of length <= (dim Δ + 1)·k,
///    a coarser cover of the displacement-<=k ball. A hit here need not
///    violate the displacement requirement; the witness displacement says.
enum class SearchMode { displacement, word_length };

inline const char* to_string(SearchMode m) { return m == SearchMode::displacement ? "displacement" : "word-length"; }

inline SearchMode parse_search_mode(const std::string& s) {
  if (s == "displacement") return SearchMode::displacement;
  if (s == "word-length" || s == "length") return SearchMode::word_length;
  throw InputError("unknown search mode '" + s + "'; expected displacement or word-length");
}

/// Displacement of the element represented by a reduced word: the height of
/// its heap, i.e. the fewest spherical factors in any factorization.
inline std::size_t displacement_of_reduced_word(const RacgRepresentation& rep, const std::vector<std::size_t>& word) {
  std::vector<std::size_t> height(word.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (rep.coxeter[word[j]][word[i]] != 2) height[i] = std::max(height[i], height[j] + 1);
    best = std::max(best, height[i]);
  }
  return best;
}

struct KernelSearchResult {
  DisplacementStatus status = DisplacementStatus::undecided;
  SearchMode mode = SearchMode::displacement;
  std::uint64_t modulus = 0;
  int k = 0;
  std::size_t radius = 0;              // spherical factors or word length searched
  std::uint64_t elements_checked = 0;
  BallReport ball;
  /// Counterexample as a word in the standard generators, its spherical
  /// factorization (displacement mode only) and its exact displacement.
  std::vector<std::size_t> witness_word;
  std::vector<Face> witness_factors;
  std::size_t witness_displacement = 0;
  /// True when the witness has displacement < k, i.e. it really violates the
  /// requirement on the kernel.
  bool witness_below_k = false;
};

/// Searches a ball for a nontrivial element that reduces to the identity mod
/// m. Finding none in a complete ball is a certificate that no element of
/// displacement < k lies in the kernel; a truncated search is UNDECIDED.
inline KernelSearchResult kernel_displacement_search(const RacgRepresentation& rep, std::uint64_t m, int k,
                                                     SearchMode mode = SearchMode::displacement,
                                                     const BallOptions& opt = {}) {
  if (m <= 2) throw DomainError("kernel search needs m > 2 (reduction mod 2 has torsion in the kernel)");
  if (k < 4) throw DomainError("kernel search needs k >= 4");
  const auto spherical = spherical_elements(rep);
  const std::size_t n = rep.rank();
  const int d = std::max(rep.nerve.dimension(), 0);
  const std::size_t radius = mode == SearchMode::displacement ? static_cast<std::size_t>(k - 1)
                                                              : static_cast<std::size_t>((d + 1) * k);
  const GeneratingSet set = mode == SearchMode::displacement ? GeneratingSet::spherical : GeneratingSet::standard;
  KernelSearchResult result;

  auto run = [&](auto tag) {
    using T = decltype(tag);
    result = KernelSearchResult{};
    result.mode = mode;
    result.modulus = m;
    result.k = k;
    result.radius = radius;
    detail::Ball<T> ball;
    std::int64_t found = -1;
    const auto mm = static_cast<std::int64_t>(m);
    auto is_identity = [&](const std::vector<T>& e) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          T r = e[i * n + j] % T(mm);
          if (r < 0) r += T(mm);
          if (r != T(i == j ? 1 : 0)) return false;
        }
      return true;
    };
    result.ball = detail::grow_ball(detail::generating_matrices<T>(rep, set), n, radius, opt, ball,
                                    [&](std::uint32_t idx) {
                                      if (idx != 0 && is_identity(ball.elements[idx])) {
                                        found = idx;
                                        return true;
                                      }
                                      return false;
                                    });
    result.ball.generating_set = set;
    result.elements_checked = ball.elements.size();
    if (found < 0) {
      result.status = result.ball.complete ? DisplacementStatus::certified : DisplacementStatus::undecided;
      return;
    }
    result.status = DisplacementStatus::counterexample;
    const auto idx = static_cast<std::uint32_t>(found);
    for (auto s : ball.word_to(idx)) {
      if (mode == SearchMode::displacement) {
        result.witness_factors.push_back(spherical[s].face);
        for (Vertex v : spherical[s].face) result.witness_word.push_back(v);
      } else {
        result.witness_word.push_back(s);
      }
    }
    result.witness_displacement = mode == SearchMode::displacement
                                      ? ball.nodes[idx].level
                                      : displacement_of_reduced_word(rep, result.witness_word);
    result.witness_below_k = result.witness_displacement < static_cast<std::size_t>(k);
  };
  try {
    run(std::int64_t{});
  } catch (const ArithmeticOverflow&) {
    run(BigInt{});
  }
  return result;
}

}  // namespace coxreg

#endif  // COXREG_RACG_HPP
