#ifndef COXREG_TOOLS_CLI_HPP
#define COXREG_TOOLS_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxreg/coxreg.hpp"

namespace coxreg::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInput = 2,
  kResource = 3,
  kProperty = 4,
  kRejected = 5,
};

inline constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  internal error\n"
    "  2  input error (bad flags, malformed .cplx, unmet preconditions)\n"
    "  3  resource limit (subset cap, element budget)\n"
    "  4  property violation (claim lhs != rhs, failed bound or self-check)\n"
    "  5  construction rejected (see the certificate)\n";

namespace detail {

inline Json extended(int v) {
  if (v == kInfinity) return "inf";
  if (v == kNegativeInfinity) return "-inf";
  return v;
}

inline Json big(const BigInt& v) {
  if (auto small = arith::to_int64(v)) return *small;
  return v.str();
}

inline Json labels_of(const SimplicialComplex& c, const std::vector<Vertex>& face) {
  Json out = Json::array();
  for (Vertex v : face) out.push_back(c.label(v));
  return out;
}

inline Json facets_of(const SimplicialComplex& c) {
  Json out = Json::array();
  for (const auto& f : c.facets()) out.push_back(labels_of(c, f));
  return out;
}

inline Json complex_summary(const SimplicialComplex& c) {
  Json out;
  out["vertices"] = c.vertex_count();
  std::vector<Vertex> ids(c.vertex_count());
  for (Vertex v = 0; v < ids.size(); ++v) ids[v] = v;
  out["labels"] = labels_of(c, ids);
  out["dimension"] = c.dimension();
  out["facet_count"] = c.facets().size();
  Json fv = Json::array();
  if (!c.is_void())
    for (auto x : f_vector(c)) fv.push_back(x);
  out["f_vector"] = fv;
  out["facets"] = facets_of(c);
  return out;
}

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline bool all_scalars(const Json& a) {
  for (const auto& x : a)
    if (x.is_structured()) return false;
  return true;
}

inline std::string face_text(const Json& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + scalar_text(a[i]);
  return s + "}";
}

// Text form of a report: one "key: value" line per leaf, in report order.
inline void render_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      render_text(v, out, key);
    } else if (v.is_array() && all_scalars(v)) {
      out << key << ":";
      for (const auto& x : v) out << " " << scalar_text(x);
      out << "\n";
    } else if (v.is_array()) {
      bool faces = true;
      for (const auto& x : v) faces = faces && x.is_array() && all_scalars(x);
      if (faces && key.find("grid") == std::string::npos) {
        out << key << ":";
        for (const auto& x : v) out << " " << face_text(x);
        out << "\n";
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
          const std::string sub = key + "[" + std::to_string(i) + "]";
          if (v[i].is_object()) {
            render_text(v[i], out, sub);
          } else {
            out << sub << ":";
            for (const auto& x : v[i]) out << " " << scalar_text(x);
            out << "\n";
          }
        }
      }
    } else {
      out << key << ": " << scalar_text(v) << "\n";
    }
  }
}

inline std::vector<Vertex> parse_word(const SimplicialComplex& c, const std::string& text) {
  std::vector<Vertex> word;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    std::size_t start = 0;
    while (start <= token.size()) {
      const std::size_t comma = token.find(',', start);
      const std::string piece = token.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) {
        bool found = false;
        for (Vertex v = 0; v < c.vertex_count(); ++v)
          if (c.label(v) == piece) {
            word.push_back(v);
            found = true;
            break;
          }
        if (!found) throw InputError("word letter '" + piece + "' is not a vertex label of the nerve");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return word;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
  if (!f) throw InputError("failed writing '" + path + "'");
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stanley-Reisner regularity and right-angled Coxeter group toolkit", "coxreg"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  std::string field_name = "q";
  std::string method_name = "induced";
  std::string input_path;
  std::string output_path;
  bool as_json = false;
  unsigned threads = 1;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    sub->add_flag("--json", as_json, "emit a JSON report");
    sub->add_option("--threads", threads, "worker threads (reports do not depend on this)")
        ->check(CLI::Range(1U, 256U));
    if (needs_input) sub->add_option("complex", input_path, ".cplx input file")->required();
  };
  auto add_field = [&](CLI::App* sub, const char* help) { sub->add_option("--field", field_name, help); };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named or random complex");
  std::string gen_kind;
  std::size_t gen_n = 5;
  int gen_d = 2;
  double gen_density = 0.5;
  gen->add_option("kind", gen_kind, "cycle | simplex | boundary | cross | rp2 | random")
      ->required()
      ->check(CLI::IsMember({"cycle", "simplex", "boundary", "cross", "rp2", "random"}));
  gen->add_option("--n", gen_n, "vertices (cycle, random)");
  gen->add_option("--d", gen_d, "dimension (simplex, boundary, cross)");
  gen->add_option("--density", gen_density, "edge density (random)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "seed (random); fixed default 1");
  gen->add_option("-o,--output", output_path, "write the .cplx here instead of stdout");
  add_common(gen, false);

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of the Stanley-Reisner ring");
  add_field(reg, "q or f<p>");
  reg->add_option("--method", method_name, "induced | links | betti | all");
  add_common(reg, true);

  auto* betti = app.add_subcommand("betti", "graded Betti table");
  add_field(betti, "q or f<p>");
  add_common(betti, true);

  auto* index = app.add_subcommand("index", "Green-Lazarsfeld index");
  add_field(index, "q or f<p> (for the algebraic value)");
  add_common(index, true);

  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay test (Reisner)");
  add_field(cm, "q or f<p>");
  add_common(cm, true);

  auto* vcd = app.add_subcommand("vcd", "virtual cohomological dimension of the right-angled Coxeter group");
  add_common(vcd, true);

  auto* claim = app.add_subcommand("claim", "compare the link-complement and induced top cohomology degrees");
  add_field(claim, "z, q or f<p>");
  add_common(claim, true);

  auto* dual = app.add_subcommand("dual", "Alexander dual");
  dual->add_option("-o,--output", output_path, "write the .cplx here instead of stdout");
  add_common(dual, true);

  auto* facecx = app.add_subcommand("facecomplex", "face complex F(Δ)");
  facecx->add_option("-o,--output", output_path, "write the .cplx here instead of stdout");
  add_common(facecx, true);

  auto* large = app.add_subcommand("largeness", "flag test and largest k for which the complex is k-large");
  add_common(large, true);

  auto* bnd = app.add_subcommand("bounds", "evaluate the regularity and vertex-count bounds");
  std::optional<int> b_n, b_p, b_d, b_r;
  bnd->add_option("--n", b_n, "vertex count (log bounds)");
  bnd->add_option("--p", b_p, "Green-Lazarsfeld index");
  bnd->add_option("--d", b_d, "dimension (top-homology bounds)");
  bnd->add_option("--r", b_r, "regularity (vertex-count tower)");
  bnd->add_option("complex", input_path, "optional .cplx to check against the top-homology bounds");
  add_field(bnd, "q or f<p> (top homology of the complex)");
  bnd->add_flag("--json", as_json, "emit a JSON report");

  auto* table = app.add_subcommand("coxeter-table", "per-length entry sizes in the canonical representation");
  std::size_t max_len = 10;
  std::string gens_name = "standard";
  std::uint64_t budget = 2'000'000;
  table->add_option("--max-len", max_len, "ball radius");
  table->add_option("--generators", gens_name, "standard | spherical")
      ->check(CLI::IsMember({"standard", "spherical"}));
  table->add_option("--budget", budget, "maximum number of stored elements");
  add_common(table, true);

  auto* search = app.add_subcommand("coxeter-search", "kernel search for reduction mod m, or evaluate a word");
  std::uint64_t modulus = 0;
  std::optional<int> search_k;
  std::string search_mode = "displacement";
  std::string word_text;
  search->add_option("--mod", modulus, "modulus m")->required();
  search->add_option("--k", search_k, "target largeness k (runs the kernel search)");
  search->add_option("--search", search_mode, "displacement | word-length");
  search->add_option("--word", word_text, "word in vertex labels, e.g. \"1 3 1 3\" (evaluated mod m)");
  search->add_option("--budget", budget, "maximum number of stored elements");
  add_common(search, true);

  auto* construct = app.add_subcommand("construct", "build S(Δ,k) with its certificate");
  int cons_k = 0;
  std::optional<std::uint64_t> cons_mod;
  std::uint64_t group_budget = 1'000'000;
  construct->add_option("--k", cons_k, "target largeness")->required();
  construct->add_option("--mod", cons_mod, "modulus m (default (2d+3)^(k-1))");
  construct->add_option("--search", search_mode, "displacement | word-length");
  construct->add_option("--budget", budget, "kernel search element budget");
  construct->add_option("--group-budget", group_budget, "image group element budget");
  construct->add_option("-o,--output", output_path, "write the .cplx here and the certificate to <path>.json");
  add_common(construct, true);

  std::vector<std::string> argv_store{"coxreg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json report;
  report["schema"] = 1;
  report["invocation"] = {{"subcommand", sub->get_name()}, {"argv", args}};
  Json& result = report["result"];
  std::string cplx_text;  // complex to print after a text report
  int status = kOk;

  auto emit = [&] {
    if (as_json) {
      out << report.dump(2) << "\n";
      return;
    }
    if (!cplx_text.empty()) {
      std::ostringstream summary;
      detail::render_text(result, summary);
      std::istringstream lines(summary.str());
      for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
      out << cplx_text;
      return;
    }
    detail::render_text(result, out);
  };

  try {
    const std::string name = sub->get_name();
    ScanOptions scan;
    scan.threads = threads;
    auto load = [&] {
      auto c = read_cplx_file(input_path);
      result["input"] = {{"path", input_path}, {"labels", detail::labels_of(c, c.vertices())}};
      return c;
    };
    auto place_complex = [&](const SimplicialComplex& c) {
      const std::string text = to_cplx_string(c);
      if (output_path.empty()) {
        cplx_text = text;
      } else {
        detail::write_text_file(output_path, text);
        result["written"] = output_path;
      }
    };

    if (name == "gen") {
      SimplicialComplex c;
      if (gen_kind == "cycle") c = cycle(gen_n);
      else if (gen_kind == "simplex") c = simplex(gen_d);
      else if (gen_kind == "boundary") c = boundary_simplex(gen_d);
      else if (gen_kind == "cross") c = cross_polytope(gen_d);
      else if (gen_kind == "rp2") c = rp2_six();
      else c = random_flag(gen_n, gen_density, seed);
      result["kind"] = gen_kind;
      if (gen_kind == "random") {
        result["seed"] = seed;
        result["density"] = gen_density;
      }
      result["complex"] = detail::complex_summary(c);
      place_complex(c);
    } else if (name == "reg") {
      const auto field = Coefficients::parse(field_name);
      const auto c = load();
      auto one = [&](RegMethod m) {
        const auto r = regularity(c, field, m, scan);
        Json j;
        j["method"] = to_string(m);
        j["value"] = r.value;
        j["void_complex"] = r.void_complex;
        if (m != RegMethod::betti) {
          j[m == RegMethod::links ? "witness_face" : "witness_subset"] = detail::labels_of(c, r.witness);
          j["witness_degree"] = detail::extended(r.witness_degree);
        }
        return j;
      };
      result["field"] = field.name();
      if (method_name == "all") {
        Json per = Json::array();
        bool agree = true;
        for (auto m : {RegMethod::induced, RegMethod::links, RegMethod::betti}) {
          per.push_back(one(m));
          agree = agree && per.back()["value"] == per.front()["value"];
        }
        result["value"] = per.front()["value"];
        result["agree"] = agree;
        result["methods"] = per;
        if (!agree) status = kProperty;
      } else {
        const Json single = one(parse_reg_method(method_name));
        for (const auto& [k, v] : single.items()) result[k] = v;
      }
    } else if (name == "betti") {
      const auto field = Coefficients::parse(field_name);
      const auto c = load();
      const auto t = betti_table(c, field, scan);
      result["field"] = field.name();
      result["regularity"] = t.regularity();
      result["projective_dimension"] = t.projective_dimension();
      Json entries = Json::array();
      for (const auto& [ij, b] : t.entries) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
      result["entries"] = entries;
      // rows j - i, columns i
      Json grid = Json::array();
      for (int row = 0; row <= t.regularity(); ++row) {
        Json line = Json::array();
        for (int i = 0; i <= t.projective_dimension(); ++i) line.push_back(t.at(i, i + row));
        grid.push_back(line);
      }
      result["grid"] = grid;
    } else if (name == "index") {
      const auto field = Coefficients::parse(field_name);
      const auto c = load();
      const int comb = gl_index_combinatorial(c);
      const int alg = gl_index_algebraic(c, field, scan);
      result["field"] = field.name();
      result["combinatorial"] = detail::extended(comb);
      result["algebraic"] = detail::extended(alg);
      result["agree"] = comb == alg;
      if (comb != alg) status = kProperty;
    } else if (name == "cm") {
      const auto field = Coefficients::parse(field_name);
      const auto c = load();
      result["field"] = field.name();
      result["cohen_macaulay"] = is_cohen_macaulay(c, field);
    } else if (name == "vcd") {
      const auto c = load();
      const auto v = vcd_nerve(c, scan);
      result["value"] = v.value;
      result["witness_face"] = detail::labels_of(c, v.witness_face);
      result["witness_degree"] = detail::extended(v.witness_degree);
      Json primes = Json::array();
      for (auto p : v.torsion_primes) primes.push_back(p);
      result["torsion_primes"] = primes;
      Json by_char = Json::array();
      int max_reg = kNegativeInfinity;
      for (auto [ch, r] : v.reg_by_char) {
        by_char.push_back({{"field", ch == 0 ? std::string("q") : "f" + std::to_string(ch)}, {"regularity", r}});
        max_reg = std::max(max_reg, r);
      }
      result["regularity_by_field"] = by_char;
      result["max_regularity"] = detail::extended(max_reg);
      result["identity_holds"] = max_reg == v.value;
      if (max_reg != v.value) status = kProperty;
    } else if (name == "claim") {
      const auto coeff = Coefficients::parse(field_name);
      const auto c = load();
      const auto r = cdreg_claim_check(c, coeff, scan);
      result["coefficients"] = coeff.name();
      result["lhs"] = detail::extended(r.lhs);
      result["lhs_face"] = detail::labels_of(c, r.lhs_witness);
      result["rhs"] = detail::extended(r.rhs);
      result["rhs_subset"] = detail::labels_of(c, r.rhs_witness);
      result["holds"] = r.holds();
      if (!r.holds()) status = kProperty;
    } else if (name == "dual" || name == "facecomplex") {
      const auto c = load();
      const auto d = name == "dual" ? alexander_dual(c) : face_complex(c);
      result["complex"] = detail::complex_summary(d);
      if (name == "dual") result["ghost_vertices"] = detail::labels_of(d, d.ghost_vertices());
      place_complex(d);
    } else if (name == "largeness") {
      const auto c = load();
      const auto l = largeness(c);
      result["flag"] = l.flag;
      if (l.min_nonface_size) result["min_nonface_size"] = *l.min_nonface_size;
      result["shortest_induced_cycle"] = detail::extended(l.shortest_induced_cycle);
      result["cycle_witness"] = detail::labels_of(c, l.cycle_witness);
      result["max_k"] = l.max_k ? detail::extended(*l.max_k) : Json(nullptr);
    } else if (name == "bounds") {
      if (!b_p) throw InputError("bounds needs --p");
      const int p = *b_p;
      result["p"] = p;
      if (b_n) {
        const auto dhs = bounds::dhs(*b_n, p);
        const auto dl = bounds::cm_double_log(*b_n, p);
        result["n"] = *b_n;
        result["log_bound"] = {{"max_regularity", dhs.floor}, {"approx", dhs.approx}};
        result["cm_double_log_bound"] = {{"max_regularity", dl.floor}, {"approx", dl.approx}};
      }
      if (b_d) {
        const auto fb = bounds::facet_bound(*b_d, p);
        const auto vb = bounds::vertex_bound(*b_d, p);
        result["d"] = *b_d;
        result["facet_bound"] = {{"expression", fb.expression()}, {"approx", fb.approx()}};
        result["vertex_bound"] = {{"expression", vb.expression()}, {"approx", vb.approx()}};
      }
      if (b_r) {
        const auto t = bounds::tower_N(p, *b_r);
        Json tj;
        tj["r"] = *b_r;
        tj["expression"] = t.expression;
        tj["value"] = t.value ? detail::big(*t.value) : Json(nullptr);
        tj["log2_value"] = std::isfinite(t.log2_value) ? Json(t.log2_value) : Json("inf");
        tj["tower_height"] = t.tower_height;
        result["tower"] = tj;
      }
      if (!input_path.empty()) {
        const auto c = load();
        const auto chk = verify_top_homology_bound(c, Coefficients::parse(field_name));
        Json cj;
        cj["index"] = detail::extended(chk.p);
        cj["dimension"] = chk.d;
        cj["top_homology"] = chk.top_homology;
        cj["hypotheses_met"] = chk.hypotheses_met;
        cj["facets"] = chk.f_d;
        cj["vertices"] = chk.f_0;
        if (chk.hypotheses_met) {
          cj["facet_bound_holds"] = chk.facet_bound_holds;
          cj["vertex_bound_holds"] = chk.vertex_bound_holds;
        } else {
          cj["reason"] = chk.reason;
        }
        result["top_homology_check"] = cj;
        if (!chk.passes()) status = kProperty;
      }
    } else if (name == "coxeter-table") {
      const auto c = load();
      const auto rep = build_system(c);
      const auto set = gens_name == "standard" ? GeneratingSet::standard : GeneratingSet::spherical;
      const auto ball = word_ball(rep, max_len, set, {budget, threads});
      result["generators"] = to_string(set);
      result["max_length"] = max_len;
      Json levels = Json::array();
      for (std::size_t l = 0; l < ball.counts.size(); ++l)
        levels.push_back({{"length", l}, {"elements", ball.counts[l]}, {"max_entry", detail::big(ball.max_entries[l])}});
      result["levels"] = levels;
      result["total"] = ball.total();
      result["complete"] = ball.complete;
      if (!ball.complete) status = kResource;
    } else if (name == "coxeter-search") {
      const auto c = load();
      const auto rep = build_system(c);
      if (modulus < 2) throw InputError("--mod must be at least 2");
      if (!search_k && word_text.empty()) throw InputError("coxeter-search needs --k or --word");
      result["modulus"] = modulus;
      if (!word_text.empty()) {
        const auto word = detail::parse_word(c, word_text);
        const std::vector<std::size_t> w(word.begin(), word.end());
        const IntMatrix m = evaluate_word(rep, w);
        BigInt max_entry = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) max_entry = std::max(max_entry, arith::abs(m(i, j)));
        Json wj;
        wj["letters"] = detail::labels_of(c, word);
        wj["length"] = word.size();
        wj["max_entry"] = detail::big(max_entry);
        wj["identity_mod_m"] = is_identity_mod(m, modulus);
        result["word"] = wj;
      }
      if (search_k) {
        const auto mode = parse_search_mode(search_mode);
        const auto r = kernel_displacement_search(rep, modulus, *search_k, mode, {budget, threads});
        Json sj;
        sj["mode"] = to_string(mode);
        sj["k"] = *search_k;
        sj["radius"] = r.radius;
        sj["status"] = to_string(r.status);
        sj["elements_checked"] = r.elements_checked;
        if (r.status == DisplacementStatus::counterexample) {
          sj["witness_word"] = detail::labels_of(c, std::vector<Vertex>(r.witness_word.begin(), r.witness_word.end()));
          if (!r.witness_factors.empty()) {
            Json factors = Json::array();
            for (const auto& f : r.witness_factors) factors.push_back(detail::labels_of(c, f));
            sj["witness_factors"] = factors;
          }
          sj["witness_displacement"] = r.witness_displacement;
          sj["witness_below_k"] = r.witness_below_k;
        }
        result["search"] = sj;
        if (r.status == DisplacementStatus::undecided) status = kResource;
      }
    } else if (name == "construct") {
      const auto c = load();
      ConstructionBudgets b;
      b.kernel_elements = budget;
      b.group_elements = group_budget;
      b.threads = threads;
      b.search = parse_search_mode(search_mode);
      auto certificate_json = [&](const ConstructionCertificate& cert) {
        Json j;
        j["k"] = cert.k;
        j["modulus"] = cert.modulus;
        j["modulus_defaulted"] = cert.modulus_defaulted;
        j["search_mode"] = to_string(cert.kernel.mode);
        j["displacement"] = to_string(cert.displacement_status);
        j["elements_checked"] = cert.kernel.elements_checked;
        j["torsion_free"] = cert.torsion_free;
        j["group_order"] = cert.group_order;
        j["coset_sizes_ok"] = cert.coset_sizes_ok;
        j["link_check"] = cert.link_check;
        j["vertices_checked"] = cert.vertices_checked;
        j["link_hash"] = cert.link_hash;
        j["output_flag"] = cert.output_flag;
        j["output_max_k"] = detail::extended(cert.output_max_k);
        if (cert.kernel.status == DisplacementStatus::counterexample) {
          j["witness_word"] =
              detail::labels_of(c, std::vector<Vertex>(cert.kernel.witness_word.begin(), cert.kernel.witness_word.end()));
          j["witness_displacement"] = cert.kernel.witness_displacement;
        }
        if (!cert.note.empty()) j["note"] = cert.note;
        return j;
      };
      try {
        const auto res = s_construction(c, cons_k, cons_mod, b);
        result["certificate"] = certificate_json(res.certificate);
        result["complex"] = detail::complex_summary(res.complex);
        place_complex(res.complex);
        if (!output_path.empty()) {
          Json side;
          side["schema"] = 1;
          side["invocation"] = report["invocation"];
          side["certificate"] = result["certificate"];
          detail::write_text_file(output_path + ".json", side.dump(2) + "\n");
          result["certificate_written"] = output_path + ".json";
        }
      } catch (const ConstructionRejected& e) {
        result["rejected"] = e.what();
        result["certificate"] = certificate_json(e.certificate);
        status = kRejected;
      }
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const PropertyViolation& e) {
    err << "property violation: " << e.what() << "\n";
    return kProperty;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  emit();
  return status;
}

}  // namespace coxreg::cli

#endif  // COXREG_TOOLS_CLI_HPP
