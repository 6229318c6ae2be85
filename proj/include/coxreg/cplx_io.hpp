#ifndef COXREG_CPLX_IO_HPP
#define COXREG_CPLX_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxreg/complex.hpp"
#include "coxreg/error.hpp"

namespace coxreg {

// .cplx format: '#' starts a comment; "isolated: a b c" lists isolated
// vertices; every other nonblank line is one facet as whitespace-separated
// tokens. A line consisting of "{}" denotes the empty face, so the complex
// {∅} can be written down; an input without facet lines is the void complex.

inline SimplicialComplex read_cplx(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::vector<std::string> isolated;
  bool empty_face = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.front().rfind("isolated:", 0) == 0) {
      std::string rest = words.front().substr(9);
      if (!rest.empty()) isolated.push_back(rest);
      isolated.insert(isolated.end(), words.begin() + 1, words.end());
      continue;
    }
    if (words.size() == 1 && words.front() == "{}") {
      empty_face = true;
      continue;
    }
    for (const auto& w : words)
      if (w.find_first_of("{}:") != std::string::npos)
        throw InputError("line " + std::to_string(line_no) + ": invalid vertex token '" + w + "'");
    facets.push_back(std::move(words));
  }
  try {
    SimplicialComplex c = from_facets(facets, isolated);
    if (empty_face && c.is_void()) return SimplicialComplex::empty_face_only();
    return c;
  } catch (const InputError& e) {
    throw InputError(std::string("malformed .cplx: ") + e.what());
  }
}

inline SimplicialComplex parse_cplx(const std::string& text) {
  std::istringstream in(text);
  return read_cplx(in);
}

inline SimplicialComplex read_cplx_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_cplx(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Writes facets using vertex labels. Ghost vertices have no .cplx
/// representation and are listed in a comment only.
inline void write_cplx(std::ostream& out, const SimplicialComplex& c) {
  out << "# " << c.vertex_count() << " vertices, " << c.facets().size() << " facets\n";
  const auto ghosts = c.ghost_vertices();
  if (!ghosts.empty()) {
    out << "# ghost vertices (in no face):";
    for (Vertex v : ghosts) out << ' ' << c.label(v);
    out << '\n';
  }
  for (const auto& f : c.facets()) {
    if (f.empty()) {
      out << "{}\n";
      continue;
    }
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << c.label(f[i]);
    out << '\n';
  }
}

inline std::string to_cplx_string(const SimplicialComplex& c) {
  std::ostringstream out;
  write_cplx(out, c);
  return out.str();
}

}  // namespace coxreg

#endif  // COXREG_CPLX_IO_HPP
