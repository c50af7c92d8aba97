#include "specbound/toric/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound::toric {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size())
      fail(line, "malformed number '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "malformed number '" + tok + "'");
  }
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size())
      fail(line, "malformed integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "malformed integer '" + tok + "'");
  }
}

} // namespace

ToricFile parse_toric(std::istream& in) {
  ToricFile out;
  int dim = 0;
  std::vector<Point2> vertices;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;
    const std::string& key = tok[0];
    if (key == "dim") {
      if (tok.size() != 2 || dim != 0)
        fail(lineno, "expected a single 'dim d' line");
      dim = parse_int(tok[1], lineno);
      if (dim != 1 && dim != 2)
        fail(lineno, "dimension must be 1 or 2");
    } else if (key == "v") {
      if (dim == 0)
        fail(lineno, "vertex before 'dim' line");
      if (static_cast<int>(tok.size()) != dim + 1)
        fail(lineno, "vertex needs " + std::to_string(dim) + " coordinate(s)");
      vertices.push_back({parse_double(tok[1], lineno), dim == 2 ? parse_double(tok[2], lineno) : 0.0});
    } else if (key == "guillemin") {
      if (tok.size() != 1 || out.has_potential)
        fail(lineno, "expected a single bare 'guillemin' line");
      out.has_potential = true;
    } else if (key == "perturb") {
      if (!out.has_potential)
        fail(lineno, "'perturb' must follow 'guillemin'");
      if (tok.size() != 3 && tok.size() != 4)
        fail(lineno, "expected 'perturb i [j] coeff'");
      const int i = parse_int(tok[1], lineno);
      const int j = tok.size() == 4 ? parse_int(tok[2], lineno) : 0;
      if (i < 0 || j < 0 || i > 64 || j > 64)
        fail(lineno, "perturbation exponents must lie in [0, 64]");
      out.perturbation.set(i, j, parse_double(tok.back(), lineno));
    } else {
      fail(lineno, "unknown keyword '" + key + "'");
    }
  }
  if (dim != 0) {
    if (vertices.empty())
      throw InputError("polytope file has no vertices");
    out.polytope = polytope_from_vertices(dim, vertices);
  } else if (!vertices.empty()) {
    throw InputError("vertices given without a 'dim' line");
  }
  if (!out.polytope && !out.has_potential)
    throw InputError("file contains neither a polytope nor a potential");
  return out;
}

ToricFile read_toric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return parse_toric(in);
}

} // namespace specbound::toric
