#include "specbound/cohom1/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound::cohom1 {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

} // namespace

Profile parse_profile(std::istream& in) {
  std::optional<int> n;
  bool round = false;
  std::optional<std::vector<double>> q;
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
    try {
      if (tok[0] == "n") {
        if (n || tok.size() != 2)
          fail(lineno, "expected a single 'n <int>' line");
        std::size_t used = 0;
        n = std::stoi(tok[1], &used);
        if (used != tok[1].size())
          fail(lineno, "malformed integer '" + tok[1] + "'");
      } else if (tok[0] == "preset") {
        if (round || q || tok.size() != 2 || tok[1] != "round")
          fail(lineno, "expected 'preset round' (once, instead of a q line)");
        round = true;
      } else if (tok[0] == "q") {
        if (round || q || tok.size() < 2)
          fail(lineno, "expected 'q c0 c1 ...' (once, instead of a preset)");
        std::vector<double> c;
        for (std::size_t i = 1; i < tok.size(); ++i) {
          std::size_t used = 0;
          c.push_back(std::stod(tok[i], &used));
          if (used != tok[i].size())
            fail(lineno, "malformed number '" + tok[i] + "'");
        }
        q = std::move(c);
      } else {
        fail(lineno, "unknown keyword '" + tok[0] + "'");
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InputError*>(&e))
        throw;
      fail(lineno, "malformed number");
    }
  }
  if (!n)
    throw InputError("profile file is missing the 'n <int>' line");
  if (!round && !q)
    throw InputError("profile file needs 'preset round' or a 'q ...' line");
  if (round)
    return Profile::round(*n);
  return Profile::polynomial(*n, numerics::Polynomial(*q));
}

Profile read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return parse_profile(in);
}

} // namespace specbound::cohom1
