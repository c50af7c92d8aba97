#ifndef SPECBOUND_TORIC_IO_HPP
#define SPECBOUND_TORIC_IO_HPP

#include <istream>
#include <optional>
#include <string>

#include "specbound/numerics/polynomial2.hpp"
#include "specbound/toric/polytope.hpp"

namespace specbound::toric {

/// Contents of a polytope and/or potential file. The two line-oriented
/// formats use disjoint keywords, so one file may carry both:
///
///   dim 2            # polytope dimension
///   v 0 0            # vertices, counterclockwise
///   guillemin        # potential: canonical part
///   perturb 2 0 0.1  # potential: perturbation coefficient of x^2 y^0
struct ToricFile {
  std::optional<Polytope> polytope;
  bool has_potential = false;
  numerics::Polynomial2 perturbation;
};

/// Throws InputError with the offending line number on malformed input.
ToricFile parse_toric(std::istream& in);
ToricFile read_toric_file(const std::string& path);

} // namespace specbound::toric

#endif // SPECBOUND_TORIC_IO_HPP
