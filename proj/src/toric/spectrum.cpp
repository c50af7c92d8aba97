#include "specbound/toric/spectrum.hpp"

#include "specbound/errors.hpp"

namespace specbound::toric {

numerics::SpectrumResult toric1d_spectrum(const SymplecticPotential& u, int count,
                                          const numerics::SpectrumOptions& opts, Exec exec) {
  const Polytope& P = u.polytope();
  if (P.dim() != 1)
    throw InputError("invariant spectrum is only solved over 1D polytopes");
  u.validate();
  const double a = P.vertices()[0][0];
  const double length = P.vertices()[1][0] - a;
  return numerics::sl_spectrum(
      [&](double y) { return potential_inverse_hessian(u, {a + y, 0.0})(0, 0); }, length, count,
      opts, exec);
}

} // namespace specbound::toric
