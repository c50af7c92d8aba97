#ifndef SPECBOUND_TORIC_SPECTRUM_HPP
#define SPECBOUND_TORIC_SPECTRUM_HPP

#include "specbound/exec.hpp"
#include "specbound/numerics/sturm_liouville.hpp"
#include "specbound/toric/potential.hpp"

namespace specbound::toric {

/// Torus-invariant spectrum of a toric metric over an interval: the
/// operator -(u^xx phi')' with Lebesgue measure on [x_min, x_max].
/// Returns lambda_0 = 0 followed by `count` nonzero eigenvalues.
numerics::SpectrumResult toric1d_spectrum(const SymplecticPotential& u, int count,
                                          const numerics::SpectrumOptions& opts = {},
                                          Exec exec = Exec::parallel);

} // namespace specbound::toric

#endif // SPECBOUND_TORIC_SPECTRUM_HPP
