#ifndef SPECBOUND_COHOM1_SPECTRUM_HPP
#define SPECBOUND_COHOM1_SPECTRUM_HPP

#include "specbound/cohom1/profile.hpp"
#include "specbound/exec.hpp"
#include "specbound/numerics/sturm_liouville.hpp"

namespace specbound::cohom1 {

/// SO(n)-invariant spectrum: -(Phi^{2n-2} phi')' = lambda phi on [0, 1]
/// with L^2(ds). lambda_0 = 0 followed by `count` nonzero eigenvalues.
numerics::SpectrumResult cohom1_spectrum(const Profile& profile, int count,
                                         const numerics::SpectrumOptions& opts = {},
                                         Exec exec = Exec::parallel);

} // namespace specbound::cohom1

#endif // SPECBOUND_COHOM1_SPECTRUM_HPP
