#include "specbound/cohom1/spectrum.hpp"

namespace specbound::cohom1 {

numerics::SpectrumResult cohom1_spectrum(const Profile& profile, int count,
                                         const numerics::SpectrumOptions& opts, Exec exec) {
  return numerics::sl_spectrum([&](double s) { return profile.laplacian_weight(s); }, 1.0, count,
                               opts, exec);
}

} // namespace specbound::cohom1
