#ifndef SPECBOUND_COHOM1_IO_HPP
#define SPECBOUND_COHOM1_IO_HPP

#include <istream>
#include <string>

#include "specbound/cohom1/profile.hpp"

namespace specbound::cohom1 {

/// Profile file:
///   n 3
///   preset round        # or: q c0 c1 c2 ...  (coefficients of q in s)
Profile parse_profile(std::istream& in);
Profile read_profile_file(const std::string& path);

} // namespace specbound::cohom1

#endif // SPECBOUND_COHOM1_IO_HPP
