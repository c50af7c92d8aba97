#ifndef SPECBOUND_ERRORS_HPP
#define SPECBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specbound {

/// Malformed or out-of-contract input (bad file, bad parameter, wrong shape).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation could not complete: factorization breakdown, quadrature
/// cap reached, degenerate geometry.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A symplectic potential or warping profile failed its validity check.
class InvalidGeometry : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace specbound

#endif // SPECBOUND_ERRORS_HPP
