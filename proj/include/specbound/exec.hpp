#ifndef SPECBOUND_EXEC_HPP
#define SPECBOUND_EXEC_HPP

namespace specbound {

// Selects between the OpenMP kernel and its serial reference. Both paths
// produce bit-identical results; the serial one exists for testing and
// benchmarking.
enum class Exec { serial, parallel };

} // namespace specbound

#endif // SPECBOUND_EXEC_HPP
