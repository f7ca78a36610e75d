#pragma once

namespace realkirwan {

/// Selects between the OpenMP kernels and the serial reference path. Both
/// produce bit-identical results; the serial path exists for testing and
/// benchmarking.
enum class Exec { Serial, Parallel };

}  // namespace realkirwan
