#pragma once

#include <ostream>

namespace realkirwan::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kTorsion = 2,
  kParse = 3,
  kIrregular = 4,
  kMissingHypothesis = 5,
  kNotDelzant = 6,
  kInconsistent = 7,
};

/// Entry point of the `realkirwan` tool, parameterized on the streams so the
/// commands can be driven in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace realkirwan::cli
