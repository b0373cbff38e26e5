#pragma once

#include <stdexcept>
#include <string>

namespace dmod {

// CLI exit-code contract.
enum class ExitCode : int {
  Ok = 0,
  Usage = 1,
  SingularCurve = 2,
  Stabilization = 3,
  Certification = 4,
};

struct SingularCurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when the truncated cokernel computation hits its degree cap before
// the dimension and representative set settle.
struct StabilizationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HullCertificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChartMismatchError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dmod
