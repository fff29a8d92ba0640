#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "antilinear/delta_example.hpp"
#include "antilinear/operator.hpp"
#include "antilinear/types.hpp"

namespace antispec {

using antilinear::Complex;

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 2,
  kNumericFailure = 3,
  kIoFailure = 4,
};

inline constexpr int kMaxSize = 5000;
inline constexpr int kMaxQuadrature = 100000;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;  // empty writes the primary result to stdout
  Complex omega{0.0, 0.0};
  int size = 2000;
  int quadrature = 4000;
  int coeffs = 20;
  antilinear::delta::Quadrature rule = antilinear::delta::Quadrature::chebyshev;
  double tol_cluster = antilinear::kDefaultTolCluster;
  double tol_degeneracy = -1.0;
  Format format = Format::json;
};

/// "re,im" or "re".
Complex parse_omega(const std::string& text);

/// Throws ValidationError for out-of-range sizes, missing or clashing paths.
void check_config(const RunConfig& config);

/// Runs one subcommand. Errors are reported on `err` and mapped to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int main_entry(int argc, char** argv);

}  // namespace antispec
