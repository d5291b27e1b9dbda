#pragma once

#include <string>

namespace qpse::cli {

struct RunOptions {
  std::string spec_path;
  std::string out_dir;         // prepended to relative output paths
  long seed = 1;               // recorded in reports; drives verify's RNG
  int precision_override = 0;  // 0 = take precision from the spec file
};

// Subcommand bodies. Success returns 0; failures surface as exceptions and
// are mapped to exit codes by main (2 validation, 3 numerical guard).
int run_entropy(const RunOptions& opt);
int run_invariance(const RunOptions& opt);
int run_evolve(const RunOptions& opt);

// Entangled-pair spin entropy at theta, printed to stdout.
int run_spin(double theta, int precision);

// Built-in theorem suite; prints a theorem -> check -> status table.
// Returns 0 when every row passes, 1 otherwise.
int run_verify(long seed);

}  // namespace qpse::cli
