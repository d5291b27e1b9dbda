#include <cmath>
#include <cstdio>

#include <CLI11.hpp>

#include "qpse/errors.hpp"
#include "qpse_cli/runners.hpp"
#include "qpse_cli/spec_io.hpp"

namespace {

void add_common(CLI::App* cmd, qpse::cli::RunOptions& opt, bool needs_spec) {
  if (needs_spec) {
    cmd->add_option("--spec", opt.spec_path, "experiment spec file (JSON)")
        ->required();
  }
  cmd->add_option("--seed", opt.seed, "RNG seed recorded in reports");
  cmd->add_option("--out", opt.out_dir, "directory for output files");
  cmd->add_option("--precision", opt.precision_override,
                  "significant digits for emitted numbers (6..17)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum phase-space entropy toolkit", "qpse"};
  app.require_subcommand(1);

  qpse::cli::RunOptions opt;
  double theta = 0.0;

  CLI::App* entropy = app.add_subcommand(
      "entropy", "single entropy report for a state spec");
  add_common(entropy, opt, true);

  CLI::App* invariance = app.add_subcommand(
      "invariance", "apply each transform in the spec, report deltas");
  add_common(invariance, opt, true);

  CLI::App* evolve = app.add_subcommand(
      "evolve", "time evolution with an entropy time-series CSV");
  add_common(evolve, opt, true);

  CLI::App* spin = app.add_subcommand(
      "spin", "entangled-pair spin entropy at a mixing angle");
  spin->add_option("--theta", theta, "mixing angle in radians")->required();
  add_common(spin, opt, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "built-in theorem suite with a traceability table");
  add_common(verify, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 64;
  }

  try {
    if (entropy->parsed()) return qpse::cli::run_entropy(opt);
    if (invariance->parsed()) return qpse::cli::run_invariance(opt);
    if (evolve->parsed()) return qpse::cli::run_evolve(opt);
    if (spin->parsed()) {
      const int precision =
          opt.precision_override == 0 ? 8 : opt.precision_override;
      return qpse::cli::run_spin(theta, precision);
    }
    if (verify->parsed()) return qpse::cli::run_verify(opt.seed);
  } catch (const qpse::GridTooSmall& e) {
    std::fprintf(stderr, "GridTooSmall: %s\n", e.what());
    return 3;
  } catch (const qpse::AliasedMomentum& e) {
    std::fprintf(stderr, "AliasedMomentum: %s\n", e.what());
    return 3;
  } catch (const qpse::EdgeMassExceeded& e) {
    std::fprintf(stderr, "EdgeMassExceeded: %s\n", e.what());
    return 3;
  } catch (const qpse::NumericalGuard& e) {
    std::fprintf(stderr, "numerical guard: %s\n", e.what());
    return 3;
  } catch (const qpse::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 64;
}
