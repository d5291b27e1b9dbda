#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpse/dynamics.hpp"
#include "qpse/errors.hpp"
#include "qpse/grid.hpp"
#include "qpse/states.hpp"
#include "qpse/transforms.hpp"

namespace qpse::cli {

// Spec-file problem with a file:line anchor in the message (exit code 2).
struct SpecError : Error {
  explicit SpecError(const std::string& msg) : Error(msg) {}
};

struct OutputSpec {
  std::string csv_path = "series.csv";
  std::string json_path = "report.json";
  int precision = 12;  // significant digits, 6..17
};

// In-memory form of a schema-1 experiment file. Unknown keys anywhere in
// the file are errors (reproducibility over forgiveness).
struct ExperimentSpec {
  StateSpec state;
  GridSpec grid;
  std::vector<TransformSpec> transforms;  // invariance subcommand input
  std::optional<EvolutionSpec> evolution; // evolve subcommand input
  OutputSpec outputs;
};

ExperimentSpec load_experiment(const std::string& path);

// enum <-> spec-file spellings (shared by parser, reports and docs)
std::string state_kind_name(StateSpec::Kind kind);
std::string transform_kind_name(TransformSpec::Kind kind);
std::string potential_name(EvolutionSpec::Potential p);

}  // namespace qpse::cli
