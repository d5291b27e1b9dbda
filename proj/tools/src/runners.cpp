#include "qpse_cli/runners.hpp"

#include <cstdio>
#include <filesystem>
#include <string>

#include "qpse/dynamics.hpp"
#include "qpse/entropy.hpp"
#include "qpse/spin.hpp"
#include "qpse/spinor.hpp"
#include "qpse/states.hpp"
#include "qpse/transforms.hpp"
#include "qpse_cli/report.hpp"
#include "qpse_cli/spec_io.hpp"

namespace qpse::cli {
namespace {

std::string resolve(const RunOptions& opt, const std::string& path) {
  if (opt.out_dir.empty()) return path;
  return (std::filesystem::path(opt.out_dir) / path).string();
}

int effective_precision(const RunOptions& opt, const OutputSpec& outputs) {
  if (opt.precision_override == 0) return outputs.precision;
  if (opt.precision_override < 6 || opt.precision_override > 17)
    throw SpecError("--precision must be within [6, 17]");
  return opt.precision_override;
}

// scalar-state synthesis + entropy, with the two non-scalar kinds routed
// to their own pipelines
EntropyReport state_entropy(const ExperimentSpec& spec) {
  switch (spec.state.kind) {
    case StateSpec::Kind::two_particle_gaussian:
      return joint_entropy_two_particle(
          make_two_particle(spec.state, spec.grid));
    case StateSpec::Kind::spinor_packet:
      return spinor_entropy(make_spinor_packet(spec.state, spec.grid));
    default:
      return continuous_entropy(make_state(spec.state, spec.grid));
  }
}

void emit_header(JsonWriter& w, const ExperimentSpec& spec,
                 const RunOptions& opt, const char* subcommand) {
  w.field("schema", 1LL);
  w.field("subcommand", subcommand);
  w.field("seed", static_cast<long long>(opt.seed));
  w.field("state_kind", state_kind_name(spec.state.kind));
  w.open_object("grid");
  w.field("dim", static_cast<long long>(spec.grid.dim));
  w.field("n", static_cast<long long>(spec.grid.n));
  w.field("extent", spec.grid.extent());
  w.close_object();
}

void emit_report(JsonWriter& w, const EntropyReport& rep) {
  w.field("s_r", rep.s_r);
  w.field("s_k", rep.s_k);
  w.field("s_spin", rep.s_spin);
  w.field("s_total", rep.s_total);
  w.field("bbm_margin", rep.bbm_margin);
  w.field("norm_residual_r", rep.norm_residual_r);
  w.field("norm_residual_k", rep.norm_residual_k);
}

}  // namespace

int run_entropy(const RunOptions& opt) {
  const ExperimentSpec spec = load_experiment(opt.spec_path);
  const int precision = effective_precision(opt, spec.outputs);
  const EntropyReport rep = state_entropy(spec);

  JsonWriter w(precision);
  w.open_object();
  emit_header(w, spec, opt, "entropy");
  emit_report(w, rep);
  w.close_object();
  atomic_write(resolve(opt, spec.outputs.json_path), w.take());
  return 0;
}

int run_invariance(const RunOptions& opt) {
  const ExperimentSpec spec = load_experiment(opt.spec_path);
  const int precision = effective_precision(opt, spec.outputs);
  if (spec.transforms.empty())
    throw SpecError(opt.spec_path +
                    ": invariance needs a non-empty \"transforms\" list");
  if (spec.state.kind == StateSpec::Kind::spinor_packet)
    throw SpecError(opt.spec_path +
                    ": invariance operates on scalar states; use verify for "
                    "the spinor CPT suite");

  const WaveFunction psi =
      spec.state.kind == StateSpec::Kind::two_particle_gaussian
          ? make_two_particle(spec.state, spec.grid)
          : make_state(spec.state, spec.grid);
  const EntropyReport base = continuous_entropy(psi);

  JsonWriter w(precision);
  w.open_object();
  emit_header(w, spec, opt, "invariance");
  w.open_object("base");
  emit_report(w, base);
  w.close_object();
  w.open_array("transforms");
  for (const TransformSpec& t : spec.transforms) {
    w.open_object();
    w.field("kind", transform_kind_name(t.kind));
    if (t.kind == TransformSpec::Kind::lorentz_boost_k) {
      const LorentzReport lr =
          lorentz_boost_report(to_k_space(psi), t.amount, t.mass);
      w.field("rapidity", t.amount);
      w.field("mass", t.mass);
      w.field("i_rest", lr.i_rest);
      w.field("i_boosted", lr.i_boosted);
      w.field("delta", lr.delta);
      w.field("boosted_probability", lr.boosted_probability);
    } else {
      WaveFunction moved = [&] {
        switch (t.kind) {
          case TransformSpec::Kind::dilate: return dilate(psi, t.amount);
          case TransformSpec::Kind::parity: return parity(psi);
          case TransformSpec::Kind::conjugate: return conjugate(psi);
          default: return translate(psi, t.kind, t.amount);
        }
      }();
      const EntropyReport rep = continuous_entropy(moved);
      if (t.kind != TransformSpec::Kind::parity &&
          t.kind != TransformSpec::Kind::conjugate) {
        w.field("amount", t.amount);
      }
      w.field("s_r", rep.s_r);
      w.field("s_k", rep.s_k);
      w.field("s_total", rep.s_total);
      w.field("delta_s_r", rep.s_r - base.s_r);
      w.field("delta_s_k", rep.s_k - base.s_k);
      w.field("delta_s_total", rep.s_total - base.s_total);
    }
    w.close_object();
  }
  w.close_array();
  w.close_object();
  atomic_write(resolve(opt, spec.outputs.json_path), w.take());
  return 0;
}

int run_evolve(const RunOptions& opt) {
  const ExperimentSpec spec = load_experiment(opt.spec_path);
  const int precision = effective_precision(opt, spec.outputs);
  if (!spec.evolution)
    throw SpecError(opt.spec_path + ": evolve needs an \"evolution\" block");
  if (spec.state.kind == StateSpec::Kind::spinor_packet)
    throw SpecError(opt.spec_path + ": evolve operates on scalar states");

  const WaveFunction psi =
      spec.state.kind == StateSpec::Kind::two_particle_gaussian
          ? make_two_particle(spec.state, spec.grid)
          : make_state(spec.state, spec.grid);
  const EntropySeries series = entropy_series(evolve(psi, *spec.evolution));

  std::string csv{kSeriesHeader};
  csv += '\n';
  for (const SeriesRow& row : series.rows) {
    csv += format_double(row.t, precision);
    csv += ',';
    csv += format_double(row.s_r, precision);
    csv += ',';
    csv += format_double(row.s_k, precision);
    csv += ',';
    csv += format_double(row.s_total, precision);
    csv += ',';
    csv += format_double(row.bbm_margin, precision);
    csv += ',';
    csv += format_double(row.norm_residual, precision);
    csv += '\n';
  }
  atomic_write(resolve(opt, spec.outputs.csv_path), csv);

  JsonWriter w(precision);
  w.open_object();
  emit_header(w, spec, opt, "evolve");
  w.field("potential", potential_name(spec.evolution->potential));
  w.field("dt", spec.evolution->dt);
  w.field("steps", static_cast<long long>(spec.evolution->steps));
  w.field("rows", static_cast<long long>(series.rows.size()));
  const SeriesRow& first = series.rows.front();
  const SeriesRow& last = series.rows.back();
  w.field("t_final", last.t);
  w.field("s_total_initial", first.s_total);
  w.field("s_total_final", last.s_total);
  w.field("decreasing_steps", static_cast<long long>(series.decreasing_steps));
  w.field("max_decrease", series.max_decrease);
  w.close_object();
  atomic_write(resolve(opt, spec.outputs.json_path), w.take());
  return 0;
}

int run_spin(double theta, int precision) {
  if (precision < 6 || precision > 17)
    throw SpecError("--precision must be within [6, 17]");
  const double value = spin_entropy_entangled_pair(theta);
  std::printf("%s\n", format_double(value, precision).c_str());
  return 0;
}

}  // namespace qpse::cli
