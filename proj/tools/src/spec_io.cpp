#include "qpse_cli/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace qpse::cli {
namespace {

using nlohmann::json;

// raw text + path kept around so every diagnostic can carry file:line
struct Ctx {
  std::string path;
  std::string raw;
};

int line_of_offset(const std::string& raw, std::size_t offset) {
  offset = std::min(offset, raw.size());
  return 1 + static_cast<int>(std::count(raw.begin(), raw.begin() +
                                             static_cast<std::ptrdiff_t>(offset),
                                         '\n'));
}

// first occurrence of the quoted key; good enough as an anchor even when a
// key name repeats in nested objects
int line_of_key(const Ctx& ctx, const std::string& key) {
  const auto pos = ctx.raw.find('"' + key + '"');
  return pos == std::string::npos ? 1 : line_of_offset(ctx.raw, pos);
}

[[noreturn]] void fail(const Ctx& ctx, int line, const std::string& msg) {
  throw SpecError(ctx.path + ":" + std::to_string(line) + ": " + msg);
}

[[noreturn]] void fail_at_key(const Ctx& ctx, const std::string& key,
                              const std::string& msg) {
  fail(ctx, line_of_key(ctx, key), msg);
}

void check_keys(const Ctx& ctx, const json& obj, const char* where,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail_at_key(ctx, key,
                  std::string(where) + ": unknown key \"" + key + "\"");
    }
  }
}

const json& require(const Ctx& ctx, const json& obj, const char* where,
                    const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    fail_at_key(ctx, where, std::string(where) + ": missing required key \"" +
                                key + "\"");
  }
  return *it;
}

double as_number(const Ctx& ctx, const json& v, const std::string& key) {
  if (!v.is_number()) fail_at_key(ctx, key, "\"" + key + "\" must be a number");
  return v.get<double>();
}

long as_integer(const Ctx& ctx, const json& v, const std::string& key) {
  if (!v.is_number_integer())
    fail_at_key(ctx, key, "\"" + key + "\" must be an integer");
  return v.get<long>();
}

std::string as_string(const Ctx& ctx, const json& v, const std::string& key) {
  if (!v.is_string()) fail_at_key(ctx, key, "\"" + key + "\" must be a string");
  return v.get<std::string>();
}

// number -> [x]; array of numbers passed through
std::vector<double> as_number_list(const Ctx& ctx, const json& v,
                                   const std::string& key) {
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array())
    fail_at_key(ctx, key, "\"" + key + "\" must be a number or number array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(as_number(ctx, e, key));
  if (out.empty()) fail_at_key(ctx, key, "\"" + key + "\" must be non-empty");
  return out;
}

std::vector<int> as_integer_list(const Ctx& ctx, const json& v,
                                 const std::string& key) {
  if (v.is_number_integer()) return {v.get<int>()};
  if (!v.is_array())
    fail_at_key(ctx, key, "\"" + key + "\" must be an integer or integer array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(static_cast<int>(as_integer(ctx, e, key)));
  if (out.empty()) fail_at_key(ctx, key, "\"" + key + "\" must be non-empty");
  return out;
}

cplx as_complex(const Ctx& ctx, const json& v, const std::string& key) {
  if (!v.is_object())
    fail_at_key(ctx, key, "\"" + key + "\" must be {\"re\": x, \"im\": y}");
  check_keys(ctx, v, key.c_str(), {"re", "im"});
  double re = 0.0, im = 0.0;
  if (auto it = v.find("re"); it != v.end()) re = as_number(ctx, *it, key);
  if (auto it = v.find("im"); it != v.end()) im = as_number(ctx, *it, key);
  return {re, im};
}

StateSpec parse_state(const Ctx& ctx, const json& node, const char* where);

StateSpec parse_gaussian_like(const Ctx& ctx, const json& node,
                              const char* where, StateSpec::Kind kind) {
  StateSpec spec;
  spec.kind = kind;
  if (auto it = node.find("center"); it != node.end())
    spec.center = as_number_list(ctx, *it, "center");
  if (auto it = node.find("sigma"); it != node.end())
    spec.sigma = as_number_list(ctx, *it, "sigma");
  if (auto it = node.find("k0"); it != node.end())
    spec.k0 = as_number_list(ctx, *it, "k0");
  if (kind == StateSpec::Kind::hermite) {
    if (auto it = node.find("hermite_index"); it != node.end())
      spec.hermite_index = as_integer_list(ctx, *it, "hermite_index");
  } else if (node.contains("hermite_index")) {
    fail_at_key(ctx, "hermite_index",
                std::string(where) + ": \"hermite_index\" only applies to "
                "kind \"hermite\"");
  }
  return spec;
}

StateSpec parse_superposition(const Ctx& ctx, const json& node,
                              const char* where) {
  const json& terms = require(ctx, node, where, "terms");
  if (!terms.is_array() || terms.empty())
    fail_at_key(ctx, "terms", "\"terms\" must be a non-empty array");
  std::vector<std::pair<cplx, StateSpec>> parsed;
  parsed.reserve(terms.size());
  for (const auto& term : terms) {
    if (!term.is_object())
      fail_at_key(ctx, "terms", "each term must be an object");
    check_keys(ctx, term, "terms[]", {"coeff", "state"});
    const cplx coeff =
        as_complex(ctx, require(ctx, term, "terms[]", "coeff"), "coeff");
    parsed.emplace_back(
        coeff, parse_state(ctx, require(ctx, term, "terms[]", "state"),
                           "terms[].state"));
  }
  return StateSpec::make_superposition(std::move(parsed));
}

StateSpec parse_spinor(const Ctx& ctx, const json& node) {
  double center = 0.0, sigma = 1.0, k0 = 0.0;
  if (auto it = node.find("center"); it != node.end())
    center = as_number(ctx, *it, "center");
  if (auto it = node.find("sigma"); it != node.end())
    sigma = as_number(ctx, *it, "sigma");
  if (auto it = node.find("k0"); it != node.end())
    k0 = as_number(ctx, *it, "k0");
  StateSpec::Branch branch = StateSpec::Branch::positive;
  if (auto it = node.find("branch"); it != node.end()) {
    const std::string name = as_string(ctx, *it, "branch");
    if (name == "positive") {
      branch = StateSpec::Branch::positive;
    } else if (name == "negative") {
      branch = StateSpec::Branch::negative;
    } else {
      fail_at_key(ctx, "branch",
                  "\"branch\" must be \"positive\" or \"negative\"");
    }
  }
  cplx wu{1.0, 0.0}, wd{0.0, 0.0};
  if (auto it = node.find("weight_up"); it != node.end())
    wu = as_complex(ctx, *it, "weight_up");
  if (auto it = node.find("weight_down"); it != node.end())
    wd = as_complex(ctx, *it, "weight_down");
  return StateSpec::make_spinor(center, sigma, k0, branch, wu, wd);
}

StateSpec parse_state(const Ctx& ctx, const json& node, const char* where) {
  if (!node.is_object())
    fail_at_key(ctx, "state", std::string(where) + " must be an object");
  const std::string kind =
      as_string(ctx, require(ctx, node, where, "kind"), "kind");

  if (kind == "gaussian") {
    check_keys(ctx, node, where, {"kind", "center", "sigma", "k0"});
    return parse_gaussian_like(ctx, node, where, StateSpec::Kind::gaussian);
  }
  if (kind == "hermite") {
    check_keys(ctx, node, where,
               {"kind", "center", "sigma", "k0", "hermite_index"});
    return parse_gaussian_like(ctx, node, where, StateSpec::Kind::hermite);
  }
  if (kind == "superposition") {
    check_keys(ctx, node, where, {"kind", "terms"});
    return parse_superposition(ctx, node, where);
  }
  if (kind == "two_particle_gaussian") {
    check_keys(ctx, node, where, {"kind", "pair_sigma", "pair_r"});
    double sigma = 1.0, r = 0.0;
    if (auto it = node.find("pair_sigma"); it != node.end())
      sigma = as_number(ctx, *it, "pair_sigma");
    if (auto it = node.find("pair_r"); it != node.end())
      r = as_number(ctx, *it, "pair_r");
    return StateSpec::make_pair_gaussian(sigma, r);
  }
  if (kind == "spinor_packet") {
    check_keys(ctx, node, where,
               {"kind", "center", "sigma", "k0", "branch", "weight_up",
                "weight_down"});
    return parse_spinor(ctx, node);
  }
  fail_at_key(ctx, "kind", "unknown state kind \"" + kind + "\"");
}

GridSpec parse_grid(const Ctx& ctx, const json& node) {
  if (!node.is_object()) fail_at_key(ctx, "grid", "\"grid\" must be an object");
  check_keys(ctx, node, "grid", {"dim", "n", "extent"});
  const long dim = as_integer(ctx, require(ctx, node, "grid", "dim"), "dim");
  const long n = as_integer(ctx, require(ctx, node, "grid", "n"), "n");
  const double extent =
      as_number(ctx, require(ctx, node, "grid", "extent"), "extent");
  if (n <= 0) fail_at_key(ctx, "n", "\"n\" must be positive");
  try {
    return GridSpec::centered(static_cast<int>(dim),
                              static_cast<std::size_t>(n), extent);
  } catch (const Error& e) {
    fail_at_key(ctx, "grid", std::string("grid: ") + e.what());
  }
}

TransformSpec parse_transform(const Ctx& ctx, const json& node) {
  if (!node.is_object())
    fail_at_key(ctx, "transforms", "each transform must be an object");
  const std::string kind =
      as_string(ctx, require(ctx, node, "transforms[]", "kind"), "kind");

  TransformSpec spec;
  if (kind == "translate_x") {
    spec.kind = TransformSpec::Kind::translate_x;
  } else if (kind == "translate_k") {
    spec.kind = TransformSpec::Kind::translate_k;
  } else if (kind == "dilate") {
    spec.kind = TransformSpec::Kind::dilate;
  } else if (kind == "parity") {
    spec.kind = TransformSpec::Kind::parity;
  } else if (kind == "conjugate") {
    spec.kind = TransformSpec::Kind::conjugate;
  } else if (kind == "lorentz_boost_k") {
    spec.kind = TransformSpec::Kind::lorentz_boost_k;
  } else {
    fail_at_key(ctx, "kind", "unknown transform kind \"" + kind + "\"");
  }

  const bool takes_amount = spec.kind != TransformSpec::Kind::parity &&
                            spec.kind != TransformSpec::Kind::conjugate;
  const bool takes_mass = spec.kind == TransformSpec::Kind::lorentz_boost_k;
  if (takes_amount) {
    check_keys(ctx, node, "transforms[]",
               takes_mass
                   ? std::initializer_list<std::string_view>{"kind", "amount",
                                                             "mass"}
                   : std::initializer_list<std::string_view>{"kind", "amount"});
    spec.amount =
        as_number(ctx, require(ctx, node, "transforms[]", "amount"), "amount");
  } else {
    check_keys(ctx, node, "transforms[]", {"kind"});
  }
  if (takes_mass) {
    if (auto it = node.find("mass"); it != node.end())
      spec.mass = as_number(ctx, *it, "mass");
  }
  return spec;
}

EvolutionSpec parse_evolution(const Ctx& ctx, const json& node) {
  if (!node.is_object())
    fail_at_key(ctx, "evolution", "\"evolution\" must be an object");
  check_keys(ctx, node, "evolution",
             {"potential", "omega", "dt", "steps", "record_every"});
  EvolutionSpec spec;
  const std::string pot = as_string(
      ctx, require(ctx, node, "evolution", "potential"), "potential");
  if (pot == "free") {
    spec.potential = EvolutionSpec::Potential::free;
  } else if (pot == "harmonic") {
    spec.potential = EvolutionSpec::Potential::harmonic;
  } else {
    fail_at_key(ctx, "potential",
                "\"potential\" must be \"free\" or \"harmonic\"");
  }
  if (auto it = node.find("omega"); it != node.end()) {
    if (spec.potential != EvolutionSpec::Potential::harmonic)
      fail_at_key(ctx, "omega", "\"omega\" only applies to \"harmonic\"");
    spec.omega = as_number(ctx, *it, "omega");
  }
  if (auto it = node.find("dt"); it != node.end())
    spec.dt = as_number(ctx, *it, "dt");
  if (auto it = node.find("steps"); it != node.end())
    spec.steps = as_integer(ctx, *it, "steps");
  if (auto it = node.find("record_every"); it != node.end())
    spec.record_every = as_integer(ctx, *it, "record_every");
  return spec;
}

OutputSpec parse_outputs(const Ctx& ctx, const json& node) {
  if (!node.is_object())
    fail_at_key(ctx, "outputs", "\"outputs\" must be an object");
  check_keys(ctx, node, "outputs", {"csv_path", "json_path", "precision"});
  OutputSpec out;
  if (auto it = node.find("csv_path"); it != node.end())
    out.csv_path = as_string(ctx, *it, "csv_path");
  if (auto it = node.find("json_path"); it != node.end())
    out.json_path = as_string(ctx, *it, "json_path");
  if (auto it = node.find("precision"); it != node.end()) {
    const long p = as_integer(ctx, *it, "precision");
    if (p < 6 || p > 17)
      fail_at_key(ctx, "precision", "\"precision\" must be within [6, 17]");
    out.precision = static_cast<int>(p);
  }
  return out;
}

}  // namespace

ExperimentSpec load_experiment(const std::string& path) {
  Ctx ctx{path, {}};
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError(path + ": cannot open spec file");
    std::ostringstream buf;
    buf << in.rdbuf();
    ctx.raw = std::move(buf).str();
  }

  json root;
  try {
    root = json::parse(ctx.raw);
  } catch (const json::parse_error& e) {
    fail(ctx, line_of_offset(ctx.raw, e.byte),
         std::string("JSON parse error: ") + e.what());
  }
  if (!root.is_object()) fail(ctx, 1, "top level must be a JSON object");
  check_keys(ctx, root, "top level",
             {"schema", "state", "grid", "transforms", "evolution", "outputs"});

  const long schema =
      as_integer(ctx, require(ctx, root, "top level", "schema"), "schema");
  if (schema != 1)
    fail_at_key(ctx, "schema", "unsupported schema version (expected 1)");

  GridSpec grid = parse_grid(ctx, require(ctx, root, "top level", "grid"));
  StateSpec state =
      parse_state(ctx, require(ctx, root, "top level", "state"), "state");

  std::vector<TransformSpec> transforms;
  if (auto it = root.find("transforms"); it != root.end()) {
    if (!it->is_array())
      fail_at_key(ctx, "transforms", "\"transforms\" must be an array");
    transforms.reserve(it->size());
    for (const auto& t : *it) transforms.push_back(parse_transform(ctx, t));
  }

  std::optional<EvolutionSpec> evolution;
  if (auto it = root.find("evolution"); it != root.end())
    evolution = parse_evolution(ctx, *it);

  OutputSpec outputs;
  if (auto it = root.find("outputs"); it != root.end())
    outputs = parse_outputs(ctx, *it);

  return ExperimentSpec{std::move(state), grid, std::move(transforms),
                        evolution, std::move(outputs)};
}

std::string state_kind_name(StateSpec::Kind kind) {
  switch (kind) {
    case StateSpec::Kind::gaussian: return "gaussian";
    case StateSpec::Kind::hermite: return "hermite";
    case StateSpec::Kind::superposition: return "superposition";
    case StateSpec::Kind::two_particle_gaussian: return "two_particle_gaussian";
    case StateSpec::Kind::spinor_packet: return "spinor_packet";
  }
  return "unknown";
}

std::string transform_kind_name(TransformSpec::Kind kind) {
  switch (kind) {
    case TransformSpec::Kind::translate_x: return "translate_x";
    case TransformSpec::Kind::translate_k: return "translate_k";
    case TransformSpec::Kind::dilate: return "dilate";
    case TransformSpec::Kind::parity: return "parity";
    case TransformSpec::Kind::conjugate: return "conjugate";
    case TransformSpec::Kind::lorentz_boost_k: return "lorentz_boost_k";
  }
  return "unknown";
}

std::string potential_name(EvolutionSpec::Potential p) {
  return p == EvolutionSpec::Potential::harmonic ? "harmonic" : "free";
}

}  // namespace qpse::cli
