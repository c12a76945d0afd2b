#include "bimeasure/cli/run.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bimeasure/cli/generate.hpp"
#include "bimeasure/cli/verify.hpp"
#include "bimeasure/decomposition.hpp"

namespace bimeasure::cli {

namespace {

constexpr std::size_t kDefaultMaxIter = 256;
constexpr std::size_t kExhaustiveReportAtoms = 12;

struct Outcome {
  Json body;
  bool checks_pass = true;
};

Json read_input(const RunConfig& config, std::istream& in) {
  std::string text;
  if (config.input_path.empty() || config.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(config.input_path);
    if (!file) throw SchemaError("", "cannot open input file '" + config.input_path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("", "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("/") + key, "missing");
  return *it;
}

std::size_t positive_count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) {
    throw SchemaError(where, "expected a positive integer");
  }
  return j.get<std::size_t>();
}

// Subsets used for reporting reconstruction checks: all of them on small
// spaces, otherwise X and the singletons.
template <class F>
bool all_report_sets(std::size_t n, F&& check) {
  if (n <= kExhaustiveReportAtoms) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      if (!check(SetMask::from_bits(n, bits))) return false;
    }
    return true;
  }
  if (!check(SetMask::full(n))) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (!check(SetMask::singleton(n, x))) return false;
  }
  return true;
}

bool near(const Bicomplex& a, const Bicomplex& b) {
  const double scale = std::max({1.0, std::abs(a.e1), std::abs(a.e2)});
  return approx_equal(a, b, 1e-12 * scale);
}

Outcome decompose(const Json& input) {
  const MeasureDocument d = measure_document_from_json(input);
  const TMeasure& lambda = d.measure;
  const FiniteSpace& space = d.space;
  const MeasureKind kind = classify_measure(lambda);
  Outcome o;
  Json& out = o.body;
  out["kind"] = std::string(to_string(kind));
  out["total_variation"] = to_json_value(total_variation(lambda, SetMask::full(space.size())));

  const TFunction h = polar_measure(lambda);
  const DMeasure modulus = modulus_measure(lambda);
  const bool polar_ok = all_report_sets(space.size(), [&](const SetMask& e) {
    return near(integrate(h, modulus, e), lambda(e));
  });
  out["polar_h"] = function_to_json(h);
  out["polar_check"] = polar_ok;
  o.checks_pass &= polar_ok;

  if (kind == MeasureKind::T) {
    out["jordan"] = nullptr;
    out["hahn"] = nullptr;
  } else {
    const SignedDMeasure mu = SignedDMeasure::from(lambda);
    const JordanPair jp = jordan(mu);
    bool difference = true, sum = true;
    for (std::size_t x = 0; x < mu.size(); ++x) {
      difference &= jp.mu_plus.atom(x) - jp.mu_minus.atom(x) == mu.atom(x);
      sum &= jp.mu_plus.atom(x) + jp.mu_minus.atom(x) == modulus.atom(x);
    }
    out["jordan"] = {{"mu_plus", measure_to_json(jp.mu_plus)},
                     {"mu_minus", measure_to_json(jp.mu_minus)},
                     {"difference_check", difference},
                     {"sum_check", sum}};
    const HahnResult hr = hahn(mu);
    out["hahn"] = {{"A", set_to_json(space, hr.partition.A)},
                   {"B", set_to_json(space, hr.partition.B)},
                   {"C", set_to_json(space, hr.partition.C)},
                   {"D", set_to_json(space, hr.partition.D)},
                   {"mu_plus_check", hr.mu_plus_check},
                   {"mu_minus_check", hr.mu_minus_check}};
    o.checks_pass &= difference && sum && hr.mu_plus_check && hr.mu_minus_check;
  }

  // Without an explicit reference the split is taken against |lambda|_D.
  const bool has_reference = input.contains("reference");
  const DMeasure reference =
      has_reference ? require_d_measure(measure_from_json(space, input["reference"], "/reference"), "/reference")
                    : modulus;
  const LRNResult r = lebesgue_radon_nikodym(lambda, reference);
  const bool ac = abs_continuous(r.lambda_ac, reference);
  const bool sing = mutually_singular(r.lambda_sing, reference);
  const bool split = measure_add(r.lambda_ac, r.lambda_sing) == lambda;
  const bool density = all_report_sets(space.size(), [&](const SetMask& e) {
    return near(integrate(r.density, reference, e), r.lambda_ac(e));
  });
  out["lrn"] = {{"reference", measure_to_json(reference)},
                {"reference_given", has_reference},
                {"lambda_ac", measure_to_json(r.lambda_ac)},
                {"lambda_sing", measure_to_json(r.lambda_sing)},
                {"h", function_to_json(r.density)},
                {"sum_check", split},
                {"abs_continuous", ac},
                {"mutually_singular", sing},
                {"density_check", density}};
  o.checks_pass &= split && ac && sing && density;

  if (input.contains("epsilon")) {
    const Hyperbolic eps = hyperbolic_from_json(input["epsilon"], "/epsilon");
    if (!eps.is_nonnegative() || eps.is_zero()) throw SchemaError("/epsilon", "must lie in D+ and be nonzero");
    const auto delta = epsilon_delta_witness(lambda, reference, eps);
    Json e = {{"epsilon", to_json_value(eps)}, {"abs_continuous", abs_continuous(lambda, reference)}};
    if (delta) {
      const bool holds = epsilon_delta_holds(lambda, reference, eps, *delta);
      e["delta"] = to_json_value(*delta);
      e["delta_check"] = holds;
      o.checks_pass &= holds;
    } else {
      e["delta"] = nullptr;
    }
    out["epsilon_delta"] = std::move(e);
  }
  return o;
}

Outcome integrate_command(const Json& input, double default_tol) {
  const FiniteSpace space = space_from_json(field(input, "space"));
  const DMeasure mu = require_d_measure(measure_from_json(space, field(input, "measure"), "/measure"), "/measure");
  Outcome o;
  if (input.contains("sequence")) {
    const Json& seq_json = input["sequence"];
    if (!seq_json.is_array() || seq_json.empty()) throw SchemaError("/sequence", "expected a nonempty list");
    std::vector<TFunction> seq;
    for (std::size_t k = 0; k < seq_json.size(); ++k) {
      seq.push_back(function_from_json(space, seq_json[k], "/sequence/" + std::to_string(k)));
    }
    const TFunction limit = function_from_json(space, field(input, "limit"), "/limit");
    const TFunction g = function_from_json(space, field(input, "dominator"), "/dominator");
    double tol = default_tol;
    if (input.contains("tol")) {
      tol = number_from_json(input["tol"], "/tol");
      if (!(tol > 0.0)) throw SchemaError("/tol", "must be positive");
    }
    const DCTReport r = dct_run(seq, limit, g, mu, tol);
    Json l1 = Json::array(), trace = Json::array();
    for (auto v : r.l1_limit) l1.push_back(to_json_value(v));
    for (const auto& v : r.integral_trace) trace.push_back(to_json_value(v));
    o.body = {{"domination_ok", r.domination_ok}, {"l1_limit", l1},
              {"integral_trace", trace},          {"limit_integral", to_json_value(integrate(limit, mu))},
              {"final_gap", to_json_value(r.final_gap)}, {"integral_gap", to_json_value(r.integral_gap)},
              {"converged", r.converged},         {"success", r.success}};
    o.checks_pass = r.success;
    return o;
  }
  const TFunction f = function_from_json(space, field(input, "function"), "/function");
  const SetMask e = input.contains("set") ? set_from_json(space, input["set"], "/set") : SetMask::full(space.size());
  if (!in_L1(f, mu)) throw SchemaError("/function", "function is not integrable against the measure");
  const ModulusInequality m = check_modulus_inequality(f, mu);
  o.body = {{"integral", to_json_value(integrate(f, mu, e))},
            {"modulus_integral", to_json_value(integrate_modulus(f, mu, e))},
            {"modulus_inequality", {{"lhs", to_json_value(m.lhs)}, {"rhs", to_json_value(m.rhs)}, {"holds", m.holds}}}};
  o.checks_pass = m.holds;
  return o;
}

DProbability probability_field(const FiniteSpace& space, const Json& input, const char* key) {
  const std::string where = std::string("/") + key;
  const DMeasure mu = require_d_measure(measure_from_json(space, field(input, key), where), where);
  try {
    return DProbability(mu);
  } catch (const std::domain_error& e) {
    throw SchemaError(where, e.what());
  }
}

Outcome pushforward_command(const Json& input) {
  const FiniteSpace space = space_from_json(field(input, "space"));
  const PointMap f = map_from_json(space, field(input, "map"), "/map");
  const DProbability mu = probability_field(space, input, "measure");
  std::size_t i = 1;
  if (input.contains("iterations")) i = positive_count(input["iterations"], "/iterations");
  return {measure_document_to_json(pushforward_iter(f, mu, i).measure()), true};
}

Outcome find_invariant(const Json& input, double tol) {
  const FiniteSpace space = space_from_json(field(input, "space"));
  const PointMap f = map_from_json(space, field(input, "map"), "/map");
  const DProbability mu0 =
      input.contains("measure") ? probability_field(space, input, "measure") : DProbability::uniform(space);
  std::size_t max_iter = kDefaultMaxIter;
  if (input.contains("max_iter")) max_iter = positive_count(input["max_iter"], "/max_iter");

  const CesaroTrace trace = cesaro_invariant(f, mu0, max_iter, tol);
  const auto basis = invariant_basis_bruteforce(f);
  const auto weights = hull_weights(basis, trace.limit, 1e-12);
  const bool limit_invariant = is_invariant(f, trace.limit, 1e-12);

  Json iterates = Json::array(), gaps = Json::array(), basis_json = Json::array(), w = Json::array();
  for (const auto& m : trace.iterates) iterates.push_back(measure_to_json(m.measure()));
  for (auto g : trace.gaps) gaps.push_back(to_json_value(g));
  for (const auto& b : basis) basis_json.push_back(measure_to_json(b.measure()));
  for (auto x : weights) w.push_back(to_json_value(x));

  Outcome o;
  o.body = {{"space", space_to_json(space)},
            {"trace", {{"iterates", iterates}, {"gaps", gaps}, {"converged", trace.converged}}},
            {"limit", measure_to_json(trace.limit.measure())},
            {"limit_invariant", limit_invariant},
            {"basis", basis_json},
            {"limit_weights", weights.empty() ? Json(nullptr) : w},
            {"unverified", Json::array({"compactness of the invariant set is checked as sequential "
                                        "closure under atomwise convergence only"})}};
  o.checks_pass = limit_invariant && !weights.empty() && !basis.empty();
  return o;
}

Outcome gen_command(const RunConfig& config) {
  const auto kind = gen_kind_from_string(config.kind);
  if (!kind) throw SchemaError("--kind", "unknown kind '" + config.kind + "'");
  GenOptions g;
  g.kind = *kind;
  g.atoms = config.atoms;
  g.seed = config.seed;
  if (!config.knots.empty()) {
    try {
      g.knots = parse_knots(config.knots);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("--knots", e.what());
    }
  }
  return {generate(g), true};
}

Outcome verify_command(const RunConfig& config, std::ostream& err) {
  VerifyOptions v{config.seed, config.cases, config.tol, config.suite};
  const VerifyReport report = run_verify(v);
  for (const auto& s : report.suites) {
    err << (s.failed == 0 ? "PASS " : "FAIL ") << s.name << "  " << s.passed << "/" << s.passed + s.failed
        << "  " << s.seconds << " s\n";
  }
  return {report.to_json(config.timings), report.ok()};
}

Outcome dispatch(const RunConfig& config, std::istream& in, std::ostream& err) {
  switch (config.command) {
    case Command::Gen: return gen_command(config);
    case Command::Verify: return verify_command(config, err);
    case Command::Decompose: return decompose(read_input(config, in));
    case Command::Integrate: return integrate_command(read_input(config, in), config.tol);
    case Command::Pushforward: return pushforward_command(read_input(config, in));
    case Command::FindInvariant: return find_invariant(read_input(config, in), config.tol);
  }
  throw std::invalid_argument("unknown command");
}

void emit(const RunConfig& config, const Json& body, std::ostream& out) {
  const std::string text = body.dump(2) + "\n";
  if (config.output_path.empty() || config.output_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + config.output_path + "'");
  file << text;
}

Json error_json(std::string_view kind, const std::string& message, const std::string& where = {}) {
  Json j = {{"error", kind}, {"message", message}};
  if (!where.empty()) j["where"] = where;
  return j;
}

}  // namespace

std::optional<Command> command_from_string(std::string_view s) {
  if (s == "decompose") return Command::Decompose;
  if (s == "integrate") return Command::Integrate;
  if (s == "pushforward") return Command::Pushforward;
  if (s == "find-invariant") return Command::FindInvariant;
  if (s == "verify") return Command::Verify;
  if (s == "gen") return Command::Gen;
  return std::nullopt;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Decompose: return "decompose";
    case Command::Integrate: return "integrate";
    case Command::Pushforward: return "pushforward";
    case Command::FindInvariant: return "find-invariant";
    case Command::Verify: return "verify";
    case Command::Gen: return "gen";
  }
  return "verify";
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.tol > 0.0)) throw SchemaError("--tol", "must be positive");
    if (config.cases == 0) throw SchemaError("--cases", "must be positive");
    const Outcome o = dispatch(config, in, err);
    emit(config, o.body, out);
    return o.checks_pass ? kExitOk : kExitCheckFailed;
  } catch (const InvariantViolation& e) {
    err << error_json("invariant_violation", e.what()).dump(2) << "\n";
    return kExitCheckFailed;
  } catch (const SchemaError& e) {
    err << error_json("schema", e.what(), e.where().empty() ? "/" : e.where()).dump(2) << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    err << error_json("schema", e.what()).dump(2) << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << error_json("input", e.what()).dump(2) << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << error_json("input", e.what()).dump(2) << "\n";
    return kExitInput;
  } catch (const std::length_error& e) {
    err << error_json("input", e.what()).dump(2) << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump(2) << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace bimeasure::cli
