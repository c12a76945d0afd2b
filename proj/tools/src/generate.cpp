#include "bimeasure/cli/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bimeasure::cli {

namespace {

double small_int(Rng& rng, int lo, int hi) { return static_cast<double>(rng.integer(lo, hi)); }

Bicomplex random_bicomplex(Rng& rng) {
  const double a = small_int(rng, -5, 5);
  const double b = small_int(rng, -5, 5);
  const double c = small_int(rng, -5, 5);
  const double d = small_int(rng, -5, 5);
  return {{a, b}, {c, d}};
}

double parse_double(std::string_view s) {
  // std::from_chars for double is available from GCC 11.
  double value = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("bad number '" + std::string(s) + "' in knots");
  }
  return value;
}

double evaluate(const Knots& knots, double x) {
  for (std::size_t k = 1; k < knots.size(); ++k) {
    if (x <= knots[k].first) {
      const auto [x0, y0] = knots[k - 1];
      const auto [x1, y1] = knots[k];
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return knots.back().second;
}

}  // namespace

std::optional<GenKind> gen_kind_from_string(std::string_view s) {
  if (s == "t-measure") return GenKind::TMeasure;
  if (s == "d-measure") return GenKind::DMeasure;
  if (s == "signed-measure") return GenKind::SignedMeasure;
  if (s == "d-probability") return GenKind::DProbability;
  if (s == "function") return GenKind::Function;
  if (s == "map") return GenKind::Map;
  if (s == "interval-map-discretization") return GenKind::IntervalMapDiscretization;
  return std::nullopt;
}

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::TMeasure: return "t-measure";
    case GenKind::DMeasure: return "d-measure";
    case GenKind::SignedMeasure: return "signed-measure";
    case GenKind::DProbability: return "d-probability";
    case GenKind::Function: return "function";
    case GenKind::Map: return "map";
    case GenKind::IntervalMapDiscretization: return "interval-map-discretization";
  }
  return "t-measure";
}

Knots tent_knots() { return {{0.0, 0.0}, {0.5, 1.0}, {1.0, 0.0}}; }

Knots parse_knots(std::string_view text) {
  Knots knots;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("knot '" + std::string(item) + "' is not of the form x:y");
    }
    knots.emplace_back(parse_double(item.substr(0, colon)), parse_double(item.substr(colon + 1)));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (knots.size() < 2 || knots.front().first != 0.0 || knots.back().first != 1.0) {
    throw std::invalid_argument("knots must start at x = 0 and end at x = 1");
  }
  for (std::size_t k = 1; k < knots.size(); ++k) {
    if (!(knots[k].first > knots[k - 1].first)) {
      throw std::invalid_argument("knot abscissae must be strictly increasing");
    }
  }
  return knots;
}

TMeasure random_t_measure(Rng& rng, const FiniteSpace& space) {
  std::vector<Bicomplex> masses(space.size());
  for (auto& m : masses) m = random_bicomplex(rng);
  return TMeasure(space, std::move(masses));
}

SignedDMeasure random_signed_measure(Rng& rng, const FiniteSpace& space) {
  std::vector<Hyperbolic> masses(space.size());
  for (auto& m : masses) {
    const double u = small_int(rng, -5, 5);
    const double v = small_int(rng, -5, 5);
    m = {u, v};
  }
  return SignedDMeasure(space, std::move(masses));
}

DMeasure random_d_measure(Rng& rng, const FiniteSpace& space) {
  std::vector<Hyperbolic> masses(space.size());
  for (auto& m : masses) {
    const double u = small_int(rng, 0, 5);
    const double v = small_int(rng, 0, 5);
    m = {u, v};
  }
  return DMeasure(space, std::move(masses));
}

DProbability random_d_probability(Rng& rng, const FiniteSpace& space) {
  std::vector<Hyperbolic> weights(space.size());
  Hyperbolic total;
  for (auto& w : weights) {
    const double u = small_int(rng, 1, 9);
    const double v = small_int(rng, 1, 9);
    w = {u, v};
    total += w;
  }
  for (auto& w : weights) w = {w.e1 / total.e1, w.e2 / total.e2};
  return DProbability(space, std::move(weights));
}

TFunction random_function(Rng& rng, const FiniteSpace& space) {
  std::vector<Bicomplex> values(space.size());
  for (auto& v : values) v = random_bicomplex(rng);
  return TFunction(space, std::move(values));
}

PointMap random_map(Rng& rng, const FiniteSpace& space) {
  std::vector<std::size_t> image(space.size());
  for (auto& y : image) y = rng.index(space.size());
  return PointMap(space, std::move(image));
}

PointMap discretize_interval_map(const Knots& knots, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("need at least one bin");
  std::vector<std::size_t> image(bins);
  const double n = static_cast<double>(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    const double y = std::clamp(evaluate(knots, (static_cast<double>(k) + 0.5) / n), 0.0, 1.0);
    image[k] = std::min(static_cast<std::size_t>(std::floor(y * n)), bins - 1);
  }
  return PointMap(FiniteSpace::indexed(bins), std::move(image));
}

Json generate(const GenOptions& options) {
  if (options.atoms == 0) throw std::invalid_argument("atoms must be positive");
  Rng rng(options.seed);
  const FiniteSpace space = FiniteSpace::indexed(options.atoms);
  switch (options.kind) {
    case GenKind::TMeasure:
      return measure_document_to_json(random_t_measure(rng, space));
    case GenKind::DMeasure:
      return measure_document_to_json(random_d_measure(rng, space));
    case GenKind::SignedMeasure:
      return measure_document_to_json(random_signed_measure(rng, space));
    case GenKind::DProbability:
      return measure_document_to_json(random_d_probability(rng, space).measure());
    case GenKind::Function:
      return Json{{"space", space_to_json(space)},
                  {"function", function_to_json(random_function(rng, space))}};
    case GenKind::Map:
      return Json{{"space", space_to_json(space)}, {"map", map_to_json(random_map(rng, space))}};
    case GenKind::IntervalMapDiscretization: {
      const PointMap f = discretize_interval_map(options.knots, options.atoms);
      Json knots = Json::array();
      for (const auto& [x, y] : options.knots) knots.push_back({x, y});
      return Json{{"space", space_to_json(f.space())}, {"map", map_to_json(f)},
                  {"knots", knots}, {"bins", options.atoms}};
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace bimeasure::cli
