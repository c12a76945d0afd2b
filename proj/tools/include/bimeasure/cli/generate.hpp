#pragma once

/**
 * @file generate.hpp
 * @brief Seeded instance generators behind `bimeasure gen` and the verify suites.
 *
 * Documented distributions (all draws independent):
 *   t-measure, function   re and im of each component uniform on the integers -5..5
 *   signed-measure        each component uniform on -5..5, so an atom has
 *                         components of opposite sign with probability 2(5/11)^2
 *   d-measure             each component uniform on 0..5
 *   d-probability         each component uniform on 1..9, then normalised to e1 + e2
 *   map                   each image uniform over the atoms
 *   interval-map-discretization
 *                         bins of [0, 1] mapped through a piecewise-linear map
 *                         evaluated at the bin midpoints
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bimeasure/cli/random.hpp"
#include "bimeasure/dynamics.hpp"
#include "bimeasure/integration.hpp"
#include "bimeasure/json_io.hpp"
#include "bimeasure/measure.hpp"

namespace bimeasure::cli {

enum class GenKind {
  TMeasure,
  DMeasure,
  SignedMeasure,
  DProbability,
  Function,
  Map,
  IntervalMapDiscretization,
};

std::optional<GenKind> gen_kind_from_string(std::string_view s);
std::string_view to_string(GenKind kind);

/// Knots (x, y) of a piecewise-linear map of [0, 1], x strictly increasing from 0 to 1.
using Knots = std::vector<std::pair<double, double>>;

/// The tent map 0 -> 0, 1/2 -> 1, 1 -> 0.
Knots tent_knots();

/// Parses "x0:y0,x1:y1,..."; throws std::invalid_argument on malformed input.
Knots parse_knots(std::string_view text);

struct GenOptions {
  GenKind kind = GenKind::TMeasure;
  std::size_t atoms = 4;
  std::uint64_t seed = 0;
  Knots knots = tent_knots();
};

/// JSON instance for `gen`. Throws std::invalid_argument for zero atoms.
Json generate(const GenOptions& options);

TMeasure random_t_measure(Rng& rng, const FiniteSpace& space);
SignedDMeasure random_signed_measure(Rng& rng, const FiniteSpace& space);
DMeasure random_d_measure(Rng& rng, const FiniteSpace& space);
DProbability random_d_probability(Rng& rng, const FiniteSpace& space);
TFunction random_function(Rng& rng, const FiniteSpace& space);
PointMap random_map(Rng& rng, const FiniteSpace& space);

/// Map on `bins` atoms induced by the piecewise-linear map on bin midpoints.
PointMap discretize_interval_map(const Knots& knots, std::size_t bins);

}  // namespace bimeasure::cli
