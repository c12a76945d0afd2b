#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings shared by every module and the CLI.
 *
 *   Hyperbolic   {"e1": u, "e2": v}
 *   Bicomplex    {"e1": [re, im], "e2": [re, im]}
 *   space        {"atoms": ["a", "b", ...]}
 *   measure      {"a": <bicomplex>, ...}          (missing atoms have mass 0)
 *   function     {"a": <bicomplex>, ...}          (missing atoms map to 0)
 *   map          {"a": "b", ...}                  (must be total)
 *   set          ["a", "c"]                       (emitted sorted by label)
 *
 * Wherever a bicomplex is expected a hyperbolic encoding is accepted too, and
 * measures or functions whose values are all hyperbolic are written that way.
 * Non-finite numbers travel as the strings "inf", "-inf" and "nan".
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bimeasure/dynamics.hpp"
#include "bimeasure/hyperbolic.hpp"
#include "bimeasure/integration.hpp"
#include "bimeasure/measure.hpp"

namespace bimeasure {

using Json = nlohmann::json;

/// Input does not match the expected schema. `where()` is a JSON pointer.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Json number_to_json(double x);
double number_from_json(const Json& j, const std::string& where);

Json to_json_value(Hyperbolic h);
Json to_json_value(const Bicomplex& b);
Hyperbolic hyperbolic_from_json(const Json& j, const std::string& where);
Bicomplex bicomplex_from_json(const Json& j, const std::string& where);

Json space_to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const Json& j, const std::string& where = "/space");

Json set_to_json(const FiniteSpace& space, const SetMask& set);
SetMask set_from_json(const FiniteSpace& space, const Json& j, const std::string& where);

Json measure_to_json(const TMeasure& mu);
Json measure_to_json(const SignedDMeasure& mu);
TMeasure measure_from_json(const FiniteSpace& space, const Json& j, const std::string& where);

Json function_to_json(const TFunction& f);
TFunction function_from_json(const FiniteSpace& space, const Json& j, const std::string& where);

Json map_to_json(const PointMap& f);
PointMap map_from_json(const FiniteSpace& space, const Json& j, const std::string& where);

/// {"space": ..., "measure": ..., "kind_hint": ...}
struct MeasureDocument {
  FiniteSpace space;
  TMeasure measure;
  std::optional<MeasureKind> kind_hint;
};

/// Parses a measure document; a kind_hint stricter than the data is a SchemaError.
MeasureDocument measure_document_from_json(const Json& j);
Json measure_document_to_json(const TMeasure& mu);

std::optional<MeasureKind> kind_from_string(std::string_view s);

/// Narrow to a D-measure, reporting a SchemaError at `where` on failure.
DMeasure require_d_measure(const TMeasure& mu, const std::string& where);

}  // namespace bimeasure
