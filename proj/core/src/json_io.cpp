#include "bimeasure/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bimeasure {

namespace {

std::string child(const std::string& where, const std::string& key) {
  // JSON pointer escaping for '~' and '/'.
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return where + "/" + escaped;
}

std::string child(const std::string& where, std::size_t index) {
  return where + "/" + std::to_string(index);
}

const Json& require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  return j;
}

const Json& require_key(const Json& j, const char* key, const std::string& where) {
  require_object(j, where);
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(where, key), "missing");
  return *it;
}

std::size_t atom_index(const FiniteSpace& space, const std::string& label, const std::string& where) {
  if (!space.contains(label)) throw SchemaError(where, "unknown atom '" + label + "'");
  return space.index_of(label);
}

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) throw SchemaError(where, "expected [re, im]");
    return {number_from_json(j[0], child(where, 0)), number_from_json(j[1], child(where, 1))};
  }
  return {number_from_json(j, where), 0.0};
}

Json complex_to_json(const Complex& c) {
  return Json::array({number_to_json(c.real()), number_to_json(c.imag())});
}

template <class Value, class Parse>
std::vector<Value> atom_table(const FiniteSpace& space, const Json& j, const std::string& where,
                              Parse parse) {
  require_object(j, where);
  std::vector<Value> values(space.size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string at = child(where, it.key());
    values[atom_index(space, it.key(), at)] = parse(it.value(), at);
  }
  return values;
}

}  // namespace

Json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf" || s == "+inf" || s == "Infinity") return std::numeric_limits<double>::infinity();
    if (s == "-inf" || s == "-Infinity") return -std::numeric_limits<double>::infinity();
    if (s == "nan" || s == "NaN") return std::numeric_limits<double>::quiet_NaN();
  }
  throw SchemaError(where, "expected a number");
}

Json to_json_value(Hyperbolic h) {
  return Json{{"e1", number_to_json(h.e1)}, {"e2", number_to_json(h.e2)}};
}

Json to_json_value(const Bicomplex& b) {
  return Json{{"e1", complex_to_json(b.e1)}, {"e2", complex_to_json(b.e2)}};
}

Hyperbolic hyperbolic_from_json(const Json& j, const std::string& where) {
  const Bicomplex b = bicomplex_from_json(j, where);
  if (!b.is_hyperbolic()) throw SchemaError(where, "expected a hyperbolic number");
  return b.real_part();
}

Bicomplex bicomplex_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "e1" && it.key() != "e2") {
      throw SchemaError(child(where, it.key()), "unexpected key");
    }
  }
  return {complex_from_json(require_key(j, "e1", where), child(where, "e1")),
          complex_from_json(require_key(j, "e2", where), child(where, "e2"))};
}

Json space_to_json(const FiniteSpace& space) {
  return Json{{"atoms", Json(std::vector<std::string>(space.labels().begin(), space.labels().end()))}};
}

FiniteSpace space_from_json(const Json& j, const std::string& where) {
  const Json& atoms = require_key(j, "atoms", where);
  const std::string at = child(where, "atoms");
  if (!atoms.is_array() || atoms.empty()) throw SchemaError(at, "expected a nonempty list of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!atoms[i].is_string()) throw SchemaError(child(at, i), "expected a string label");
    labels.push_back(atoms[i].get<std::string>());
  }
  try {
    return FiniteSpace(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(at, e.what());
  }
}

Json set_to_json(const FiniteSpace& space, const SetMask& set) {
  std::vector<std::string> labels;
  for (auto i : set.members()) labels.push_back(space.label(i));
  std::sort(labels.begin(), labels.end());
  return labels;
}

SetMask set_from_json(const FiniteSpace& space, const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected a list of atom labels");
  SetMask m(space.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw SchemaError(child(where, i), "expected a string label");
    m.set(atom_index(space, j[i].get<std::string>(), child(where, i)));
  }
  return m;
}

Json measure_to_json(const TMeasure& mu) {
  if (classify_measure(mu) != MeasureKind::T) return measure_to_json(SignedDMeasure::from(mu));
  Json out = Json::object();
  for (std::size_t i = 0; i < mu.size(); ++i) out[mu.space().label(i)] = to_json_value(mu.atom(i));
  return out;
}

Json measure_to_json(const SignedDMeasure& mu) {
  Json out = Json::object();
  for (std::size_t i = 0; i < mu.size(); ++i) out[mu.space().label(i)] = to_json_value(mu.atom(i));
  return out;
}

TMeasure measure_from_json(const FiniteSpace& space, const Json& j, const std::string& where) {
  return TMeasure(space, atom_table<Bicomplex>(space, j, where, bicomplex_from_json));
}

Json function_to_json(const TFunction& f) {
  const auto values = f.values();
  const bool hyperbolic =
      std::all_of(values.begin(), values.end(), [](const Bicomplex& b) { return b.is_hyperbolic(); });
  Json out = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[f.space().label(i)] = hyperbolic ? to_json_value(f[i].real_part()) : to_json_value(f[i]);
  }
  return out;
}

TFunction function_from_json(const FiniteSpace& space, const Json& j, const std::string& where) {
  return TFunction(space, atom_table<Bicomplex>(space, j, where, bicomplex_from_json));
}

Json map_to_json(const PointMap& f) {
  Json out = Json::object();
  for (std::size_t x = 0; x < f.size(); ++x) out[f.space().label(x)] = f.space().label(f(x));
  return out;
}

PointMap map_from_json(const FiniteSpace& space, const Json& j, const std::string& where) {
  require_object(j, where);
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> image(space.size(), kUnset);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string at = child(where, it.key());
    const std::size_t x = atom_index(space, it.key(), at);
    if (!it.value().is_string()) throw SchemaError(at, "expected a target atom label");
    image[x] = atom_index(space, it.value().get<std::string>(), at);
  }
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x] == kUnset) throw SchemaError(child(where, space.label(x)), "map is not total");
  }
  return PointMap(space, std::move(image));
}

std::optional<MeasureKind> kind_from_string(std::string_view s) {
  if (s == "T") return MeasureKind::T;
  if (s == "D") return MeasureKind::D;
  if (s == "D+") return MeasureKind::DPlus;
  if (s == "signedD") return MeasureKind::SignedD;
  return std::nullopt;
}

MeasureDocument measure_document_from_json(const Json& j) {
  require_object(j, "");
  FiniteSpace space = space_from_json(require_key(j, "space", ""), "/space");
  TMeasure mu = measure_from_json(space, require_key(j, "measure", ""), "/measure");
  std::optional<MeasureKind> hint;
  if (auto it = j.find("kind_hint"); it != j.end()) {
    if (!it->is_string()) throw SchemaError("/kind_hint", "expected a string");
    hint = kind_from_string(it->get<std::string>());
    if (!hint) throw SchemaError("/kind_hint", "expected one of T, D, D+, signedD");
    const MeasureKind actual = classify_measure(mu);
    if (static_cast<int>(actual) > static_cast<int>(*hint)) {
      throw SchemaError("/kind_hint", "masses do not fit kind " + std::string(to_string(*hint)) +
                                          " (data is " + std::string(to_string(actual)) + ")");
    }
  }
  return {std::move(space), std::move(mu), hint};
}

Json measure_document_to_json(const TMeasure& mu) {
  return Json{{"space", space_to_json(mu.space())},
              {"measure", measure_to_json(mu)},
              {"kind_hint", std::string(to_string(classify_measure(mu)))}};
}

DMeasure require_d_measure(const TMeasure& mu, const std::string& where) {
  try {
    return DMeasure::from(mu);
  } catch (const std::domain_error& e) {
    throw SchemaError(where, e.what());
  }
}

}  // namespace bimeasure
