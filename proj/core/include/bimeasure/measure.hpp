#pragma once

/**
 * @file measure.hpp
 * @brief Finite atomic measurable spaces and T-, D- and signed D-measures.
 *
 * The sigma-algebra is always the full power set of a finite atom set, so a
 * measure is determined by its atom masses and mu(E) is the sum of the masses
 * of the atoms in E (in ascending atom order). Countable additivity reduces to
 * finite additivity here.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bimeasure/hyperbolic.hpp"

namespace bimeasure {

/// Two objects were built on different atom sets.
class SpaceMismatch : public std::invalid_argument {
 public:
  SpaceMismatch() : std::invalid_argument("objects live on different spaces") {}
};

/// A documented size cap of an exhaustive routine was exceeded.
class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Hard cap for routines that enumerate every subset of X.
inline constexpr std::size_t kMaxEnumeratedAtoms = 20;

/// Relative slack for inequalities that hold exactly in real arithmetic but
/// compare two differently rounded sums.
inline constexpr double kRoundingAllowance = 1e-12;

/**
 * Labelled finite atom set. Copies share the label table, so passing spaces
 * around by value is cheap.
 */
class FiniteSpace {
 public:
  /// Throws std::invalid_argument on empty or duplicate labels.
  explicit FiniteSpace(std::vector<std::string> labels);
  /// Atoms labelled "0", "1", ..., "n-1".
  static FiniteSpace indexed(std::size_t n);

  std::size_t size() const { return data_->labels.size(); }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  std::span<const std::string> labels() const { return data_->labels; }
  /// Throws std::out_of_range for unknown labels.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Subset of a finite space's atoms.
class SetMask {
 public:
  SetMask() = default;
  explicit SetMask(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  static SetMask empty(std::size_t width) { return SetMask(width); }
  static SetMask full(std::size_t width);
  static SetMask singleton(std::size_t width, std::size_t atom);
  /// Low `width` bits of `bits`; width must be <= 64.
  static SetMask from_bits(std::size_t width, std::uint64_t bits);

  std::size_t width() const { return width_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  SetMask& set(std::size_t i, bool value = true);
  std::size_t count() const;
  bool none() const { return count() == 0; }
  /// Indices of the members in ascending order.
  std::vector<std::size_t> members() const;

  SetMask operator~() const;
  SetMask& operator&=(const SetMask& o);
  SetMask& operator|=(const SetMask& o);
  friend SetMask operator&(SetMask a, const SetMask& b) { return a &= b; }
  friend SetMask operator|(SetMask a, const SetMask& b) { return a |= b; }
  friend bool operator==(const SetMask&, const SetMask&) = default;

 private:
  void require_same_width(const SetMask& o) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Strictest class the atom masses admit. DPlus < D < SignedD < T.
enum class MeasureKind { DPlus, D, SignedD, T };

std::string_view to_string(MeasureKind kind);

/**
 * Atom-indexed table of masses of type Value (Bicomplex or Hyperbolic).
 */
template <class Value>
class BasicMeasure {
 public:
  using value_type = Value;

  BasicMeasure(FiniteSpace space, std::vector<Value> masses)
      : space_(std::move(space)), masses_(std::move(masses)) {
    if (masses_.size() != space_.size()) {
      throw std::invalid_argument("mass table size does not match the space");
    }
  }
  /// Zero measure on `space`.
  explicit BasicMeasure(FiniteSpace space)
      : space_(std::move(space)), masses_(space_.size()) {}

  const FiniteSpace& space() const { return space_; }
  std::size_t size() const { return masses_.size(); }
  const Value& atom(std::size_t i) const { return masses_.at(i); }
  std::span<const Value> masses() const { return masses_; }

  /// mu(E): sum over the atoms of E in ascending order.
  Value operator()(const SetMask& e) const {
    if (e.width() != size()) throw SpaceMismatch();
    Value sum{};
    for (std::size_t i = 0; i < masses_.size(); ++i) {
      if (e.test(i)) sum += masses_[i];
    }
    return sum;
  }

  Value total() const {
    Value sum{};
    for (const auto& m : masses_) sum += m;
    return sum;
  }

  friend bool operator==(const BasicMeasure&, const BasicMeasure&) = default;

 protected:
  FiniteSpace space_;
  std::vector<Value> masses_;
};

/// Complex measure pair mu1 e1 + mu2 e2.
class TMeasure : public BasicMeasure<Bicomplex> {
 public:
  using BasicMeasure::BasicMeasure;
};

/// Hyperbolic (real-component) atom masses of either sign. NaN is rejected.
class SignedDMeasure : public BasicMeasure<Hyperbolic> {
 public:
  SignedDMeasure(FiniteSpace space, std::vector<Hyperbolic> masses);
  explicit SignedDMeasure(FiniteSpace space) : BasicMeasure(std::move(space)) {}
  /// Throws std::domain_error("not a signed D-measure") if any mass has an imaginary part.
  static SignedDMeasure from(const TMeasure& mu);

  TMeasure to_t() const;
  // Every signed D-measure is a T-measure.
  operator TMeasure() const { return to_t(); }  // NOLINT
};

/// Atom masses in D+ (components in [0, +inf]).
class DMeasure : public SignedDMeasure {
 public:
  DMeasure(FiniteSpace space, std::vector<Hyperbolic> masses);
  explicit DMeasure(FiniteSpace space) : SignedDMeasure(std::move(space)) {}
  /// Throws std::domain_error("not a D-measure") unless every mass lies in D+.
  static DMeasure from(const TMeasure& mu);
};

MeasureKind classify_measure(const TMeasure& mu);

/// mu(E).
Bicomplex measure_of(const TMeasure& mu, const SetMask& e);

/// |mu|_D(E) via the singleton partition, which attains the supremum on atoms.
Hyperbolic total_variation(const TMeasure& mu, const SetMask& e);

/// Largest atom count total_variation_bruteforce accepts.
inline constexpr std::size_t kMaxBruteforcePartitionAtoms = 12;

/**
 * |mu|_D(E) by literal maximisation of sum_k |mu(E_k)|_D over every set
 * partition {E_k} of E (componentwise sup). Throws SizeCapExceeded when |E| > 12.
 */
Hyperbolic total_variation_bruteforce(const TMeasure& mu, const SetMask& e);

/// |mu|_D as a D-measure: atom masses |mu({x})|_D.
DMeasure modulus_measure(const TMeasure& mu);

TMeasure measure_add(const TMeasure& a, const TMeasure& b);
TMeasure measure_scale(Hyperbolic c, const TMeasure& a);

/**
 * |mu_i(E)| <= lambda_i(E) for every E subset of X and i = 1, 2, up to a
 * relative rounding allowance of kRoundingAllowance.
 * Throws SizeCapExceeded when |X| > kMaxEnumeratedAtoms.
 */
bool dominates(const DMeasure& lambda, const TMeasure& mu);

/// Both components of |mu|_D(X) are finite reals.
bool is_finite(const TMeasure& mu);

/**
 * The literal signed range condition: mu(E) lies in D+ or in D- for every E.
 * Stricter than SignedDMeasure, which only asks for real atom masses.
 * Throws SizeCapExceeded when |X| > kMaxEnumeratedAtoms.
 */
bool has_signed_range(const SignedDMeasure& mu);

/**
 * mu_hat(A) / mu_hat(X). If one component of the total is zero, only the other
 * component is rescaled, giving total e1 or e2.
 * Throws std::domain_error for the zero measure or a non-finite total.
 */
DMeasure normalize_to_probability(const DMeasure& mu_hat);

}  // namespace bimeasure
