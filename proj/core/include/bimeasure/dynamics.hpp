#pragma once

/**
 * @file dynamics.hpp
 * @brief Push-forward of D-probability measures under a self-map of a finite
 *        space, invariance, and construction of invariant measures.
 *
 * A compact metric space is stood in for by a finite atom set; continuity and
 * compactness statements become finite-prefix probes and closure checks.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "bimeasure/hyperbolic.hpp"
#include "bimeasure/integration.hpp"
#include "bimeasure/measure.hpp"

namespace bimeasure {

/// Self-map of a finite space, stored as an image table.
class PointMap {
 public:
  /// Throws std::invalid_argument if an image index is out of range.
  PointMap(FiniteSpace space, std::vector<std::size_t> image);

  static PointMap identity(FiniteSpace space);

  const FiniteSpace& space() const { return space_; }
  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  std::span<const std::size_t> image() const { return image_; }

  /// f^{-1}(A).
  SetMask preimage(const SetMask& a) const;
  /// phi o f.
  TFunction pullback(const TFunction& phi) const;

 private:
  FiniteSpace space_;
  std::vector<std::size_t> image_;
};

/// Which of the admissible totals e1 + e2, e1, e2 a D-probability carries.
enum class ProbabilityTotal { Unit, E1, E2 };

/// D-measure with total mass e1 + e2, e1 or e2 (within 1e-12).
class DProbability {
 public:
  /// Throws std::domain_error if the total is not one of the admissible values.
  explicit DProbability(DMeasure measure);
  DProbability(FiniteSpace space, std::vector<Hyperbolic> masses);

  /// Point mass (e1 + e2) at `atom`.
  static DProbability point_mass(FiniteSpace space, std::size_t atom);
  /// Mass (e1 + e2)/|X| on every atom.
  static DProbability uniform(FiniteSpace space);

  const DMeasure& measure() const { return measure_; }
  operator const DMeasure&() const { return measure_; }  // NOLINT
  const FiniteSpace& space() const { return measure_.space(); }
  std::size_t size() const { return measure_.size(); }
  const Hyperbolic& atom(std::size_t i) const { return measure_.atom(i); }
  std::span<const Hyperbolic> masses() const { return measure_.masses(); }
  ProbabilityTotal total_kind() const { return total_; }

  friend bool operator==(const DProbability& a, const DProbability& b) {
    return a.measure_ == b.measure_;
  }

 private:
  DMeasure measure_;
  ProbabilityTotal total_;
};

/// (f_* mu)({y}) = sum of mu({x}) over f(x) = y.
DProbability pushforward(const PointMap& f, const DProbability& mu);

/// f_*^i mu, i >= 1. Throws std::invalid_argument for i == 0.
DProbability pushforward_iter(const PointMap& f, const DProbability& mu, std::size_t i);

/// sum over atoms of |f_* mu({x}) - mu({x})|_D.
Hyperbolic invariance_gap(const PointMap& f, const DProbability& mu);

/// Every atom satisfies |f_* mu({x}) - mu({x})|_D <_D tol (e1 + e2).
bool is_invariant(const PointMap& f, const DProbability& mu, double tol);

struct ChangeOfVariables {
  Bicomplex lhs;  ///< integral of phi d(f_* mu)
  Bicomplex rhs;  ///< integral of phi o f dmu
  bool equal = false;
};

ChangeOfVariables change_of_variables_check(const PointMap& f, const DProbability& mu,
                                            const TFunction& phi, double tol = 1e-12);

/// t a + (1 - t) b. Throws std::invalid_argument for t outside [0, 1] or
/// mismatched total kinds.
DProbability convex_combine(const DProbability& a, const DProbability& b, double t);

struct CesaroTrace {
  /// mu_n = (1/n) sum_{i<n} f_*^i mu0 for n = 1, 2, ...
  std::vector<DProbability> iterates;
  /// invariance_gap(f, mu_n) for each stored iterate.
  std::vector<Hyperbolic> gaps;
  /// Last gap <_D tol (e1 + e2).
  bool converged = false;
  /// n -> infinity limit of the averages, obtained by pushing mu0 onto the
  /// cycles of f and spreading each cycle's mass evenly over it.
  DProbability limit;
};

/**
 * Cesaro averages starting from f_*^0 mu0 = mu0, stopping at the first n whose
 * invariance gap drops below tol or at max_iter. The trace never claims the
 * invariant measure is unique; it follows mu0.
 */
CesaroTrace cesaro_invariant(const PointMap& f, const DProbability& mu0, std::size_t max_iter,
                             double tol);

/// Largest space invariant_basis_bruteforce accepts.
inline constexpr std::size_t kMaxBasisAtoms = std::size_t{1} << 16;

/// Cycles of the functional graph of f, each as ascending atom indices.
std::vector<std::vector<std::size_t>> functional_cycles(const PointMap& f);

/**
 * Uniform D-probabilities (total e1 + e2) on each cycle of f: the extremal
 * invariant measures. Throws SizeCapExceeded above kMaxBasisAtoms.
 */
std::vector<DProbability> invariant_basis_bruteforce(const PointMap& f);

/**
 * Componentwise hyperbolic weights w_c >= 0 with mu = sum_c w_c U_c over the
 * given basis measures, when mu lies in their convex hull (within tol);
 * empty otherwise. The basis must have pairwise disjoint supports.
 */
std::vector<Hyperbolic> hull_weights(std::span<const DProbability> basis, const DProbability& mu,
                                     double tol);

struct ContinuityProbe {
  /// For every test function, integral phi dmu_n is within tol of integral phi dmu_lim at the last term.
  bool antecedent = false;
  /// The same for the push-forwards.
  bool consequent = false;
  /// antecedent implies consequent. True with antecedent == false is vacuous.
  bool holds = false;
};

ContinuityProbe continuity_probe(const PointMap& f, std::span<const DProbability> mu_seq,
                                 const DProbability& mu_lim, std::span<const TFunction> test_fns,
                                 double tol);

}  // namespace bimeasure
