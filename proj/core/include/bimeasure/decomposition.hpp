#pragma once

/**
 * @file decomposition.hpp
 * @brief Jordan, polar, Hahn and Lebesgue-Radon-Nikodym decompositions plus
 *        the absolute-continuity / singularity predicates.
 *
 * All constructions are atomwise. On a finite atomic space every support is
 * a finite set of atoms, so:
 *   - lambda <<_T mu      iff mu_i({x}) = 0 forces lambda_i({x}) = 0,
 *   - lambda _|_T nu      iff no atom carries nonzero lambda_i and nu_i mass,
 *   - the Radon-Nikodym density is the ratio of atom masses.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "bimeasure/hyperbolic.hpp"
#include "bimeasure/integration.hpp"
#include "bimeasure/measure.hpp"

namespace bimeasure {

/// A computed result failed one of its own post-condition checks.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct JordanPair {
  DMeasure mu_plus;
  DMeasure mu_minus;
};

/// Atomwise positive and negative parts: mu = mu+ - mu-, |mu|_D = mu+ + mu-.
JordanPair jordan(const SignedDMeasure& mu);

/// h with |h(x)|_D = e1 + e2 and mu(E) = integral over E of h d|mu|_D.
/// Components of vanishing mass get h-component 1.
TFunction polar_measure(const TMeasure& mu);

struct HahnPartition {
  SetMask A;  ///< h = e1 + e2 (and zero-mass atoms)
  SetMask B;  ///< h = -e1 - e2
  SetMask C;  ///< h = e1 - e2
  SetMask D;  ///< h = -e1 + e2
};

struct HahnResult {
  HahnPartition partition;
  /// mu(E n A) + e1 |mu(E n C)|_D + e2 |mu(E n D)|_D equals mu+(E) for every checked E.
  bool mu_plus_check = false;
  /// The matching expression for mu-(E) equals the Jordan value for every checked E.
  bool mu_minus_check = false;
};

/// mu+(E) through the partition formula.
Hyperbolic hahn_positive_part(const SignedDMeasure& mu, const HahnPartition& p, const SetMask& e);
/// mu-(E) through the partition formula.
Hyperbolic hahn_negative_part(const SignedDMeasure& mu, const HahnPartition& p, const SetMask& e);

/**
 * Partition {A, B, C, D} from the polar density. Both formula checks run over
 * every E subset of X when |X| <= 20; larger spaces are checked on X and on
 * every singleton, which covers all E by additivity up to rounding.
 */
HahnResult hahn(const SignedDMeasure& mu);

/// Every atom outside `a` has zero mass in both components.
bool is_concentrated(const TMeasure& lambda, const SetMask& a);

/// Smallest set on which lambda is T-concentrated.
SetMask support(const TMeasure& lambda);

/// lambda _|_T nu: per component, no atom carries nonzero mass of both.
bool mutually_singular(const TMeasure& a, const TMeasure& b);

/// lambda <<_T mu: per component, mu-null atoms are lambda-null.
bool abs_continuous(const TMeasure& lambda, const DMeasure& mu);

/// Implication labels a) through g), in order.
inline constexpr std::array<std::string_view, 7> kLatticeLabels = {
    "a: concentration passes to |lambda|_D",
    "b: singularity passes to moduli",
    "c: sum of mu-singular measures is mu-singular",
    "d: sum of mu-continuous measures is mu-continuous",
    "e: continuity passes to |lambda|_D",
    "f: continuous and singular parts are mutually singular",
    "g: continuous and singular forces zero",
};

struct LatticeReport {
  /// Whether each hypothesis held on the inputs (false means the implication is vacuous).
  std::array<bool, 7> premise{};
  /// Whether each implication held.
  std::array<bool, 7> holds{};

  bool all_hold() const;
};

/**
 * Evaluates the seven implications on the given inputs. a) and e) concern
 * lambda; b) concerns lambda' and lambda''; c), d), f) pair lambda', lambda''
 * with mu; g) pairs lambda with mu.
 */
LatticeReport check_lattice_properties(const TMeasure& lambda, const TMeasure& lambda_p,
                                       const TMeasure& lambda_pp, const DMeasure& mu);

struct LRNResult {
  TMeasure lambda_ac;    ///< lambda'
  TMeasure lambda_sing;  ///< lambda''
  TFunction density;     ///< h
};

/**
 * lambda = lambda' + lambda'' with lambda' <<_T mu, lambda'' _|_T mu, and
 * lambda'(E) = integral over E of h d mu. Every invariant is verified before
 * returning; a failure throws InvariantViolation.
 */
LRNResult lebesgue_radon_nikodym(const TMeasure& lambda, const DMeasure& mu);

/**
 * Whether (lambda_ac, lambda_sing) is a valid split of lambda against mu:
 * the sum reproduces lambda exactly, lambda_ac <<_T mu, lambda_sing _|_T mu.
 */
bool is_lrn_split(const TMeasure& lambda, const TMeasure& lambda_ac, const TMeasure& lambda_sing,
                  const DMeasure& mu);

/**
 * delta > 0 such that |mu(E)|_D <_D delta implies |lambda(E)|_D <_D epsilon
 * for every E, or nullopt when lambda is not <<_T mu.
 *
 * delta_i is half the smallest positive mu_i(E) over subsets with
 * |lambda_i(E)| >= epsilon_i, and 1 when there is no such subset.
 * Throws std::invalid_argument unless epsilon is in D+ and nonzero, and
 * SizeCapExceeded when |X| > 20.
 */
std::optional<Hyperbolic> epsilon_delta_witness(const TMeasure& lambda, const DMeasure& mu,
                                                Hyperbolic epsilon);

/// Exhaustive check of the epsilon-delta implication for a given delta (|X| <= 20).
bool epsilon_delta_holds(const TMeasure& lambda, const DMeasure& mu, Hyperbolic epsilon,
                         Hyperbolic delta);

struct IndefiniteIntegralTV {
  Hyperbolic tv;                  ///< |lambda|_D(E) where lambda = g dmu
  Hyperbolic integral_of_modulus; ///< integral over E of |g|_D dmu
  bool equal = false;
};

IndefiniteIntegralTV tv_of_indefinite_integral(const TFunction& g, const DMeasure& mu,
                                               const SetMask& e, double tol = 1e-12);

/// lambda({x}) = g(x) mu({x}), the measure E -> integral over E of g dmu.
TMeasure indefinite_integral(const TFunction& g, const DMeasure& mu);

}  // namespace bimeasure
