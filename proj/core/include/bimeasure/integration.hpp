#pragma once

/**
 * @file integration.hpp
 * @brief Bicomplex Lebesgue integration against D-measures on finite spaces.
 *
 * On a finite discrete space every value table is T-measurable, so the only
 * thing L1 membership can fail on is numeric finiteness. Integrals are
 * componentwise weighted sums taken in ascending atom order, which makes them
 * bit-reproducible.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "bimeasure/hyperbolic.hpp"
#include "bimeasure/measure.hpp"

namespace bimeasure {

/// Atom-indexed bicomplex value table.
class TFunction {
 public:
  TFunction(FiniteSpace space, std::vector<Bicomplex> values);
  /// The zero function.
  explicit TFunction(FiniteSpace space);

  static TFunction constant(FiniteSpace space, const Bicomplex& c);
  /// Characteristic function of `a` (values 0 and e1 + e2).
  static TFunction indicator(FiniteSpace space, const SetMask& a);

  const FiniteSpace& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  const Bicomplex& operator[](std::size_t i) const { return values_[i]; }
  const Bicomplex& at(std::size_t i) const { return values_.at(i); }
  std::span<const Bicomplex> values() const { return values_; }

  friend TFunction operator+(const TFunction& f, const TFunction& g);
  friend TFunction operator-(const TFunction& f, const TFunction& g);
  /// Pointwise product.
  friend TFunction operator*(const TFunction& f, const TFunction& g);
  friend TFunction operator*(const Bicomplex& c, const TFunction& f);

  friend bool operator==(const TFunction&, const TFunction&) = default;

 private:
  FiniteSpace space_;
  std::vector<Bicomplex> values_;
};

/// Atomwise D-modulus |f|_D (a D+-valued table).
TFunction fn_modulus(const TFunction& f);

/// Unimodular alpha with f = alpha |f|_D; a vanishing component of f gets alpha-component 1.
TFunction polar_decompose_function(const TFunction& f);

/// Both component sums sum_x |f_i(x)| mu_i({x}) are finite.
bool in_L1(const TFunction& f, const DMeasure& mu);

/// Integral of f over E against mu. Throws std::domain_error when f is not in L1(mu).
Bicomplex integrate(const TFunction& f, const DMeasure& mu, const SetMask& e);
/// Integral over the whole space.
Bicomplex integrate(const TFunction& f, const DMeasure& mu);

/// Integral of the D+-valued |f|_D, returned as a hyperbolic number.
Hyperbolic integrate_modulus(const TFunction& f, const DMeasure& mu, const SetMask& e);

/**
 * Integral of (alpha f + beta g) against alpha * integral(f) + beta * integral(g),
 * together with L1 closure of alpha f + beta g. Scalars are full bicomplex numbers.
 */
bool check_linearity(const TFunction& f, const TFunction& g, const Bicomplex& alpha,
                     const Bicomplex& beta, const DMeasure& mu, double tol = 1e-12);

struct ModulusInequality {
  Hyperbolic lhs;  ///< |integral of f|_D
  Hyperbolic rhs;  ///< integral of |f|_D
  bool holds = false;  ///< lhs <=_D rhs up to kRoundingAllowance relative
};

ModulusInequality check_modulus_inequality(const TFunction& f, const DMeasure& mu);

struct DCTReport {
  /// |f_ni(x)| <= g_i(x) for every n, i and x.
  bool domination_ok = false;
  /// Integral of |f_n - f|_D for each n.
  std::vector<Hyperbolic> l1_limit;
  /// Integral of f_n for each n.
  std::vector<Bicomplex> integral_trace;
  /// Last entry of l1_limit.
  Hyperbolic final_gap;
  /// |integral f_n - integral f|_D at the last term.
  Hyperbolic integral_gap;
  /// final_gap and integral_gap both <_D tol (e1 + e2).
  bool converged = false;
  /// domination_ok && converged.
  bool success = false;
};

/**
 * Runs the dominated-convergence conclusions over a finite sequence.
 * Domination failure is reported in the result, not thrown.
 * Throws SpaceMismatch if the tables live on different spaces and
 * std::invalid_argument for an empty sequence or non-positive tol.
 */
DCTReport dct_run(std::span<const TFunction> fn_seq, const TFunction& f_limit, const TFunction& g,
                  const DMeasure& mu, double tol);

}  // namespace bimeasure
