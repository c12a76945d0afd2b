#pragma once

/**
 * @file hyperbolic.hpp
 * @brief Hyperbolic and bicomplex numbers stored in the idempotent basis.
 *
 * Every number is kept as a pair of components along the idempotents
 * e1 = (1 + j)/2 and e2 = (1 - j)/2. In that basis
 *
 *   e1 * e1 = e1,  e2 * e2 = e2,  e1 * e2 = 0,  e1 + e2 = 1,
 *
 * so addition and multiplication act componentwise. A Hyperbolic carries two
 * real components; a Bicomplex carries two complex components (in C(i1)).
 * The canonical form z1 + i2 z2 is reachable only through the conversions
 * below.
 */

#include <complex>
#include <compare>
#include <cstddef>
#include <span>
#include <utility>

namespace bimeasure {

using Complex = std::complex<double>;

/// u e1 + v e2 with real u, v.
struct Hyperbolic {
  double e1 = 0.0;
  double e2 = 0.0;

  constexpr Hyperbolic() = default;
  constexpr Hyperbolic(double u, double v) : e1(u), e2(v) {}

  /// Real number r embedded as r (e1 + e2).
  static constexpr Hyperbolic real(double r) { return {r, r}; }

  constexpr bool is_zero() const { return e1 == 0.0 && e2 == 0.0; }
  /// Membership in D+ (both components nonnegative).
  constexpr bool is_nonnegative() const { return e1 >= 0.0 && e2 >= 0.0; }
  /// Both components strictly positive.
  constexpr bool is_strictly_positive() const { return e1 > 0.0 && e2 > 0.0; }
  bool is_finite() const;

  constexpr Hyperbolic operator-() const { return {-e1, -e2}; }
  constexpr Hyperbolic& operator+=(Hyperbolic o) { e1 += o.e1; e2 += o.e2; return *this; }
  constexpr Hyperbolic& operator-=(Hyperbolic o) { e1 -= o.e1; e2 -= o.e2; return *this; }
  constexpr Hyperbolic& operator*=(Hyperbolic o) { e1 *= o.e1; e2 *= o.e2; return *this; }
  constexpr Hyperbolic& operator*=(double s) { e1 *= s; e2 *= s; return *this; }

  friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) { return a += b; }
  friend constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) { return a -= b; }
  friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) { return a *= b; }
  friend constexpr Hyperbolic operator*(double s, Hyperbolic a) { return a *= s; }
  friend constexpr Hyperbolic operator*(Hyperbolic a, double s) { return a *= s; }

  friend constexpr bool operator==(Hyperbolic, Hyperbolic) = default;
};

inline constexpr Hyperbolic kE1{1.0, 0.0};
inline constexpr Hyperbolic kE2{0.0, 1.0};
inline constexpr Hyperbolic kUnit{1.0, 1.0};
/// j = e1 - e2.
inline constexpr Hyperbolic kJ{1.0, -1.0};

/// w1 e1 + w2 e2 with complex w1, w2.
struct Bicomplex {
  Complex e1{};
  Complex e2{};

  Bicomplex() = default;
  Bicomplex(Complex w1, Complex w2) : e1(w1), e2(w2) {}
  Bicomplex(Hyperbolic h) : e1(h.e1), e2(h.e2) {}  // NOLINT: D is a subring of T

  bool is_zero() const { return e1 == Complex{} && e2 == Complex{}; }
  /// Both imaginary parts vanish, i.e. the value lies in D.
  bool is_hyperbolic() const { return e1.imag() == 0.0 && e2.imag() == 0.0; }
  /// Real parts of both components. Meaningful when is_hyperbolic().
  Hyperbolic real_part() const { return {e1.real(), e2.real()}; }
  bool is_finite() const;

  Bicomplex operator-() const { return {-e1, -e2}; }
  Bicomplex& operator+=(const Bicomplex& o) { e1 += o.e1; e2 += o.e2; return *this; }
  Bicomplex& operator-=(const Bicomplex& o) { e1 -= o.e1; e2 -= o.e2; return *this; }
  Bicomplex& operator*=(const Bicomplex& o) { e1 *= o.e1; e2 *= o.e2; return *this; }

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
  friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
  friend Bicomplex operator*(double s, Bicomplex a) { a.e1 *= s; a.e2 *= s; return a; }

  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;
};

/// Canonical (z1, z2) pair of z1 + i2 z2, both in C(i1).
struct Canonical {
  Complex z1{};
  Complex z2{};
};

/// w1 = z1 - i1 z2, w2 = z1 + i1 z2.
Bicomplex from_canonical(Complex z1, Complex z2);
/// z1 = (w1 + w2)/2, z2 = i1 (w1 - w2)/2.
Canonical to_canonical(const Bicomplex& b);

/// Nonzero with a vanishing idempotent component (equivalently z1^2 + z2^2 = 0).
bool is_zero_divisor(const Bicomplex& b);

/// |w1| e1 + |w2| e2, always in D+.
Hyperbolic d_modulus(const Bicomplex& b);
Hyperbolic d_modulus(Hyperbolic h);

/// Result of the hyperbolic partial order. Less means a precedes b strictly.
enum class Order { Less, Equal, Greater, Incomparable };

/// a <= b iff b - a lies in D+. Exact, no tolerance.
Order compare_d(Hyperbolic a, Hyperbolic b);

/// a <=_D b.
inline bool precedes_or_equal(Hyperbolic a, Hyperbolic b) {
  auto o = compare_d(a, b);
  return o == Order::Less || o == Order::Equal;
}
/// a <_D b: a <=_D b and a != b. Note this only needs one component strict.
inline bool precedes(Hyperbolic a, Hyperbolic b) { return compare_d(a, b) == Order::Less; }

/// Componentwise maxima. Throws std::invalid_argument on an empty range.
Hyperbolic sup_d(std::span<const Hyperbolic> items);

/// Componentwise reciprocal. Throws std::domain_error unless both components are nonzero.
Hyperbolic invert(Hyperbolic a);

/// Componentwise absolute difference bounded by tol in both components.
bool approx_equal(Hyperbolic a, Hyperbolic b, double tol);
bool approx_equal(const Bicomplex& a, const Bicomplex& b, double tol);

// Finite-prefix witnesses for the limit definitions. They inspect only the
// data supplied, so a `true` is evidence on the prefix, not a proof about the
// infinite tail.

/**
 * True iff |prefix[n] - candidate|_D <_D epsilon for every index n >= tail_start.
 * Indices are zero-based into `prefix`. tail_start == prefix.size() is vacuous.
 *
 * Throws std::invalid_argument if epsilon is not strictly positive in both
 * components or tail_start exceeds prefix.size().
 */
bool check_convergence(std::span<const Hyperbolic> prefix, Hyperbolic candidate,
                       Hyperbolic epsilon, std::size_t tail_start);

struct SeriesWitness {
  bool cauchy_witness = false;
  bool abs_convergent_witness = false;
};

/**
 * Looks for a start N <= terms.size()/2 such that every partial tail sum
 * sum_{k=N}^{N+m} terms[k] stays <_D epsilon (cauchy_witness), and the same
 * for the D-moduli of the terms (abs_convergent_witness). Requiring N in the
 * first half keeps the witness from degenerating into an empty tail.
 */
SeriesWitness check_series(std::span<const Hyperbolic> terms, Hyperbolic epsilon);

}  // namespace bimeasure
