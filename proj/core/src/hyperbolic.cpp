#include "bimeasure/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bimeasure {

namespace {

constexpr Complex kI1{0.0, 1.0};

bool finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_positive_epsilon(Hyperbolic epsilon) {
  if (!epsilon.is_strictly_positive()) {
    throw std::invalid_argument("epsilon must be strictly positive in both components");
  }
}

}  // namespace

bool Hyperbolic::is_finite() const { return std::isfinite(e1) && std::isfinite(e2); }

bool Bicomplex::is_finite() const { return finite(e1) && finite(e2); }

Bicomplex from_canonical(Complex z1, Complex z2) {
  return {z1 - kI1 * z2, z1 + kI1 * z2};
}

Canonical to_canonical(const Bicomplex& b) {
  return {(b.e1 + b.e2) * 0.5, kI1 * (b.e1 - b.e2) * 0.5};
}

bool is_zero_divisor(const Bicomplex& b) {
  const bool zero1 = b.e1 == Complex{};
  const bool zero2 = b.e2 == Complex{};
  return zero1 != zero2;
}

Hyperbolic d_modulus(const Bicomplex& b) { return {std::abs(b.e1), std::abs(b.e2)}; }

Hyperbolic d_modulus(Hyperbolic h) { return {std::fabs(h.e1), std::fabs(h.e2)}; }

Order compare_d(Hyperbolic a, Hyperbolic b) {
  if (a == b) return Order::Equal;
  const Hyperbolic up = b - a;
  if (up.is_nonnegative()) return Order::Less;
  if ((-up).is_nonnegative()) return Order::Greater;
  return Order::Incomparable;
}

Hyperbolic sup_d(std::span<const Hyperbolic> items) {
  if (items.empty()) throw std::invalid_argument("empty set has no supremum");
  Hyperbolic s = items.front();
  for (const auto& h : items.subspan(1)) {
    s.e1 = std::max(s.e1, h.e1);
    s.e2 = std::max(s.e2, h.e2);
  }
  return s;
}

Hyperbolic invert(Hyperbolic a) {
  if (a.e1 == 0.0 || a.e2 == 0.0) throw std::domain_error("not invertible");
  return {1.0 / a.e1, 1.0 / a.e2};
}

bool approx_equal(Hyperbolic a, Hyperbolic b, double tol) {
  return std::fabs(a.e1 - b.e1) <= tol && std::fabs(a.e2 - b.e2) <= tol;
}

bool approx_equal(const Bicomplex& a, const Bicomplex& b, double tol) {
  return std::abs(a.e1 - b.e1) <= tol && std::abs(a.e2 - b.e2) <= tol;
}

bool check_convergence(std::span<const Hyperbolic> prefix, Hyperbolic candidate,
                       Hyperbolic epsilon, std::size_t tail_start) {
  require_positive_epsilon(epsilon);
  if (tail_start > prefix.size()) throw std::invalid_argument("tail_start beyond prefix");
  return std::all_of(prefix.begin() + static_cast<std::ptrdiff_t>(tail_start), prefix.end(),
                     [&](Hyperbolic z) { return precedes(d_modulus(z - candidate), epsilon); });
}

namespace {

// Some N <= n/2 whose tail sums all stay strictly below epsilon.
template <class Term>
bool has_cauchy_tail(std::span<const Hyperbolic> terms, Hyperbolic epsilon, Term term) {
  const std::size_t n = terms.size();
  for (std::size_t start = 0; start <= n / 2; ++start) {
    Hyperbolic partial;
    bool ok = true;
    for (std::size_t k = start; k < n && ok; ++k) {
      partial += term(terms[k]);
      ok = precedes(d_modulus(partial), epsilon);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

SeriesWitness check_series(std::span<const Hyperbolic> terms, Hyperbolic epsilon) {
  require_positive_epsilon(epsilon);
  SeriesWitness w;
  w.cauchy_witness = has_cauchy_tail(terms, epsilon, [](Hyperbolic z) { return z; });
  w.abs_convergent_witness =
      has_cauchy_tail(terms, epsilon, [](Hyperbolic z) { return d_modulus(z); });
  return w;
}

}  // namespace bimeasure
