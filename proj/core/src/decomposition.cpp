#include "bimeasure/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "subsets.hpp"

namespace bimeasure {

namespace {

void require_same_space(const FiniteSpace& a, const FiniteSpace& b) {
  if (!(a == b)) throw SpaceMismatch();
}

bool nonzero(const Complex& c) { return c != Complex{}; }

// Relative closeness used by the internal self-checks.
bool close(Hyperbolic a, Hyperbolic b, double scale) {
  const double tol = 1e-12 * std::max(1.0, scale);
  return std::fabs(a.e1 - b.e1) <= tol && std::fabs(a.e2 - b.e2) <= tol;
}

bool close(const Complex& a, const Complex& b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

Hyperbolic plus_formula(Hyperbolic in_a, Hyperbolic in_c, Hyperbolic in_d) {
  const Hyperbolic c = d_modulus(in_c);
  const Hyperbolic d = d_modulus(in_d);
  return in_a + kE1 * c + kE2 * d;
}

Hyperbolic minus_formula(Hyperbolic in_b, Hyperbolic in_c, Hyperbolic in_d) {
  const Hyperbolic c = d_modulus(in_c);
  const Hyperbolic d = d_modulus(in_d);
  return -in_b - in_c - in_d + kE1 * c + kE2 * d;
}

TMeasure restrict_components(const TMeasure& lambda, const DMeasure& mu, bool keep_supported) {
  std::vector<Bicomplex> out(lambda.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    const Bicomplex& l = lambda.atom(x);
    const Hyperbolic m = mu.atom(x);
    out[x].e1 = ((m.e1 > 0.0) == keep_supported) ? l.e1 : Complex{};
    out[x].e2 = ((m.e2 > 0.0) == keep_supported) ? l.e2 : Complex{};
  }
  return TMeasure(lambda.space(), std::move(out));
}

}  // namespace

JordanPair jordan(const SignedDMeasure& mu) {
  std::vector<Hyperbolic> plus(mu.size());
  std::vector<Hyperbolic> minus(mu.size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    const Hyperbolic m = mu.atom(x);
    plus[x] = {std::max(0.0, m.e1), std::max(0.0, m.e2)};
    minus[x] = {std::max(0.0, -m.e1), std::max(0.0, -m.e2)};
  }
  return {DMeasure(mu.space(), std::move(plus)), DMeasure(mu.space(), std::move(minus))};
}

TFunction polar_measure(const TMeasure& mu) {
  const std::vector<Bicomplex> masses(mu.masses().begin(), mu.masses().end());
  return polar_decompose_function(TFunction(mu.space(), masses));
}

Hyperbolic hahn_positive_part(const SignedDMeasure& mu, const HahnPartition& p, const SetMask& e) {
  return plus_formula(mu(e & p.A), mu(e & p.C), mu(e & p.D));
}

Hyperbolic hahn_negative_part(const SignedDMeasure& mu, const HahnPartition& p, const SetMask& e) {
  return minus_formula(mu(e & p.B), mu(e & p.C), mu(e & p.D));
}

HahnResult hahn(const SignedDMeasure& mu) {
  const std::size_t n = mu.size();
  const TFunction h = polar_measure(mu);
  HahnResult r{{SetMask(n), SetMask(n), SetMask(n), SetMask(n)}, false, false};
  for (std::size_t x = 0; x < n; ++x) {
    if (!h[x].is_hyperbolic()) throw InvariantViolation("polar density of a signed measure is not hyperbolic");
    const Hyperbolic s = h[x].real_part();
    if (s == Hyperbolic{1, 1}) {
      r.partition.A.set(x);
    } else if (s == Hyperbolic{-1, -1}) {
      r.partition.B.set(x);
    } else if (s == Hyperbolic{1, -1}) {
      r.partition.C.set(x);
    } else if (s == Hyperbolic{-1, 1}) {
      r.partition.D.set(x);
    } else {
      throw InvariantViolation("polar density is not of the form +-e1 +- e2");
    }
  }

  const JordanPair jp = jordan(mu);
  const double scale = total_variation(mu, SetMask::full(n)).e1 +
                       total_variation(mu, SetMask::full(n)).e2;
  r.mu_plus_check = true;
  r.mu_minus_check = true;

  if (n <= kMaxEnumeratedAtoms) {
    const auto m = mu.masses();
    const auto bits_of = [](const SetMask& s) {
      std::uint64_t b = 0;
      for (auto i : s.members()) b |= std::uint64_t{1} << i;
      return b;
    };
    const std::uint64_t a = bits_of(r.partition.A);
    const std::uint64_t b = bits_of(r.partition.B);
    const std::uint64_t c = bits_of(r.partition.C);
    const std::uint64_t d = bits_of(r.partition.D);
    detail::for_each_subset(n, [&](std::uint64_t e) {
      const Hyperbolic in_c = detail::subset_sum(m, e & c);
      const Hyperbolic in_d = detail::subset_sum(m, e & d);
      const Hyperbolic plus = plus_formula(detail::subset_sum(m, e & a), in_c, in_d);
      const Hyperbolic minus = minus_formula(detail::subset_sum(m, e & b), in_c, in_d);
      r.mu_plus_check = r.mu_plus_check && close(plus, detail::subset_sum(jp.mu_plus.masses(), e), scale);
      r.mu_minus_check =
          r.mu_minus_check && close(minus, detail::subset_sum(jp.mu_minus.masses(), e), scale);
    });
  } else {
    auto check = [&](const SetMask& e) {
      r.mu_plus_check = r.mu_plus_check &&
                        close(hahn_positive_part(mu, r.partition, e), jp.mu_plus(e), scale);
      r.mu_minus_check = r.mu_minus_check &&
                         close(hahn_negative_part(mu, r.partition, e), jp.mu_minus(e), scale);
    };
    check(SetMask::full(n));
    for (std::size_t x = 0; x < n; ++x) check(SetMask::singleton(n, x));
  }
  return r;
}

bool is_concentrated(const TMeasure& lambda, const SetMask& a) {
  if (a.width() != lambda.size()) throw SpaceMismatch();
  for (std::size_t x = 0; x < lambda.size(); ++x) {
    if (!a.test(x) && !lambda.atom(x).is_zero()) return false;
  }
  return true;
}

SetMask support(const TMeasure& lambda) {
  SetMask s(lambda.size());
  for (std::size_t x = 0; x < lambda.size(); ++x) {
    if (!lambda.atom(x).is_zero()) s.set(x);
  }
  return s;
}

bool mutually_singular(const TMeasure& a, const TMeasure& b) {
  require_same_space(a.space(), b.space());
  for (std::size_t x = 0; x < a.size(); ++x) {
    const Bicomplex& u = a.atom(x);
    const Bicomplex& v = b.atom(x);
    if ((nonzero(u.e1) && nonzero(v.e1)) || (nonzero(u.e2) && nonzero(v.e2))) return false;
  }
  return true;
}

bool abs_continuous(const TMeasure& lambda, const DMeasure& mu) {
  require_same_space(lambda.space(), mu.space());
  for (std::size_t x = 0; x < lambda.size(); ++x) {
    const Bicomplex& l = lambda.atom(x);
    const Hyperbolic m = mu.atom(x);
    if ((m.e1 == 0.0 && nonzero(l.e1)) || (m.e2 == 0.0 && nonzero(l.e2))) return false;
  }
  return true;
}

bool LatticeReport::all_hold() const {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

LatticeReport check_lattice_properties(const TMeasure& lambda, const TMeasure& lambda_p,
                                       const TMeasure& lambda_pp, const DMeasure& mu) {
  require_same_space(lambda.space(), mu.space());
  require_same_space(lambda_p.space(), mu.space());
  require_same_space(lambda_pp.space(), mu.space());

  const TMeasure mod = modulus_measure(lambda);
  const TMeasure mod_p = modulus_measure(lambda_p);
  const TMeasure mod_pp = modulus_measure(lambda_pp);
  const TMeasure mu_t = mu;
  const TMeasure sum = measure_add(lambda_p, lambda_pp);

  LatticeReport r;
  auto record = [&r](std::size_t k, bool premise, bool conclusion) {
    r.premise[k] = premise;
    r.holds[k] = !premise || conclusion;
  };

  // Concentration is upward closed, so the minimal carrier decides a) for every A.
  const SetMask carrier = support(lambda);
  record(0, is_concentrated(lambda, carrier), is_concentrated(mod, carrier));
  record(1, mutually_singular(lambda_p, lambda_pp), mutually_singular(mod_p, mod_pp));
  record(2, mutually_singular(lambda_p, mu_t) && mutually_singular(lambda_pp, mu_t),
         mutually_singular(sum, mu_t));
  record(3, abs_continuous(lambda_p, mu) && abs_continuous(lambda_pp, mu),
         abs_continuous(sum, mu));
  record(4, abs_continuous(lambda, mu), abs_continuous(mod, mu));
  record(5, abs_continuous(lambda_p, mu) && mutually_singular(lambda_pp, mu_t),
         mutually_singular(lambda_p, lambda_pp));
  record(6, abs_continuous(lambda, mu) && mutually_singular(lambda, mu_t),
         support(lambda).none());
  return r;
}

bool is_lrn_split(const TMeasure& lambda, const TMeasure& lambda_ac, const TMeasure& lambda_sing,
                  const DMeasure& mu) {
  require_same_space(lambda.space(), mu.space());
  return measure_add(lambda_ac, lambda_sing) == lambda && abs_continuous(lambda_ac, mu) &&
         mutually_singular(lambda_sing, mu);
}

LRNResult lebesgue_radon_nikodym(const TMeasure& lambda, const DMeasure& mu) {
  require_same_space(lambda.space(), mu.space());
  for (const auto& m : mu.masses()) {
    if (!m.is_finite()) throw std::domain_error("reference measure must have finite atom masses");
  }
  if (!is_finite(lambda)) throw std::domain_error("measure must have finite atom masses");

  TMeasure ac = restrict_components(lambda, mu, true);
  TMeasure sing = restrict_components(lambda, mu, false);
  std::vector<Bicomplex> h(lambda.size());
  for (std::size_t x = 0; x < h.size(); ++x) {
    const Hyperbolic m = mu.atom(x);
    if (m.e1 > 0.0) h[x].e1 = ac.atom(x).e1 / m.e1;
    if (m.e2 > 0.0) h[x].e2 = ac.atom(x).e2 / m.e2;
  }
  LRNResult r{std::move(ac), std::move(sing), TFunction(lambda.space(), std::move(h))};

  if (!is_lrn_split(lambda, r.lambda_ac, r.lambda_sing, mu)) {
    throw InvariantViolation("Lebesgue decomposition does not split lambda");
  }
  // lambda'(E) = integral of h over E for all E follows from the atoms by additivity.
  for (std::size_t x = 0; x < lambda.size(); ++x) {
    const Hyperbolic m = mu.atom(x);
    const Bicomplex via_density{r.density[x].e1 * m.e1, r.density[x].e2 * m.e2};
    const Bicomplex& direct = r.lambda_ac.atom(x);
    if (!close(via_density.e1, direct.e1) || !close(via_density.e2, direct.e2)) {
      throw InvariantViolation("Radon-Nikodym density does not reproduce lambda'");
    }
  }
  return r;
}

bool epsilon_delta_holds(const TMeasure& lambda, const DMeasure& mu, Hyperbolic epsilon,
                         Hyperbolic delta) {
  require_same_space(lambda.space(), mu.space());
  const auto l = lambda.masses();
  const auto m = mu.masses();
  bool ok = true;
  detail::for_each_subset(lambda.size(), [&](std::uint64_t bits) {
    if (!ok) return;
    const Hyperbolic mu_e = detail::subset_sum(m, bits);
    if (!precedes(d_modulus(mu_e), delta)) return;
    ok = precedes(d_modulus(detail::subset_sum(l, bits)), epsilon);
  });
  return ok;
}

std::optional<Hyperbolic> epsilon_delta_witness(const TMeasure& lambda, const DMeasure& mu,
                                                Hyperbolic epsilon) {
  if (!epsilon.is_nonnegative() || epsilon.is_zero()) {
    throw std::invalid_argument("epsilon must lie in D+ and be nonzero");
  }
  require_same_space(lambda.space(), mu.space());
  detail::require_enumerable(lambda.size());
  if (!abs_continuous(lambda, mu)) return std::nullopt;

  constexpr double kNone = std::numeric_limits<double>::infinity();
  Hyperbolic smallest{kNone, kNone};
  const auto l = lambda.masses();
  const auto m = mu.masses();
  detail::for_each_subset(lambda.size(), [&](std::uint64_t bits) {
    const Hyperbolic lam = d_modulus(detail::subset_sum(l, bits));
    const Hyperbolic mu_e = detail::subset_sum(m, bits);
    if (lam.e1 >= epsilon.e1 && mu_e.e1 > 0.0) smallest.e1 = std::min(smallest.e1, mu_e.e1);
    if (lam.e2 >= epsilon.e2 && mu_e.e2 > 0.0) smallest.e2 = std::min(smallest.e2, mu_e.e2);
  });
  return Hyperbolic{smallest.e1 == kNone ? 1.0 : 0.5 * smallest.e1,
                    smallest.e2 == kNone ? 1.0 : 0.5 * smallest.e2};
}

TMeasure indefinite_integral(const TFunction& g, const DMeasure& mu) {
  require_same_space(g.space(), mu.space());
  std::vector<Bicomplex> out(g.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    const Hyperbolic m = mu.atom(x);
    if (nonzero(g[x].e1)) out[x].e1 = g[x].e1 * m.e1;
    if (nonzero(g[x].e2)) out[x].e2 = g[x].e2 * m.e2;
  }
  return TMeasure(g.space(), std::move(out));
}

IndefiniteIntegralTV tv_of_indefinite_integral(const TFunction& g, const DMeasure& mu,
                                               const SetMask& e, double tol) {
  IndefiniteIntegralTV r;
  r.tv = total_variation(indefinite_integral(g, mu), e);
  r.integral_of_modulus = integrate_modulus(g, mu, e);
  const double scale = std::max({1.0, r.integral_of_modulus.e1, r.integral_of_modulus.e2});
  r.equal = approx_equal(r.tv, r.integral_of_modulus, tol * scale);
  return r;
}

}  // namespace bimeasure
