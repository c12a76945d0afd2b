#include "bimeasure/cli/verify.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <string_view>

#include "bimeasure/cli/generate.hpp"
#include "bimeasure/decomposition.hpp"

namespace bimeasure::cli {

namespace {

struct Case {
  explicit Case(std::uint64_t seed) : rng(seed) {}

  Rng rng;
  Json inputs = Json::object();
  std::string failure;

  void expect(bool condition, std::string_view what) {
    if (!condition && failure.empty()) failure = what;
  }
};

using SuiteBody = std::function<void(Case&, const VerifyOptions&)>;

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

// ---- small generators and helpers -----------------------------------------

FiniteSpace random_space(Rng& rng, std::size_t lo, std::size_t hi) {
  return FiniteSpace::indexed(static_cast<std::size_t>(rng.integer(lo, hi)));
}

Bicomplex int_bicomplex(Rng& rng, int r = 5) {
  auto d = [&] { return static_cast<double>(rng.integer(-r, r)); };
  const double a = d(), b = d(), c = d(), e = d();
  return {{a, b}, {c, e}};
}

Hyperbolic int_hyperbolic(Rng& rng, int lo, int hi) {
  const auto u = static_cast<double>(rng.integer(lo, hi));
  const auto v = static_cast<double>(rng.integer(lo, hi));
  return {u, v};
}

DMeasure int_d_measure(Rng& rng, const FiniteSpace& space, int hi) {
  std::vector<Hyperbolic> m(space.size());
  for (auto& x : m) x = int_hyperbolic(rng, 0, hi);
  return DMeasure(space, std::move(m));
}

// Each component places 64 units of mass 1/64 on uniformly chosen atoms, so
// every mass is dyadic and sums are exact.
DProbability dyadic_probability(Rng& rng, const FiniteSpace& space) {
  std::vector<Hyperbolic> m(space.size());
  for (int k = 0; k < 64; ++k) {
    m[rng.index(space.size())].e1 += 1.0 / 64.0;
    m[rng.index(space.size())].e2 += 1.0 / 64.0;
  }
  return DProbability(space, std::move(m));
}

bool close(const Bicomplex& a, const Bicomplex& b, double rel) {
  const double scale = std::max({1.0, std::abs(a.e1), std::abs(a.e2)});
  return approx_equal(a, b, rel * scale);
}

bool close(Hyperbolic a, Hyperbolic b, double rel) { return close(Bicomplex(a), Bicomplex(b), rel); }

Json doc(const TMeasure& mu) { return measure_document_to_json(mu); }

Json fn(const TFunction& f) { return function_to_json(f); }

template <class F>
void for_each_subset(std::size_t n, F&& visit) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) visit(SetMask::from_bits(n, bits));
}

SetMask random_subset(Rng& rng, std::size_t n) {
  SetMask e(n);
  for (std::size_t i = 0; i < n; ++i) e.set(i, rng.coin());
  return e;
}

// ---- algebra ----------------------------------------------------------------

void algebra_ring_laws(Case& c, const VerifyOptions&) {
  const Bicomplex a = int_bicomplex(c.rng), b = int_bicomplex(c.rng), d = int_bicomplex(c.rng);
  c.inputs = {{"a", to_json_value(a)}, {"b", to_json_value(b)}, {"c", to_json_value(d)}};
  const Bicomplex zero{}, one(kUnit);
  c.expect((a + b) + d == a + (b + d), "addition is not associative");
  c.expect(a + b == b + a, "addition is not commutative");
  c.expect((a * b) * d == a * (b * d), "multiplication is not associative");
  c.expect(a * b == b * a, "multiplication is not commutative");
  c.expect(a * (b + d) == a * b + a * d, "distributivity fails");
  c.expect(a + zero == a && a * one == a, "identity elements fail");
  c.expect(a + (-a) == zero, "additive inverse fails");
  c.expect(kE1 * kE2 == Hyperbolic{} && kE1 * kE1 == kE1 && kE2 * kE2 == kE2,
           "idempotent products fail");
  c.expect(kE1 + kE2 == kUnit && kJ * kJ == kUnit, "e1 + e2 = 1 or j^2 = 1 fails");

  // Product in the canonical basis, (z1 + i2 z2)(w1 + i2 w2) with i2^2 = -1.
  const Canonical p = to_canonical(a), q = to_canonical(b);
  const Bicomplex canonical_product =
      from_canonical(p.z1 * q.z1 - p.z2 * q.z2, p.z1 * q.z2 + p.z2 * q.z1);
  c.expect(canonical_product == a * b, "idempotent product disagrees with the canonical product");
}

void algebra_canonical(Case& c, const VerifyOptions&) {
  auto u = [&] { return c.rng.uniform(-10.0, 10.0); };
  const Complex z1{u(), u()}, z2{u(), u()};
  c.inputs = {{"z1", {z1.real(), z1.imag()}}, {"z2", {z2.real(), z2.imag()}}};
  const Canonical back = to_canonical(from_canonical(z1, z2));
  c.expect(std::abs(back.z1 - z1) <= 1e-12 * 10 && std::abs(back.z2 - z2) <= 1e-12 * 10,
           "canonical round trip drifts");
  const Bicomplex b = from_canonical(z1, z2);
  const Canonical again = to_canonical(b);
  c.expect(close(from_canonical(again.z1, again.z2), b, 1e-12), "idempotent round trip drifts");
}

void algebra_zero_divisor(Case& c, const VerifyOptions&) {
  auto i = [&] { return static_cast<double>(c.rng.integer(-4, 4)); };
  const Complex z1{i(), i()};
  Complex z2{i(), i()};
  if (c.rng.coin()) z2 = (c.rng.coin() ? 1.0 : -1.0) * Complex{0.0, 1.0} * z1;
  c.inputs = {{"z1", {z1.real(), z1.imag()}}, {"z2", {z2.real(), z2.imag()}}};
  const Bicomplex b = from_canonical(z1, z2);
  const bool expected = z1 * z1 + z2 * z2 == Complex{} && !(z1 == Complex{} && z2 == Complex{});
  c.expect(is_zero_divisor(b) == expected, "zero-divisor criterion z1^2 + z2^2 = 0 fails");
}

// ---- order ------------------------------------------------------------------

void order_partial_order(Case& c, const VerifyOptions&) {
  const Hyperbolic a = int_hyperbolic(c.rng, -3, 3), b = int_hyperbolic(c.rng, -3, 3),
                   d = int_hyperbolic(c.rng, -3, 3);
  c.inputs = {{"a", to_json_value(a)}, {"b", to_json_value(b)}, {"c", to_json_value(d)}};
  auto le = [](Hyperbolic x, Hyperbolic y) { return precedes_or_equal(x, y); };
  c.expect(compare_d(a, a) == Order::Equal, "reflexivity fails");
  c.expect(!(le(a, b) && le(b, a)) || a == b, "antisymmetry fails");
  c.expect(!(le(a, b) && le(b, d)) || le(a, d), "transitivity fails");
  c.expect(le(a, b) == (b - a).is_nonnegative(), "order disagrees with b - a in D+");
  c.expect(!le(a, b) || le(a + d, b + d), "order is not translation invariant");
  const Order ab = compare_d(a, b), ba = compare_d(b, a);
  c.expect((ab == Order::Less) == (ba == Order::Greater), "compare_d is not antisymmetric");
  c.expect((ab == Order::Incomparable) == (ba == Order::Incomparable), "incomparability is not symmetric");
}

void order_sup(Case& c, const VerifyOptions&) {
  const auto k = static_cast<std::size_t>(c.rng.integer(1, 64));
  std::vector<Hyperbolic> items(k);
  for (auto& x : items) x = {c.rng.uniform(-100, 100), c.rng.uniform(-100, 100)};
  Json j = Json::array();
  for (auto x : items) j.push_back(to_json_value(x));
  c.inputs = {{"items", j}};
  const Hyperbolic s = sup_d(items);
  double m1 = items[0].e1, m2 = items[0].e2;
  for (auto x : items) {
    m1 = std::max(m1, x.e1);
    m2 = std::max(m2, x.e2);
    c.expect(precedes_or_equal(x, s), "sup is not an upper bound");
  }
  c.expect(s == Hyperbolic{m1, m2}, "sup is not the least upper bound");
  const Hyperbolic other = s + Hyperbolic{c.rng.uniform(0, 1), c.rng.uniform(0, 1)};
  c.expect(precedes_or_equal(s, other), "sup exceeds another upper bound");
}

// ---- hyperbolic analysis --------------------------------------------------

void hyperbolic_modulus(Case& c, const VerifyOptions&) {
  const Bicomplex a = int_bicomplex(c.rng), b = int_bicomplex(c.rng);
  c.inputs = {{"a", to_json_value(a)}, {"b", to_json_value(b)}};
  c.expect(close(d_modulus(a * b), d_modulus(a) * d_modulus(b), 1e-12), "|ab| != |a||b|");
  const Hyperbolic slack = Hyperbolic::real(1e-12) * (d_modulus(a) + d_modulus(b) + kUnit);
  c.expect(precedes_or_equal(d_modulus(a + b), d_modulus(a) + d_modulus(b) + slack),
           "triangle inequality fails");
  c.expect(d_modulus(a).is_nonnegative(), "modulus leaves D+");
}

void hyperbolic_series(Case& c, const VerifyOptions&) {
  const Hyperbolic r{c.rng.uniform(0.1, 0.5), c.rng.uniform(0.1, 0.5)};
  const Hyperbolic a{c.rng.uniform(-2, 2), c.rng.uniform(-2, 2)};
  c.inputs = {{"ratio", to_json_value(r)}, {"first", to_json_value(a)}};
  std::vector<Hyperbolic> terms, partial;
  Hyperbolic t = a, s;
  for (int k = 0; k < 200; ++k) {
    terms.push_back(t);
    s += t;
    partial.push_back(s);
    t *= r;
  }
  const Hyperbolic limit{a.e1 / (1 - r.e1), a.e2 / (1 - r.e2)};
  c.expect(check_convergence(partial, limit, Hyperbolic::real(1e-9), 100), "geometric partial sums do not converge");
  const SeriesWitness w = check_series(terms, Hyperbolic::real(1e-6));
  c.expect(w.cauchy_witness && w.abs_convergent_witness, "geometric series lacks a Cauchy witness");
  const std::vector<Hyperbolic> ones(200, kUnit);
  c.expect(!check_series(ones, Hyperbolic::real(0.5)).cauchy_witness, "divergent series has a witness");
}

// ---- measures -------------------------------------------------------------

void measure_total_variation(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 6);
  const bool hyperbolic = c.rng.coin();
  const TMeasure mu = hyperbolic ? random_signed_measure(c.rng, space).to_t() : random_t_measure(c.rng, space);
  const SetMask e = random_subset(c.rng, space.size());
  c.inputs = {{"measure", doc(mu)}, {"set", set_to_json(space, e)}};
  const Hyperbolic closed = total_variation(mu, e), brute = total_variation_bruteforce(mu, e);
  c.expect(hyperbolic ? closed == brute : close(closed, brute, 1e-12),
           "closed-form total variation disagrees with partition enumeration");
}

void measure_module(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const TMeasure a = random_t_measure(c.rng, space), b = random_t_measure(c.rng, space);
  const Hyperbolic k = int_hyperbolic(c.rng, -5, 5);
  const SetMask e = random_subset(c.rng, space.size()), f = random_subset(c.rng, space.size());
  c.inputs = {{"a", doc(a)}, {"b", doc(b)}, {"scalar", to_json_value(k)}};
  c.expect(measure_add(a, b) == measure_add(b, a), "measure addition is not commutative");
  c.expect(measure_scale(k, measure_add(a, b)) == measure_add(measure_scale(k, a), measure_scale(k, b)),
           "scaling does not distribute");
  const SetMask disjoint = f & ~e;
  c.expect(measure_of(a, e | disjoint) == measure_of(a, e) + measure_of(a, disjoint), "additivity fails");
  c.expect(dominates(modulus_measure(a), a), "|mu|_D does not dominate mu");
  c.expect(is_finite(a), "integer measure reported infinite");
}

void measure_normalize(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const DMeasure mu = int_d_measure(c.rng, space, 5);
  c.inputs = {{"measure", doc(mu)}};
  if (mu.total().is_zero()) return;
  const DMeasure p = normalize_to_probability(mu);
  const Hyperbolic t = mu.total(), pt = p.total();
  c.expect(std::abs(pt.e1 - (t.e1 > 0 ? 1.0 : 0.0)) <= 1e-12 && std::abs(pt.e2 - (t.e2 > 0 ? 1.0 : 0.0)) <= 1e-12,
           "normalized total is not e1 + e2, e1 or e2");
  for (std::size_t x = 0; x < mu.size(); ++x) {
    c.expect(close(p.atom(x) * t, mu.atom(x), 1e-12), "normalization is not a rescaling");
  }
}

// ---- integration ----------------------------------------------------------

void integration_linearity(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const TFunction f = random_function(c.rng, space), g = random_function(c.rng, space);
  const DMeasure mu = int_d_measure(c.rng, space, 5);
  const Bicomplex alpha = int_bicomplex(c.rng), beta = int_bicomplex(c.rng);
  c.inputs = {{"f", fn(f)}, {"g", fn(g)}, {"measure", doc(mu)},
              {"alpha", to_json_value(alpha)}, {"beta", to_json_value(beta)}};
  c.expect(check_linearity(f, g, alpha, beta, mu), "integral is not linear");
}

void integration_modulus_inequality(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const TFunction f = random_function(c.rng, space);
  const DMeasure mu = int_d_measure(c.rng, space, 5);
  c.inputs = {{"f", fn(f)}, {"measure", doc(mu)}};
  c.expect(check_modulus_inequality(f, mu).holds, "|integral f|_D exceeds integral |f|_D");
}

void integration_polar_function(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const TFunction f = random_function(c.rng, space);
  c.inputs = {{"f", fn(f)}};
  const TFunction h = polar_decompose_function(f);
  const TFunction rebuilt = h * fn_modulus(f);
  for (std::size_t x = 0; x < f.size(); ++x) {
    c.expect(std::abs(std::abs(h[x].e1) - 1) <= 1e-12 && std::abs(std::abs(h[x].e2) - 1) <= 1e-12,
             "polar factor is not unimodular");
    c.expect(close(rebuilt[x], f[x], 1e-12), "f != h |f|_D");
  }
}

void integration_dct(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  std::vector<Hyperbolic> mu_m(space.size());
  for (auto& m : mu_m) m = int_hyperbolic(c.rng, 1, 5);
  const DMeasure mu(space, std::move(mu_m));
  std::vector<Bicomplex> gv(space.size()), fv(space.size());
  auto polar_point = [&](double radius) {
    return std::polar(radius * c.rng.unit(), c.rng.uniform(0, 2 * M_PI));
  };
  for (std::size_t x = 0; x < space.size(); ++x) {
    const Hyperbolic gx{c.rng.uniform(0.5, 4), c.rng.uniform(0.5, 4)};
    gv[x] = gx;
    fv[x] = {polar_point(0.45 * gx.e1), polar_point(0.45 * gx.e2)};
  }
  const TFunction g(space, gv), f(space, fv);
  std::vector<TFunction> seq;
  for (int n = 1; n <= 100; ++n) {
    std::vector<Bicomplex> v(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
      const Bicomplex sigma{polar_point(0.5), polar_point(0.5)};
      v[x] = fv[x] + (1.0 / n) * (Bicomplex(gv[x]) * sigma);
    }
    seq.emplace_back(space, std::move(v));
  }
  c.inputs = {{"f", fn(f)}, {"g", fn(g)}, {"measure", doc(mu)}};
  const DCTReport r = dct_run(seq, f, g, mu, 1.0);
  const Hyperbolic bound = 0.05 * integrate(g, mu).real_part();
  c.expect(r.domination_ok, "sequence is not dominated by g");
  c.expect(precedes(r.final_gap, bound), "integral |f_n - f|_D is not below 0.05 integral g");
  c.expect(precedes(r.integral_gap, bound), "integrals do not converge");
}

// ---- decomposition --------------------------------------------------------

void decomposition_jordan_hahn(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 6);
  const SignedDMeasure mu = random_signed_measure(c.rng, space);
  c.inputs = {{"measure", doc(mu)}};
  const JordanPair jp = jordan(mu);
  const DMeasure modulus = modulus_measure(mu);
  for (std::size_t x = 0; x < mu.size(); ++x) {
    c.expect(jp.mu_plus.atom(x) - jp.mu_minus.atom(x) == mu.atom(x), "mu+ - mu- != mu");
    c.expect(jp.mu_plus.atom(x) + jp.mu_minus.atom(x) == modulus.atom(x), "mu+ + mu- != |mu|_D");
  }
  const HahnResult h = hahn(mu);
  c.expect(h.mu_plus_check && h.mu_minus_check, "Hahn self-check failed");
  const HahnPartition& p = h.partition;
  c.expect((p.A | p.B | p.C | p.D) == SetMask::full(mu.size()), "Hahn sets do not cover X");
  c.expect((p.A & p.B).none() && (p.A & p.C).none() && (p.A & p.D).none() && (p.B & p.C).none() &&
               (p.B & p.D).none() && (p.C & p.D).none(),
           "Hahn sets overlap");
  for_each_subset(mu.size(), [&](const SetMask& e) {
    c.expect(hahn_positive_part(mu, p, e) == jp.mu_plus(e), "Hahn positive part != Jordan mu+");
    c.expect(hahn_negative_part(mu, p, e) == jp.mu_minus(e), "Hahn negative part != Jordan mu-");
  });
}

void decomposition_polar(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 6);
  const TMeasure mu = random_t_measure(c.rng, space);
  c.inputs = {{"measure", doc(mu)}};
  const TFunction h = polar_measure(mu);
  const DMeasure modulus = modulus_measure(mu);
  for (std::size_t x = 0; x < mu.size(); ++x) {
    c.expect(std::abs(std::abs(h[x].e1) - 1) <= 1e-12 && std::abs(std::abs(h[x].e2) - 1) <= 1e-12,
             "polar density is not unimodular");
  }
  for_each_subset(mu.size(), [&](const SetMask& e) {
    c.expect(close(integrate(h, modulus, e), mu(e), 1e-12), "mu(E) != integral over E of h d|mu|_D");
  });
}

void decomposition_lrn(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 6);
  const TMeasure lambda = random_t_measure(c.rng, space);
  const DMeasure mu = int_d_measure(c.rng, space, 3);
  c.inputs = {{"lambda", doc(lambda)}, {"mu", doc(mu)}};
  const LRNResult r = lebesgue_radon_nikodym(lambda, mu);
  c.expect(measure_add(r.lambda_ac, r.lambda_sing) == lambda, "lambda' + lambda'' != lambda");
  c.expect(abs_continuous(r.lambda_ac, mu), "lambda' is not absolutely continuous");
  c.expect(mutually_singular(r.lambda_sing, mu), "lambda'' is not singular");
  for_each_subset(mu.size(), [&](const SetMask& e) {
    c.expect(close(integrate(r.density, mu, e), r.lambda_ac(e), 1e-12), "lambda'(E) != integral of h");
  });
  // Moving any nonzero amount between the parts at one atom breaks the split.
  const std::size_t x = c.rng.index(space.size());
  const Bicomplex shift = c.rng.coin() ? Bicomplex(kE1) : Bicomplex(kE2);
  std::vector<Bicomplex> ac(r.lambda_ac.masses().begin(), r.lambda_ac.masses().end());
  std::vector<Bicomplex> sing(r.lambda_sing.masses().begin(), r.lambda_sing.masses().end());
  ac[x] += shift;
  sing[x] -= shift;
  c.expect(!is_lrn_split(lambda, TMeasure(space, ac), TMeasure(space, sing), mu),
           "a perturbed split was accepted");
}

void decomposition_epsilon_delta(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 10);
  const TMeasure lambda = random_t_measure(c.rng, space);
  const DMeasure mu = int_d_measure(c.rng, space, 3);
  const Hyperbolic eps{c.rng.uniform(0.5, 10), c.rng.uniform(0.5, 10)};
  c.inputs = {{"lambda", doc(lambda)}, {"mu", doc(mu)}, {"epsilon", to_json_value(eps)}};
  const auto delta = epsilon_delta_witness(lambda, mu, eps);
  const bool ac = abs_continuous(lambda, mu);
  c.expect(delta.has_value() == ac, "a witness exists iff lambda << mu fails");
  if (delta) {
    c.expect(epsilon_delta_holds(lambda, mu, eps, *delta), "returned delta fails exhaustive check");
  } else {
    bool null_set_with_mass = false;
    for (std::size_t x = 0; x < space.size(); ++x) {
      const auto& l = lambda.atom(x);
      const auto& m = mu.atom(x);
      null_set_with_mass |= (m.e1 == 0 && l.e1 != Complex{}) || (m.e2 == 0 && l.e2 != Complex{});
    }
    c.expect(null_set_with_mass, "no mu-null set carries lambda mass");
  }
}

void decomposition_lattice(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 6);
  const DMeasure mu = int_d_measure(c.rng, space, 2);
  std::vector<Bicomplex> ac(space.size()), sing(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    const Bicomplex a = int_bicomplex(c.rng), s = int_bicomplex(c.rng);
    const Hyperbolic m = mu.atom(x);
    ac[x] = {m.e1 > 0 ? a.e1 : Complex{}, m.e2 > 0 ? a.e2 : Complex{}};
    sing[x] = {m.e1 > 0 ? Complex{} : s.e1, m.e2 > 0 ? Complex{} : s.e2};
  }
  const TMeasure lp(space, ac), lpp(space, sing);
  const TMeasure lambda = c.rng.coin() ? measure_add(lp, lpp) : random_t_measure(c.rng, space);
  c.inputs = {{"lambda", doc(lambda)}, {"lambda_p", doc(lp)}, {"lambda_pp", doc(lpp)}, {"mu", doc(mu)}};
  const LatticeReport report = check_lattice_properties(lambda, lp, lpp, mu);
  for (std::size_t k = 0; k < report.holds.size(); ++k) c.expect(report.holds[k], kLatticeLabels[k]);
}

void decomposition_indefinite_integral(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const TFunction g = random_function(c.rng, space);
  const DMeasure mu = int_d_measure(c.rng, space, 5);
  const SetMask e = random_subset(c.rng, space.size());
  c.inputs = {{"g", fn(g)}, {"mu", doc(mu)}, {"set", set_to_json(space, e)}};
  c.expect(tv_of_indefinite_integral(g, mu, e).equal, "|g dmu|_D(E) != integral over E of |g|_D");
}

// ---- dynamics -------------------------------------------------------------

Json map_doc(const PointMap& f) { return {{"space", space_to_json(f.space())}, {"map", map_to_json(f)}}; }

void dynamics_change_of_variables(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const PointMap f = random_map(c.rng, space);
  const DProbability mu = random_d_probability(c.rng, space);
  const TFunction phi = random_function(c.rng, space);
  c.inputs = {{"map", map_doc(f)}, {"mu", doc(mu.measure())}, {"phi", fn(phi)}};
  c.expect(change_of_variables_check(f, mu, phi).equal, "change of variables fails");
}

void dynamics_pushforward_linearity(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const PointMap f = random_map(c.rng, space);
  const DProbability a = dyadic_probability(c.rng, space), b = dyadic_probability(c.rng, space);
  const double t = static_cast<double>(c.rng.integer(0, 8)) / 8.0;
  c.inputs = {{"map", map_doc(f)}, {"a", doc(a.measure())}, {"b", doc(b.measure())}, {"t", t}};
  c.expect(pushforward(f, convex_combine(a, b, t)) ==
               convex_combine(pushforward(f, a), pushforward(f, b), t),
           "push-forward does not commute with convex combination");
  c.expect(pushforward(f, a).measure().total() == a.measure().total(), "push-forward changes total mass");
}

DProbability random_hull_point(Rng& rng, const std::vector<DProbability>& basis) {
  std::vector<Hyperbolic> w(basis.size());
  Hyperbolic total;
  for (auto& x : w) {
    x = {rng.unit() + 0.01, rng.unit() + 0.01};
    total += x;
  }
  std::vector<Hyperbolic> m(basis.front().size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Hyperbolic wk{w[k].e1 / total.e1, w[k].e2 / total.e2};
    for (std::size_t x = 0; x < m.size(); ++x) m[x] += wk * basis[k].atom(x);
  }
  return DProbability(basis.front().space(), std::move(m));
}

void dynamics_invariance_characterization(Case& c, const VerifyOptions& o) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const PointMap f = random_map(c.rng, space);
  const DProbability mu =
      c.rng.coin() ? random_d_probability(c.rng, space) : random_hull_point(c.rng, invariant_basis_bruteforce(f));
  c.inputs = {{"map", map_doc(f)}, {"mu", doc(mu.measure())}};
  bool all_tests = true;
  for (std::size_t y = 0; y < space.size(); ++y) {
    const TFunction chi = TFunction::indicator(space, SetMask::singleton(space.size(), y));
    const Bicomplex gap = integrate(f.pullback(chi), mu) - integrate(chi, mu);
    all_tests &= precedes(d_modulus(gap), Hyperbolic::real(o.tol));
  }
  c.expect(is_invariant(f, mu, o.tol) == all_tests,
           "invariance disagrees with the characteristic-function criterion");
}

void dynamics_invariant_set(Case& c, const VerifyOptions&) {
  const FiniteSpace space = random_space(c.rng, 1, 12);
  const PointMap f = random_map(c.rng, space);
  c.inputs = {{"map", map_doc(f)}};
  const auto basis = invariant_basis_bruteforce(f);
  c.expect(!basis.empty(), "no invariant measure found");
  if (basis.empty()) return;
  for (const auto& b : basis) c.expect(is_invariant(f, b, 1e-12), "basis element is not invariant");
  const DProbability& b1 = basis[c.rng.index(basis.size())];
  const DProbability& b2 = basis[c.rng.index(basis.size())];
  c.expect(is_invariant(f, convex_combine(b1, b2, c.rng.unit()), 1e-12), "invariant set is not convex");
  // Sequential closure: invariant terms converging atomwise to b2.
  for (int k = 1; k <= 6; ++k) {
    c.expect(is_invariant(f, convex_combine(b1, b2, std::pow(10.0, -k)), 1e-12),
             "sequence term is not invariant");
  }
}

void dynamics_cesaro(Case& c, const VerifyOptions& o) {
  const FiniteSpace space = random_space(c.rng, 1, 64);
  const PointMap f = random_map(c.rng, space);
  const DProbability mu0 = random_d_probability(c.rng, space);
  c.inputs = {{"map", map_doc(f)}, {"mu0", doc(mu0.measure())}};
  const CesaroTrace trace = cesaro_invariant(f, mu0, 32, o.tol);
  c.expect(trace.iterates.size() == trace.gaps.size(), "trace lengths differ");
  c.expect(trace.converged == precedes(trace.gaps.back(), Hyperbolic::real(o.tol)),
           "converged flag disagrees with the last gap");
  c.expect(is_invariant(f, trace.limit, 1e-12), "Cesaro limit is not invariant");
  const DProbability oracle = cycle_average_oracle(f, mu0);
  for (std::size_t x = 0; x < space.size(); ++x) {
    c.expect(close(trace.limit.atom(x), oracle.atom(x), 1e-12), "Cesaro limit differs from the orbit average");
  }
  const auto basis = invariant_basis_bruteforce(f);
  c.expect(!hull_weights(basis, trace.limit, 1e-12).empty(), "Cesaro limit is outside the basis hull");
}

void dynamics_continuity(Case& c, const VerifyOptions& o) {
  const FiniteSpace space = random_space(c.rng, 1, 8);
  const PointMap f = random_map(c.rng, space);
  const DProbability mu = random_d_probability(c.rng, space), nu = random_d_probability(c.rng, space);
  c.inputs = {{"map", map_doc(f)}, {"mu", doc(mu.measure())}, {"nu", doc(nu.measure())}};
  std::vector<TFunction> tests{random_function(c.rng, space)};
  for (std::size_t y = 0; y < space.size(); ++y) {
    tests.push_back(TFunction::indicator(space, SetMask::singleton(space.size(), y)));
  }
  std::vector<DProbability> seq;
  for (double n : {1.0, 10.0, 1e13}) seq.push_back(convex_combine(mu, nu, 1.0 - 1.0 / n));
  const ContinuityProbe p = continuity_probe(f, seq, mu, tests, o.tol);
  c.expect(p.antecedent && p.holds, "push-forward is not continuous along a converging sequence");
  const std::vector<DProbability> constant(2, nu);
  c.expect(continuity_probe(f, constant, mu, tests, o.tol).holds, "vacuous probe reported failure");
}

// ---- cli ------------------------------------------------------------------

GenOptions random_gen_options(Rng& rng) {
  GenOptions g;
  g.kind = static_cast<GenKind>(rng.integer(0, 6));
  g.atoms = static_cast<std::size_t>(rng.integer(1, 8));
  g.seed = rng.next();
  return g;
}

void cli_determinism(Case& c, const VerifyOptions&) {
  const GenOptions g = random_gen_options(c.rng);
  c.inputs = {{"kind", to_string(g.kind)}, {"atoms", g.atoms}, {"seed", g.seed}};
  c.expect(generate(g).dump() == generate(g).dump(), "generator is not deterministic");
}

void cli_round_trip(Case& c, const VerifyOptions&) {
  const GenOptions g = random_gen_options(c.rng);
  c.inputs = {{"kind", to_string(g.kind)}, {"atoms", g.atoms}, {"seed", g.seed}};
  const Json j = generate(g);
  const Json parsed = Json::parse(j.dump());
  const FiniteSpace space = space_from_json(parsed.at("space"));
  Json again;
  if (parsed.contains("measure")) {
    again = measure_document_to_json(measure_document_from_json(parsed).measure);
  } else if (parsed.contains("function")) {
    again = {{"space", space_to_json(space)}, {"function", fn(function_from_json(space, parsed["function"], "/function"))}};
  } else {
    again = parsed;
    again["map"] = map_to_json(map_from_json(space, parsed["map"], "/map"));
  }
  c.expect(again.dump() == j.dump(), "generated instance does not round-trip");

  // Arbitrary doubles survive serialization bit for bit.
  std::vector<Bicomplex> m(space.size());
  for (auto& x : m) x = {{c.rng.uniform(-1e6, 1e6), c.rng.uniform(-1, 1)}, {c.rng.unit() * 1e-300, -c.rng.unit()}};
  const TMeasure mu(space, m);
  const TMeasure back = measure_document_from_json(Json::parse(doc(mu).dump())).measure;
  c.expect(back == mu, "measure JSON round trip is not exact");
}

const std::map<std::string, SuiteBody>& registry() {
  static const std::map<std::string, SuiteBody> suites = {
      {"algebra.canonical", algebra_canonical},
      {"algebra.ring-laws", algebra_ring_laws},
      {"algebra.zero-divisor", algebra_zero_divisor},
      {"cli.determinism", cli_determinism},
      {"cli.round-trip", cli_round_trip},
      {"decomposition.epsilon-delta", decomposition_epsilon_delta},
      {"decomposition.indefinite-integral", decomposition_indefinite_integral},
      {"decomposition.jordan-hahn", decomposition_jordan_hahn},
      {"decomposition.lattice", decomposition_lattice},
      {"decomposition.lrn", decomposition_lrn},
      {"decomposition.polar", decomposition_polar},
      {"dynamics.cesaro", dynamics_cesaro},
      {"dynamics.change-of-variables", dynamics_change_of_variables},
      {"dynamics.continuity", dynamics_continuity},
      {"dynamics.invariance-characterization", dynamics_invariance_characterization},
      {"dynamics.invariant-set", dynamics_invariant_set},
      {"dynamics.pushforward-linearity", dynamics_pushforward_linearity},
      {"hyperbolic.modulus", hyperbolic_modulus},
      {"hyperbolic.series", hyperbolic_series},
      {"integration.dct", integration_dct},
      {"integration.linearity", integration_linearity},
      {"integration.modulus-inequality", integration_modulus_inequality},
      {"integration.polar-function", integration_polar_function},
      {"measure.module", measure_module},
      {"measure.normalize", measure_normalize},
      {"measure.total-variation", measure_total_variation},
      {"order.partial-order", order_partial_order},
      {"order.sup", order_sup},
  };
  return suites;
}

SuiteResult run_suite(const std::string& name, const SuiteBody& body, const VerifyOptions& o) {
  SuiteResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t suite_seed = mix_seed(o.seed, fnv1a(name));
  for (std::size_t k = 0; k < o.cases; ++k) {
    Case c(mix_seed(suite_seed, k));
    try {
      body(c, o);
    } catch (const std::exception& e) {
      c.failure = std::string("exception: ") + e.what();
    }
    if (c.failure.empty()) {
      ++r.passed;
      continue;
    }
    ++r.failed;
    if (!r.counterexample) {
      r.counterexample = Json{{"suite", name},     {"seed", o.seed},  {"case", k},
                              {"message", c.failure}, {"inputs", c.inputs},
                              {"rerun", "verify --suite " + name + " --seed " + std::to_string(o.seed) +
                                            " --cases " + std::to_string(k + 1)}};
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

Json VerifyReport::to_json(bool timings) const {
  Json list = Json::array();
  for (const auto& s : suites) {
    Json j = {{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}};
    if (s.counterexample) j["counterexample"] = *s.counterexample;
    if (timings) j["seconds"] = s.seconds;
    list.push_back(std::move(j));
  }
  return {{"ok", ok()},
          {"suites", list},
          {"unverified", Json::array({"compactness of the invariant set is checked as sequential "
                                      "closure under atomwise convergence only"})}};
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, body] : registry()) names.push_back(name);
  return names;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.cases == 0) throw std::invalid_argument("cases must be positive");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  VerifyReport report;
  for (const auto& [name, body] : registry()) {
    if (fnmatch(options.suite_glob.c_str(), name.c_str(), 0) != 0) continue;
    report.suites.push_back(run_suite(name, body, options));
  }
  if (report.suites.empty()) throw std::invalid_argument("no suite matches '" + options.suite_glob + "'");
  return report;
}

DProbability cycle_average_oracle(const PointMap& f, const DProbability& mu0) {
  const auto cycles = functional_cycles(f);
  std::vector<std::size_t> cycle_of(f.size(), cycles.size());
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    for (auto x : cycles[k]) cycle_of[x] = k;
  }
  std::vector<Hyperbolic> cycle_mass(cycles.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::size_t y = x;
    while (cycle_of[y] == cycles.size()) y = f(y);
    cycle_mass[cycle_of[y]] += mu0.atom(x);
  }
  std::vector<Hyperbolic> out(f.size());
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const double share = 1.0 / static_cast<double>(cycles[k].size());
    for (auto x : cycles[k]) out[x] = share * cycle_mass[k];
  }
  return DProbability(f.space(), std::move(out));
}

}  // namespace bimeasure::cli
