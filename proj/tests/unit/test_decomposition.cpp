#include <doctest.h>

#include <cmath>
#include <limits>

#include "generators.hpp"

using namespace bimeasure;

namespace {

const FiniteSpace kA({"a"});
const FiniteSpace kAB({"a", "b"});

TMeasure t(const FiniteSpace& s, std::vector<Bicomplex> m) { return TMeasure(s, std::move(m)); }

bool near(const Bicomplex& a, const Bicomplex& b) {
  return approx_equal(a, b, 1e-12 * std::max({1.0, std::abs(a.e1), std::abs(a.e2)}));
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("jordan") {
  JordanPair j = jordan(SignedDMeasure(kA, {Hyperbolic{3, -2}}));
  CHECK(j.mu_plus.atom(0) == Hyperbolic{3, 0});
  CHECK(j.mu_minus.atom(0) == Hyperbolic{0, 2});

  j = jordan(SignedDMeasure(kAB, {Hyperbolic{1, 2}, Hyperbolic{0, 4}}));
  CHECK(j.mu_minus.total().is_zero());
  CHECK(std::signbit(j.mu_minus.atom(1).e1) == false);

  j = jordan(SignedDMeasure(kAB));
  CHECK(j.mu_plus.total().is_zero());
  CHECK(j.mu_minus.total().is_zero());
}

TEST_CASE("polar_measure") {
  CHECK(polar_measure(t(kA, {Hyperbolic{3, -2}}))[0] == Bicomplex(Hyperbolic{1, -1}));
  CHECK(polar_measure(t(kA, {Bicomplex{}}))[0] == Bicomplex(kUnit));
  const TFunction h = polar_measure(t(kA, {Bicomplex{{3, 4}, {2, 0}}}));
  CHECK(std::abs(h[0].e1 - Complex{0.6, 0.8}) <= 1e-15);
  CHECK(h[0].e2 == Complex{1, 0});
}

TEST_CASE("hahn partitions by the polar density") {
  HahnResult r = hahn(SignedDMeasure(kA, {Hyperbolic{3, -2}}));
  CHECK(r.partition.C.test(0));
  CHECK(hahn_positive_part(SignedDMeasure(kA, {Hyperbolic{3, -2}}), r.partition, SetMask::full(1)) ==
        Hyperbolic{3, 0});
  CHECK(r.mu_plus_check);
  CHECK(r.mu_minus_check);

  r = hahn(SignedDMeasure(kAB, {Hyperbolic{1, 2}, Hyperbolic{4, 0.5}}));
  CHECK(r.partition.A == SetMask::full(2));
  CHECK(r.partition.B.none());
  CHECK(r.partition.C.none());
  CHECK(r.partition.D.none());

  const SignedDMeasure d(kA, {Hyperbolic{-1, 1}});
  r = hahn(d);
  CHECK(r.partition.D.test(0));
  CHECK(hahn_positive_part(d, r.partition, SetMask::full(1)) == kE2);
  CHECK(hahn_negative_part(d, r.partition, SetMask::full(1)) == kE1);

  r = hahn(SignedDMeasure(kAB, {Hyperbolic{-1, -1}, Hyperbolic{}}));
  CHECK(r.partition.B.test(0));
  CHECK(r.partition.A.test(1));
}

TEST_CASE("concentration, singularity and continuity predicates") {
  const TMeasure two = t(kAB, {Bicomplex(kUnit), Bicomplex(kUnit)});
  CHECK(is_concentrated(two, SetMask::full(2)));
  CHECK_FALSE(is_concentrated(two, gen::mask(2, {0})));
  const TMeasure delta = t(kAB, {Bicomplex(kUnit), Bicomplex{}});
  CHECK(is_concentrated(delta, gen::mask(2, {0})));
  CHECK(support(delta) == gen::mask(2, {0}));

  const TMeasure at_b = t(kAB, {Bicomplex{}, Bicomplex(kUnit)});
  CHECK(mutually_singular(delta, at_b));
  CHECK_FALSE(mutually_singular(delta, delta));
  CHECK(mutually_singular(t(kA, {Bicomplex(kE1)}), t(kA, {Bicomplex(kE2)})));

  const DMeasure mu(kAB, {kUnit, Hyperbolic{}});
  CHECK(abs_continuous(mu, mu));
  CHECK_FALSE(abs_continuous(at_b, mu));
  CHECK_THROWS_AS(abs_continuous(t(kA, {Bicomplex{}}), mu), SpaceMismatch);
}

TEST_CASE("lebesgue_radon_nikodym on the two-atom example") {
  const DMeasure mu(kAB, {kUnit, Hyperbolic{}});
  const TMeasure lambda = t(kAB, {Bicomplex(Hyperbolic{2, 3}), Bicomplex(Hyperbolic{5, 0})});
  const LRNResult r = lebesgue_radon_nikodym(lambda, mu);
  CHECK(r.lambda_ac == t(kAB, {Bicomplex(Hyperbolic{2, 3}), Bicomplex{}}));
  CHECK(r.lambda_sing == t(kAB, {Bicomplex{}, Bicomplex(Hyperbolic{5, 0})}));
  CHECK(r.density[0] == Bicomplex(Hyperbolic{2, 3}));
  CHECK(r.density[1].is_zero());
}

TEST_CASE("lebesgue_radon_nikodym degenerate splits") {
  const DMeasure mu(kAB, {Hyperbolic{1, 2}, Hyperbolic{3, 0}});
  const TMeasure ac = t(kAB, {Bicomplex{{1, 1}, {2, 0}}, Bicomplex(Hyperbolic{-3, 0})});
  LRNResult r = lebesgue_radon_nikodym(ac, mu);
  CHECK(r.lambda_sing == TMeasure(kAB));

  const TMeasure sing = t(kAB, {Bicomplex{}, Bicomplex{{}, {4, 1}}});
  r = lebesgue_radon_nikodym(sing, mu);
  CHECK(r.lambda_ac == TMeasure(kAB));
  CHECK(r.density == TFunction(kAB));

  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(lebesgue_radon_nikodym(ac, DMeasure(kAB, {Hyperbolic{inf, 1}, kUnit})), std::domain_error);
}

TEST_CASE("is_lrn_split rejects a perturbed split") {
  const DMeasure mu(kAB, {kUnit, Hyperbolic{}});
  const TMeasure lambda = t(kAB, {Bicomplex(Hyperbolic{2, 3}), Bicomplex(Hyperbolic{5, 0})});
  const TMeasure ac = t(kAB, {Bicomplex(Hyperbolic{2, 3}), Bicomplex{}});
  const TMeasure sing = t(kAB, {Bicomplex{}, Bicomplex(Hyperbolic{5, 0})});
  CHECK(is_lrn_split(lambda, ac, sing, mu));
  CHECK_FALSE(is_lrn_split(lambda, t(kAB, {Bicomplex(Hyperbolic{1, 3}), Bicomplex{}}),
                           t(kAB, {Bicomplex(kE1), Bicomplex(Hyperbolic{5, 0})}), mu));
  CHECK_FALSE(is_lrn_split(lambda, lambda, TMeasure(kAB), mu));
}

TEST_CASE("epsilon_delta_witness") {
  const DMeasure mu(kAB, {Hyperbolic{1, 2}, Hyperbolic{3, 1}});
  const Hyperbolic eps = 0.5 * mu.total();  // (2, 1.5)
  const auto delta = epsilon_delta_witness(mu, mu, eps);
  REQUIRE(delta.has_value());
  // Offending subsets have |mu_i(E)| >= eps_i: component 1 {b}, X with minimum 3;
  // component 2 {a}, X with minimum 2. The witness takes half of each.
  CHECK(*delta == Hyperbolic{1.5, 1.0});
  CHECK(epsilon_delta_holds(mu, mu, eps, *delta));
  CHECK_FALSE(epsilon_delta_holds(mu, mu, eps, Hyperbolic{3.5, 2.5}));

  const auto trivial = epsilon_delta_witness(TMeasure(kAB), mu, kUnit);
  REQUIRE(trivial.has_value());
  CHECK(*trivial == kUnit);

  const DMeasure null_b(kAB, {kUnit, Hyperbolic{}});
  CHECK_FALSE(epsilon_delta_witness(t(kAB, {Bicomplex{}, Bicomplex(kE1)}), null_b, kUnit).has_value());

  CHECK_THROWS_AS(epsilon_delta_witness(mu, mu, Hyperbolic{}), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_delta_witness(mu, mu, Hyperbolic{1, -1}), std::invalid_argument);
  CHECK(epsilon_delta_witness(mu, mu, kE1).has_value());
}

TEST_CASE("lattice properties on constructed instances") {
  const DMeasure mu(kAB, {kUnit, Hyperbolic{}});
  LatticeReport r = check_lattice_properties(TMeasure(kAB), TMeasure(kAB), TMeasure(kAB), mu);
  CHECK(r.premise[6]);
  CHECK(r.all_hold());

  const TMeasure at_a = t(kAB, {Bicomplex(kUnit), Bicomplex{}});
  const TMeasure at_b = t(kAB, {Bicomplex{}, Bicomplex{{1, 1}, {-1, 0}}});
  r = check_lattice_properties(at_a, at_a, at_b, mu);
  CHECK(r.premise[1]);
  CHECK(r.premise[5]);
  CHECK(r.all_hold());

  const TMeasure also_a = t(kAB, {Bicomplex{{0, 2}, {-1, 0}}, Bicomplex{}});
  r = check_lattice_properties(at_a, at_a, also_a, mu);
  CHECK(r.premise[3]);
  CHECK(r.all_hold());
  CHECK(kLatticeLabels.size() == r.holds.size());
}

TEST_CASE("indefinite integral total variation") {
  const DMeasure mu(kAB, {Hyperbolic{1, 2}, Hyperbolic{3, 1}});
  IndefiniteIntegralTV r = tv_of_indefinite_integral(TFunction::constant(kAB, kUnit), mu, SetMask::full(2));
  CHECK(r.equal);
  CHECK(r.tv == mu.total());

  const TFunction mixed(kAB, {Bicomplex(Hyperbolic{1, -1}), Bicomplex(Hyperbolic{-1, 1})});
  r = tv_of_indefinite_integral(mixed, mu, SetMask::full(2));
  CHECK(r.equal);
  const Hyperbolic plain = d_modulus(indefinite_integral(mixed, mu)(SetMask::full(2)));
  CHECK(precedes(plain, r.tv));

  r = tv_of_indefinite_integral(TFunction(kAB), mu, SetMask::full(2));
  CHECK(r.equal);
  CHECK(r.tv.is_zero());
}

TEST_CASE("property: Jordan and Hahn agree on every subset") {
  gen::Source src(401);
  for (int k = 0; k < 300; ++k) {
    const FiniteSpace s = src.space(1, 6);
    const SignedDMeasure mu = src.signed_measure(s);
    const JordanPair j = jordan(mu);
    const DMeasure modulus = modulus_measure(mu);
    for (std::size_t x = 0; x < s.size(); ++x) {
      REQUIRE(j.mu_plus.atom(x) - j.mu_minus.atom(x) == mu.atom(x));
      REQUIRE(j.mu_plus.atom(x) + j.mu_minus.atom(x) == modulus.atom(x));
    }
    const HahnResult h = hahn(mu);
    REQUIRE(h.mu_plus_check);
    REQUIRE(h.mu_minus_check);
    gen::for_each_subset(s.size(), [&](const SetMask& e) {
      REQUIRE(hahn_positive_part(mu, h.partition, e) == j.mu_plus(e));
      REQUIRE(hahn_negative_part(mu, h.partition, e) == j.mu_minus(e));
      // Half-sum formula mu+ = (|mu|_D + mu)/2.
      REQUIRE(j.mu_plus(e) == 0.5 * (modulus(e) + mu(e)));
    });
  }
}

TEST_CASE("property: polar density reconstructs the measure") {
  gen::Source src(402);
  for (int k = 0; k < 300; ++k) {
    const FiniteSpace s = src.space(1, 6);
    const TMeasure mu = src.t_measure(s);
    const TFunction h = polar_measure(mu);
    const DMeasure modulus = modulus_measure(mu);
    gen::for_each_subset(s.size(), [&](const SetMask& e) { REQUIRE(near(integrate(h, modulus, e), mu(e))); });
  }
}

TEST_CASE("property: LRN split is valid and unique atomwise") {
  gen::Source src(403);
  for (int k = 0; k < 300; ++k) {
    const FiniteSpace s = src.space(1, 6);
    const TMeasure lambda = src.t_measure(s);
    const DMeasure mu = src.d_measure(s, 2);
    const LRNResult r = lebesgue_radon_nikodym(lambda, mu);
    REQUIRE(is_lrn_split(lambda, r.lambda_ac, r.lambda_sing, mu));
    gen::for_each_subset(s.size(), [&](const SetMask& e) {
      REQUIRE(near(integrate(r.density, mu, e), r.lambda_ac(e)));
    });
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::vector<Bicomplex> ac(r.lambda_ac.masses().begin(), r.lambda_ac.masses().end());
      std::vector<Bicomplex> sing(r.lambda_sing.masses().begin(), r.lambda_sing.masses().end());
      const Bicomplex shift = src.coin() ? Bicomplex(kE1) : Bicomplex(kE2);
      ac[x] += shift;
      sing[x] -= shift;
      REQUIRE_FALSE(is_lrn_split(lambda, TMeasure(s, ac), TMeasure(s, sing), mu));
    }
  }
}

TEST_CASE("property: epsilon-delta witness exists exactly under absolute continuity") {
  gen::Source src(404);
  for (int k = 0; k < 300; ++k) {
    const FiniteSpace s = src.space(1, 8);
    const TMeasure lambda = src.t_measure(s);
    const DMeasure mu = src.d_measure(s, 2);
    const Hyperbolic eps{src.real(0.5, 8), src.real(0.5, 8)};
    const auto delta = epsilon_delta_witness(lambda, mu, eps);
    REQUIRE(delta.has_value() == abs_continuous(lambda, mu));
    if (delta) REQUIRE(epsilon_delta_holds(lambda, mu, eps, *delta));
  }
}

TEST_CASE("property: lattice implications on random and structured triples") {
  gen::Source src(405);
  for (int k = 0; k < 1000; ++k) {
    const FiniteSpace s = src.space(1, 5);
    const DMeasure mu = src.d_measure(s, 1);
    std::vector<Bicomplex> ac(s.size()), sing(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      const Bicomplex a = src.bicomplex(2), b = src.bicomplex(2);
      ac[x] = {mu.atom(x).e1 > 0 ? a.e1 : Complex{}, mu.atom(x).e2 > 0 ? a.e2 : Complex{}};
      sing[x] = {mu.atom(x).e1 > 0 ? Complex{} : b.e1, mu.atom(x).e2 > 0 ? Complex{} : b.e2};
    }
    const TMeasure lp(s, ac), lpp(s, sing);
    REQUIRE(check_lattice_properties(measure_add(lp, lpp), lp, lpp, mu).all_hold());
    REQUIRE(check_lattice_properties(src.t_measure(s, 1), src.t_measure(s, 1), src.t_measure(s, 1), mu).all_hold());
  }
}

}  // TEST_SUITE
