// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every criterion is checked against oracles written here from the definitions,
// not against the library's own self-checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bimeasure/bimeasure.hpp"
#include "bimeasure/cli/verify.hpp"
#include "generators.hpp"

using namespace bimeasure;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::size_t cases = 0;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Oracles

// Componentwise relations read straight off the idempotent components.
bool leq(Hyperbolic a, Hyperbolic b) { return a.e1 <= b.e1 && a.e2 <= b.e2; }
bool lt(Hyperbolic a, Hyperbolic b) { return leq(a, b) && !(a.e1 == b.e1 && a.e2 == b.e2); }

Hyperbolic dmod(const Bicomplex& z) { return {std::abs(z.e1), std::abs(z.e2)}; }

Bicomplex sum_over(const TMeasure& mu, const SetMask& e) {
  Bicomplex s;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (e.test(x)) s = s + mu.atom(x);
  }
  return s;
}

Hyperbolic sum_over(const DMeasure& mu, const SetMask& e) {
  Hyperbolic s;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (e.test(x)) s = s + mu.atom(x);
  }
  return s;
}

// Supremum over all partitions of E of the sum of |mu(block)|_D.
Hyperbolic partition_sup(const TMeasure& mu, const SetMask& e) {
  const std::vector<std::size_t> atoms = e.members();
  const std::size_t n = atoms.size();
  Hyperbolic best;
  std::vector<std::size_t> block(n, 0);
  // Restricted growth strings enumerate each set partition once.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<Bicomplex> sums(used);
      for (std::size_t k = 0; k < n; ++k) sums[block[k]] = sums[block[k]] + mu.atom(atoms[k]);
      Hyperbolic total;
      for (const auto& s : sums) total = total + dmod(s);
      best = {std::max(best.e1, total.e1), std::max(best.e2, total.e2)};
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return best;
}

// Masses whose moduli are integers, so every modulus and sum is exact.
Complex pythagorean(gen::Source& src) {
  static const Complex base[] = {{0, 0}, {1, 0}, {3, 4}, {4, 3}, {5, 12}, {12, 5}, {8, 15}, {6, 8}};
  const Complex z = base[src.index(std::size(base))];
  static const Complex unit[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return z * unit[src.index(4)];
}

// Uniform measure on each cycle, weighted by the mass of its basin.
std::vector<Hyperbolic> cycle_average(const PointMap& f, const DProbability& mu) {
  const std::size_t n = f.size();
  std::vector<std::size_t> root(n, n);
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<int> state(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> path;
    std::size_t x = s;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = f(x);
    }
    std::size_t r;
    if (state[x] == 1) {
      std::vector<std::size_t> cyc;
      for (auto it = std::find(path.begin(), path.end(), x); it != path.end(); ++it) cyc.push_back(*it);
      r = cycles.size();
      cycles.push_back(cyc);
    } else {
      r = root[x];
    }
    for (auto y : path) {
      root[y] = r;
      state[y] = 2;
    }
  }
  std::vector<Hyperbolic> basin(cycles.size());
  for (std::size_t x = 0; x < n; ++x) basin[root[x]] = basin[root[x]] + mu.atom(x);
  std::vector<Hyperbolic> out(n);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const double len = static_cast<double>(cycles[c].size());
    for (auto y : cycles[c]) out[y] = {basin[c].e1 / len, basin[c].e2 / len};
  }
  return out;
}

DProbability dyadic_probability(gen::Source& src, const FiniteSpace& s) {
  // Components are multiples of 1/64 summing to 1, so every sum below is exact.
  std::vector<Hyperbolic> m(s.size());
  for (int comp = 0; comp < 2; ++comp) {
    int left = 64;
    for (std::size_t x = 0; x + 1 < s.size(); ++x) {
      const int take = src.integer(0, left);
      (comp == 0 ? m[x].e1 : m[x].e2) = take / 64.0;
      left -= take;
    }
    (comp == 0 ? m.back().e1 : m.back().e2) = left / 64.0;
  }
  return DProbability(s, m);
}

// ---------------------------------------------------------------------------
// Criteria

Verdict algebra() {
  Verdict v;
  gen::Source src(1001);
  if (!(kE1 * kE2 == Hyperbolic{} && kE1 + kE2 == kUnit && kE1 * kE1 == kE1 && kE2 * kE2 == kE2)) {
    v.fail("idempotent identities");
  }
  const Complex i1{0, 1};
  for (v.cases = 0; v.cases < 10000; ++v.cases) {
    const Bicomplex a = src.bicomplex(), b = src.bicomplex(), c = src.bicomplex();
    if (!((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * b == b * a &&
          a * (b + c) == a * b + a * c && a * Bicomplex(kUnit) == a && a + Bicomplex{} == a)) {
      v.fail("ring law");
    }
    const Complex z1 = src.gaussian_int(6), z2 = src.gaussian_int(6);
    const Complex w1 = src.gaussian_int(6), w2 = src.gaussian_int(6);
    // (z1 + i2 z2)(w1 + i2 w2) with i2^2 = -1.
    if (!(from_canonical(z1, z2) * from_canonical(w1, w2) == from_canonical(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1))) {
      v.fail("canonical product");
    }
    const Complex u1{src.real(-1e3, 1e3), src.real(-1e3, 1e3)}, u2{src.real(-1, 1), src.real(-1, 1)};
    const Canonical back = to_canonical(from_canonical(u1, u2));
    if (std::abs(back.z1 - u1) > 1e-12 * std::max(1.0, std::abs(u1)) ||
        std::abs(back.z2 - u2) > 1e-12 * std::max(1.0, std::abs(u1))) {
      v.fail("canonical round trip");
    }
    const Complex y1 = src.gaussian_int(4);
    const Complex y2 = src.coin() ? (src.coin() ? i1 : -i1) * y1 : src.gaussian_int(4);
    const bool nonzero = y1 != Complex{} || y2 != Complex{};
    if (is_zero_divisor(from_canonical(y1, y2)) != (nonzero && y1 * y1 + y2 * y2 == Complex{})) {
      v.fail("zero-divisor criterion");
    }
  }
  return v;
}

Verdict order() {
  Verdict v;
  gen::Source src(1002);
  for (v.cases = 0; v.cases < 10000; ++v.cases) {
    const Hyperbolic a = src.hyperbolic(-20, 20);
    const Hyperbolic b = a + src.hyperbolic(0, 5);
    const Hyperbolic c = b + src.hyperbolic(0, 5);
    if (!(precedes_or_equal(a, a) && compare_d(a, a) == Order::Equal)) v.fail("reflexivity");
    if (!(precedes_or_equal(a, b) && precedes_or_equal(b, c) && precedes_or_equal(a, c))) v.fail("transitivity");
    if (precedes_or_equal(b, a) != (a == b)) v.fail("antisymmetry");
    if (precedes(a, c) != lt(a, c)) v.fail("strict order");
    const Hyperbolic x = src.hyperbolic(-3, 3), y = src.hyperbolic(-3, 3);
    const Order o = compare_d(x, y);
    const Order expect = x == y ? Order::Equal : leq(x, y) ? Order::Less : leq(y, x) ? Order::Greater : Order::Incomparable;
    if (o != expect) v.fail("compare_d");

    std::vector<Hyperbolic> items(static_cast<std::size_t>(src.integer(1, 64)));
    for (auto& h : items) h = src.hyperbolic(-1000, 1000);
    const Hyperbolic s = sup_d(items);
    Hyperbolic m = items[0];
    for (auto h : items) m = {std::max(m.e1, h.e1), std::max(m.e2, h.e2)};
    if (!(s == m)) v.fail("sup value");
    for (auto h : items) {
      if (!leq(h, s)) v.fail("sup upper bound");
    }
    const Hyperbolic upper = m + src.hyperbolic(0, 3);
    if (!leq(s, upper)) v.fail("sup minimality");
    for (const Hyperbolic lower : {s - kE1, s - kE2}) {
      bool escapes = false;
      for (auto h : items) escapes |= !leq(h, lower);
      if (!escapes) v.fail("sup not least");
    }
  }
  return v;
}

Verdict integration() {
  Verdict v;
  gen::Source src(1003);
  std::size_t violations = 0;
  for (v.cases = 0; v.cases < 10000; ++v.cases) {
    const FiniteSpace s = src.space(1, 8);
    const TFunction f = src.function(s), g = src.function(s);
    const DMeasure mu = src.d_measure(s);
    const Bicomplex a = src.bicomplex(), b = src.bicomplex();
    std::vector<Bicomplex> comb(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) comb[x] = a * f[x] + b * g[x];
    if (!(integrate(TFunction(s, comb), mu) == a * integrate(f, mu) + b * integrate(g, mu))) v.fail("linearity");

    Complex s1, s2;
    double m1 = 0, m2 = 0;
    for (std::size_t x = 0; x < s.size(); ++x) {
      s1 += f[x].e1 * mu.atom(x).e1;
      s2 += f[x].e2 * mu.atom(x).e2;
      m1 += std::abs(f[x].e1) * mu.atom(x).e1;
      m2 += std::abs(f[x].e2) * mu.atom(x).e2;
    }
    if (!(integrate(f, mu) == Bicomplex{s1, s2})) v.fail("integral value");
    // Equality cases compare two differently rounded sums, so allow one part in 1e12.
    const bool holds = std::abs(s1) <= m1 * (1 + 1e-12) && std::abs(s2) <= m2 * (1 + 1e-12);
    if (!holds || !check_modulus_inequality(f, mu).holds) ++violations;

    const TFunction alpha = polar_decompose_function(f);
    for (std::size_t x = 0; x < s.size(); ++x) {
      const Bicomplex r = alpha[x] * Bicomplex(dmod(f[x]));
      if (std::abs(std::abs(alpha[x].e1) - 1) > 1e-12 || std::abs(std::abs(alpha[x].e2) - 1) > 1e-12 ||
          std::abs(r.e1 - f[x].e1) > 1e-12 || std::abs(r.e2 - f[x].e2) > 1e-12) {
        v.fail("polar factor");
      }
    }
  }
  if (violations) v.fail(std::to_string(violations) + " modulus-inequality violations");
  return v;
}

Verdict dct() {
  Verdict v;
  gen::Source src(1004);
  for (v.cases = 0; v.cases < 1000; ++v.cases) {
    const FiniteSpace s = src.space(1, 8);
    const DMeasure mu = src.d_measure(s);
    std::vector<Bicomplex> f(s.size()), g(s.size()), dom(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      f[x] = {{src.real(-3, 3), src.real(-3, 3)}, {src.real(-3, 3), src.real(-3, 3)}};
      g[x] = Bicomplex(Hyperbolic{src.real(0.1, 4), src.real(0.1, 4)});
      // |f_n| <= |f| + g |sigma_n| / n <= |f| + g.
      dom[x] = Bicomplex(dmod(f[x])) + g[x];
    }
    Hyperbolic int_g;
    for (std::size_t x = 0; x < s.size(); ++x) int_g = int_g + Hyperbolic{g[x].e1.real() * mu.atom(x).e1, g[x].e2.real() * mu.atom(x).e2};
    const Hyperbolic bound = 0.05 * int_g;

    std::vector<TFunction> seq;
    Hyperbolic gap;
    for (int n = 1; n <= 100; ++n) {
      std::vector<Bicomplex> fn(s.size());
      gap = {};
      for (std::size_t x = 0; x < s.size(); ++x) {
        // sigma_n uniform in the closed unit disc of each component.
        Complex sig[2];
        for (auto& z : sig) {
          do z = {src.real(-1, 1), src.real(-1, 1)};
          while (std::abs(z) > 1);
        }
        const Bicomplex step{g[x].e1 * sig[0] / double(n), g[x].e2 * sig[1] / double(n)};
        fn[x] = f[x] + step;
        const Hyperbolic d = dmod(fn[x] - f[x]);
        gap = gap + Hyperbolic{d.e1 * mu.atom(x).e1, d.e2 * mu.atom(x).e2};
      }
      seq.emplace_back(s, fn);
    }
    const DCTReport r = dct_run(seq, TFunction(s, f), TFunction(s, dom), mu, 1.0);
    if (!r.domination_ok) v.fail("domination");
    if (!approx_equal(r.final_gap, gap, 1e-12 * std::max({1.0, gap.e1, gap.e2}))) v.fail("L1 gap value");
    const bool zero_g = int_g.e1 == 0 || int_g.e2 == 0;
    if (!zero_g && !lt(gap, bound)) v.fail("gap not below 0.05 integral of g");
    if (zero_g && !leq(gap, bound)) v.fail("gap on null component");
  }
  return v;
}

Verdict total_variation_exact() {
  Verdict v;
  gen::Source src(1005);
  for (v.cases = 0; v.cases < 1000; ++v.cases) {
    const FiniteSpace s = src.space(1, 6);
    std::vector<Bicomplex> m(s.size());
    const bool hyperbolic = src.coin();
    for (auto& z : m) z = hyperbolic ? Bicomplex(src.hyperbolic(-9, 9)) : Bicomplex{pythagorean(src), pythagorean(src)};
    const TMeasure mu(s, m);
    const SetMask e = src.subset(s.size());
    if (!(total_variation(mu, e) == partition_sup(mu, e))) v.fail("closed form differs from partition supremum");
  }
  return v;
}

Verdict jordan_hahn() {
  Verdict v;
  gen::Source src(1006);
  for (v.cases = 0; v.cases < 1000; ++v.cases) {
    const FiniteSpace s = src.space(1, 6);
    const SignedDMeasure mu = src.signed_measure(s, 9);
    const JordanPair j = jordan(mu);
    std::vector<Hyperbolic> plus(s.size()), minus(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      const Hyperbolic m = mu.atom(x);
      plus[x] = {m.e1 > 0 ? m.e1 : 0.0, m.e2 > 0 ? m.e2 : 0.0};
      minus[x] = {m.e1 < 0 ? -m.e1 : 0.0, m.e2 < 0 ? -m.e2 : 0.0};
      if (!(j.mu_plus.atom(x) == plus[x] && j.mu_minus.atom(x) == minus[x])) v.fail("Jordan atoms");
      if (!(j.mu_plus.atom(x) - j.mu_minus.atom(x) == m)) v.fail("mu+ - mu- != mu");
      if (!(j.mu_plus.atom(x) + j.mu_minus.atom(x) == Hyperbolic{std::abs(m.e1), std::abs(m.e2)})) {
        v.fail("mu+ + mu- != |mu|_D");
      }
    }
    const HahnPartition p = hahn(mu).partition;
    const std::size_t covered = p.A.count() + p.B.count() + p.C.count() + p.D.count();
    if ((p.A | p.B | p.C | p.D) != SetMask::full(s.size()) || covered != s.size()) {
      v.fail("not a partition");
    }
    auto mass = [&](const SetMask& e) {
      Hyperbolic t;
      for (auto x : e.members()) t = t + mu.atom(x);
      return t;
    };
    auto absd = [](Hyperbolic h) { return Hyperbolic{std::abs(h.e1), std::abs(h.e2)}; };
    gen::for_each_subset(s.size(), [&](const SetMask& e) {
      Hyperbolic jp, jm;
      for (auto x : e.members()) {
        jp = jp + plus[x];
        jm = jm + minus[x];
      }
      const Hyperbolic mc = mass(e & p.C), md = mass(e & p.D);
      const Hyperbolic hp = mass(e & p.A) + kE1 * absd(mc) + kE2 * absd(md);
      const Hyperbolic hm = Hyperbolic{} - mass(e & p.B) - mc - md + kE1 * absd(mc) + kE2 * absd(md);
      if (!(hp == jp)) v.fail("Hahn expression for mu+");
      if (!(hm == jm)) v.fail("Hahn expression for mu-");
    });
  }
  return v;
}

Verdict polar() {
  Verdict v;
  gen::Source src(1007);
  for (v.cases = 0; v.cases < 1000; ++v.cases) {
    const FiniteSpace s = src.space(1, 6);
    const TMeasure mu = src.t_measure(s);
    const TFunction h = polar_measure(mu);
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (std::abs(std::abs(h[x].e1) - 1) > 1e-12 || std::abs(std::abs(h[x].e2) - 1) > 1e-12) v.fail("|h_i| != 1");
    }
    gen::for_each_subset(s.size(), [&](const SetMask& e) {
      Complex r1, r2;
      for (auto x : e.members()) {
        r1 += h[x].e1 * std::abs(mu.atom(x).e1);
        r2 += h[x].e2 * std::abs(mu.atom(x).e2);
      }
      const Bicomplex target = sum_over(mu, e);
      if (std::abs(r1 - target.e1) > 1e-12 || std::abs(r2 - target.e2) > 1e-12) v.fail("mu(E) != integral of h d|mu|_D");
    });
  }
  return v;
}

Verdict lrn() {
  Verdict v;
  gen::Source src(1008);
  for (v.cases = 0; v.cases < 1000; ++v.cases) {
    const FiniteSpace s = src.space(1, 6);
    const TMeasure lambda = src.t_measure(s);
    const DMeasure mu = src.d_measure(s, 2);
    const LRNResult r = lebesgue_radon_nikodym(lambda, mu);
    for (std::size_t x = 0; x < s.size(); ++x) {
      const Bicomplex l = lambda.atom(x);
      const Hyperbolic m = mu.atom(x);
      // The split is forced atomwise: mu_i({x}) > 0 excludes singular mass there,
      // mu_i({x}) = 0 excludes continuous mass.
      const Bicomplex ac{m.e1 > 0 ? l.e1 : Complex{}, m.e2 > 0 ? l.e2 : Complex{}};
      const Bicomplex sing = l - ac;
      if (!(r.lambda_ac.atom(x) + r.lambda_sing.atom(x) == l)) v.fail("lambda != lambda' + lambda''");
      if (!(r.lambda_ac.atom(x) == ac && r.lambda_sing.atom(x) == sing)) v.fail("split differs from the unique one");
      if ((m.e1 == 0 && r.lambda_ac.atom(x).e1 != Complex{}) || (m.e2 == 0 && r.lambda_ac.atom(x).e2 != Complex{})) {
        v.fail("lambda' not absolutely continuous");
      }
      if ((m.e1 > 0 && r.lambda_sing.atom(x).e1 != Complex{}) || (m.e2 > 0 && r.lambda_sing.atom(x).e2 != Complex{})) {
        v.fail("lambda'' not singular");
      }
    }
    gen::for_each_subset(s.size(), [&](const SetMask& e) {
      Complex d1, d2;
      for (auto x : e.members()) {
        d1 += r.density[x].e1 * mu.atom(x).e1;
        d2 += r.density[x].e2 * mu.atom(x).e2;
      }
      const Bicomplex target = sum_over(r.lambda_ac, e);
      if (std::abs(d1 - target.e1) > 1e-12 || std::abs(d2 - target.e2) > 1e-12) v.fail("density integral");
    });
  }
  return v;
}

Verdict epsilon_delta() {
  Verdict v;
  gen::Source src(1009);
  std::size_t witnesses = 0;
  for (v.cases = 0; v.cases < 1000; ++v.cases) {
    const FiniteSpace s = src.space(1, 10);
    const DMeasure mu = src.d_measure(s, 3);
    std::vector<Bicomplex> l(s.size());
    const bool force_ac = src.coin();
    for (std::size_t x = 0; x < s.size(); ++x) {
      l[x] = src.bicomplex(3);
      if (force_ac && mu.atom(x).e1 == 0) l[x].e1 = {};
      if (force_ac && mu.atom(x).e2 == 0) l[x].e2 = {};
    }
    const TMeasure lambda(s, l);
    bool ac = true;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if ((mu.atom(x).e1 == 0 && l[x].e1 != Complex{}) || (mu.atom(x).e2 == 0 && l[x].e2 != Complex{})) ac = false;
    }
    const Hyperbolic eps{src.real(0.25, 10), src.real(0.25, 10)};
    const auto delta = epsilon_delta_witness(lambda, mu, eps);
    if (delta.has_value() != ac) {
      v.fail("witness existence disagrees with absolute continuity");
      continue;
    }
    if (!delta) continue;
    ++witnesses;
    if (!(delta->e1 > 0 && delta->e2 > 0)) v.fail("delta not positive");
    gen::for_each_subset(s.size(), [&](const SetMask& e) {
      if (lt(sum_over(mu, e), *delta) && !lt(dmod(sum_over(lambda, e)), eps)) v.fail("subset violates the witness");
    });
  }
  if (witnesses == 0) v.fail("no witnesses exercised");
  return v;
}

Verdict dynamics() {
  Verdict v;
  gen::Source src(1010);
  for (std::size_t k = 0; k < 10000; ++k, ++v.cases) {
    const FiniteSpace s = src.space(1, 12);
    const PointMap f = src.map(s);
    const DProbability mu = dyadic_probability(src, s);
    std::vector<Bicomplex> phi(s.size());
    for (auto& z : phi) z = src.bicomplex();
    Bicomplex lhs, rhs;
    const DProbability push = pushforward(f, mu);
    for (std::size_t x = 0; x < s.size(); ++x) {
      const Hyperbolic m = mu.atom(x), pm = push.atom(x);
      lhs = lhs + Bicomplex{phi[x].e1 * pm.e1, phi[x].e2 * pm.e2};
      rhs = rhs + Bicomplex{phi[f(x)].e1 * m.e1, phi[f(x)].e2 * m.e2};
    }
    const ChangeOfVariables c = change_of_variables_check(f, mu, TFunction(s, phi), 0.0);
    if (!(lhs == rhs && c.lhs == lhs && c.rhs == rhs && c.equal)) v.fail("change of variables");

    const DProbability b = dyadic_probability(src, s);
    const double t = src.integer(0, 8) / 8.0;
    if (!(pushforward(f, convex_combine(mu, b, t)) == convex_combine(push, pushforward(f, b), t))) {
      v.fail("push-forward not linear on convex combinations");
    }
  }
  for (std::size_t k = 0; k < 200; ++k, ++v.cases) {
    const FiniteSpace s = src.space(1, 1000);
    const PointMap f = src.map(s);
    const DProbability mu0 = src.probability(s);
    const CesaroTrace t = cesaro_invariant(f, mu0, 64, 1e-9);
    if (!is_invariant(f, t.limit, 1e-12)) v.fail("Cesaro limit not invariant");
    const std::vector<Hyperbolic> oracle = cycle_average(f, mu0);
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (!approx_equal(t.limit.atom(x), oracle[x], 1e-12)) v.fail("Cesaro limit differs from the cycle average");
    }
    if (hull_weights(invariant_basis_bruteforce(f), t.limit, 1e-12).empty()) v.fail("limit outside the basis hull");
  }
  for (std::size_t k = 0; k < 1000; ++k, ++v.cases) {
    const FiniteSpace s = src.space(1, 200);
    const PointMap f = src.map(s);
    const auto basis = invariant_basis_bruteforce(f);
    if (basis.empty()) v.fail("empty invariant basis");
    for (const auto& u : basis) {
      if (!(pushforward(f, u) == u)) v.fail("basis element not invariant");
    }
  }
  const auto t0 = Clock::now();
  const cli::VerifyReport report = cli::run_verify(cli::VerifyOptions{});
  const double wall = seconds_since(t0);
  if (!report.ok()) v.fail("verify reported a failing suite");
  if (wall >= 60) v.fail("verify took " + std::to_string(wall) + " s");
  v.note = v.pass ? "verify wall time " + std::to_string(wall) + " s" : v.note;
  return v;
}

struct Criterion {
  int id;
  const char* name;
  Verdict (*run)();
  double time_limit;  // seconds, 0 when unbounded
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "algebra", algebra, 5},
      {2, "order", order, 0},
      {3, "integration", integration, 0},
      {4, "dominated convergence", dct, 5},
      {5, "total variation", total_variation_exact, 0},
      {6, "Jordan/Hahn", jordan_hahn, 0},
      {7, "polar", polar, 0},
      {8, "Lebesgue-Radon-Nikodym", lrn, 0},
      {9, "epsilon-delta", epsilon_delta, 0},
      {10, "dynamics", dynamics, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (c.time_limit > 0 && secs >= c.time_limit) v.fail("runtime " + std::to_string(secs) + " s");
    failures += v.pass ? 0 : 1;
    std::printf("%s  %2d %-24s %6zu cases %8.3f s%s%s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.cases, secs,
                v.note.empty() ? "" : "  ", v.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
