#include "bimeasure/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bimeasure {

namespace {

constexpr double kTotalTolerance = 1e-12;

void require_same_space(const FiniteSpace& a, const FiniteSpace& b) {
  if (!(a == b)) throw SpaceMismatch();
}

ProbabilityTotal classify_total(Hyperbolic total) {
  if (approx_equal(total, kUnit, kTotalTolerance)) return ProbabilityTotal::Unit;
  if (approx_equal(total, kE1, kTotalTolerance)) return ProbabilityTotal::E1;
  if (approx_equal(total, kE2, kTotalTolerance)) return ProbabilityTotal::E2;
  throw std::domain_error("total mass must be e1 + e2, e1 or e2");
}

std::vector<Hyperbolic> push_masses(std::span<const std::size_t> image,
                                    std::span<const Hyperbolic> masses) {
  std::vector<Hyperbolic> out(masses.size());
  for (std::size_t x = 0; x < masses.size(); ++x) out[image[x]] += masses[x];
  return out;
}

}  // namespace

PointMap::PointMap(FiniteSpace space, std::vector<std::size_t> image)
    : space_(std::move(space)), image_(std::move(image)) {
  if (image_.size() != space_.size()) throw std::invalid_argument("map must be total on the space");
  for (auto y : image_) {
    if (y >= image_.size()) throw std::invalid_argument("map image outside the space");
  }
}

PointMap PointMap::identity(FiniteSpace space) {
  std::vector<std::size_t> image(space.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = x;
  return PointMap(std::move(space), std::move(image));
}

SetMask PointMap::preimage(const SetMask& a) const {
  if (a.width() != size()) throw SpaceMismatch();
  SetMask out(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (a.test(image_[x])) out.set(x);
  }
  return out;
}

TFunction PointMap::pullback(const TFunction& phi) const {
  require_same_space(space_, phi.space());
  std::vector<Bicomplex> out(size());
  for (std::size_t x = 0; x < size(); ++x) out[x] = phi[image_[x]];
  return TFunction(space_, std::move(out));
}

DProbability::DProbability(DMeasure measure)
    : measure_(std::move(measure)), total_(classify_total(measure_.total())) {}

DProbability::DProbability(FiniteSpace space, std::vector<Hyperbolic> masses)
    : DProbability(DMeasure(std::move(space), std::move(masses))) {}

DProbability DProbability::point_mass(FiniteSpace space, std::size_t atom) {
  std::vector<Hyperbolic> masses(space.size());
  masses.at(atom) = kUnit;
  return DProbability(std::move(space), std::move(masses));
}

DProbability DProbability::uniform(FiniteSpace space) {
  const double w = 1.0 / static_cast<double>(space.size());
  std::vector<Hyperbolic> masses(space.size(), Hyperbolic::real(w));
  return DProbability(std::move(space), std::move(masses));
}

DProbability pushforward(const PointMap& f, const DProbability& mu) {
  require_same_space(f.space(), mu.space());
  return DProbability(mu.space(), push_masses(f.image(), mu.masses()));
}

DProbability pushforward_iter(const PointMap& f, const DProbability& mu, std::size_t i) {
  if (i == 0) throw std::invalid_argument("iteration count must be positive");
  DProbability out = pushforward(f, mu);
  for (std::size_t k = 1; k < i; ++k) out = pushforward(f, out);
  return out;
}

Hyperbolic invariance_gap(const PointMap& f, const DProbability& mu) {
  const DProbability pushed = pushforward(f, mu);
  Hyperbolic gap;
  for (std::size_t x = 0; x < mu.size(); ++x) gap += d_modulus(pushed.atom(x) - mu.atom(x));
  return gap;
}

bool is_invariant(const PointMap& f, const DProbability& mu, double tol) {
  const DProbability pushed = pushforward(f, mu);
  const Hyperbolic bound = Hyperbolic::real(tol);
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (!precedes(d_modulus(pushed.atom(x) - mu.atom(x)), bound)) return false;
  }
  return true;
}

ChangeOfVariables change_of_variables_check(const PointMap& f, const DProbability& mu,
                                            const TFunction& phi, double tol) {
  require_same_space(f.space(), phi.space());
  ChangeOfVariables r;
  r.lhs = integrate(phi, pushforward(f, mu).measure());
  r.rhs = integrate(f.pullback(phi), mu.measure());
  const double scale = std::max({1.0, std::abs(r.lhs.e1), std::abs(r.lhs.e2)});
  r.equal = approx_equal(r.lhs, r.rhs, tol * scale);
  return r;
}

DProbability convex_combine(const DProbability& a, const DProbability& b, double t) {
  require_same_space(a.space(), b.space());
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  if (a.total_kind() != b.total_kind()) {
    throw std::invalid_argument("convex combination of D-probabilities with different totals");
  }
  std::vector<Hyperbolic> out(a.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = t * a.atom(x) + (1.0 - t) * b.atom(x);
  return DProbability(a.space(), std::move(out));
}

namespace {

// f^n for some n >= |X| by repeated squaring; its image lies on the cycles.
std::vector<std::size_t> settle_map(std::span<const std::size_t> image) {
  std::vector<std::size_t> g(image.begin(), image.end());
  for (std::size_t steps = 1; steps < image.size(); steps *= 2) {
    std::vector<std::size_t> squared(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) squared[x] = g[g[x]];
    g = std::move(squared);
  }
  return g;
}

DProbability cesaro_limit(const PointMap& f, const DProbability& mu0) {
  std::vector<Hyperbolic> mass = push_masses(settle_map(f.image()), mu0.masses());
  std::vector<bool> done(mass.size(), false);
  std::vector<std::size_t> orbit;
  for (std::size_t x = 0; x < mass.size(); ++x) {
    if (done[x] || mass[x].is_zero()) continue;
    // x carries mass after settling, so it lies on a cycle.
    orbit.clear();
    Hyperbolic sum;
    std::size_t y = x;
    do {
      orbit.push_back(y);
      sum += mass[y];
      y = f(y);
    } while (y != x);
    const Hyperbolic share = (1.0 / static_cast<double>(orbit.size())) * sum;
    for (auto z : orbit) {
      mass[z] = share;
      done[z] = true;
    }
  }
  return DProbability(mu0.space(), std::move(mass));
}

}  // namespace

CesaroTrace cesaro_invariant(const PointMap& f, const DProbability& mu0, std::size_t max_iter,
                             double tol) {
  require_same_space(f.space(), mu0.space());
  if (max_iter == 0) throw std::invalid_argument("max_iter must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  std::vector<DProbability> iterates;
  std::vector<Hyperbolic> gaps;
  std::vector<Hyperbolic> running(mu0.size());
  std::vector<Hyperbolic> current(mu0.masses().begin(), mu0.masses().end());
  const Hyperbolic bound = Hyperbolic::real(tol);
  bool converged = false;

  for (std::size_t n = 1; n <= max_iter && !converged; ++n) {
    for (std::size_t x = 0; x < running.size(); ++x) running[x] += current[x];
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<Hyperbolic> average(running.size());
    for (std::size_t x = 0; x < running.size(); ++x) average[x] = inv_n * running[x];
    iterates.emplace_back(mu0.space(), std::move(average));
    gaps.push_back(invariance_gap(f, iterates.back()));
    converged = precedes(gaps.back(), bound);
    current = push_masses(f.image(), current);
  }
  return CesaroTrace{std::move(iterates), std::move(gaps), converged, cesaro_limit(f, mu0)};
}

std::vector<std::vector<std::size_t>> functional_cycles(const PointMap& f) {
  enum : unsigned char { kUnseen, kOnPath, kDone };
  std::vector<unsigned char> state(f.size(), kUnseen);
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < f.size(); ++start) {
    if (state[start] != kUnseen) continue;
    path.clear();
    std::size_t x = start;
    while (state[x] == kUnseen) {
      state[x] = kOnPath;
      path.push_back(x);
      x = f(x);
    }
    if (state[x] == kOnPath) {
      auto first = std::find(path.begin(), path.end(), x);
      std::vector<std::size_t> cycle(first, path.end());
      std::sort(cycle.begin(), cycle.end());
      cycles.push_back(std::move(cycle));
    }
    for (auto y : path) state[y] = kDone;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

std::vector<DProbability> invariant_basis_bruteforce(const PointMap& f) {
  if (f.size() > kMaxBasisAtoms) throw SizeCapExceeded("cycle basis is capped at 2^16 atoms");
  std::vector<DProbability> basis;
  for (const auto& cycle : functional_cycles(f)) {
    std::vector<Hyperbolic> masses(f.size());
    const double w = 1.0 / static_cast<double>(cycle.size());
    for (auto x : cycle) masses[x] = Hyperbolic::real(w);
    basis.emplace_back(f.space(), std::move(masses));
  }
  return basis;
}

std::vector<Hyperbolic> hull_weights(std::span<const DProbability> basis, const DProbability& mu,
                                     double tol) {
  std::vector<Hyperbolic> weights;
  std::vector<Hyperbolic> rebuilt(mu.size());
  for (const auto& b : basis) {
    require_same_space(b.space(), mu.space());
    Hyperbolic w;
    for (std::size_t x = 0; x < mu.size(); ++x) {
      if (!b.atom(x).is_zero()) w += mu.atom(x);
    }
    for (std::size_t x = 0; x < mu.size(); ++x) rebuilt[x] += w * b.atom(x);
    weights.push_back(w);
  }
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (!approx_equal(rebuilt[x], mu.atom(x), tol)) return {};
  }
  return weights;
}

ContinuityProbe continuity_probe(const PointMap& f, std::span<const DProbability> mu_seq,
                                 const DProbability& mu_lim, std::span<const TFunction> test_fns,
                                 double tol) {
  if (mu_seq.empty()) throw std::invalid_argument("continuity probe needs a nonempty sequence");
  require_same_space(f.space(), mu_lim.space());
  for (const auto& m : mu_seq) require_same_space(f.space(), m.space());
  for (const auto& phi : test_fns) require_same_space(f.space(), phi.space());

  const Hyperbolic bound = Hyperbolic::real(tol);
  auto within = [&](const DMeasure& a, const DMeasure& b) {
    return std::all_of(test_fns.begin(), test_fns.end(), [&](const TFunction& phi) {
      return precedes(d_modulus(integrate(phi, a) - integrate(phi, b)), bound);
    });
  };

  ContinuityProbe r;
  const DProbability& last = mu_seq.back();
  r.antecedent = within(last, mu_lim);
  r.consequent = within(pushforward(f, last), pushforward(f, mu_lim));
  r.holds = !r.antecedent || r.consequent;
  return r;
}

}  // namespace bimeasure
