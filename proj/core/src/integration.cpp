#include "bimeasure/integration.hpp"

#include <cmath>
#include <stdexcept>

namespace bimeasure {

namespace {

void require_same_space(const FiniteSpace& a, const FiniteSpace& b) {
  if (!(a == b)) throw SpaceMismatch();
}

Complex unit_factor(const Complex& w) {
  if (w == Complex{}) return {1.0, 0.0};
  if (w.imag() == 0.0) return {w.real() > 0.0 ? 1.0 : -1.0, 0.0};
  return w / std::abs(w);
}

}  // namespace

TFunction::TFunction(FiniteSpace space, std::vector<Bicomplex> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw std::invalid_argument("value table size does not match the space");
  }
}

TFunction::TFunction(FiniteSpace space) : space_(std::move(space)), values_(space_.size()) {}

TFunction TFunction::constant(FiniteSpace space, const Bicomplex& c) {
  std::vector<Bicomplex> values(space.size(), c);
  return TFunction(std::move(space), std::move(values));
}

TFunction TFunction::indicator(FiniteSpace space, const SetMask& a) {
  if (a.width() != space.size()) throw SpaceMismatch();
  std::vector<Bicomplex> values(space.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (a.test(i)) values[i] = Bicomplex(kUnit);
  }
  return TFunction(std::move(space), std::move(values));
}

TFunction operator+(const TFunction& f, const TFunction& g) {
  require_same_space(f.space_, g.space_);
  std::vector<Bicomplex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.values_[i] + g.values_[i];
  return TFunction(f.space_, std::move(out));
}

TFunction operator-(const TFunction& f, const TFunction& g) {
  require_same_space(f.space_, g.space_);
  std::vector<Bicomplex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.values_[i] - g.values_[i];
  return TFunction(f.space_, std::move(out));
}

TFunction operator*(const TFunction& f, const TFunction& g) {
  require_same_space(f.space_, g.space_);
  std::vector<Bicomplex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.values_[i] * g.values_[i];
  return TFunction(f.space_, std::move(out));
}

TFunction operator*(const Bicomplex& c, const TFunction& f) {
  std::vector<Bicomplex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * f.values_[i];
  return TFunction(f.space_, std::move(out));
}

TFunction fn_modulus(const TFunction& f) {
  std::vector<Bicomplex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Bicomplex(d_modulus(f[i]));
  return TFunction(f.space(), std::move(out));
}

TFunction polar_decompose_function(const TFunction& f) {
  std::vector<Bicomplex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {unit_factor(f[i].e1), unit_factor(f[i].e2)};
  }
  return TFunction(f.space(), std::move(out));
}

bool in_L1(const TFunction& f, const DMeasure& mu) {
  require_same_space(f.space(), mu.space());
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_finite()) return false;
    const Hyperbolic m = mu.atom(i);
    // 0 * inf counts as 0: a null atom carries no integral.
    if (f[i].e1 != Complex{}) s1 += std::abs(f[i].e1) * m.e1;
    if (f[i].e2 != Complex{}) s2 += std::abs(f[i].e2) * m.e2;
  }
  return std::isfinite(s1) && std::isfinite(s2);
}

Bicomplex integrate(const TFunction& f, const DMeasure& mu, const SetMask& e) {
  require_same_space(f.space(), mu.space());
  if (e.width() != f.size()) throw SpaceMismatch();
  if (!in_L1(f, mu)) throw std::domain_error("function is not integrable");
  Bicomplex sum;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!e.test(i)) continue;
    const Hyperbolic m = mu.atom(i);
    if (f[i].e1 != Complex{}) sum.e1 += f[i].e1 * m.e1;
    if (f[i].e2 != Complex{}) sum.e2 += f[i].e2 * m.e2;
  }
  return sum;
}

Bicomplex integrate(const TFunction& f, const DMeasure& mu) {
  return integrate(f, mu, SetMask::full(f.size()));
}

Hyperbolic integrate_modulus(const TFunction& f, const DMeasure& mu, const SetMask& e) {
  return integrate(fn_modulus(f), mu, e).real_part();
}

bool check_linearity(const TFunction& f, const TFunction& g, const Bicomplex& alpha,
                     const Bicomplex& beta, const DMeasure& mu, double tol) {
  require_same_space(f.space(), g.space());
  require_same_space(f.space(), mu.space());
  const TFunction combo = alpha * f + beta * g;
  if (!in_L1(combo, mu)) return false;
  const Bicomplex lhs = integrate(combo, mu);
  const Bicomplex rhs = alpha * integrate(f, mu) + beta * integrate(g, mu);
  return approx_equal(lhs, rhs, tol);
}

ModulusInequality check_modulus_inequality(const TFunction& f, const DMeasure& mu) {
  ModulusInequality r;
  const SetMask all = SetMask::full(f.size());
  r.lhs = d_modulus(integrate(f, mu, all));
  r.rhs = integrate_modulus(f, mu, all);
  const Hyperbolic slack = kRoundingAllowance * r.rhs;
  r.holds = precedes_or_equal(r.lhs, r.rhs + slack);
  return r;
}

DCTReport dct_run(std::span<const TFunction> fn_seq, const TFunction& f_limit, const TFunction& g,
                  const DMeasure& mu, double tol) {
  if (fn_seq.empty()) throw std::invalid_argument("dominated convergence needs a nonempty sequence");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  require_same_space(f_limit.space(), mu.space());
  require_same_space(g.space(), mu.space());
  for (const auto& fn : fn_seq) require_same_space(fn.space(), mu.space());

  DCTReport report;
  report.domination_ok = true;
  for (const auto& fn : fn_seq) {
    for (std::size_t x = 0; x < fn.size() && report.domination_ok; ++x) {
      const Hyperbolic bound = g[x].real_part();
      const bool g_real = g[x].is_hyperbolic();
      report.domination_ok = g_real && std::abs(fn[x].e1) <= bound.e1 &&
                             std::abs(fn[x].e2) <= bound.e2;
    }
  }

  const SetMask all = SetMask::full(mu.size());
  const Bicomplex limit_integral = integrate(f_limit, mu, all);
  report.l1_limit.reserve(fn_seq.size());
  report.integral_trace.reserve(fn_seq.size());
  for (const auto& fn : fn_seq) {
    report.l1_limit.push_back(integrate_modulus(fn - f_limit, mu, all));
    report.integral_trace.push_back(integrate(fn, mu, all));
  }
  report.final_gap = report.l1_limit.back();
  report.integral_gap = d_modulus(report.integral_trace.back() - limit_integral);
  const Hyperbolic bound = Hyperbolic::real(tol);
  report.converged = precedes(report.final_gap, bound) && precedes(report.integral_gap, bound);
  report.success = report.domination_ok && report.converged;
  return report;
}

}  // namespace bimeasure
