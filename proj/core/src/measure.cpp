#include "bimeasure/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "subsets.hpp"

namespace bimeasure {

FiniteSpace::FiniteSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw std::invalid_argument("a space needs at least one atom");
  auto data = std::make_shared<Data>();
  data->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!data->index.emplace(labels[i], i).second) {
      throw std::invalid_argument("duplicate atom label '" + labels[i] + "'");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

FiniteSpace FiniteSpace::indexed(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return FiniteSpace(std::move(labels));
}

std::size_t FiniteSpace::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) throw std::out_of_range("unknown atom '" + std::string(label) + "'");
  return it->second;
}

bool FiniteSpace::contains(std::string_view label) const {
  return data_->index.contains(std::string(label));
}

SetMask SetMask::full(std::size_t width) { return ~SetMask(width); }

SetMask SetMask::singleton(std::size_t width, std::size_t atom) {
  SetMask m(width);
  m.set(atom);
  return m;
}

SetMask SetMask::from_bits(std::size_t width, std::uint64_t bits) {
  if (width > 64) throw std::invalid_argument("from_bits supports at most 64 atoms");
  SetMask m(width);
  if (width > 0) m.words_[0] = width == 64 ? bits : bits & ((std::uint64_t{1} << width) - 1);
  return m;
}

SetMask& SetMask::set(std::size_t i, bool value) {
  if (i >= width_) throw std::out_of_range("atom index outside the mask");
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
  return *this;
}

std::size_t SetMask::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> SetMask::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < width_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

SetMask SetMask::operator~() const {
  SetMask m = *this;
  for (auto& w : m.words_) w = ~w;
  if (const std::size_t tail = width_ % 64; tail != 0) {
    m.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return m;
}

void SetMask::require_same_width(const SetMask& o) const {
  if (width_ != o.width_) throw SpaceMismatch();
}

SetMask& SetMask::operator&=(const SetMask& o) {
  require_same_width(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
  return *this;
}

SetMask& SetMask::operator|=(const SetMask& o) {
  require_same_width(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::DPlus: return "D+";
    case MeasureKind::D: return "D";
    case MeasureKind::SignedD: return "signedD";
    case MeasureKind::T: return "T";
  }
  return "T";
}

SignedDMeasure::SignedDMeasure(FiniteSpace space, std::vector<Hyperbolic> masses)
    : BasicMeasure(std::move(space), std::move(masses)) {
  for (const auto& m : masses_) {
    if (std::isnan(m.e1) || std::isnan(m.e2)) throw std::domain_error("not a signed D-measure");
  }
}

SignedDMeasure SignedDMeasure::from(const TMeasure& mu) {
  std::vector<Hyperbolic> masses;
  masses.reserve(mu.size());
  for (const auto& m : mu.masses()) {
    if (!m.is_hyperbolic()) throw std::domain_error("not a signed D-measure");
    masses.push_back(m.real_part());
  }
  return SignedDMeasure(mu.space(), std::move(masses));
}

TMeasure SignedDMeasure::to_t() const {
  std::vector<Bicomplex> masses(masses_.begin(), masses_.end());
  return TMeasure(space_, std::move(masses));
}

DMeasure::DMeasure(FiniteSpace space, std::vector<Hyperbolic> masses)
    : SignedDMeasure(std::move(space), std::move(masses)) {
  for (const auto& m : masses_) {
    if (!m.is_nonnegative()) throw std::domain_error("not a D-measure");
  }
}

DMeasure DMeasure::from(const TMeasure& mu) {
  std::vector<Hyperbolic> masses;
  masses.reserve(mu.size());
  for (const auto& m : mu.masses()) {
    if (!m.is_hyperbolic() || !m.real_part().is_nonnegative()) {
      throw std::domain_error("not a D-measure");
    }
    masses.push_back(m.real_part());
  }
  return DMeasure(mu.space(), std::move(masses));
}

MeasureKind classify_measure(const TMeasure& mu) {
  bool real = true;
  bool nonnegative = true;
  bool finite = true;
  for (const auto& m : mu.masses()) {
    if (!m.is_hyperbolic() || std::isnan(m.e1.real()) || std::isnan(m.e2.real())) {
      real = false;
      break;
    }
    const Hyperbolic h = m.real_part();
    nonnegative = nonnegative && h.is_nonnegative();
    finite = finite && h.is_finite();
  }
  if (!real) return MeasureKind::T;
  if (!nonnegative) return MeasureKind::SignedD;
  return finite ? MeasureKind::DPlus : MeasureKind::D;
}

Bicomplex measure_of(const TMeasure& mu, const SetMask& e) { return mu(e); }

Hyperbolic total_variation(const TMeasure& mu, const SetMask& e) {
  if (e.width() != mu.size()) throw SpaceMismatch();
  Hyperbolic tv;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (e.test(i)) tv += d_modulus(mu.atom(i));
  }
  return tv;
}

namespace {

// Walks restricted growth strings: element k joins an existing block or opens
// the next one. `blocks` holds the running block sums.
class PartitionMaximiser {
 public:
  explicit PartitionMaximiser(std::vector<Bicomplex> values) : values_(std::move(values)) {
    blocks_.reserve(values_.size());
  }

  Hyperbolic run() {
    if (values_.empty()) return {};
    visit(0);
    return best_;
  }

 private:
  void visit(std::size_t k) {
    if (k == values_.size()) {
      Hyperbolic sum;
      for (const auto& b : blocks_) sum += d_modulus(b);
      best_.e1 = std::max(best_.e1, sum.e1);
      best_.e2 = std::max(best_.e2, sum.e2);
      return;
    }
    for (auto& b : blocks_) {
      const Bicomplex saved = b;
      b += values_[k];
      visit(k + 1);
      b = saved;
    }
    blocks_.push_back(values_[k]);
    visit(k + 1);
    blocks_.pop_back();
  }

  std::vector<Bicomplex> values_;
  std::vector<Bicomplex> blocks_;
  Hyperbolic best_;
};

}  // namespace

Hyperbolic total_variation_bruteforce(const TMeasure& mu, const SetMask& e) {
  if (e.width() != mu.size()) throw SpaceMismatch();
  if (e.count() > kMaxBruteforcePartitionAtoms) {
    throw SizeCapExceeded("partition enumeration is capped at 12 atoms");
  }
  std::vector<Bicomplex> values;
  for (auto i : e.members()) values.push_back(mu.atom(i));
  return PartitionMaximiser(std::move(values)).run();
}

DMeasure modulus_measure(const TMeasure& mu) {
  std::vector<Hyperbolic> masses;
  masses.reserve(mu.size());
  for (const auto& m : mu.masses()) masses.push_back(d_modulus(m));
  return DMeasure(mu.space(), std::move(masses));
}

TMeasure measure_add(const TMeasure& a, const TMeasure& b) {
  if (!(a.space() == b.space())) throw SpaceMismatch();
  std::vector<Bicomplex> masses(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) masses[i] = a.atom(i) + b.atom(i);
  return TMeasure(a.space(), std::move(masses));
}

TMeasure measure_scale(Hyperbolic c, const TMeasure& a) {
  std::vector<Bicomplex> masses(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) masses[i] = Bicomplex(c) * a.atom(i);
  return TMeasure(a.space(), std::move(masses));
}

bool dominates(const DMeasure& lambda, const TMeasure& mu) {
  if (!(lambda.space() == mu.space())) throw SpaceMismatch();
  const auto lam = lambda.masses();
  const auto m = mu.masses();
  bool ok = true;
  detail::for_each_subset(mu.size(), [&](std::uint64_t bits) {
    if (!ok) return;
    const Hyperbolic bound = detail::subset_sum(lam, bits);
    const Bicomplex value = detail::subset_sum(m, bits);
    ok = std::abs(value.e1) <= bound.e1 * (1.0 + kRoundingAllowance) &&
         std::abs(value.e2) <= bound.e2 * (1.0 + kRoundingAllowance);
  });
  return ok;
}

bool is_finite(const TMeasure& mu) {
  return total_variation(mu, SetMask::full(mu.size())).is_finite();
}

bool has_signed_range(const SignedDMeasure& mu) {
  const auto m = mu.masses();
  bool ok = true;
  detail::for_each_subset(mu.size(), [&](std::uint64_t bits) {
    if (!ok) return;
    const Hyperbolic v = detail::subset_sum(m, bits);
    ok = v.is_nonnegative() || (-v).is_nonnegative();
  });
  return ok;
}

DMeasure normalize_to_probability(const DMeasure& mu_hat) {
  const Hyperbolic total = mu_hat.total();
  if (total.is_zero()) throw std::domain_error("cannot normalize zero measure");
  if (!total.is_finite()) throw std::domain_error("cannot normalize a measure with infinite mass");
  std::vector<Hyperbolic> masses;
  masses.reserve(mu_hat.size());
  for (const auto& m : mu_hat.masses()) {
    masses.push_back({total.e1 > 0.0 ? m.e1 / total.e1 : 0.0,
                      total.e2 > 0.0 ? m.e2 / total.e2 : 0.0});
  }
  return DMeasure(mu_hat.space(), std::move(masses));
}

}  // namespace bimeasure
