#pragma once

#include <cstddef>
#include <cstdint>

#include "bimeasure/measure.hpp"

namespace bimeasure::detail {

inline void require_enumerable(std::size_t atoms) {
  if (atoms > kMaxEnumeratedAtoms) {
    throw SizeCapExceeded("subset enumeration is capped at 20 atoms");
  }
}

/// Calls fn(bits) for every subset of {0, ..., atoms-1}, empty set first.
template <class Fn>
void for_each_subset(std::size_t atoms, Fn&& fn) {
  require_enumerable(atoms);
  const std::uint64_t end = std::uint64_t{1} << atoms;
  for (std::uint64_t bits = 0; bits < end; ++bits) fn(bits);
}

/// Sum of values[i] over the set bits, in ascending index order.
template <class Values>
auto subset_sum(const Values& values, std::uint64_t bits) {
  typename Values::value_type sum{};
  for (std::size_t i = 0; bits != 0; ++i, bits >>= 1) {
    if (bits & 1U) sum += values[i];
  }
  return sum;
}

}  // namespace bimeasure::detail
