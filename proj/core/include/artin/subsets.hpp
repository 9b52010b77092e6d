#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace artin {

/// A subset of the ordered generators {1, ..., n}: generator g is bit g-1.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxGenerators = 16;

constexpr SubsetMask generator_bit(int g) { return SubsetMask{1} << (g - 1); }
constexpr bool contains(SubsetMask s, int g) { return (s & generator_bit(g)) != 0; }
constexpr int cardinality(SubsetMask s) { return std::popcount(s); }
constexpr SubsetMask full_set(int n) {
  return n == 0 ? SubsetMask{0} : (~SubsetMask{0} >> (32 - n));
}

/// {lo, ..., hi}; empty when lo > hi.
constexpr SubsetMask interval(int lo, int hi) {
  SubsetMask s = 0;
  for (int g = lo; g <= hi; ++g) s |= generator_bit(g);
  return s;
}

/// sigma(j, D) = #{i in D : i < j}.
constexpr int sigma(int j, SubsetMask s) { return std::popcount(s & (generator_bit(j) - 1)); }

std::uint64_t binomial(int n, int k);

/// Position of s among subsets of equal cardinality in colex order (which
/// coincides with numeric order of the masks).
std::size_t colex_rank(SubsetMask s);

/// All k-subsets of {1..n} in colex order.
std::vector<SubsetMask> subsets_of_size(int n, int k);

std::vector<int> members(SubsetMask s);

/// "-" for the empty set, otherwise e.g. "1,3".
std::string format_subset(SubsetMask s);

}  // namespace artin
