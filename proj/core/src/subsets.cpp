#include "artin/subsets.hpp"

namespace artin {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::size_t colex_rank(SubsetMask s) {
  std::size_t rank = 0;
  int j = 1;
  for (int pos = 0; pos < 32; ++pos) {
    if ((s >> pos) & 1U) {
      rank += binomial(pos, j);
      ++j;
    }
  }
  return rank;
}

std::vector<SubsetMask> subsets_of_size(int n, int k) {
  std::vector<SubsetMask> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack enumerates k-subsets in increasing numeric order.
  SubsetMask s = full_set(k);
  const SubsetMask limit = full_set(n);
  while (true) {
    out.push_back(s);
    const SubsetMask c = s & (~s + 1);
    const SubsetMask r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
    if (s > limit || (s & ~limit) != 0) break;
  }
  return out;
}

std::vector<int> members(SubsetMask s) {
  std::vector<int> out;
  for (int g = 1; g <= 32; ++g) {
    if (contains(s, g)) out.push_back(g);
  }
  return out;
}

std::string format_subset(SubsetMask s) {
  if (s == 0) return "-";
  std::string out;
  for (int g : members(s)) {
    if (!out.empty()) out += ",";
    out += std::to_string(g);
  }
  return out;
}

}  // namespace artin
