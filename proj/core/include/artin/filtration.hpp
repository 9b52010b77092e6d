#pragma once

#include <string>
#include <vector>

#include "artin/complex.hpp"

namespace artin {

/// Decreasing chain F_0 C >= F_1 C >= ... >= F_{n+1} C of subcomplexes, each
/// spanned by a subset of the basis of C.
class Filtration {
 public:
  Filtration() = default;
  /// members[i][k][b] says whether basis element b of degree k lies in F_i.
  /// There are length + 2 levels.
  explicit Filtration(std::vector<std::vector<std::vector<bool>>> members, bool standard = false);

  /// n: the index with F_{n+1} = 0 expected.
  int length() const noexcept { return static_cast<int>(members_.size()) - 2; }
  bool contains(int level, int degree, std::size_t index) const;
  /// Basis elements of F_level as (degree, index) pairs.
  std::vector<std::pair<int, std::size_t>> elements(int level) const;
  /// Elements of F_level not in F_{level+1}.
  std::vector<std::pair<int, std::size_t>> layer(int level) const;
  /// Built by standard_filtration; quotients re-express as generic complexes.
  bool is_standard() const noexcept { return standard_; }

 private:
  std::vector<std::vector<std::vector<bool>>> members_;
  bool standard_ = false;
};

/// F_i spanned by e_D with {n-i+1, ..., n} contained in D. Throws
/// NotSubsetIndexed.
Filtration standard_filtration(const CochainComplex& c);

/// F_i C / F_{i+1} C. For a standard filtration the quotient is re-expressed
/// as the generic complex on {1, ..., n-i-1} with p'_{D,j} = p_{D + {n-i+1..n}, j}
/// (its degrees sit i lower than in C). Otherwise the quotient keeps the
/// layer's basis and loses subset indexing. Throws IndexOutOfRange.
CochainComplex quotient_complex(const CochainComplex& c, const Filtration& f, int level);

/// The polynomial by which the connecting map F_{n-1}/F_n -> F_n/F_{n+1}
/// multiplies. Throws RankMismatch unless both layers have rank one.
LaurentPoly induced_differential(const CochainComplex& c, const Filtration& f);

struct WellFilteredResult {
  bool ok = true;
  /// "a".."d", or empty when ok.
  std::string condition;
  /// Quotient levels taken from the top complex down to the failure.
  std::vector<int> path;
  std::string detail;
  /// Accepted only because it is the rank-one complex on zero generators.
  bool by_convention = false;

  /// e.g. "well-filtered condition (c) fails at quotient path [2,0]: ..."
  std::string describe() const;
};

WellFilteredResult is_well_filtered(const CochainComplex& c, const Filtration& f);
/// Uses the standard filtration; non-subset-indexed input fails condition (a).
WellFilteredResult is_well_filtered(const CochainComplex& c);

}  // namespace artin
