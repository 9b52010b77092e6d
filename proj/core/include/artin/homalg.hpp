#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "artin/complex.hpp"
#include "artin/cyclotomic.hpp"
#include "artin/filtration.hpp"
#include "artin/series_window.hpp"
#include "artin/smith.hpp"

namespace artin {

/// H ~= R^free_rank + sum_i R/(torsion_i), torsion normalized and nonconstant.
struct InvariantFactors {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<LaurentPoly> torsion;

  /// A-dimension of the torsion part: sum of spans.
  int torsion_dimension() const;
};

using DegreeCallback = std::function<void(const InvariantFactors&)>;

/// H^k = ker d^k / im d^{k-1} for every degree of c, from the Smith forms of
/// the differentials. `on_degree` fires as each degree is finished.
/// Throws UnsupportedDomain over Z.
std::vector<InvariantFactors> cohomology(const CochainComplex& c, const DegreeCallback& on_degree = {});

/// H_k of the chain complex (C, d^T), i.e. cohomology of transpose_complex
/// read with reversed grading. Entry k is H_k.
std::vector<InvariantFactors> homology(const CochainComplex& c);

struct WindowPolicy {
  /// 0 selects 8 * max(1, largest entry span).
  int initial_radius = 0;
  int max_doublings = 3;

  int start_radius(const CochainComplex& c) const;
};

/// H^k(C (x) M) against the torsion of H^{k+1}(C).
struct ShiftDegree {
  int k = 0;
  int m_dimension = 0;
  int r_dimension = 0;
  /// Free ranks of H^k(C) and H^{k+1}(C).
  std::size_t free_rank_k = 0;
  std::size_t free_rank_next = 0;
  int radius = 0;
  bool stabilized = true;
  bool match = false;
};

struct ShiftReport {
  std::vector<ShiftDegree> degrees;
  std::vector<InvariantFactors> cohomology;
  WellFilteredResult well_filtered;

  bool all_match() const;
};

/// Checks dim H^k(C (x) A[[q, q^-1]]) = dim_A tors H^{k+1}(C) for k = -1..top.
/// The M-side comes from window ranks, the R-side from Smith forms.
/// Throws NotWellFiltered (also for the rank-one complex R itself, whose
/// M-side cohomology is infinite) and NotStabilized with the last radius.
ShiftReport verify_shift_theorem(const CochainComplex& c, const WindowPolicy& policy = {});

struct MonodromyDegree {
  /// Degree in the Milnor fiber: cohomological degree minus one.
  int degree = 0;
  /// Product of the normalized torsion factors of H^{degree + 1}.
  LaurentPoly charpoly;
  /// Present over Q only.
  std::optional<CyclotomicFactorization> eigenvalues;
};

/// Characteristic polynomial of q acting on the torsion of H^k, reported in
/// Milnor degree k - 1, for k >= 1.
std::vector<MonodromyDegree> monodromy_char_poly(const std::vector<InvariantFactors>& h, Domain domain);

}  // namespace artin
