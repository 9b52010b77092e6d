#pragma once

#include <utility>
#include <vector>

#include "artin/laurent.hpp"

namespace artin {

/// Phi_n over the given domain (integer coefficients mapped in).
LaurentPoly cyclotomic(int n, Domain domain = Domain::rationals());

/// [n]_q = 1 + q + ... + q^(n-1).
LaurentPoly q_bracket(int n, Domain domain = Domain::rationals());

struct CyclotomicFactorization {
  /// c * q^k
  LaurentPoly unit;
  /// (n, multiplicity), increasing n.
  std::vector<std::pair<int, int>> factors;
  /// Monic with valuation 0, coprime to Phi_n for every n <= bound.
  LaurentPoly remainder;

  LaurentPoly product() const;
};

inline constexpr int kDefaultCyclotomicBound = 120;

/// p = unit * prod Phi_n^m * remainder by trial division against Phi_n,
/// n <= bound. Rational coefficients only.
CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p,
                                          int bound = kDefaultCyclotomicBound);

}  // namespace artin
