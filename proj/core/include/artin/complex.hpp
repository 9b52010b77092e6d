#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/laurent.hpp"
#include "artin/poly_matrix.hpp"
#include "artin/subsets.hpp"

namespace artin {

/// The polynomials p_{D,w} for D a subset of {1..n} and w outside D.
class PolynomialFamily {
 public:
  PolynomialFamily() = default;
  PolynomialFamily(int generators, Domain domain);

  int generators() const noexcept { return n_; }
  const Domain& domain() const noexcept { return domain_; }

  /// `line` records where the entry came from (0 when not from a file).
  void set(SubsetMask subset, int w, LaurentPoly p, int line = 0);
  bool has(SubsetMask subset, int w) const;
  /// Throws MissingEntry.
  const LaurentPoly& at(SubsetMask subset, int w) const;
  int line(SubsetMask subset, int w) const;

  PolynomialFamily in_domain(Domain target) const;

 private:
  std::size_t slot(SubsetMask subset, int w) const;

  int n_ = 0;
  Domain domain_ = Domain::rationals();
  std::vector<std::optional<LaurentPoly>> entries_;
  std::vector<int> lines_;
};

/// One violated instance of p_{D,w} p_{D+w,w'} + p_{D,w'} p_{D+w',w} = 0.
struct CocycleViolation {
  SubsetMask subset = 0;
  int w = 0;
  int w_prime = 0;
  /// Largest source line among the four entries (0 if none recorded).
  int line = 0;
};

/// Throws MissingEntry if the family is not total.
std::optional<CocycleViolation> find_cocycle_violation(const PolynomialFamily& family);
bool check_cocycle_family(const PolynomialFamily& family);

/// Finite free graded complex over R with differentials d^k: C^k -> C^{k+1}
/// stored as rank(k+1) x rank(k) matrices acting on column vectors.
///
/// Complexes built from a family are subset-indexed: the basis of C^k is the
/// k-subsets of {1..n} in colex order. A transposed complex keeps the labels
/// but runs in the chain direction and is no longer subset-indexed.
class CochainComplex {
 public:
  enum class Direction : std::uint8_t { Cochain, Chain };

  /// The zero complex.
  CochainComplex() = default;
  /// Throws RankMismatch when shapes disagree with the ranks.
  CochainComplex(Domain domain, std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials);

  const Domain& domain() const noexcept { return domain_; }
  /// Number of degrees 0..top; 0 for the zero complex.
  int degree_count() const noexcept { return static_cast<int>(ranks_.size()); }
  int top_degree() const noexcept { return degree_count() - 1; }
  std::size_t rank(int k) const;
  std::size_t total_rank() const;
  bool is_zero() const noexcept { return total_rank() == 0; }

  /// d^k : C^k -> C^{k+1}; an empty-shaped zero matrix outside 0..top-1.
  PolyMatrix differential(int k) const;
  const std::vector<PolyMatrix>& differentials() const noexcept { return d_; }
  /// Largest entry span across all differentials.
  int max_entry_span() const;

  Direction direction() const noexcept { return direction_; }
  bool subset_indexed() const noexcept {
    return generators_ >= 0 && direction_ == Direction::Cochain;
  }
  /// Number of generators when subset-indexed, -1 otherwise.
  int generators() const noexcept { return subset_indexed() ? generators_ : -1; }
  /// Basis labels of degree k (empty when unlabeled).
  const std::vector<SubsetMask>& basis(int k) const;

  /// Entry of d at (D + w, D): the coefficient p_{D,w}. Needs subset indexing.
  const LaurentPoly& entry(SubsetMask subset, int w) const;

  CochainComplex in_domain(Domain target) const;

  /// Replaces one matrix entry; the result is a plain complex (no d^2 check).
  CochainComplex with_entry(int k, std::size_t row, std::size_t col, LaurentPoly value) const;

  friend bool operator==(const CochainComplex& a, const CochainComplex& b);

 private:
  friend CochainComplex build_generic_complex(const PolynomialFamily& family);
  friend CochainComplex transpose_complex(const CochainComplex& c);

  Domain domain_ = Domain::rationals();
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> d_;
  int generators_ = -1;
  std::vector<std::vector<SubsetMask>> labels_;
  Direction direction_ = Direction::Cochain;
};

/// d e_D = sum over w outside D of p_{D,w} e_{D+w}. Throws CocycleViolation.
CochainComplex build_generic_complex(const PolynomialFamily& family);

/// p_{D,j} = (-1)^sigma(j,D) * (W_{D+j} / W_D)(-q).
PolynomialFamily salvetti_family(const CoxeterSystem& system, Domain domain = Domain::rationals());
CochainComplex build_salvetti_complex(const CoxeterSystem& system,
                                      Domain domain = Domain::rationals());

/// p_{D,w} = (-1)^sigma(w,D) f_w.
PolynomialFamily koszul_family(const std::vector<LaurentPoly>& f);

/// Koszul family with random f_w: span in [0, max_span], extreme coefficients
/// +-1, interior coefficients in [-3, 3], valuation in [-2, 2]. Deterministic
/// for a fixed seed.
PolynomialFamily random_koszul_family(int generators, std::uint64_t seed, int max_span,
                                      Domain domain = Domain::rationals());

bool check_d_squared(const CochainComplex& c);

/// Transposed matrices with reversed grading: degree j of the result is
/// degree top - j of the input. Involutive.
CochainComplex transpose_complex(const CochainComplex& c);

}  // namespace artin
