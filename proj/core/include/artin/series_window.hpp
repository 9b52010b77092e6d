#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "artin/complex.hpp"
#include "artin/laurent.hpp"

namespace artin {

/// The visible slice [lo, hi] of a series m = sum a_i q^i in A[[q, q^-1]].
class WindowSeries {
 public:
  WindowSeries(Domain domain, int lo, std::vector<Scalar> coefficients);
  /// Zero coefficients on [lo, hi].
  static WindowSeries zeros(Domain domain, int lo, int hi);
  /// A Laurent polynomial seen through the window [lo, hi].
  static WindowSeries of(const LaurentPoly& p, int lo, int hi);

  const Domain& domain() const noexcept { return domain_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  /// Coefficient of q^i; zero outside the window.
  Scalar at(int i) const;
  void set(int i, const Scalar& value);
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }

  /// The sub-window [lo, hi] (clamped).
  WindowSeries restricted(int lo, int hi) const;
  /// p * m on the interior where every needed coefficient is visible.
  WindowSeries multiplied_by(const LaurentPoly& p) const;
  bool is_zero() const;

  /// JSON array of canonical coefficient strings, for debugging dumps.
  std::string to_json() const;

  friend bool operator==(const WindowSeries&, const WindowSeries&) = default;

 private:
  Domain domain_;
  int lo_;
  std::vector<Scalar> c_;
};

enum class ExtendDirection { Left, Right };

/// Extends `seed` by `steps` coefficients with the linear recurrence imposed
/// by p * m = 0: rightward a_k = -b_s^-1 sum_{i=1}^{t-s} b_{s+i} a_{k-i},
/// leftward a_k = -b_t^-1 sum_{i=1}^{t-s} b_{t-i} a_{k+i}.
/// Throws NonInvertibleExtremes or SeedTooShort (seed shorter than span p).
WindowSeries recurrence_extend(const WindowSeries& seed, const LaurentPoly& p,
                               ExtendDirection direction, int steps);

/// Basis of ker(p * -) on A[[q, q^-1]]: span(p) unit seeds on [0, span-1].
struct RecurrenceKernel {
  LaurentPoly p;
  std::vector<WindowSeries> seeds;

  int dimension() const noexcept { return static_cast<int>(seeds.size()); }
  /// Basis element `index` extended in both directions to cover [lo, hi].
  WindowSeries element(int index, int lo, int hi) const;
};

RecurrenceKernel kernel_of_scalar_mul(const LaurentPoly& p);

/// A preimage x of rhs under multiplication by p, built by splitting
/// rhs = m+ + m- at exponent 0 and applying the expansions of p^-1 in q
/// (for m+) and in q^-1 (for m-). The result lives on [lo - t, hi - s] and
/// satisfies p * x = rhs on all of rhs's window [lo, hi].
/// Throws NonInvertibleExtremes or WindowTooSmall.
WindowSeries solve_scalar_mul(const LaurentPoly& p, const WindowSeries& rhs);

/// Sparse row over a field: sorted (column, nonzero value) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Rank of a sparse matrix over a field by Gaussian elimination ordered on
/// the leading column (fill stays inside the band for banded input).
std::size_t sparse_rank(std::vector<SparseRow> rows, const Domain& domain);

/// Finite truncation of a differential acting on coefficient windows.
///
/// Columns are (position, component) pairs over [in_lo, in_hi], rows are
/// (position, component) pairs over the valid output window: the positions j
/// for which every q^j coefficient of D(q) x only reads visible inputs.
/// Indices are position-major, so the assembled matrix is banded.
struct WindowOperator {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  PolyMatrix entries;
  int in_lo = 0;
  int in_hi = -1;
  int out_lo = 0;
  int out_hi = -1;
  std::vector<SparseRow> rows;

  static WindowOperator assemble(const PolyMatrix& d, int in_lo, int in_hi);

  std::size_t column_count() const noexcept {
    return in_hi < in_lo ? 0 : static_cast<std::size_t>(in_hi - in_lo + 1) * source_rank;
  }
  std::size_t column_of(int position, std::size_t component) const {
    return static_cast<std::size_t>(position - in_lo) * source_rank + component;
  }
  /// Rows restricted to the columns whose position lies outside [lo, hi].
  std::vector<SparseRow> rows_without_positions(int lo, int hi) const;
};

/// Lowest and highest exponent over nonzero entries; (0, 0) for zero.
std::pair<int, int> exponent_range(const PolyMatrix& d);

struct WindowDimension {
  int dimension = 0;
  bool stabilized = false;
  int radius = 0;
  /// Dimension at the enlarged radius used for the stabilization check.
  int check_dimension = 0;
};

/// dim_A H^k(C (x)_R A[[q, q^-1]]) seen through the inner window [-N, N]:
/// the restriction of cocycles (cut out on the wider window
/// [-(2N + B), 2N + B], B the sum of the differentials' bands) modulo the
/// restriction of coboundaries. Computed at N and N + 2 * bandwidth;
/// `stabilized` reports agreement. Field coefficients only.
WindowDimension m_cohomology_dim_window(const CochainComplex& c, int k, int radius);

/// The single-radius evaluation behind m_cohomology_dim_window.
int m_cohomology_dim_at(const CochainComplex& c, int k, int radius);

}  // namespace artin
