#pragma once

#include <cstddef>
#include <vector>

#include "artin/laurent.hpp"

namespace artin {

/// Dense row-major matrix over R = A[q, q^-1].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, Domain domain)
      : rows_(rows), cols_(cols), domain_(domain), data_(rows * cols, LaurentPoly(domain)) {}

  static PolyMatrix identity(std::size_t n, Domain domain);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Domain& domain() const noexcept { return domain_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  PolyMatrix transposed() const;
  PolyMatrix in_domain(Domain target) const;
  /// Largest span over nonzero entries (0 for the zero matrix).
  int max_entry_span() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Domain domain_ = Domain::rationals();
  std::vector<LaurentPoly> data_;
};

/// Determinant by fraction-free elimination (exact divisions only).
LaurentPoly determinant(const PolyMatrix& m);

}  // namespace artin
