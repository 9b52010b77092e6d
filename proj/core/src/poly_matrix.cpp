#include "artin/poly_matrix.hpp"

#include <algorithm>

#include "artin/error.hpp"

namespace artin {

PolyMatrix PolyMatrix::identity(std::size_t n, Domain domain) {
  PolyMatrix m(n, n, domain);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(domain, 1);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_, domain_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

PolyMatrix PolyMatrix::in_domain(Domain target) const {
  PolyMatrix m(rows_, cols_, target);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].in_domain(target);
  return m;
}

int PolyMatrix::max_entry_span() const {
  int best = 0;
  for (const auto& p : data_) best = std::max(best, p.span());
  return best;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(Errc::RankMismatch, "matrix product of " + std::to_string(a.rows_) + "x" +
                                        std::to_string(a.cols_) + " and " +
                                        std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  PolyMatrix c(a.rows_, b.cols_, a.domain_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& lhs = a(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const LaurentPoly& rhs = b(k, j);
        if (!rhs.is_zero()) c(i, j) += lhs * rhs;
      }
    }
  }
  return c;
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::RankMismatch, "determinant of a non-square matrix");
  const Domain& dom = m.domain();
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(dom, 1);
  PolyMatrix a = m;
  LaurentPoly prev = LaurentPoly::constant(dom, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return LaurentPoly(dom);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divexact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = LaurentPoly(dom);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

}  // namespace artin
