#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/domain.hpp"

namespace artin {

/// An element of R = A[q, q^-1].
///
/// Stored as a valuation plus the dense coefficient run from q^valuation up
/// to the top exponent. Both ends of the run are nonzero; the zero
/// polynomial has an empty run and valuation 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Domain domain) : domain_(domain) {}

  static LaurentPoly constant(Domain domain, const Scalar& c);
  static LaurentPoly monomial(Domain domain, const Scalar& c, int exponent);
  /// q^exponent
  static LaurentPoly q_power(Domain domain, int exponent) {
    return monomial(domain, 1, exponent);
  }
  /// coefficients[i] is the coefficient of q^(valuation + i). Values are
  /// mapped into the domain and the result is trimmed.
  static LaurentPoly from_coefficients(Domain domain, int valuation,
                                       std::vector<Scalar> coefficients);
  static LaurentPoly from_ints(Domain domain, int valuation,
                               const std::vector<long>& coefficients);

  /// Parses e.g. "1 - q + q^2", "1/2*q^-3 + q", "-(1 - q)*(1 + q)".
  static LaurentPoly parse(std::string_view text, Domain domain = Domain::rationals());

  const Domain& domain() const noexcept { return domain_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int valuation() const noexcept { return valuation_; }
  int top_exponent() const noexcept {
    return valuation_ + static_cast<int>(coeffs_.size()) - 1;
  }
  /// top_exponent - valuation; 0 for the zero polynomial.
  int span() const noexcept {
    return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
  }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(int exponent) const;
  /// Coefficient of the lowest / highest exponent (b_s / b_t).
  const Scalar& trailing() const;
  const Scalar& leading() const;

  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  /// Units of R over a field are the nonzero monomials.
  bool is_unit() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Scalar& c) const;
  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  /// The substitution q -> -q.
  LaurentPoly negated_variable() const;
  /// The substitution q -> q^-1.
  LaurentPoly reflected() const;
  /// Unit multiple with valuation 0 and, over a field, leading coefficient
  /// 1. Over Z the sign is made positive.
  LaurentPoly normalized() const;
  /// Same polynomial viewed in another domain (coefficients mapped).
  LaurentPoly in_domain(Domain target) const;

  Scalar evaluate(const Scalar& at) const;

  /// Canonical text: terms in decreasing exponent, e.g. "q^2 - q + 1".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.domain_ == b.domain_ && a.valuation_ == b.valuation_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void trim();
  void require_same_domain(const LaurentPoly& other) const;

  Domain domain_ = Domain::rationals();
  int valuation_ = 0;
  std::vector<Scalar> coeffs_;
};

/// Exact quotient a / b in R. Throws DivisionByZero when b = 0 and
/// NotDivisible when b does not divide a.
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Euclidean division in R over a field: a = b * quotient + remainder with
/// span(remainder) < span(b), or remainder = 0.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Normalized gcd over a field.
LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

/// p != 0 and both extreme coefficients are units of the coefficient domain.
bool extremes_invertible(const LaurentPoly& p);

}  // namespace artin
