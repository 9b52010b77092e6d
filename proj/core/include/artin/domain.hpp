#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace artin {

using Scalar = mpq_class;

/// The coefficient ring A. Elements are stored as GMP rationals in every
/// domain; the domain keeps them canonical (integral for Z, reduced into
/// [0, p) for Z/p).
class Domain {
 public:
  enum class Kind : std::uint8_t { Rational, Integer, PrimeField };

  Domain() = default;

  static Domain rationals() { return Domain(Kind::Rational, 0); }
  static Domain integers() { return Domain(Kind::Integer, 0); }
  /// Throws UnsupportedDomain unless p is prime.
  static Domain prime_field(std::uint32_t p);
  /// Parses "Q", "Z", "Zp:<p>" (also "Z/<p>", "F<p>", "GF(<p>)").
  static Domain parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != Kind::Integer; }
  std::string name() const;

  /// Maps an arbitrary rational into the domain. Throws NotAUnit if a
  /// denominator is not invertible (non-integral value into Z, or a
  /// denominator divisible by p).
  Scalar from_rational(const Scalar& x) const;
  Scalar from_int(long v) const { return from_rational(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;

  bool is_unit(const Scalar& a) const;
  /// Throws NotAUnit when a is not invertible.
  Scalar inverse(const Scalar& a) const;
  /// Returns true and sets out = a / b when b divides a in the domain.
  bool divides(const Scalar& b, const Scalar& a, Scalar& out) const;

  /// Representative used for printing: symmetric residue in (-p/2, p/2] for
  /// prime fields, the value itself otherwise.
  Scalar display(const Scalar& a) const;

  friend bool operator==(const Domain& a, const Domain& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Domain& a, const Domain& b) noexcept {
    return !(a == b);
  }

 private:
  Domain(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Scalar reduce(const mpz_class& v) const;

  Kind kind_ = Kind::Rational;
  std::uint32_t p_ = 0;
};

}  // namespace artin
