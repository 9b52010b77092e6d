#include "artin/domain.hpp"

#include <cctype>

#include "artin/error.hpp"

namespace artin {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::UnsupportedDomain: return "UnsupportedDomain";
    case Errc::ParseError: return "ParseError";
    case Errc::SeedTooShort: return "SeedTooShort";
    case Errc::NonInvertibleExtremes: return "NonInvertibleExtremes";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::InvalidRank: return "InvalidRank";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::InfiniteGroup: return "InfiniteGroup";
    case Errc::MissingEntry: return "MissingEntry";
    case Errc::CocycleViolation: return "CocycleViolation";
    case Errc::NotSubsetIndexed: return "NotSubsetIndexed";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NotWellFiltered: return "NotWellFiltered";
    case Errc::InputError: return "InputError";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Domain Domain::prime_field(std::uint32_t p) {
  if (!is_prime(p)) {
    throw Error(Errc::UnsupportedDomain,
                "Z/" + std::to_string(p) + " is not a prime field");
  }
  return Domain(Kind::PrimeField, p);
}

Domain Domain::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Z" || text == "ZZ") return integers();
  std::string digits;
  for (const char* prefix : {"Zp:", "Z/", "F", "GF(", "Fp:"}) {
    const std::string pre(prefix);
    if (text.rfind(pre, 0) == 0) {
      digits = text.substr(pre.size());
      if (pre == "GF(" && !digits.empty() && digits.back() == ')') {
        digits.pop_back();
      }
      break;
    }
  }
  if (digits.empty() || digits.size() > 9) {
    throw Error(Errc::UnsupportedDomain, "unknown coefficient domain '" + text + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::UnsupportedDomain, "unknown coefficient domain '" + text + "'");
    }
  }
  return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string Domain::name() const {
  switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::Integer: return "Z";
    case Kind::PrimeField: return "Z/" + std::to_string(p_);
  }
  return "?";
}

Scalar Domain::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Scalar(r);
}

Scalar Domain::from_rational(const Scalar& x) const {
  switch (kind_) {
    case Kind::Rational:
      return x;
    case Kind::Integer:
      if (x.get_den() != 1) {
        throw Error(Errc::NotAUnit, "non-integral coefficient " + x.get_str() + " over Z");
      }
      return x;
    case Kind::PrimeField: {
      const Scalar num = reduce(x.get_num());
      if (x.get_den() == 1) return num;
      const Scalar den = reduce(x.get_den());
      if (den == 0) {
        throw Error(Errc::NotAUnit, "denominator of " + x.get_str() + " vanishes in " + name());
      }
      return mul(num, inverse(den));
    }
  }
  return x;
}

Scalar Domain::add(const Scalar& a, const Scalar& b) const {
  if (kind_ != Kind::PrimeField) return a + b;
  Scalar s = a + b;
  if (s >= p_) s -= p_;
  return s;
}

Scalar Domain::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ != Kind::PrimeField) return a - b;
  Scalar s = a - b;
  if (s < 0) s += p_;
  return s;
}

Scalar Domain::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ != Kind::PrimeField) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Scalar Domain::neg(const Scalar& a) const {
  if (kind_ != Kind::PrimeField) return -a;
  if (a == 0) return a;
  return Scalar(p_) - a;
}

bool Domain::is_unit(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rational:
    case Kind::PrimeField:
      return a != 0;
    case Kind::Integer:
      return a == 1 || a == -1;
  }
  return false;
}

Scalar Domain::inverse(const Scalar& a) const {
  if (!is_unit(a)) {
    throw Error(Errc::NotAUnit, a.get_str() + " is not a unit of " + name());
  }
  switch (kind_) {
    case Kind::Rational:
      return 1 / a;
    case Kind::Integer:
      return a;
    case Kind::PrimeField: {
      mpz_class inv;
      const mpz_class mod(p_);
      mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), mod.get_mpz_t());
      return Scalar(inv);
    }
  }
  return a;
}

bool Domain::divides(const Scalar& b, const Scalar& a, Scalar& out) const {
  if (b == 0) {
    if (a != 0) return false;
    out = 0;
    return true;
  }
  if (kind_ == Kind::Integer) {
    if (!mpz_divisible_p(a.get_num().get_mpz_t(), b.get_num().get_mpz_t())) return false;
    out = Scalar(a.get_num() / b.get_num());
    return true;
  }
  out = mul(a, inverse(b));
  return true;
}

Scalar Domain::display(const Scalar& a) const {
  if (kind_ != Kind::PrimeField) return a;
  if (2 * a > p_) return a - p_;
  return a;
}

}  // namespace artin
