#include "artin/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "artin/error.hpp"

namespace artin {

LaurentPoly LaurentPoly::constant(Domain domain, const Scalar& c) {
  return monomial(domain, c, 0);
}

LaurentPoly LaurentPoly::monomial(Domain domain, const Scalar& c, int exponent) {
  LaurentPoly p(domain);
  p.valuation_ = exponent;
  p.coeffs_.push_back(domain.from_rational(c));
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(Domain domain, int valuation,
                                           std::vector<Scalar> coefficients) {
  LaurentPoly p(domain);
  p.valuation_ = valuation;
  for (auto& c : coefficients) c = domain.from_rational(c);
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_ints(Domain domain, int valuation,
                                   const std::vector<long>& coefficients) {
  std::vector<Scalar> c;
  c.reserve(coefficients.size());
  for (long v : coefficients) c.emplace_back(v);
  return from_coefficients(domain, valuation, std::move(c));
}

void LaurentPoly::trim() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    valuation_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (coeffs_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<Scalar>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lo),
                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(hi));
    valuation_ += static_cast<int>(lo);
  }
}

void LaurentPoly::require_same_domain(const LaurentPoly& other) const {
  if (domain_ != other.domain_) {
    throw Error(Errc::DomainMismatch,
                "operands over " + domain_.name() + " and " + other.domain_.name());
  }
}

Scalar LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < valuation_ || exponent > top_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

const Scalar& LaurentPoly::trailing() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "zero polynomial has no trailing coefficient");
  return coeffs_.front();
}

const Scalar& LaurentPoly::leading() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool LaurentPoly::is_unit() const {
  return is_monomial() && domain_.is_unit(coeffs_.front());
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = domain_.neg(c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_domain(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(valuation_, other.valuation_);
  const int hi = std::max(top_exponent(), other.top_exponent());
  std::vector<Scalar> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    sum[static_cast<std::size_t>(valuation_ - lo) + i] = coeffs_[i];
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = sum[static_cast<std::size_t>(other.valuation_ - lo) + i];
    slot = domain_.add(slot, other.coeffs_[i]);
  }
  coeffs_ = std::move(sum);
  valuation_ = lo;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  return *this += -other;
}

namespace {

// Numerators over a common denominator: c[i] = out[i] / den.
std::vector<mpz_class> integral_parts(const std::vector<Scalar>& c, mpz_class& den) {
  den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), c[i].get_den_mpz_t());
    out[i] *= c[i].get_num();
  }
  return out;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_domain(b);
  LaurentPoly r(a.domain_);
  if (a.is_zero() || b.is_zero()) return r;
  const Domain& dom = a.domain_;
  r.valuation_ = a.valuation_ + b.valuation_;
  // Convolve integers and canonicalize once per output coefficient; per-term
  // rational arithmetic spends most of its time in gcds.
  mpz_class da, db;
  const auto ia = integral_parts(a.coeffs_, da);
  const auto ib = integral_parts(b.coeffs_, db);
  std::vector<mpz_class> acc(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const mpz_class den = da * db;
  r.coeffs_.reserve(acc.size());
  for (auto& v : acc) {
    Scalar x(std::move(v), den);
    x.canonicalize();
    r.coeffs_.push_back(dom.from_rational(x));
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  return *this = *this * other;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  const Scalar cc = domain_.from_rational(c);
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x = domain_.mul(x, cc);
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.valuation_ += k;
  return r;
}

LaurentPoly LaurentPoly::negated_variable() const {
  LaurentPoly r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if ((valuation_ + static_cast<int>(i)) % 2 != 0) r.coeffs_[i] = domain_.neg(r.coeffs_[i]);
  }
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r = *this;
  if (r.is_zero()) return r;
  std::reverse(r.coeffs_.begin(), r.coeffs_.end());
  r.valuation_ = -top_exponent();
  return r;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  LaurentPoly r = shifted(-valuation_);
  if (domain_.is_field()) return r.scaled(domain_.inverse(leading()));
  if (leading() < 0) return -r;
  return r;
}

LaurentPoly LaurentPoly::in_domain(Domain target) const {
  return from_coefficients(target, valuation_, coeffs_);
}

Scalar LaurentPoly::evaluate(const Scalar& at) const {
  if (is_zero()) return 0;
  const Scalar x = domain_.from_rational(at);
  // Horner on the polynomial part, then the q^valuation factor.
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = domain_.add(domain_.mul(acc, x), *it);
  }
  Scalar power = 1;
  const int v = valuation_;
  const Scalar base = v < 0 ? domain_.inverse(x) : x;
  for (int i = 0; i < (v < 0 ? -v : v); ++i) power = domain_.mul(power, base);
  return domain_.mul(acc, power);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = top_exponent(); e >= valuation_; --e) {
    const Scalar c = domain_.display(coeffs_[static_cast<std::size_t>(e - valuation_)]);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (e == 1) {
      mono = "q";
    } else if (e != 0) {
      mono = "q^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

// Strips the q^valuation factor: returns the ordinary polynomial coefficient
// run (constant term first, nonzero).
struct Stripped {
  int valuation;
  std::vector<Scalar> c;
};

Stripped strip(const LaurentPoly& p) { return {p.valuation(), p.coefficients()}; }

}  // namespace

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.domain() != b.domain()) {
    throw Error(Errc::DomainMismatch, "divexact over " + a.domain().name() + " and " +
                                          b.domain().name());
  }
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  const Domain& dom = a.domain();
  if (a.is_zero()) return LaurentPoly(dom);
  auto num = strip(a);
  const auto den = strip(b);
  const int deg_num = static_cast<int>(num.c.size()) - 1;
  const int deg_den = static_cast<int>(den.c.size()) - 1;
  if (deg_num < deg_den) {
    throw Error(Errc::NotDivisible, b.to_string() + " does not divide " + a.to_string());
  }
  std::vector<Scalar> quot(static_cast<std::size_t>(deg_num - deg_den + 1));
  for (int i = deg_num; i >= deg_den; --i) {
    const Scalar& top = num.c[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Scalar factor;
    if (!dom.divides(den.c.back(), top, factor)) {
      throw Error(Errc::NotDivisible, b.to_string() + " does not divide " + a.to_string());
    }
    quot[static_cast<std::size_t>(i - deg_den)] = factor;
    for (int j = 0; j <= deg_den; ++j) {
      auto& slot = num.c[static_cast<std::size_t>(i - deg_den + j)];
      slot = dom.sub(slot, dom.mul(factor, den.c[static_cast<std::size_t>(j)]));
    }
  }
  for (int i = 0; i < deg_den; ++i) {
    if (num.c[static_cast<std::size_t>(i)] != 0) {
      throw Error(Errc::NotDivisible, b.to_string() + " does not divide " + a.to_string());
    }
  }
  return LaurentPoly::from_coefficients(dom, num.valuation - den.valuation, std::move(quot));
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.domain() != b.domain()) {
    throw Error(Errc::DomainMismatch, "divmod over " + a.domain().name() + " and " +
                                          b.domain().name());
  }
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  const Domain& dom = a.domain();
  if (!dom.is_field()) {
    throw Error(Errc::UnsupportedDomain, "Euclidean division needs a field, got " + dom.name());
  }
  if (a.is_zero()) return {LaurentPoly(dom), LaurentPoly(dom)};
  auto num = strip(a);
  const auto den = strip(b);
  const int deg_num = static_cast<int>(num.c.size()) - 1;
  const int deg_den = static_cast<int>(den.c.size()) - 1;
  if (deg_num < deg_den) return {LaurentPoly(dom), a};
  const Scalar inv_lead = dom.inverse(den.c.back());
  std::vector<Scalar> quot(static_cast<std::size_t>(deg_num - deg_den + 1));
  for (int i = deg_num; i >= deg_den; --i) {
    const Scalar& top = num.c[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    const Scalar factor = dom.mul(top, inv_lead);
    quot[static_cast<std::size_t>(i - deg_den)] = factor;
    for (int j = 0; j <= deg_den; ++j) {
      auto& slot = num.c[static_cast<std::size_t>(i - deg_den + j)];
      slot = dom.sub(slot, dom.mul(factor, den.c[static_cast<std::size_t>(j)]));
    }
  }
  num.c.resize(static_cast<std::size_t>(deg_den));
  return {LaurentPoly::from_coefficients(dom, num.valuation - den.valuation, std::move(quot)),
          LaurentPoly::from_coefficients(dom, num.valuation, std::move(num.c))};
}

LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.normalized();
}

bool extremes_invertible(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  return p.domain().is_unit(p.trailing()) && p.domain().is_unit(p.leading());
}

// ---------------------------------------------------------------------------
// Parser. Expressions are evaluated over Q and mapped into the target domain
// at the end.

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly parse_all() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPoly expr() {
    LaurentPoly acc(q_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    LaurentPoly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'q' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();  // juxtaposition, e.g. "2q"
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly factor() {
    if (accept('-')) return -factor();
    LaurentPoly base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    const mpz_class e = integer();
    if (!e.fits_sint_p() || e > 100000) fail("exponent too large");
    const int k = static_cast<int>(e.get_si());
    if (negative) {
      if (!base.is_monomial()) fail("negative power of a non-monomial");
      const LaurentPoly inverse =
          LaurentPoly::monomial(q_, Scalar(1) / base.leading(), -base.valuation());
      return power(inverse, k);
    }
    return power(base, k);
  }

  LaurentPoly power(const LaurentPoly& base, int k) const {
    LaurentPoly r = LaurentPoly::constant(q_, 1);
    for (int i = 0; i < k; ++i) r *= base;
    return r;
  }

  LaurentPoly atom() {
    if (accept('(')) {
      LaurentPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('q')) return LaurentPoly::q_power(q_, 1);
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const mpz_class num = integer();
      if (accept('/')) {
        const mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        return LaurentPoly::constant(q_, Scalar(num, den));
      }
      return LaurentPoly::constant(q_, Scalar(num));
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                             : "unexpected end of input");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Domain q_ = Domain::rationals();
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, Domain domain) {
  const LaurentPoly over_q = Parser(text).parse_all();
  try {
    return over_q.in_domain(domain);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, "'" + std::string(text) + "' is not an element of " +
                                      domain.name() + "[q,q^-1]: " + e.what());
  }
}

}  // namespace artin
