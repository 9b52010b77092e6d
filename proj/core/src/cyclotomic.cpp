#include "artin/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "artin/error.hpp"

namespace artin {

namespace {

const LaurentPoly& cyclotomic_over_q(int n) {
  static std::mutex mutex;
  static std::map<int, LaurentPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const Domain q = Domain::rationals();
  LaurentPoly phi = LaurentPoly::q_power(q, n) - LaurentPoly::constant(q, 1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) phi = divexact(phi, cyclotomic_over_q(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(phi)).first->second;
}

}  // namespace

LaurentPoly cyclotomic(int n, Domain domain) {
  if (n < 1) throw Error(Errc::IndexOutOfRange, "cyclotomic index must be >= 1");
  return cyclotomic_over_q(n).in_domain(domain);
}

LaurentPoly q_bracket(int n, Domain domain) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "q-bracket index must be >= 0");
  return LaurentPoly::from_coefficients(domain, 0, std::vector<Scalar>(static_cast<std::size_t>(n), 1));
}

LaurentPoly CyclotomicFactorization::product() const {
  LaurentPoly acc = unit * remainder;
  for (const auto& [n, mult] : factors) {
    const LaurentPoly phi = cyclotomic(n, unit.domain());
    for (int i = 0; i < mult; ++i) acc *= phi;
  }
  return acc;
}

CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p, int bound) {
  if (p.domain().kind() != Domain::Kind::Rational) {
    throw Error(Errc::UnsupportedDomain,
                "cyclotomic factorization runs over Q, got " + p.domain().name());
  }
  if (p.is_zero()) throw Error(Errc::DivisionByZero, "cannot factor the zero polynomial");
  const Domain& dom = p.domain();
  CyclotomicFactorization out;
  out.unit = LaurentPoly::monomial(dom, p.leading(), p.valuation());
  LaurentPoly rest = p.normalized();
  for (int n = 1; n <= bound && rest.span() > 0; ++n) {
    const LaurentPoly& phi = cyclotomic_over_q(n);
    if (phi.span() > rest.span()) continue;
    int mult = 0;
    while (rest.span() >= phi.span()) {
      auto [quot, rem] = divmod(rest, phi);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(n, mult);
  }
  out.remainder = rest.normalized();
  return out;
}

}  // namespace artin
