#include <gtest/gtest.h>

#include "artin/cyclotomic.hpp"
#include "artin/error.hpp"
#include "artin/laurent.hpp"
#include "test_support.hpp"

using namespace artin;
using artin::testing::P;

namespace {

const Domain kQ = Domain::rationals();
const Domain kZ = Domain::integers();

template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no artin::Error thrown";
  return Errc::InputError;
}

}  // namespace

TEST(Domain, PrimeFieldArithmetic) {
  const Domain f7 = Domain::prime_field(7);
  EXPECT_EQ(f7.name(), "Z/7");
  EXPECT_EQ(f7.add(5, 4), 2);
  EXPECT_EQ(f7.mul(3, 5), 1);
  EXPECT_EQ(f7.inverse(3), 5);
  EXPECT_EQ(f7.from_rational(Scalar(1, 2)), 4);
  EXPECT_EQ(f7.display(6), -1);
  EXPECT_EQ(error_of([&] { f7.inverse(0); }), Errc::NotAUnit);
  EXPECT_EQ(error_of([] { Domain::prime_field(9); }), Errc::UnsupportedDomain);
}

TEST(Domain, IntegerUnits) {
  EXPECT_TRUE(kZ.is_unit(-1));
  EXPECT_FALSE(kZ.is_unit(2));
  EXPECT_TRUE(kQ.is_unit(2));
  EXPECT_EQ(error_of([] { Domain::integers().from_rational(Scalar(1, 2)); }), Errc::NotAUnit);
}

TEST(Domain, ParseSelectors) {
  EXPECT_EQ(Domain::parse("Q"), kQ);
  EXPECT_EQ(Domain::parse("Z"), kZ);
  EXPECT_EQ(Domain::parse("Zp:5"), Domain::prime_field(5));
  EXPECT_EQ(Domain::parse("GF(3)"), Domain::prime_field(3));
}

TEST(Laurent, Products) {
  EXPECT_EQ(P("1-q") * P("1+q"), P("1-q^2"));
  EXPECT_EQ(P("1+q") * P("1+q+q^2"), P("1+2q+2q^2+q^3"));
  EXPECT_EQ(P("q^-1") * P("q"), P("1"));
}

TEST(Laurent, CanonicalForm) {
  const LaurentPoly z = P("q - q");
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.valuation(), 0);
  EXPECT_EQ(z.to_string(), "0");
  const LaurentPoly p = LaurentPoly::from_ints(kQ, -2, {0, 0, 3, 0, -1, 0});
  EXPECT_EQ(p.valuation(), 0);
  EXPECT_EQ(p.top_exponent(), 2);
  EXPECT_EQ(p.span(), 2);
  EXPECT_EQ(p.to_string(), "-q^2 + 3");
}

TEST(Laurent, ParsePrintRoundTrip) {
  for (const char* text : {"q^2 - q + 1", "1/2*q^-3 + q", "-q^5", "3", "0", "q^-1 - 2/3", "-(1 - q)*(1 + q)"}) {
    const LaurentPoly p = P(text);
    EXPECT_EQ(P(p.to_string()), p) << text;
    EXPECT_EQ(P(p.to_string()).to_string(), p.to_string()) << text;
  }
  EXPECT_EQ(P("1/2*q^-3 + q").to_string(), "q + 1/2*q^-3");
  EXPECT_EQ(P("(1+q)^3"), P("1 + 3q + 3q^2 + q^3"));
  EXPECT_EQ(P("2q"), P("2*q"));
  EXPECT_EQ(error_of([] { P("1 + "); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { P("(1+q)^-1"); }), Errc::ParseError);
}

TEST(Laurent, PrimeFieldPrinting) {
  const Domain f3 = Domain::prime_field(3);
  EXPECT_EQ(P("q^2 + 2", f3).to_string(), "q^2 - 1");
  EXPECT_EQ(P("3q + 1", f3), P("1", f3));
}

TEST(Laurent, DivExact) {
  EXPECT_EQ(divexact(P("1+2q+2q^2+q^3"), P("1+q")), P("1+q+q^2"));
  EXPECT_EQ(divexact(P("q^-2 - q"), P("q^-2 - q")), P("1"));
  EXPECT_EQ(error_of([] { divexact(P("1+q^2"), P("1+q")); }), Errc::NotDivisible);
  EXPECT_EQ(error_of([] { divexact(P("1+q"), P("0")); }), Errc::DivisionByZero);
  EXPECT_EQ(divexact(P("2 - 2q^2", kZ), P("1 - q", kZ)), P("2 + 2q", kZ));
  EXPECT_EQ(error_of([&] { divexact(P("1 + q", kZ), P("2", kZ)); }), Errc::NotDivisible);
}

TEST(Laurent, DivmodAndGcd) {
  const auto [quot, rem] = divmod(P("q^3 + 2"), P("q - 1"));
  EXPECT_EQ(quot * P("q - 1") + rem, P("q^3 + 2"));
  EXPECT_LT(rem.span(), 1);
  EXPECT_EQ(gcd(P("1 - q^2"), P("q^3 - q^2")), P("q - 1"));
  EXPECT_EQ(gcd(P("0"), P("2q^3 + 4q^4")), P("q + 1/2"));
  EXPECT_EQ(error_of([] { divmod(P("q", Domain::integers()), P("2", Domain::integers())); }),
            Errc::UnsupportedDomain);
}

TEST(Laurent, ExtremesInvertible) {
  EXPECT_TRUE(extremes_invertible(P("1 - q", kZ)));
  EXPECT_FALSE(extremes_invertible(P("2 + q", kZ)));
  EXPECT_TRUE(extremes_invertible(P("2 + q")));
  EXPECT_FALSE(extremes_invertible(P("0")));
  // over a field every nonzero extreme is a unit; 3 vanishes mod 3
  EXPECT_TRUE(extremes_invertible(P("3 + q", Domain::prime_field(3))));
  EXPECT_EQ(P("3 + q", Domain::prime_field(3)).span(), 0);
}

TEST(Laurent, Substitutions) {
  EXPECT_EQ(P("1 + q + q^2").negated_variable(), P("1 - q + q^2"));
  EXPECT_EQ(P("q^2 + 3q^-1").reflected(), P("q^-2 + 3q"));
  EXPECT_EQ(P("-2q^3 + 4q^5").normalized(), P("q^2 - 1/2"));
  EXPECT_EQ(P("-2q^3 + 4q^5", kZ).normalized(), P("4q^2 - 2", kZ));
  EXPECT_EQ(P("1 + q + q^2").evaluate(1), 3);
}

TEST(Laurent, DomainsDoNotMix) {
  EXPECT_EQ(error_of([] { P("q") + P("q", Domain::integers()); }), Errc::DomainMismatch);
}

class RingAxioms : public ::testing::TestWithParam<Domain> {};

TEST_P(RingAxioms, RandomTriples) {
  const Domain d = GetParam();
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly a = artin::testing::random_poly(rng, d, 5);
    const LaurentPoly b = artin::testing::random_poly(rng, d, 5);
    const LaurentPoly c = artin::testing::random_poly(rng, d, 5);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + (b - a), b);
    if (!a.is_zero() && !b.is_zero()) {
      ASSERT_EQ((a * b).span(), a.span() + b.span());
      ASSERT_EQ((a * b).valuation(), a.valuation() + b.valuation());
      ASSERT_EQ(divexact(a * b, b), a);
    }
    ASSERT_EQ(LaurentPoly::parse(a.to_string(), d), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Domains, RingAxioms,
                         ::testing::Values(Domain::rationals(), Domain::integers(), Domain::prime_field(7),
                                           Domain::prime_field(2)),
                         [](const auto& info) {
                           std::string name = info.param.name();
                           return name == "Z/7" ? std::string("F7") : name == "Z/2" ? std::string("F2") : name;
                         });

TEST(Cyclotomic, Values) {
  EXPECT_EQ(cyclotomic(1), P("q - 1"));
  EXPECT_EQ(cyclotomic(6), P("q^2 - q + 1"));
  EXPECT_EQ(cyclotomic(12), P("q^4 - q^2 + 1"));
  EXPECT_EQ(q_bracket(4), P("1 + q + q^2 + q^3"));
  const auto is_prime_power = [](int n, int& p) {
    for (p = 2; p <= n; ++p) {
      if (n % p == 0) break;
    }
    while (n % p == 0) n /= p;
    return n == 1;
  };
  for (int n = 2; n <= 30; ++n) {
    int p = 0;
    EXPECT_EQ(cyclotomic(n).evaluate(1), is_prime_power(n, p) ? p : 1) << n;
    EXPECT_EQ(q_bracket(n).evaluate(1), n);
  }
}

TEST(Cyclotomic, Factorization) {
  auto f = factor_cyclotomic(P("1 + q + q^2"));
  EXPECT_EQ(f.factors, (std::vector<std::pair<int, int>>{{3, 1}}));
  EXPECT_EQ(f.remainder, P("1"));

  f = factor_cyclotomic(P("q^4 - 1"));
  EXPECT_EQ(f.factors, (std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {4, 1}}));

  f = factor_cyclotomic(P("1 - q + q^2"));
  EXPECT_EQ(f.factors, (std::vector<std::pair<int, int>>{{6, 1}}));

  const LaurentPoly messy = P("-3q^-2") * cyclotomic(5) * cyclotomic(5) * P("q^2 + 2");
  f = factor_cyclotomic(messy);
  EXPECT_EQ(f.factors, (std::vector<std::pair<int, int>>{{5, 2}}));
  EXPECT_EQ(f.remainder, P("q^2 + 2"));
  EXPECT_EQ(f.product(), messy);

  EXPECT_EQ(error_of([] { factor_cyclotomic(P("q - 1", Domain::prime_field(5))); }), Errc::UnsupportedDomain);
}
