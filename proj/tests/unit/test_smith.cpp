#include <gtest/gtest.h>

#include "artin/error.hpp"
#include "artin/smith.hpp"
#include "test_support.hpp"

using namespace artin;
using artin::testing::P;

namespace {

PolyMatrix M(std::initializer_list<std::initializer_list<const char*>> rows, Domain d = Domain::rationals()) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  PolyMatrix m(r, c, d);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* e : row) m(i, j++) = P(e, d);
    ++i;
  }
  return m;
}

// Laplace expansion along the first row; fine for the small minors used here.
LaurentPoly cofactor_det(const PolyMatrix& a, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
  const Domain& d = a.domain();
  if (rows.empty()) return LaurentPoly::constant(d, 1);
  LaurentPoly acc(d);
  std::vector<std::size_t> rest_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const LaurentPoly& e = a(rows[0], cols[j]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest_cols = cols;
    rest_cols.erase(rest_cols.begin() + static_cast<long>(j));
    const LaurentPoly term = e * cofactor_det(a, rest_rows, rest_cols);
    acc = j % 2 ? acc - term : acc + term;
  }
  return acc;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// k-th determinantal divisor: gcd of all k x k minors.
LaurentPoly determinantal_divisor(const PolyMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  choose(a.rows(), k, 0, cur, rs);
  choose(a.cols(), k, 0, cur, cs);
  LaurentPoly g(a.domain());
  for (const auto& r : rs) {
    for (const auto& c : cs) g = gcd(g, cofactor_det(a, r, c));
  }
  return g;
}

void expect_valid(const PolyMatrix& a, const SmithDecomposition& s) {
  ASSERT_EQ(s.u * a * s.v, s.d);
  ASSERT_TRUE(determinant(s.u).is_unit());
  ASSERT_TRUE(determinant(s.v).is_unit());
  for (std::size_t i = 0; i < s.d.rows(); ++i) {
    for (std::size_t j = 0; j < s.d.cols(); ++j) {
      if (i != j) ASSERT_TRUE(s.d(i, j).is_zero());
    }
  }
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const LaurentPoly& f = s.invariant_factors[i];
    ASSERT_EQ(f, s.d(i, i));
    ASSERT_EQ(f, f.normalized());
    if (i + 1 < s.rank()) ASSERT_NO_THROW(divexact(s.invariant_factors[i + 1], f));
  }
  for (std::size_t i = s.rank(); i < std::min(s.d.rows(), s.d.cols()); ++i) ASSERT_TRUE(s.d(i, i).is_zero());
}

}  // namespace

TEST(Smith, DiagonalExample) {
  const PolyMatrix a = M({{"1 - q^2", "0"}, {"0", "1 - q"}});
  const SmithDecomposition s = smith_normal_form(a);
  expect_valid(a, s);
  ASSERT_EQ(s.rank(), 2u);
  EXPECT_EQ(s.invariant_factors[0], P("q - 1"));
  EXPECT_EQ(s.invariant_factors[1], P("q^2 - 1"));
}

TEST(Smith, UnitEntry) {
  const SmithDecomposition s = smith_normal_form(M({{"q^5"}}));
  EXPECT_EQ(s.invariant_factors, std::vector<LaurentPoly>{P("1")});
}

TEST(Smith, ZeroMatrix) {
  const PolyMatrix z(3, 2, Domain::rationals());
  const SmithDecomposition s = smith_normal_form(z);
  EXPECT_EQ(s.rank(), 0u);
  EXPECT_EQ(s.u, PolyMatrix::identity(3, Domain::rationals()));
  EXPECT_EQ(s.v, PolyMatrix::identity(2, Domain::rationals()));
  EXPECT_TRUE(s.d.is_zero());
}

TEST(Smith, A2Differentials) {
  // d^0 = (1-q, 1-q)^T, d^1 = (-(1-q+q^2), 1-q+q^2): hand elimination gives
  // the single factors 1-q and 1-q+q^2.
  EXPECT_EQ(smith_normal_form(M({{"1 - q"}, {"1 - q"}})).invariant_factors, std::vector<LaurentPoly>{P("q - 1")});
  EXPECT_EQ(smith_normal_form(M({{"-(1 - q + q^2)", "1 - q + q^2"}})).invariant_factors,
            std::vector<LaurentPoly>{P("q^2 - q + 1")});
}

TEST(Smith, CoprimeEntriesCollapse) {
  const PolyMatrix a = M({{"1 + q", "0"}, {"0", "1 - q"}});
  const SmithDecomposition s = smith_normal_form(a);
  expect_valid(a, s);
  EXPECT_EQ(s.invariant_factors, (std::vector<LaurentPoly>{P("1"), P("q^2 - 1")}));
}

TEST(Smith, IntegersUnsupported) {
  try {
    smith_normal_form(M({{"2"}}, Domain::integers()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedDomain);
  }
}

TEST(Smith, RandomPropertySuite) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const PolyMatrix a = artin::testing::random_matrix(rng, Domain::rationals(), dim(rng), dim(rng), 4);
    SCOPED_TRACE(trial);
    expect_valid(a, smith_normal_form(a));
  }
}

TEST(Smith, RandomPrimeField) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (const Domain d : {Domain::prime_field(2), Domain::prime_field(3)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const PolyMatrix a = artin::testing::random_matrix(rng, d, dim(rng), dim(rng), 4);
      expect_valid(a, smith_normal_form(a));
    }
  }
}

TEST(Smith, DeterminantalDivisorOracle) {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const PolyMatrix a = artin::testing::random_matrix(rng, Domain::rationals(), dim(rng), dim(rng), 3);
    const SmithDecomposition s = smith_normal_form(a, {.with_transforms = false});
    LaurentPoly product = LaurentPoly::constant(Domain::rationals(), 1);
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
      const LaurentPoly dk = determinantal_divisor(a, k);
      if (k > s.rank()) {
        ASSERT_TRUE(dk.is_zero()) << trial;
        continue;
      }
      product = product * s.invariant_factors[k - 1];
      ASSERT_EQ(product.normalized(), dk) << trial << " k=" << k;
    }
  }
}

TEST(Smith, TransformsOptional) {
  std::mt19937_64 rng(8);
  const PolyMatrix a = artin::testing::random_matrix(rng, Domain::rationals(), 4, 5, 3);
  EXPECT_EQ(smith_normal_form(a, {.with_transforms = false}).invariant_factors,
            smith_normal_form(a).invariant_factors);
}
