#include <gtest/gtest.h>

#include <random>

#include "brauer/factor.hpp"
#include "brauer/linalg.hpp"
#include "brauer/multipoly.hpp"
#include "brauer/resultant.hpp"
#include "oracles.hpp"

using namespace brauer;
using Z = UniPoly<BigInt>;
using Q = UniPoly<Rational>;

namespace {

Z zpoly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return Z(v);
}

Q qpoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Q(v);
}

Z random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::vector<BigInt> c;
  for (int i = 0; i <= degree; ++i) c.push_back(oracle::uniform(rng, -bound, bound));
  while (c.back() == 0) c.back() = oracle::uniform(rng, -bound, bound);
  return Z(c);
}

std::vector<BigInt> ints(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

}  // namespace

TEST(Checked, OverflowIsReported) {
  Checked<std::int64_t> big{INT64_MAX};
  EXPECT_THROW(big + Checked<std::int64_t>{1}, Overflow);
  EXPECT_THROW(big * Checked<std::int64_t>{2}, Overflow);
  EXPECT_THROW(-Checked<std::int64_t>{INT64_MIN}, Overflow);
  EXPECT_EQ((Checked<std::int64_t>{6} * Checked<std::int64_t>{-7}).v, -42);
}

TEST(Checked, DivisionIsExactOrThrows) {
  EXPECT_EQ(checked_div(Checked<std::int64_t>{12}, Checked<std::int64_t>{-4}).v, -3);
  EXPECT_THROW(checked_div(Checked<std::int64_t>{7}, Checked<std::int64_t>{2}), Error);
  EXPECT_THROW(checked_div(BigInt(7), BigInt(2)), Error);
}

TEST(BigIntIo, ParseRejectsGarbage) {
  EXPECT_EQ(parse_bigint("-123456789012345678901234567890").get_str(), "-123456789012345678901234567890");
  EXPECT_THROW(parse_bigint("12x"), Error);
  EXPECT_THROW(parse_bigint(""), Error);
}

TEST(Bareiss, Examples) {
  std::vector<BigInt> id(25, BigInt(0)), diag(25, BigInt(0));
  for (int i = 0; i < 5; ++i) id[i * 6] = 1, diag[i * 6] = i + 1;
  EXPECT_EQ(det_bareiss(id, 5), 1);
  EXPECT_EQ(det_bareiss(diag, 5), 120);
  EXPECT_EQ(det_bareiss(ints({2, 1, 1, 3}), 2), 5);
}

TEST(Bareiss, NeedsPivoting) {
  EXPECT_EQ(det_bareiss(ints({0, 1, 1, 0}), 2), -1);
  EXPECT_EQ(det_bareiss(ints({0, 0, 1, 0, 1, 0, 1, 0, 0}), 3), -1);
  EXPECT_EQ(det_bareiss(ints({1, 2, 2, 4}), 2), 0);
}

TEST(Bareiss, MatchesCofactorOn3x3) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    std::vector<BigInt> m;
    for (int i = 0; i < 9; ++i) m.push_back(oracle::uniform(rng, -3, 3));
    ASSERT_EQ(det_bareiss(m, 3), oracle::cofactor_det(m, 3));
  }
}

TEST(Bareiss, MatchesCofactorOn5x5) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    std::vector<BigInt> m;
    for (int i = 0; i < 25; ++i) m.push_back(oracle::uniform(rng, -50, 50));
    if (t % 7 == 0)
      for (int j = 0; j < 5; ++j) m[15 + j] = m[j] * 3;  // singular
    ASSERT_EQ(det_bareiss(m, 5), oracle::cofactor_det(m, 5));
  }
}

TEST(Interpolation, Examples) {
  using P = std::pair<BigInt, BigInt>;
  EXPECT_EQ(interpolate_integer({P(0, 1), P(1, 1)}), zpoly({1}));
  EXPECT_EQ(interpolate_integer({P(0, 0), P(1, 1), P(2, 4)}), zpoly({0, 0, 1}));
  std::vector<P> pts;
  const Z expected = zpoly({120, 274, 225, 85, 15, 1});
  for (long x : {-2, -1, 0, 1, 2, 3}) {
    std::vector<BigInt> m(25, BigInt(0));
    for (int i = 0; i < 5; ++i) m[i * 6] = x + i + 1;
    pts.emplace_back(x, det_bareiss(m, 5));
  }
  EXPECT_EQ(interpolate_integer(pts), expected);
}

TEST(Interpolation, NonIntegralAndBadInput) {
  using P = std::pair<BigInt, BigInt>;
  try {
    interpolate_integer({P(0, 0), P(2, 1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralCoefficient);
  }
  EXPECT_THROW(interpolate_integer({P(1, 0), P(1, 1)}), std::invalid_argument);
  EXPECT_THROW(interpolate_integer({}), std::invalid_argument);
}

TEST(Interpolation, ConsecutiveNodesRecoverRandomPolys) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Z f = random_poly(rng, 5, 1000);
    std::vector<BigInt> ys;
    for (long x = -2; x <= 3; ++x) ys.push_back(f.evaluate(BigInt(x)));
    ASSERT_EQ(interpolate_consecutive<BigInt>(-2, ys), f);
  }
}

TEST(PolyArithmetic, ExactDivision) {
  const Z a = zpoly({-1, 0, 1}), b = zpoly({1, 1});
  EXPECT_EQ(checked_div(a, b), zpoly({-1, 1}));
  EXPECT_THROW(checked_div(a, zpoly({2, 1})), Error);
  EXPECT_EQ(zpoly({}).degree(), -1);
  EXPECT_EQ(content(zpoly({4, -6, 10})), 2);
  EXPECT_EQ(primitive_part(zpoly({-4, 6, -10})), zpoly({2, -3, 5}));
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(zpoly({-1, 1}), zpoly({-1, 1})), 0);
  EXPECT_EQ(resultant(zpoly({-7, 1}), zpoly({-3, 1})), 4);
  EXPECT_EQ(resultant(zpoly({-2, 0, 1}), zpoly({0, 1})), -2);
  EXPECT_EQ(resultant(zpoly({-2, 0, 1}), zpoly({-3, 0, 1})), 1);
  EXPECT_THROW(resultant(zpoly({}), zpoly({1, 1})), Error);
}

TEST(Resultant, SubresultantMatchesSylvester) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    const Z a = random_poly(rng, 1 + t % 6, 20), b = random_poly(rng, 1 + (t / 6) % 5, 20);
    ASSERT_EQ(resultant(a, b), sylvester_resultant(a, b)) << to_string(a) << " | " << to_string(b);
  }
}

TEST(Resultant, ProductOfRootDifferences) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    std::vector<BigInt> r, s;
    for (int i = 0; i < 3; ++i) r.push_back(oracle::uniform(rng, -9, 9));
    for (int i = 0; i < 4; ++i) s.push_back(oracle::uniform(rng, -9, 9));
    std::vector<BigInt> nr, ns;
    for (auto& x : r) nr.push_back(-x);
    for (auto& x : s) ns.push_back(-x);
    BigInt expected = 1;
    for (auto& x : r)
      for (auto& y : s) expected *= x - y;
    ASSERT_EQ(resultant(oracle::linear_product(nr), oracle::linear_product(ns)), expected);
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(zpoly({0, 0, 0, 0, 0, 1})), 0);
  EXPECT_EQ(discriminant(oracle::linear_product(ints({1, 2, 3, 4, 5}))), 82944);
  EXPECT_EQ(discriminant(zpoly({-2, 0, 1})), 8);
  EXPECT_EQ(discriminant(zpoly({3, 2})), 1);
}

TEST(Discriminant, SplitPolynomialsMatchVandermonde) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 500; ++t) {
    std::vector<BigInt> roots, shifts;
    const int n = 2 + t % 5;
    for (int i = 0; i < n; ++i) roots.push_back(oracle::uniform(rng, -15, 15));
    for (auto& x : roots) shifts.push_back(-x);
    ASSERT_EQ(discriminant(oracle::linear_product(shifts)), oracle::vandermonde_disc(roots));
  }
}

TEST(Discriminant, VanishesExactlyOnRepeatedRoots) {
  std::mt19937_64 rng(29);
  int zeros = 0;
  for (int t = 0; t < 10000; ++t) {
    Z f = random_poly(rng, 5, 4);
    if (t % 10 == 0) f = f * zpoly({-1, 1}) * zpoly({-1, 1});  // forced square factor
    std::vector<Rational> a, b;
    for (const auto& c : f.coeffs()) a.emplace_back(c);
    const Z df = f.derivative();
    for (const auto& c : df.coeffs()) b.emplace_back(c);
    const bool disc_zero = discriminant(f) == 0;
    zeros += disc_zero;
    ASSERT_EQ(disc_zero, oracle::gcd_degree(a, b) >= 1) << to_string(f);
  }
  EXPECT_GT(zeros, 1000);
}

TEST(PolySqrt, Examples) {
  EXPECT_EQ(poly_sqrt(qpoly({1, 2, 1})), qpoly({1, 1}));
  EXPECT_EQ(poly_sqrt(qpoly({4, 0, -4, 0, 1})), qpoly({-2, 0, 1}));
  try {
    poly_sqrt(qpoly({1, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASquare);
  }
  EXPECT_THROW(poly_sqrt(qpoly({0, 1})), Error);
}

TEST(PolySqrt, RecoversRandomSquares) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Q g = to_rational(random_poly(rng, t % 6, 30)) * Q(Rational(1, 1 + t % 4));
    const Q r = poly_sqrt(g * g);
    ASSERT_TRUE(r == g || r == -g);
    ASSERT_GT(r.lc(), 0);
  }
}

TEST(SymmetricReduce, Examples) {
  const std::size_t n = 5;
  MultiPoly power_sum(n), pair_sum(n);
  for (std::size_t i = 0; i < n; ++i) power_sum = power_sum + MultiPoly::variable(n, i).pow(2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair_sum = pair_sum + MultiPoly::variable(n, i) + MultiPoly::variable(n, j);
  const MultiPoly e1 = MultiPoly::variable(n, 0), e2 = MultiPoly::variable(n, 1);
  EXPECT_EQ(symmetric_reduce(elementary_symmetric(n, 1)), e1);
  EXPECT_EQ(symmetric_reduce(power_sum), e1 * e1 - e2.scale(BigInt(2)));
  EXPECT_EQ(symmetric_reduce(pair_sum), e1.scale(BigInt(4)));
}

TEST(SymmetricReduce, RejectsNonSymmetric) {
  try {
    symmetric_reduce(MultiPoly::variable(5, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(SymmetricReduce, RoundTripOnRandomSymmetric) {
  std::mt19937_64 rng(37);
  const std::size_t n = 5;
  std::vector<MultiPoly> e;
  for (std::size_t k = 1; k <= n; ++k) e.push_back(elementary_symmetric(n, k));
  for (int t = 0; t < 100; ++t) {
    // Random polynomial in e_1..e_5 with weighted degree <= 6, pushed into x.
    MultiPoly r(n);
    for (int terms = 0; terms < 4; ++terms) {
      Exponents ex(n, 0);
      unsigned weight = 0;
      for (int tries = 0; tries < 6; ++tries) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        if (weight + k + 1 > 6) break;
        ++ex[k];
        weight += static_cast<unsigned>(k + 1);
      }
      r.add_term(ex, oracle::uniform(rng, -9, 9));
    }
    const MultiPoly p = r.substitute(e);
    ASSERT_LE(p.total_degree(), 6u);
    ASSERT_EQ(symmetric_reduce(p), r);
  }
}

TEST(Factor, SmallAndLarge) {
  EXPECT_EQ(factor(BigInt(360)), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(factor(BigInt(1)).empty());
  const BigInt p("1000000000039"), q("1000000000061");
  EXPECT_EQ(factor(BigInt(-p * q * 8)), (Factorization{{2, 3}, {p, 1}, {q, 1}}));
  // Primes above the limit are dropped.
  EXPECT_EQ(factor(BigInt(2 * 3 * 101), BigInt(10)), (Factorization{{2, 1}, {3, 1}}));
}

TEST(Factor, Divisors) {
  EXPECT_EQ(divisors(factor(BigInt(12))), ints({1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(factor(BigInt(12)), BigInt(4)), ints({1, 2, 3, 4}));
}

TEST(IntegerRoots, Examples) {
  EXPECT_EQ(integer_roots(zpoly({-4, 0, 1})), ints({-2, 2}));
  EXPECT_EQ(integer_roots(zpoly({0, 0, 0, 0, 0, 1})), ints({0}));
  EXPECT_TRUE(integer_roots(zpoly({-3, 2})).empty());
  EXPECT_TRUE(integer_roots(zpoly({7})).empty());
}

TEST(IntegerRoots, MatchesBruteForce) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    Z f = random_poly(rng, 1 + t % 4, 100);
    if (t % 3 == 0) f = f * zpoly({oracle::uniform(rng, -100, 100).get_si(), 1});
    ASSERT_EQ(integer_roots(f), oracle::brute_integer_roots(f)) << to_string(f);
  }
}

TEST(IntegerRoots, LargeConstantTerm) {
  const BigInt p("1000000000039");
  const Z f = Z{BigInt(-p), BigInt(1)} * zpoly({1, 0, 1});
  EXPECT_EQ(integer_roots(f), std::vector<BigInt>{p});
}

TEST(IntegerRoots, LiftingAgreesWithDivisorSearch) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 500; ++t) {
    Z f = random_poly(rng, 1 + t % 3, 50) * zpoly({oracle::uniform(rng, -60, 60).get_si(), 1});
    if (t % 4 == 0) f = f * zpoly({oracle::uniform(rng, -60, 60).get_si(), 1});  // maybe a double root
    if (f[0] == 0) continue;
    ASSERT_EQ(detail::integer_roots_lifted(f, root_bound(f)), integer_roots(f)) << to_string(f);
  }
}

TEST(IntegerRoots, HardConstantFallsBackToLifting) {
  // Constant term with two 62-bit prime factors and a large root bound.
  const BigInt p("4611686018427388039"), q("4611686018427388073"), r("123456789012");
  const Z f = Z{BigInt(-r), BigInt(1)} * Z{BigInt(p * q), BigInt(0), BigInt(1)};
  EXPECT_EQ(integer_roots(f), std::vector<BigInt>{r});
  EXPECT_FALSE(factor_within(f[0], root_bound(f), 1000).has_value());
}
