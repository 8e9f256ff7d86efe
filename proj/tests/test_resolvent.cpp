#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brauer/factor.hpp"
#include "brauer/fixtures.hpp"
#include "brauer/resolvent.hpp"
#include "oracles.hpp"

using namespace brauer;

namespace {

const ResolventTemplates& templates() {
  static const ResolventTemplates t = derive_templates();
  return t;
}

Resolvent10 from_poly(const UniPoly<BigInt>& p) {
  Resolvent10 r;
  for (std::size_t k = 0; k <= 10; ++k) r.q[k] = p[k];
  return r;
}

/// prod_{i<j} (z + b_i + b_j) times lead.
Resolvent10 pair_sum_product(const std::array<long, 5>& b, const BigInt& lead = 1) {
  std::vector<BigInt> sums;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) sums.emplace_back(b[i] + b[j]);
  return from_poly(oracle::linear_product(sums, lead));
}

Resolvent10 via_templates(const SymMat5& a, const SymMat5& b) {
  return resolvent_of(char_form(a, b), a.det(), templates());
}

}  // namespace

TEST(Templates, LeadingTemplatesAreExact) {
  const auto& t = templates();
  MultiPoly d4(ResolventTemplates::kVars), q9(ResolventTemplates::kVars);
  d4.add_term({4, 0, 0, 0, 0, 0}, BigInt(1));
  q9.add_term({3, 0, 0, 0, 0, 1}, BigInt(4));
  EXPECT_EQ(t.qhat[10], d4);
  EXPECT_EQ(t.qhat[9], q9);
}

TEST(Templates, DegreeAtMostFourInElementary) {
  for (const auto& e : templates().in_elementary) EXPECT_LE(e.total_degree(), 4u);
  // Every template is homogeneous of degree 4 in (D, P).
  for (const auto& q : templates().qhat)
    for (const auto& [e, c] : q.terms()) EXPECT_EQ(e[0] + e[1] + e[2] + e[3] + e[4] + e[5], 4u);
}

TEST(Templates, ElementaryFormsReproducePairSumProduct) {
  // Evaluate q~_k at e(alpha) for alpha = (1..5) and compare with the product.
  const std::vector<BigInt> e = {15, 85, 225, 274, 120};
  const Resolvent10 expected = pair_sum_product({1, 2, 3, 4, 5});
  for (std::size_t k = 0; k <= 10; ++k)
    EXPECT_EQ(templates().in_elementary[k].evaluate(e), expected.q[k]) << k;
}

TEST(Templates, DerivationIsDeterministic) { EXPECT_EQ(derive_templates().qhat, templates().qhat); }

TEST(ResolventOf, Examples) {
  const SymMat5 id = SymMat5::identity();
  Resolvent10 z10;
  z10.q.fill(BigInt(0));
  z10.q[10] = 1;
  EXPECT_EQ(via_templates(id, SymMat5()), z10);
  EXPECT_EQ(resolvent_oracle(char_form(id, SymMat5()), BigInt(1)), z10);

  const Resolvent10 phi = via_templates(id, SymMat5::diagonal({1, 2, 3, 4, 5}));
  EXPECT_EQ(phi, pair_sum_product({1, 2, 3, 4, 5}));
  EXPECT_EQ(phi.poly().evaluate(BigInt(-3)), 0);
  EXPECT_EQ(phi.q[10], 1);
  EXPECT_EQ(resolvent_oracle(char_form(id, SymMat5::diagonal({1, 2, 3, 4, 5})), BigInt(1)), phi);
}

TEST(ResolventOf, RejectsSingularA) {
  try {
    resolvent_of(char_form(SymMat5(), SymMat5::identity()), BigInt(0), templates());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateA);
  }
}

TEST(ResolventOf, ScalingQuinticCoefficients) {
  std::mt19937_64 rng(201);
  for (int i = 0; i < 20; ++i) {
    const SymMat5 a = fixtures::random_nonsingular(rng, 10), b = fixtures::random_sym(rng, 10);
    const BinaryQuintic f = char_form(a, b);
    const Resolvent10 base = resolvent_of(f, a.det(), templates());
    for (long t : {-2L, 2L, 3L, 5L}) {
      BinaryQuintic g = f;
      for (std::size_t l = 0; l < 6; ++l) g.p[l] *= ipow(BigInt(t), static_cast<unsigned>(5 - l));
      const Resolvent10 r = resolvent_of(g, a.det(), templates());
      for (std::size_t k = 0; k <= 10; ++k)
        ASSERT_EQ(r.q[k], base.q[k] * ipow(BigInt(t), static_cast<unsigned>(10 - k)));
    }
  }
}

TEST(ResolventOf, LeadingCoefficientIsDetAToTheFourth) {
  std::mt19937_64 rng(203);
  for (int i = 0; i < 300; ++i) {
    const SymMat5 a = fixtures::random_nonsingular(rng, 10), b = fixtures::random_sym(rng, 10);
    ASSERT_EQ(via_templates(a, b).q[10], ipow(a.det(), 4));
  }
}

TEST(ResolventOf, BiHomogeneity) {
  std::mt19937_64 rng(207);
  for (int i = 0; i < 30; ++i) {
    const SymMat5 a = fixtures::random_nonsingular(rng, 6), b = fixtures::random_sym(rng, 6);
    const Resolvent10 base = via_templates(a, b);
    for (long s : {-2L, 2L, 3L}) {
      const BigInt t(s);
      const Resolvent10 in_b = via_templates(a, b.scaled(t));
      const Resolvent10 both = via_templates(a.scaled(t), b.scaled(t));
      for (unsigned k = 0; k <= 10; ++k) {
        ASSERT_EQ(in_b.q[k], base.q[k] * ipow(t, 10 - k));
        ASSERT_EQ(both.q[k], base.q[k] * ipow(t, 20));
      }
    }
  }
}

TEST(ResolventOracle, AgreesWithTemplates) {
  std::mt19937_64 rng(211);
  for (int i = 0; i < 1000; ++i) {
    const SymMat5 a = fixtures::random_nonsingular(rng, 10), b = fixtures::random_sym(rng, 10);
    const BinaryQuintic f = char_form(a, b);
    ASSERT_EQ(resolvent_oracle(f, a.det()), resolvent_of(f, a.det(), templates())) << i;
  }
}

TEST(ResolventOracle, AgreesOnDegenerateQuintics) {
  std::mt19937_64 rng(213);
  for (int i = 0; i < 100; ++i) {
    const SymMat5 a = fixtures::random_nonsingular(rng, 2), b = fixtures::random_sym(rng, 1);
    const BinaryQuintic f = char_form(a, b);
    ASSERT_EQ(resolvent_oracle(f, a.det()), resolvent_of(f, a.det(), templates()));
  }
}

TEST(ResolventOracle, DetectsInconsistentInput) {
  // p_5 disagrees with det(A): the resultant no longer factors as expected.
  BinaryQuintic f = char_form(SymMat5::identity(), SymMat5::diagonal({1, 2, 3, 4, 5}));
  EXPECT_THROW(resolvent_oracle(f, BigInt(7)), Error);
}

TEST(RootCorrespondence, DiagonalPencils) {
  std::mt19937_64 rng(217);
  for (int i = 0; i < 200; ++i) {
    std::array<long, 5> d;
    for (auto& x : d) x = std::uniform_int_distribution<long>(-30, 30)(rng);
    const Resolvent10 phi = via_templates(SymMat5::identity(), SymMat5::diagonal(d));
    ASSERT_EQ(phi, pair_sum_product(d));
    std::set<BigInt> expected;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b) {
        ASSERT_EQ(phi.poly().evaluate(BigInt(-(d[a] + d[b]))), 0);
        expected.insert(BigInt(-(d[a] + d[b])));
      }
    const auto roots = integer_roots(phi.poly());
    ASSERT_EQ(std::set<BigInt>(roots.begin(), roots.end()), expected);
  }
}

TEST(ShiftScale, Examples) {
  const Resolvent10 phi = pair_sum_product({1, 2, 3, 4, 5});
  EXPECT_EQ(shift_scale(phi, BigInt(1)), phi.poly());
  const UniPoly<BigInt> neg = shift_scale(phi, BigInt(-1));
  for (long z = -5; z <= 5; ++z) EXPECT_EQ(neg.evaluate(BigInt(z)), phi.poly().evaluate(BigInt(-z)));
  Resolvent10 z10;
  z10.q.fill(BigInt(0));
  z10.q[10] = 1;
  EXPECT_EQ(shift_scale(z10, BigInt(3)), z10.poly());
  EXPECT_THROW(shift_scale(phi, BigInt(0)), Error);
}

TEST(ShiftScale, RootsScaleByD) {
  const Resolvent10 phi = pair_sum_product({1, 2, 3, 4, 5});
  const UniPoly<BigInt> scaled = shift_scale(phi, BigInt(7));
  EXPECT_EQ(scaled.evaluate(BigInt(-21)), 0);
  EXPECT_EQ(scaled.lc(), 1);
  EXPECT_EQ(scaled[0], phi.q[0] * ipow(BigInt(7), 10));
}
