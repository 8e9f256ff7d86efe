#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brauer/charform.hpp"
#include "brauer/detect.hpp"
#include "brauer/fixtures.hpp"
#include "brauer/resolvent.hpp"

namespace brauer {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
};

namespace detail {

inline SuiteResult run_suite(const std::string& name, const std::function<void(SuiteResult&)>& body) {
  SuiteResult r;
  r.name = name;
  try {
    body(r);
  } catch (const Error& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

inline void require(SuiteResult& r, bool ok, const std::string& what) {
  if (ok) return;
  r.passed = false;
  if (r.detail.empty()) r.detail = what;
  throw Error(ErrorKind::OracleMismatch, what);
}

}  // namespace detail

/// Invariant suites over the active templates. Stops at the first failing
/// suite unless keep_going is set.
inline std::vector<SuiteResult> run_selfcheck(const ResolventTemplates& active, std::uint64_t seed = 1,
                                              bool keep_going = false) {
  using detail::require;
  std::vector<SuiteResult> out;
  std::mt19937_64 rng(seed);

  auto push = [&](SuiteResult r) {
    out.push_back(std::move(r));
    return out.back().passed || keep_going;
  };

  if (!push(detail::run_suite("template-derivation", [&](SuiteResult& r) {
        const ResolventTemplates derived = derive_templates();
        MultiPoly d4(ResolventTemplates::kVars), q9(ResolventTemplates::kVars);
        d4.add_term({4, 0, 0, 0, 0, 0}, BigInt(1));
        q9.add_term({3, 0, 0, 0, 0, 1}, BigInt(4));
        require(r, derived.qhat[10] == d4, "q10 template is not D^4");
        require(r, derived.qhat[9] == q9, "q9 template is not 4 D^3 P4");
        for (const auto& e : derived.in_elementary)
          require(r, e.total_degree() <= 4, "DenominatorNotCleared: degree above four");
        r.cases = 11;
      })))
    return out;

  if (!push(detail::run_suite("oracle-equivalence", [&](SuiteResult& r) {
        for (int i = 0; i < 200; ++i) {
          const SymMat5 a = fixtures::random_nonsingular(rng, 10), b = fixtures::random_sym(rng, 10);
          const BigInt det_a = a.det();
          const BinaryQuintic f = char_form(a, b);
          require(r, resolvent_of(f, det_a, active) == resolvent_oracle(f, det_a), "oracle mismatch");
          ++r.cases;
        }
      })))
    return out;

  if (!push(detail::run_suite("leading-coefficient", [&](SuiteResult& r) {
        for (int i = 0; i < 200; ++i) {
          const SymMat5 a = fixtures::random_nonsingular(rng, 10), b = fixtures::random_sym(rng, 10);
          const BigInt det_a = a.det();
          require(r, resolvent_of(char_form(a, b), det_a, active).q[10] == ipow(det_a, 4), "q10 != det(A)^4");
          ++r.cases;
        }
      })))
    return out;

  if (!push(detail::run_suite("homogeneity", [&](SuiteResult& r) {
        for (int i = 0; i < 20; ++i) {
          const SymMat5 a = fixtures::random_nonsingular(rng, 6), b = fixtures::random_sym(rng, 6);
          const Resolvent10 base = resolvent_of(char_form(a, b), a.det(), active);
          for (long s : {-2L, 2L, 3L}) {
            const BigInt t(s);
            const Resolvent10 in_b = resolvent_of(char_form(a, b.scaled(t)), a.det(), active);
            const SymMat5 sa = a.scaled(t);
            const Resolvent10 both = resolvent_of(char_form(sa, b.scaled(t)), sa.det(), active);
            for (unsigned k = 0; k <= 10; ++k) {
              require(r, in_b.q[k] == base.q[k] * ipow(t, 10 - k), "q_k not homogeneous of degree 10-k in B");
              require(r, both.q[k] == base.q[k] * ipow(t, 20), "q_k not of total degree 20");
            }
            ++r.cases;
          }
        }
      })))
    return out;

  if (!push(detail::run_suite("congruence-covariance", [&](SuiteResult& r) {
        for (int i = 0; i < 50; ++i) {
          const SymMat5 a = fixtures::random_nonsingular(rng, 8), b = fixtures::random_sym(rng, 8);
          const auto t = fixtures::random_unimodular(rng);
          require(r, char_form(a.congruence(t), b.congruence(t)) == char_form(a, b),
                  "char_form changed under unimodular congruence");
          ++r.cases;
        }
      })))
    return out;

  if (!push(detail::run_suite("quadratic-split-direction", [&](SuiteResult& r) {
        for (int i = 0; i < 50; ++i) {
          const auto [a, b] = fixtures::quadratic_block_pencil(rng);
          const DetectionVerdict v = classify(a, b, active, ClassifyOptions{true});
          if (v.brauer_status == BrauerStatus::Degenerate) continue;
          require(r, v.factor_has(2), "block fixture lost its quadratic factor");
          require(r, v.s2.found, "quadratic factor without a rational resolvent root");
          ++r.cases;
        }
      })))
    return out;

  push(detail::run_suite("rational-root-soundness", [&](SuiteResult& r) {
    for (int i = 0; i < 200; ++i) {
      const SymMat5 a = fixtures::random_nonsingular(rng, 3), b = fixtures::random_sym(rng, 3);
      const DetectionVerdict v = classify(a, b, active, ClassifyOptions{true});
      if (v.brauer_status == BrauerStatus::Degenerate) continue;
      require(r, v.s1.found == v.factor_has(1), "rational-root detector disagrees with exact factorization");
      ++r.cases;
    }
  }));
  return out;
}

}  // namespace brauer
