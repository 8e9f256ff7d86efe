#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/charform.hpp"
#include "brauer/multipoly.hpp"
#include "brauer/resultant.hpp"
#include "brauer/unipoly.hpp"

namespace brauer {

/// Variable order of the template polynomials: D = det(A), then P0..P4.
inline const std::vector<std::string>& template_variables() {
  static const std::vector<std::string> names{"D", "P0", "P1", "P2", "P3", "P4"};
  return names;
}

/// q_k(A,B) = qhat[k](det A, p_0, ..., p_4) for k = 0..10.
struct ResolventTemplates {
  static constexpr std::size_t kVars = 6;
  std::array<MultiPoly, 11> qhat;
  /// q~_k expressed in e_1..e_5 (before clearing denominators).
  std::array<MultiPoly, 11> in_elementary;

  ResolventTemplates() {
    qhat.fill(MultiPoly(kVars));
    in_elementary.fill(MultiPoly(5));
  }

  /// Evaluate every qhat_k at (D, p_0..p_4) over ring R.
  template <class R>
  std::array<R, 11> evaluate(const R& d, const std::array<R, 5>& p) const {
    // Power tables up to the largest exponent in use (4 for D and the P_i).
    std::array<std::array<R, 5>, kVars> pw;
    const std::array<R, kVars> base{d, p[0], p[1], p[2], p[3], p[4]};
    for (std::size_t v = 0; v < kVars; ++v) {
      pw[v][0] = R(1);
      for (std::size_t k = 1; k < 5; ++k) pw[v][k] = pw[v][k - 1] * base[v];
    }
    std::array<R, 11> out;
    for (std::size_t k = 0; k < 11; ++k) {
      R acc(0);
      for (const auto& [e, c] : qhat[k].terms()) {
        R t = R(c);
        for (std::size_t v = 0; v < kVars; ++v)
          if (e[v] != 0) {
            if (e[v] > 4) throw Error(ErrorKind::DenominatorNotCleared, "template exponent above 4");
            t = t * pw[v][e[v]];
          }
        acc = acc + t;
      }
      out[k] = acc;
    }
    return out;
  }
};

/// Phi(z) = sum_k q[k] z^k.
struct Resolvent10 {
  std::array<BigInt, 11> q;

  UniPoly<BigInt> poly() const { return UniPoly<BigInt>(std::vector<BigInt>(q.begin(), q.end())); }

  friend bool operator==(const Resolvent10&, const Resolvent10&) = default;
};

/// Expand prod_{i<j} (z + a_i + a_j), split by powers of z, rewrite each
/// coefficient in the elementary symmetric functions, substitute
/// e_i = P_(5-i)/D and multiply by D^4. Throws DenominatorNotCleared if some
/// coefficient has total degree above four in the e_i.
inline ResolventTemplates derive_templates() {
  constexpr std::size_t kRootVars = 5;
  // Variables: z, a_1..a_5.
  MultiPoly product = MultiPoly::constant(kRootVars + 1, BigInt(1));
  const MultiPoly z = MultiPoly::variable(kRootVars + 1, 0);
  for (std::size_t i = 1; i <= kRootVars; ++i)
    for (std::size_t j = i + 1; j <= kRootVars; ++j)
      product = product * (z + MultiPoly::variable(kRootVars + 1, i) + MultiPoly::variable(kRootVars + 1, j));

  std::array<MultiPoly, 11> by_power;
  by_power.fill(MultiPoly(kRootVars));
  for (const auto& [e, c] : product.terms()) {
    by_power.at(e[0]).add_term(Exponents(e.begin() + 1, e.end()), c);
  }

  ResolventTemplates t;
  for (std::size_t k = 0; k <= 10; ++k) {
    MultiPoly reduced = symmetric_reduce(by_power[k]);
    if (reduced.total_degree() > 4)
      throw Error(ErrorKind::DenominatorNotCleared,
                  "coefficient of z^" + std::to_string(k) + " has degree " +
                      std::to_string(reduced.total_degree()) + " in e_1..e_5");
    MultiPoly q(ResolventTemplates::kVars);
    for (const auto& [m, c] : reduced.terms()) {
      unsigned total = 0;
      Exponents e(ResolventTemplates::kVars, 0);
      for (std::size_t i = 0; i < kRootVars; ++i) {
        total += m[i];
        // e_(i+1) = P_(4-i) / D; P_l sits at position l + 1.
        e[1 + (4 - i)] += m[i];
      }
      e[0] = 4 - total;
      q.add_term(e, c);
    }
    t.in_elementary[k] = std::move(reduced);
    t.qhat[k] = std::move(q);
  }
  return t;
}

/// Phi(z; A, B) from the characteristic form via the templates.
inline Resolvent10 resolvent_of(const BinaryQuintic& f, const BigInt& det_a, const ResolventTemplates& t) {
  if (is_zero(det_a)) throw Error(ErrorKind::DegenerateA, "det(A)=0");
  if (f.p[5] != det_a) throw Error(ErrorKind::InvalidInput, "det(A) does not match the leading coefficient");
  Resolvent10 r;
  r.q = t.evaluate<BigInt>(det_a, {f.p[0], f.p[1], f.p[2], f.p[3], f.p[4]});
  return r;
}

/// Independent route to Phi. With F(y) = f(y, 1) and roots r_i = -a_i,
///   Res_y(F(y), F(z - y)) = det(A) * D(z) * Phi(z)^2,
/// where D(z) = 2^5 F(z/2) collects the i = j factors. Divide, take the
/// polynomial square root, and check integrality.
inline Resolvent10 resolvent_oracle(const BinaryQuintic& f, const BigInt& det_a) {
  if (is_zero(det_a)) throw Error(ErrorKind::DegenerateA, "det(A)=0");
  using Zz = UniPoly<BigInt>;
  std::vector<Zz> fy, gy(6, Zz{});
  for (const auto& c : f.p) fy.emplace_back(c);
  // (z - y)^l expanded as a polynomial in y with Z[z] coefficients.
  const UniPoly<Zz> z_minus_y{Zz{BigInt(0), BigInt(1)}, Zz(BigInt(-1))};
  UniPoly<Zz> power(Zz(BigInt(1)));
  UniPoly<Zz> g;
  for (std::size_t l = 0; l < 6; ++l) {
    g += power.scale(Zz(f.p[l]));
    power *= z_minus_y;
  }
  const Zz res = resultant(UniPoly<Zz>(std::move(fy)), g);

  std::vector<BigInt> dz(6);
  for (std::size_t l = 0; l < 6; ++l) dz[l] = f.p[l] * ipow(BigInt(2), static_cast<unsigned>(5 - l));
  Zz phi_squared;
  try {
    phi_squared = checked_div(res, Zz(std::move(dz)).scale(det_a));
  } catch (const Error&) {
    throw Error(ErrorKind::OracleMismatch, "resultant not divisible by the diagonal factor");
  }
  const UniPoly<Rational> phi = poly_sqrt(to_rational(phi_squared));
  if (phi.degree() != 10) throw Error(ErrorKind::OracleMismatch, "square root has wrong degree");
  Resolvent10 r;
  for (std::size_t k = 0; k <= 10; ++k) {
    const Rational& c = phi.coeffs()[k];
    if (c.get_den() != 1) throw Error(ErrorKind::NonIntegralCoefficient, "oracle coefficient " + c.get_str());
    r.q[k] = c.get_num();
  }
  return r;
}

/// d^10 Phi(z/d): coefficient k scaled by d^(10-k).
inline UniPoly<BigInt> shift_scale(const Resolvent10& phi, const BigInt& d) {
  if (is_zero(d)) throw Error(ErrorKind::InvalidInput, "shift_scale by zero");
  std::vector<BigInt> c(11);
  BigInt dp = 1;
  for (std::size_t k = 11; k-- > 0;) {
    c[k] = phi.q[k] * dp;
    dp *= d;
  }
  return UniPoly<BigInt>(std::move(c));
}

}  // namespace brauer
