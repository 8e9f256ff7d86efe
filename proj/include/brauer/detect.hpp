#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/charform.hpp"
#include "brauer/factor.hpp"
#include "brauer/resolvent.hpp"
#include "brauer/unipoly.hpp"

namespace brauer {

/// Witness order: smaller absolute value first, positive before negative.
inline bool witness_less(const BigInt& a, const BigInt& b) {
  const int c = cmpabs(a, b);
  if (c != 0) return c < 0;
  return a > b;
}

/// Positive and negative divisors of a nonzero integer in witness order.
struct DivisorSet {
  std::vector<BigInt> values;

  static DivisorSet of(const BigInt& n) {
    if (is_zero(n)) throw Error(ErrorKind::DegenerateA, "divisors of zero");
    DivisorSet s;
    for (const auto& d : divisors(factor(n))) {
      s.values.push_back(d);
      s.values.push_back(-d);
    }
    std::sort(s.values.begin(), s.values.end(), witness_less);
    return s;
  }
};

namespace detail {

/// True if g (nonzero) provably has no rational root: a root r/s with
/// s | lc(g) survives reduction mod any prime not dividing lc(g).
inline bool rational_root_excluded(const UniPoly<BigInt>& g, int max_primes = 20) {
  if (g.degree() < 1) return g.degree() == 0;
  if (is_zero(g[0])) return false;
  int screened = 0;
  for (unsigned long p : small_primes()) {
    if (screened == max_primes || p > 1000) break;
    if (mpz_fdiv_ui(g.lc().get_mpz_t(), p) == 0) continue;
    ++screened;
    std::vector<unsigned long> c;
    for (const auto& x : g.coeffs()) c.push_back(mpz_fdiv_ui(x.get_mpz_t(), p));
    bool has_root = false;
    for (unsigned long x = 0; x < p && !has_root; ++x) {
      unsigned long acc = 0;
      for (std::size_t k = c.size(); k-- > 0;) acc = (acc * x + c[k]) % p;
      has_root = acc == 0;
    }
    if (!has_root) return true;
  }
  return false;
}

}  // namespace detail

struct RootWitness {
  BigInt lambda;  // f(lambda, d) = 0
  BigInt d;
};

struct S1Result {
  bool found = false;
  std::optional<RootWitness> witness;
};

struct S2Result {
  bool found = false;
  std::optional<Rational> witness;  // root z of Phi in lowest terms
};

/// f(lambda, mu) has a rational projective root iff f(lambda, d) has an
/// integer root for some d | det(A) (the lambda^5 coefficient is det(A)).
inline S1Result s1_rational_root(const BinaryQuintic& f, const DivisorSet& divisors_of_det_a) {
  if (detail::rational_root_excluded(f.dehomogenize())) return {};
  for (const auto& d : divisors_of_det_a.values) {
    // The roots at -d are those at d negated, and d comes first.
    if (sgn(d) < 0) continue;
    auto roots = integer_roots(f.at_mu(d));
    if (roots.empty()) continue;
    std::sort(roots.begin(), roots.end(), witness_less);
    return {true, RootWitness{roots.front(), d}};
  }
  return {};
}

inline S1Result s1_rational_root(const SymMat5& a, const BinaryQuintic& f) {
  const BigInt det_a = a.det();
  if (is_zero(det_a)) throw Error(ErrorKind::DegenerateA, "det(A)=0");
  return s1_rational_root(f, DivisorSet::of(det_a));
}

/// Phi has a rational root r/s (lowest terms) only if s | det(A)^4; such a
/// root shows up as an integer root of d^10 Phi(z/d) for d = s.
inline S2Result s2_resolvent_root(const Resolvent10& phi, const DivisorSet& divisors_of_det_a4) {
  if (detail::rational_root_excluded(phi.poly())) return {};
  for (const auto& d : divisors_of_det_a4.values) {
    if (sgn(d) < 0) continue;
    auto roots = integer_roots(shift_scale(phi, d));
    if (roots.empty()) continue;
    std::sort(roots.begin(), roots.end(), witness_less);
    Rational z(roots.front(), d);
    z.canonicalize();
    return {true, z};
  }
  return {};
}

inline S2Result s2_resolvent_root(const SymMat5& a, const Resolvent10& phi) {
  const BigInt det_a = a.det();
  if (is_zero(det_a)) throw Error(ErrorKind::DegenerateA, "det(A)=0");
  return s2_resolvent_root(phi, DivisorSet::of(ipow(det_a, 4)));
}

namespace gfp {

// Dense polynomials over F_p (p < 2^32), low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

inline Poly from_integer(const UniPoly<BigInt>& f, std::uint64_t p) {
  Poly out;
  for (const auto& c : f.coeffs()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  trim(out);
  return out;
}

inline Poly mod(Poly a, const Poly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv = inverse(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t q = a.back() * inv % p;
    const std::size_t off = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[off + j] = (a[off + j] + p - q * m[j] % p) % p;
    trim(a);
  }
  return a;
}

inline Poly divide(Poly a, const Poly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv = inverse(m.back(), p);
  Poly q(a.size() >= m.size() ? a.size() - dm : 0, 0);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * inv % p;
    const std::size_t off = a.size() - 1 - dm;
    q[off] = c;
    for (std::size_t j = 0; j <= dm; ++j) a[off + j] = (a[off + j] + p - c * m[j] % p) % p;
    a.pop_back();
  }
  trim(q);
  return q;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return mod(std::move(r), m, p);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return mod(std::move(result), m, p);
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly derivative(const Poly& a, std::uint64_t p) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  trim(d);
  return d;
}

/// Degrees of the irreducible factors of a squarefree polynomial
/// (distinct-degree factorization).
inline std::vector<int> factor_degrees(Poly f, std::uint64_t p) {
  std::vector<int> out;
  Poly h{0, 1};  // x
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = powmod(h, p, f, p);
    Poly hx = h;
    hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    Poly g = gcd(f, hx, p);
    if (g.size() > 1) {
      for (std::size_t k = 0; k < (g.size() - 1) / d; ++k) out.push_back(static_cast<int>(d));
      f = divide(f, g, p);
      h = mod(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(static_cast<int>(f.size() - 1));
  return out;
}

}  // namespace gfp

namespace detail {

/// One rational root of a primitive integer polynomial, as (numerator,
/// denominator) with positive denominator. Roots x of g correspond to integer
/// roots y = lc * x of the monic lc^(n-1) g(y / lc), so lc is never factored.
inline std::optional<std::pair<BigInt, BigInt>> find_rational_root(const UniPoly<BigInt>& g) {
  if (is_zero(g[0])) return std::make_pair(BigInt(0), BigInt(1));
  if (rational_root_excluded(g)) return std::nullopt;
  const BigInt& lc = g.lc();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<BigInt> c(n + 1);
  BigInt lp = 1;
  for (std::size_t l = n + 1; l-- > 0;) {
    c[l] = l == n ? BigInt(1) : g.coeffs()[l] * lp;
    if (l < n) lp *= lc;
  }
  auto roots = integer_roots(UniPoly<BigInt>(std::move(c)));
  if (roots.empty()) return std::nullopt;
  BigInt num = roots.front(), den = lc;
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  const BigInt common = gcd(num, den);
  return std::make_pair(BigInt(num / common), BigInt(den / common));
}

/// True if no reduction pattern allows a degree-2 factor.
inline bool quadratic_factor_excluded(const UniPoly<BigInt>& g) {
  int screened = 0;
  for (unsigned long p : small_primes()) {
    if (screened == 20 || p > 1000) break;
    if (mpz_fdiv_ui(g.lc().get_mpz_t(), p) == 0) continue;
    gfp::Poly gp = gfp::from_integer(g, p);
    if (gfp::gcd(gp, gfp::derivative(gp, p), p).size() != 1) continue;
    ++screened;
    const auto degs = gfp::factor_degrees(gp, p);
    const auto ones = std::count(degs.begin(), degs.end(), 1);
    const bool has_two = std::find(degs.begin(), degs.end(), 2) != degs.end();
    if (!has_two && ones < 2) return true;
  }
  return false;
}

/// An integer quadratic dividing g (which has no rational roots), if any.
inline std::optional<UniPoly<BigInt>> find_quadratic_factor(const UniPoly<BigInt>& g) {
  if (quadratic_factor_excluded(g)) return std::nullopt;
  const BigInt g1 = g.evaluate(BigInt(1));
  const BigInt gm1 = g.evaluate(BigInt(-1));
  BigInt norm2 = 0;
  for (const auto& c : g.coeffs()) norm2 += c * c;
  // Mignotte: a degree-2 factor has |middle coefficient| <= 2 ||g||_2.
  const BigInt b_bound = 2 * (sqrt(norm2) + 1);
  const auto lead_divs = divisors(factor(g.lc()));
  const auto const_divs = divisors(factor(g.coeffs()[0]));
  const auto value_divs = divisors(factor(g1));
  for (const auto& a : lead_divs)
    for (const auto& c0 : const_divs)
      for (int sc : {1, -1}) {
        const BigInt c = sc * c0;
        for (const auto& t0 : value_divs)
          for (int st : {1, -1}) {
            // q(1) = a + b + c must divide g(1).
            const BigInt b = st * t0 - a - c;
            if (cmpabs(b, b_bound) > 0) continue;
            const BigInt qm1 = a - b + c;
            if (is_zero(qm1) || !mpz_divisible_p(gm1.get_mpz_t(), qm1.get_mpz_t())) continue;
            UniPoly<BigInt> q{c, b, a};
            try {
              (void)checked_div(g, q);
              return q;
            } catch (const Error&) {
            }
          }
      }
  return std::nullopt;
}

}  // namespace detail

/// Degrees of the irreducible factors of f(lambda, 1) over Q, ascending.
/// Linear factors come from the rational root search; for the remaining
/// part (degree <= 5, no linear factors) only a 2 + rest split is possible.
inline std::vector<int> exact_factor_split(const BinaryQuintic& f, const BigInt& det_a) {
  if (is_zero(det_a)) throw Error(ErrorKind::DegenerateA, "det(A)=0");
  std::vector<int> parts;
  UniPoly<BigInt> g = primitive_part(f.dehomogenize());
  while (g.degree() >= 1) {
    const auto root = detail::find_rational_root(g);
    if (!root) break;
    const BigInt common = gcd(root->first, root->second);
    const UniPoly<BigInt> linear{BigInt(-root->first / common), BigInt(root->second / common)};
    g = checked_div(g, linear);
    parts.push_back(1);
  }
  if (g.degree() >= 4) {
    if (auto q = detail::find_quadratic_factor(g)) {
      parts.push_back(2);
      g = checked_div(g, *q);
    }
  }
  if (g.degree() >= 1) parts.push_back(g.degree());
  std::sort(parts.begin(), parts.end());
  return parts;
}

enum class BrauerStatus { Degenerate, GenericTrivial, Candidate };

inline const char* to_string(BrauerStatus s) {
  switch (s) {
    case BrauerStatus::Degenerate: return "Degenerate";
    case BrauerStatus::GenericTrivial: return "GenericTrivial";
    case BrauerStatus::Candidate: return "Candidate";
  }
  return "Unknown";
}

struct DetectionVerdict {
  BigInt det_a;
  BinaryQuintic f;
  SurfaceClass surface;
  Resolvent10 phi;
  S1Result s1;
  S2Result s2;
  std::optional<std::vector<int>> factor_type;
  BrauerStatus brauer_status = BrauerStatus::Degenerate;

  bool factor_has(int degree) const {
    return factor_type && std::find(factor_type->begin(), factor_type->end(), degree) != factor_type->end();
  }
};

struct ClassifyOptions {
  bool exact = false;
};

/// Everything about A that classification reuses across many B.
struct PencilContext {
  BigInt det_a;
  DivisorSet divisors_a;
  DivisorSet divisors_a4;
  const ResolventTemplates* templates;

  PencilContext(const SymMat5& a, const ResolventTemplates& t) : det_a(a.det()), templates(&t) {
    if (is_zero(det_a)) throw Error(ErrorKind::DegenerateA, "det(A)=0");
    divisors_a = DivisorSet::of(det_a);
    divisors_a4 = DivisorSet::of(ipow(det_a, 4));
  }
};

/// Verdict from the characteristic form alone: Disc first, then the rational
/// root detector, then the resolvent detector.
inline DetectionVerdict classify_quintic(const BinaryQuintic& f, const PencilContext& ctx,
                                         const ClassifyOptions& opts = {}) {
  DetectionVerdict v;
  v.det_a = ctx.det_a;
  v.f = f;
  v.surface = classify_surface(f, ctx.det_a);
  v.phi = resolvent_of(f, ctx.det_a, *ctx.templates);
  if (v.surface.kind == SurfaceKind::Degenerate) {
    v.brauer_status = BrauerStatus::Degenerate;
    return v;
  }
  v.s1 = s1_rational_root(f, ctx.divisors_a);
  v.s2 = s2_resolvent_root(v.phi, ctx.divisors_a4);
  if (opts.exact) v.factor_type = exact_factor_split(f, ctx.det_a);
  v.brauer_status = (v.s1.found || v.s2.found) ? BrauerStatus::Candidate : BrauerStatus::GenericTrivial;
  return v;
}

inline DetectionVerdict classify(const SymMat5& a, const SymMat5& b, const ResolventTemplates& t,
                                 const ClassifyOptions& opts = {}) {
  const PencilContext ctx(a, t);
  return classify_quintic(char_form(a, b), ctx, opts);
}

}  // namespace brauer
