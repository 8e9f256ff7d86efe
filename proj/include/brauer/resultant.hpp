#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/linalg.hpp"
#include "brauer/unipoly.hpp"

namespace brauer {

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b.
template <class C>
UniPoly<C> prem(const UniPoly<C>& a, const UniPoly<C>& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "prem by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<C> r = a.coeffs();
  const C& lb = b.lc();
  for (std::size_t top = r.size(); top-- > db;) {
    if (is_zero(r[top])) {
      for (auto& c : r) c = c * lb;
    } else {
      C t = r[top];
      for (auto& c : r) c = c * lb;
      const std::size_t off = top - db;
      for (std::size_t j = 0; j <= db; ++j) r[off + j] = r[off + j] - t * b.coeffs()[j];
    }
  }
  r.resize(db);
  return UniPoly<C>(std::move(r));
}

/// Resultant over an integral domain C by the subresultant PRS. Each
/// intermediate division is exact, so coefficient growth stays polynomial.
template <class C>
C resultant(UniPoly<C> a, UniPoly<C> b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of zero polynomial");
  bool negate = false;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
  }
  if (b.degree() == 0) {
    C r = ipow(b.lc(), static_cast<unsigned>(a.degree()));
    return negate ? C(C(0) - r) : r;
  }
  C g(1), h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    UniPoly<C> r = prem(a, b);
    if (r.is_zero()) return C(0);
    a = std::move(b);
    b = exact_div_scalar(r, C(g * ipow(h, static_cast<unsigned>(delta))));
    g = a.lc();
    if (delta > 0)
      h = exact_div(C(ipow(g, static_cast<unsigned>(delta))), C(ipow(h, static_cast<unsigned>(delta - 1))));
    if (b.degree() == 0) {
      const auto da = static_cast<unsigned>(a.degree());
      C res = exact_div(C(ipow(b.lc(), da)), C(ipow(h, da - 1)));
      return negate ? C(C(0) - res) : res;
    }
  }
}

/// Resultant as the determinant of the Sylvester matrix. Independent of the
/// PRS route; used for cross-checks and tiny degrees.
template <class C>
C sylvester_resultant(const UniPoly<C>& a, const UniPoly<C>& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of zero polynomial");
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  if (size == 0) return C(1);
  std::vector<C> s(size * size, C(0));
  // Rows 0..n-1: shifts of a; rows n..n+m-1: shifts of b. Highest power first.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i * size + i + j] = a.coeffs()[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[(n + i) * size + i + j] = b.coeffs()[n - j];
  return det_bareiss(std::move(s), size);
}

/// Disc(F) = (-1)^(n(n-1)/2) Res(F, F') / lc(F); zero iff F has a repeated
/// root over an algebraic closure.
inline BigInt discriminant(const UniPoly<BigInt>& f) {
  if (f.degree() < 1) throw Error(ErrorKind::ZeroPolynomial, "discriminant needs degree >= 1");
  if (f.degree() == 1) return BigInt(1);
  const long n = f.degree();
  BigInt r = exact_div(resultant(f, f.derivative()), f.lc());
  if (((n * (n - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

namespace detail {

inline bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return false;
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

}  // namespace detail

/// Square root of a rational polynomial, with positive leading coefficient.
inline UniPoly<Rational> poly_sqrt(const UniPoly<Rational>& f) {
  if (f.is_zero()) return f;
  if (f.degree() % 2 != 0) throw Error(ErrorKind::NotASquare, "odd degree");
  const auto m = static_cast<std::size_t>(f.degree() / 2);
  std::vector<Rational> g(m + 1);
  if (!detail::rational_sqrt(f.lc(), g[m])) throw Error(ErrorKind::NotASquare, "leading coefficient");
  const Rational two_lead = 2 * g[m];
  // Match coefficients of x^(m+k) for k = m-1 down to 0.
  for (std::size_t k = m; k-- > 0;) {
    Rational acc = f[m + k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const std::size_t j = m + k - i;
      if (j > k && j < m) acc -= g[i] * g[j];
    }
    g[k] = acc / two_lead;
  }
  UniPoly<Rational> root(std::move(g));
  if (!(root * root == f)) throw Error(ErrorKind::NotASquare, "square check failed");
  return root;
}

}  // namespace brauer
