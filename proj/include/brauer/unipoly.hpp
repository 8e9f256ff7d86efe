#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "brauer/bigint.hpp"

namespace brauer {

template <class C>
class UniPoly;

template <class C>
bool is_zero(const UniPoly<C>& p);

/// Dense univariate polynomial c_0 + c_1 x + ... + c_n x^n over a
/// commutative ring C. The coefficient vector never ends in a zero, so the
/// zero polynomial is the empty vector and has degree -1 (standing in for
/// minus infinity).
template <class C>
class UniPoly {
 public:
  using coeff_type = C;

  UniPoly() = default;
  UniPoly(C c) {  // NOLINT(implicit): constants embed into the ring
    if (!brauer::is_zero(c)) c_.push_back(std::move(c));
  }
  UniPoly(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static UniPoly monomial(C c, std::size_t k) {
    if (is_zero(c)) return {};
    std::vector<C> v(k + 1, C(0));
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }

  /// Coefficient of x^k (zero beyond the degree).
  C operator[](std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
  const C& lc() const { return c_.back(); }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!brauer::is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> d(c_.size() - 1, C(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * C(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  UniPoly scale(const C& s) const {
    std::vector<C> v(c_.size(), C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return UniPoly(std::move(v));
  }

  /// p(x) / x^k, dropping the low coefficients (caller ensures they vanish).
  UniPoly shift_down(std::size_t k) const {
    if (k >= c_.size()) return {};
    return UniPoly(std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  UniPoly shift_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> v(k, C(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UniPoly(std::move(v));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] - b.c_[i];
    return UniPoly(std::move(v));
  }
  UniPoly operator-() const {
    std::vector<C> v(c_.size(), C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (brauer::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
  }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && brauer::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
bool is_zero(const UniPoly<C>& p) { return p.is_zero(); }

/// Quotient of a by b when b divides a exactly over C; throws NotExact
/// otherwise. Works over any integral domain whose checked_div is defined.
template <class C>
UniPoly<C> checked_div(const UniPoly<C>& a, const UniPoly<C>& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotExact, "polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::NotExact, "polynomial division");
  std::vector<C> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<C> quot(rem.size() - db, C(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const C& top = rem[k + db];
    if (is_zero(top)) continue;
    C q = checked_div(top, b.lc());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - q * b.coeffs()[j];
    quot[k] = std::move(q);
  }
  for (const auto& r : rem)
    if (!is_zero(r)) throw Error(ErrorKind::NotExact, "polynomial division leaves a remainder");
  return UniPoly<C>(std::move(quot));
}

template <class C>
UniPoly<C> exact_div(const UniPoly<C>& a, const UniPoly<C>& b) { return checked_div(a, b); }

/// Divide every coefficient by a scalar that divides it exactly.
template <class C>
UniPoly<C> exact_div_scalar(const UniPoly<C>& a, const C& s) {
  std::vector<C> v(a.coeffs());
  for (auto& c : v) c = exact_div(c, s);
  return UniPoly<C>(std::move(v));
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "divmod by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly<F>{}, a};
  std::vector<F> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<F> quot(rem.size() - db, F(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    F q = rem[k + db] / b.lc();
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    quot[k] = q;
  }
  rem.resize(db);
  return {UniPoly<F>(std::move(quot)), UniPoly<F>(std::move(rem))};
}

/// Monic gcd over a field (zero if both inputs are zero).
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scale(F(1) / a.lc());
}

template <class C>
UniPoly<Rational> to_rational(const UniPoly<C>& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return UniPoly<Rational>(std::move(v));
}

/// Content (gcd of coefficients, non-negative) of an integer polynomial.
inline BigInt content(const UniPoly<BigInt>& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

/// Primitive part with positive leading coefficient.
inline UniPoly<BigInt> primitive_part(const UniPoly<BigInt>& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (sgn(p.lc()) < 0) g = -g;
  return exact_div_scalar(p, g);
}

template <class C>
std::string to_string(const UniPoly<C>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const C& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_decimal(c) + ")";
    if (k > 0) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out;
}

}  // namespace brauer
