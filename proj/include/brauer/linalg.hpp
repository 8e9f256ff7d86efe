#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/unipoly.hpp"

namespace brauer {

/// Fraction-free Gaussian elimination (Bareiss) on a row-major n x n matrix,
/// destroying its contents. Every division is exact, so this works over any
/// integral domain providing exact_div. Zero pivots are handled by row swaps.
template <class R>
R det_bareiss_inplace(std::span<R> m, std::size_t n) {
  if (m.size() != n * n) throw std::invalid_argument("det_bareiss: matrix is not square");
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k * n + k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m[p * n + k])) ++p;
      if (p == n) return R(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      negate = !negate;
    }
    const R& pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
        m[i * n + j] = exact_div(t, prev);
      }
    }
    prev = pivot;
  }
  R d = m[n * n - 1];
  return negate ? R(R(0) - d) : d;
}

template <class R>
R det_bareiss(std::vector<R> m, std::size_t n) {
  return det_bareiss_inplace(std::span<R>(m), n);
}

/// Interpolate through (x0 + i, values[i]) for i = 0..k-1 using forward
/// differences. For an integer polynomial the k-th difference is divisible
/// by k!; any other case throws NonIntegralCoefficient.
template <class R>
UniPoly<R> interpolate_consecutive(long x0, std::span<const R> values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("interpolate: no points");
  std::vector<R> diff(values.begin(), values.end());
  // Newton coefficients c_k = Delta^k y_0 / k!
  std::vector<R> newton(n, R(0));
  R factorial(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) factorial = factorial * R(static_cast<long>(k));
    try {
      newton[k] = checked_div(diff[0], factorial);
    } catch (const Error&) {
      throw Error(ErrorKind::NonIntegralCoefficient, "interpolant is not integral");
    }
    for (std::size_t i = 0; i + 1 < n - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  // Horner in the Newton basis: p = c_0 + (x - x0)(c_1 + (x - x0 - 1)(c_2 + ...))
  std::vector<R> acc{newton[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    const R node(x0 + static_cast<long>(k));
    std::vector<R> next(acc.size() + 1, R(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = next[j + 1] + acc[j];
      next[j] = next[j] - node * acc[j];
    }
    next[0] = next[0] + newton[k];
    acc = std::move(next);
  }
  return UniPoly<R>(std::move(acc));
}

/// The unique polynomial of degree < #points through arbitrary distinct
/// abscissae, required to have integer coefficients.
inline UniPoly<BigInt> interpolate_integer(const std::vector<std::pair<BigInt, BigInt>>& points) {
  const std::size_t n = points.size();
  if (n == 0) throw std::invalid_argument("interpolate: no points");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: repeated abscissa");
  // Divided differences over Q.
  std::vector<Rational> dd;
  dd.reserve(n);
  for (const auto& p : points) dd.emplace_back(p.second);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - k].first);
      if (i == k) break;
    }
  UniPoly<Rational> acc(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    acc = acc * UniPoly<Rational>{Rational(-points[k].first), Rational(1)} + UniPoly<Rational>(dd[k]);
  }
  std::vector<BigInt> out;
  for (const auto& c : acc.coeffs()) {
    if (c.get_den() != 1) throw Error(ErrorKind::NonIntegralCoefficient, c.get_str());
    out.push_back(c.get_num());
  }
  return UniPoly<BigInt>(std::move(out));
}

}  // namespace brauer
