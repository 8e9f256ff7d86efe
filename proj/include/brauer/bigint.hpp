#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "brauer/error.hpp"

namespace brauer {

using BigInt = mpz_class;
using Rational = mpq_class;

// Ring helpers. Every coefficient domain used with UniPoly / det_bareiss
// provides is_zero, exact_div (trusted: caller guarantees divisibility)
// and checked_div (throws NotExact).

inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt checked_div(const BigInt& a, const BigInt& b) {
  if (is_zero(b) || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw Error(ErrorKind::NotExact, a.get_str() + " / " + b.get_str());
  return exact_div(a, b);
}

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Rational checked_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw Error(ErrorKind::NotExact, "division by zero");
  return a / b;
}

inline bool fits_int64(const BigInt& a) {
  return mpz_fits_slong_p(a.get_mpz_t()) != 0;
}

/// Sign of |a| - |b|.
inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline BigInt abs_value(const BigInt& a) { return abs(a); }

inline std::string to_decimal(const BigInt& a) { return a.get_str(); }

inline std::string to_decimal(const Rational& a) { return a.get_str(); }

/// Number of bits of |a| (0 for zero).
inline std::size_t bit_length(const BigInt& a) {
  return is_zero(a) ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline BigInt parse_bigint(const std::string& s) {
  BigInt v;
  std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  if (t.empty() || v.set_str(t, 10) != 0)
    throw Error(ErrorKind::InvalidInput, "not an integer: '" + s + "'");
  return v;
}

/// Overflow-checked fixed-width integer. Arithmetic throws Overflow instead
/// of wrapping, so a computation either completes exactly or is redone over
/// BigInt.
template <class T>
struct Checked {
  T v{};

  constexpr Checked() = default;
  constexpr Checked(T x) : v(x) {}  // NOLINT(implicit)

  friend Checked operator+(Checked a, Checked b) {
    T r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    T r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    T r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  Checked operator-() const {
    if (v == std::numeric_limits<T>::min()) throw Overflow{};
    return -v;
  }
  Checked& operator+=(Checked o) { return *this = *this + o; }
  Checked& operator-=(Checked o) { return *this = *this - o; }
  Checked& operator*=(Checked o) { return *this = *this * o; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
};

template <class T>
bool is_zero(Checked<T> a) { return a.v == 0; }

template <class T>
Checked<T> exact_div(Checked<T> a, Checked<T> b) {
  if (b.v == -1) return -a;
  return a.v / b.v;
}

template <class T>
Checked<T> checked_div(Checked<T> a, Checked<T> b) {
  if (b.v == 0 || a.v % b.v != 0) throw Error(ErrorKind::NotExact, "fixed-width division");
  return exact_div(a, b);
}

inline BigInt to_bigint(Checked<std::int64_t> a) { return BigInt(static_cast<long>(a.v)); }

/// a^e by repeated squaring; R needs operator* and construction from 1.
template <class R>
R ipow(R base, unsigned e) {
  R result(1);
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

inline BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace brauer
