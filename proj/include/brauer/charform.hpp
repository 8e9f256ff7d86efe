#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/linalg.hpp"
#include "brauer/resultant.hpp"
#include "brauer/unipoly.hpp"

namespace brauer {

/// Symmetric 5x5 integer matrix stored as its upper triangle, row-major:
/// b11 b12 b13 b14 b15 b22 ... b55.
class SymMat5 {
 public:
  static constexpr std::size_t kDim = 5;
  static constexpr std::size_t kEntries = 15;

  SymMat5() { entries_.fill(BigInt(0)); }
  explicit SymMat5(const std::array<BigInt, kEntries>& upper) : entries_(upper) {}

  static SymMat5 identity() { return diagonal({1, 1, 1, 1, 1}); }

  static SymMat5 diagonal(const std::array<long, kDim>& d) {
    SymMat5 m;
    for (std::size_t i = 0; i < kDim; ++i) m.set(i, i, BigInt(d[i]));
    return m;
  }

  /// From a full row-major 25-entry matrix; throws NotSymmetric otherwise.
  static SymMat5 from_full(std::span<const BigInt> full) {
    if (full.size() != kDim * kDim) throw Error(ErrorKind::InvalidInput, "expected 25 entries");
    SymMat5 m;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) {
        if (full[i * kDim + j] != full[j * kDim + i])
          throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
        if (i <= j) m.set(i, j, full[i * kDim + j]);
      }
    return m;
  }

  static constexpr std::size_t index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    // Rows before i contribute 5 + 4 + ... entries.
    return i * kDim - i * (i - 1) / 2 + (j - i);
  }

  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, const BigInt& v) { entries_[index(i, j)] = v; }

  const std::array<BigInt, kEntries>& upper() const { return entries_; }
  BigInt& upper_mut(std::size_t k) { return entries_.at(k); }

  std::vector<BigInt> full() const {
    std::vector<BigInt> out(kDim * kDim);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) out[i * kDim + j] = (*this)(i, j);
    return out;
  }

  BigInt height() const {
    BigInt h = 0;
    for (const auto& e : entries_) h = std::max(h, BigInt(abs(e)));
    return h;
  }

  BigInt det() const { return det_bareiss(full(), kDim); }

  SymMat5 scaled(const BigInt& t) const {
    SymMat5 m;
    for (std::size_t k = 0; k < kEntries; ++k) m.entries_[k] = entries_[k] * t;
    return m;
  }

  /// T^t M T for an arbitrary 5x5 integer matrix T (row-major).
  SymMat5 congruence(std::span<const BigInt> t) const {
    SymMat5 out;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = i; j < kDim; ++j) {
        BigInt acc = 0;
        for (std::size_t k = 0; k < kDim; ++k)
          for (std::size_t l = 0; l < kDim; ++l) acc += t[k * kDim + i] * (*this)(k, l) * t[l * kDim + j];
        out.set(i, j, acc);
      }
    return out;
  }

  friend bool operator==(const SymMat5& a, const SymMat5& b) { return a.entries_ == b.entries_; }

 private:
  std::array<BigInt, kEntries> entries_;
};

/// f(lambda, mu) = sum_l p[l] mu^(5-l) lambda^l.
struct BinaryQuintic {
  std::array<BigInt, 6> p;

  /// F(lambda) = f(lambda, 1).
  UniPoly<BigInt> dehomogenize() const { return UniPoly<BigInt>(std::vector<BigInt>(p.begin(), p.end())); }

  /// f(lambda, d) as a polynomial in lambda: coefficients p_l d^(5-l).
  UniPoly<BigInt> at_mu(const BigInt& d) const {
    std::vector<BigInt> c(6);
    BigInt dp = 1;
    for (std::size_t l = 6; l-- > 0;) {
      c[l] = p[l] * dp;
      dp *= d;
    }
    return UniPoly<BigInt>(std::move(c));
  }

  BigInt evaluate(const BigInt& lambda, const BigInt& mu) const {
    BigInt acc = 0;
    for (std::size_t l = 6; l-- > 0;) acc = acc * lambda + p[l] * ipow(mu, static_cast<unsigned>(5 - l));
    return acc;
  }

  friend bool operator==(const BinaryQuintic&, const BinaryQuintic&) = default;
};

inline constexpr long kFirstNode = -2;  // abscissae -2, -1, 0, 1, 2, 3

/// Coefficients of det(lambda*A + B) over ring R from row-major 5x5 inputs.
template <class R>
std::array<R, 6> char_form_coeffs(const std::array<R, 25>& a, const std::array<R, 25>& b) {
  std::array<R, 6> values;
  std::array<R, 25> m;
  for (std::size_t s = 0; s < 6; ++s) {
    const R lambda(kFirstNode + static_cast<long>(s));
    for (std::size_t k = 0; k < 25; ++k) m[k] = lambda * a[k] + b[k];
    values[s] = det_bareiss_inplace(std::span<R>(m), 5);
  }
  const UniPoly<R> poly = interpolate_consecutive<R>(kFirstNode, std::span<const R>(values));
  std::array<R, 6> out;
  for (std::size_t l = 0; l < 6; ++l) out[l] = poly[l];
  return out;
}

namespace detail {

inline bool to_fixed(const SymMat5& m, std::array<Checked<std::int64_t>, 25>& out) {
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const BigInt& v = m(i, j);
      if (!fits_int64(v)) return false;
      out[i * 5 + j] = Checked<std::int64_t>(v.get_si());
    }
  return true;
}

}  // namespace detail

/// det(lambda*A + mu*B) by six exact determinant evaluations and integer
/// interpolation. Small entries go through a checked 64-bit path first.
inline BinaryQuintic char_form(const SymMat5& a, const SymMat5& b) {
  std::array<Checked<std::int64_t>, 25> fa, fb;
  if (detail::to_fixed(a, fa) && detail::to_fixed(b, fb)) {
    try {
      const auto c = char_form_coeffs(fa, fb);
      BinaryQuintic f;
      for (std::size_t l = 0; l < 6; ++l) f.p[l] = to_bigint(c[l]);
      return f;
    } catch (const Overflow&) {
    }
  }
  std::array<BigInt, 25> ba, bb;
  const auto full_a = a.full(), full_b = b.full();
  std::copy(full_a.begin(), full_a.end(), ba.begin());
  std::copy(full_b.begin(), full_b.end(), bb.begin());
  BinaryQuintic f;
  f.p = char_form_coeffs(ba, bb);
  return f;
}

/// Discriminant of f(lambda, 1), normalized as (-1)^10 Res(F, F') / det(A).
inline BigInt disc_f(const BinaryQuintic& f, const BigInt& det_a) {
  if (is_zero(det_a)) throw Error(ErrorKind::DegenerateA, "det(A)=0");
  if (f.p[5] != det_a) throw Error(ErrorKind::InvalidInput, "det(A) does not match the leading coefficient");
  return discriminant(f.dehomogenize());
}

enum class SurfaceKind { SmoothDP4, Degenerate };

inline const char* to_string(SurfaceKind k) {
  return k == SurfaceKind::SmoothDP4 ? "SmoothDP4" : "Degenerate";
}

struct SurfaceClass {
  SurfaceKind kind;
  BigInt disc;
};

inline SurfaceClass classify_surface(const BinaryQuintic& f, const BigInt& det_a) {
  BigInt d = disc_f(f, det_a);
  return {is_zero(d) ? SurfaceKind::Degenerate : SurfaceKind::SmoothDP4, d};
}

/// Smooth of codimension two exactly when the characteristic form is separable.
inline SurfaceClass classify_surface(const SymMat5& a, const SymMat5& b) {
  const BigInt det_a = a.det();
  if (is_zero(det_a)) throw Error(ErrorKind::DegenerateA, "det(A)=0");
  return classify_surface(char_form(a, b), det_a);
}

}  // namespace brauer
