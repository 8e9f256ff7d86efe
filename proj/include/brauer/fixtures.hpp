#pragma once

// Deterministic instance generators shared by the self-check and the tests.

#include <array>
#include <random>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/charform.hpp"

namespace brauer::fixtures {

inline SymMat5 random_sym(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::array<BigInt, 15> upper;
  for (auto& v : upper) v = dist(rng);
  return SymMat5(upper);
}

/// Random symmetric matrix with nonzero determinant.
inline SymMat5 random_nonsingular(std::mt19937_64& rng, long bound) {
  for (;;) {
    SymMat5 m = random_sym(rng, bound);
    if (!is_zero(m.det())) return m;
  }
}

/// Product of elementary unimodular operations (row additions, swaps and
/// sign changes), row-major.
inline std::vector<BigInt> random_unimodular(std::mt19937_64& rng, int steps = 12, long multiplier = 3) {
  std::vector<BigInt> t(25, BigInt(0));
  for (std::size_t i = 0; i < 5; ++i) t[i * 5 + i] = 1;
  std::uniform_int_distribution<int> idx(0, 4), kind(0, 5);
  std::uniform_int_distribution<long> mult(-multiplier, multiplier);
  for (int s = 0; s < steps; ++s) {
    const int i = idx(rng), j = idx(rng), k = kind(rng);
    if (k == 0 && i != j) {
      for (int c = 0; c < 5; ++c) std::swap(t[i * 5 + c], t[j * 5 + c]);
    } else if (k == 1) {
      for (int c = 0; c < 5; ++c) t[i * 5 + c] = -t[i * 5 + c];
    } else if (i != j) {
      const long m = mult(rng);
      for (int c = 0; c < 5; ++c) t[i * 5 + c] += m * t[j * 5 + c];
    }
  }
  return t;
}

/// 2x2 symmetric block [[a,b],[b,c]] whose eigenvalues are irrational,
/// i.e. (a-c)^2 + 4b^2 is not a perfect square.
inline std::array<long, 3> irrational_block(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    const long a = dist(rng), b = dist(rng), c = dist(rng);
    const BigInt disc = BigInt((a - c) * (a - c) + 4 * b * b);
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return {a, b, c};
  }
}

/// Pencil (T^t T, T^t B T) where B is block diagonal with two irrational
/// 2x2 blocks and a 1x1 block; f(lambda,1) then carries rational quadratic
/// factors, disguised by a random unimodular change of basis.
inline std::pair<SymMat5, SymMat5> quadratic_block_pencil(std::mt19937_64& rng, long bound = 6) {
  const auto b1 = irrational_block(rng, bound);
  const auto b2 = irrational_block(rng, bound);
  std::uniform_int_distribution<long> dist(-bound, bound);
  SymMat5 b;
  b.set(0, 0, b1[0]);
  b.set(0, 1, b1[1]);
  b.set(1, 1, b1[2]);
  b.set(2, 2, b2[0]);
  b.set(2, 3, b2[1]);
  b.set(3, 3, b2[2]);
  b.set(4, 4, dist(rng));
  const auto t = random_unimodular(rng);
  return {SymMat5::identity().congruence(t), b.congruence(t)};
}

/// Symmetric pencil (H, -C H) for a monic quintic g with companion matrix C
/// and the Hankel matrix H that symmetrizes it; det(lambda H - C H) = g.
inline std::pair<SymMat5, SymMat5> companion_pencil(const std::array<long, 5>& low_coeffs) {
  // g(x) = x^5 + c4 x^4 + ... + c0; H[i][j] = c_{i+j+1} with c5 = 1, zero past 5.
  auto c = [&](std::size_t k) -> long { return k < 5 ? low_coeffs[k] : (k == 5 ? 1 : 0); };
  std::vector<BigInt> h(25), comp(25, BigInt(0)), hc(25);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) h[i * 5 + j] = c(i + j + 1);
  // Companion: ones on the subdiagonal, last column -c_0..-c_4.
  for (std::size_t i = 1; i < 5; ++i) comp[i * 5 + i - 1] = 1;
  for (std::size_t i = 0; i < 5; ++i) comp[i * 5 + 4] = -c(i);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < 5; ++k) acc += comp[i * 5 + k] * h[k * 5 + j];
      hc[i * 5 + j] = -acc;
    }
  return {SymMat5::from_full(h), SymMat5::from_full(hc)};
}

}  // namespace brauer::fixtures
