#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/unipoly.hpp"

namespace brauer {

/// Prime powers p^e, primes ascending.
using Factorization = std::vector<std::pair<BigInt, unsigned>>;

inline constexpr unsigned long kTrialDivisionLimit = 100000;

inline const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialDivisionLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace detail {

/// A nontrivial factor of an odd composite n (Brent's variant of rho), or
/// nothing once max_steps iterations have been spent.
inline std::optional<BigInt> pollard_brent(const BigInt& n, std::optional<std::uint64_t> max_steps = std::nullopt) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  std::uint64_t steps = 0;
  auto exhausted = [&] { return max_steps && steps > *max_steps; };
  for (unsigned long c = 1;; ++c) {
    auto step = [&](BigInt v) {
      ++steps;
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
      return v;
    };
    BigInt y = 2, x, ys, q = 1, g = 1;
    std::size_t r = 1;
    constexpr std::size_t m = 128;
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = q * abs(BigInt(x - y));
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
      if (g == 1 && exhausted()) return std::nullopt;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(BigInt(abs(BigInt(x - ys))), n);
      } while (g == 1);
    }
    if (g != n) return g;
    if (exhausted()) return std::nullopt;
  }
}

/// Appends the prime factors of n; false if the step budget ran out.
inline bool factor_large(const BigInt& n, std::vector<BigInt>& primes,
                         std::optional<std::uint64_t> max_steps = std::nullopt) {
  if (n == 1) return true;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return true;
  }
  const auto d = pollard_brent(n, max_steps);
  if (!d) return false;
  return factor_large(*d, primes, max_steps) && factor_large(BigInt(n / *d), primes, max_steps);
}

inline void push_prime(Factorization& f, const BigInt& p, unsigned e) {
  for (auto& [q, k] : f)
    if (q == p) {
      k += e;
      return;
    }
  f.emplace_back(p, e);
}

}  // namespace detail

/// Prime factorization of |n| restricted to primes <= limit (all primes when
/// limit is empty). Trial division covers the prime table; larger primes are
/// found by Miller-Rabin plus Pollard-Brent, and only when the limit calls
/// for them.
inline std::optional<Factorization> factor_within(const BigInt& n, const std::optional<BigInt>& limit,
                                                  std::optional<std::uint64_t> max_steps) {
  Factorization out;
  BigInt m = abs(n);
  if (sgn(m) == 0) throw Error(ErrorKind::InvalidInput, "cannot factor zero");
  unsigned long cap = kTrialDivisionLimit;
  if (limit && *limit < BigInt(kTrialDivisionLimit)) cap = sgn(*limit) > 0 ? limit->get_ui() : 0;
  auto within_limit = [&](const BigInt& p) { return !limit || p <= *limit; };

  if (mpz_fits_ulong_p(m.get_mpz_t())) {
    unsigned long v = m.get_ui();
    for (unsigned long p : small_primes()) {
      if (p > cap) break;
      if (p * p > v) {
        // v is 1 or prime.
        if (v > 1 && within_limit(BigInt(v))) detail::push_prime(out, BigInt(v), 1);
        return out;
      }
      if (v % p == 0) {
        unsigned e = 0;
        while (v % p == 0) v /= p, ++e;
        out.emplace_back(BigInt(p), e);
      }
    }
    m = v;
  } else {
    for (unsigned long p : small_primes()) {
      if (p > cap) break;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
          mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
          ++e;
        }
        out.emplace_back(BigInt(p), e);
        if (m == 1) break;
      }
    }
  }
  // Every prime factor of m now exceeds cap.
  if (m == 1 || (limit && *limit <= BigInt(cap))) return out;
  const BigInt next = BigInt(cap) + 1;
  if (m < next * next) {
    if (within_limit(m)) out.emplace_back(m, 1u);
    return out;
  }
  std::vector<BigInt> primes;
  if (!detail::factor_large(m, primes, max_steps)) return std::nullopt;
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes)
    if (within_limit(p)) detail::push_prime(out, p, 1);
  return out;
}

inline Factorization factor(const BigInt& n, const std::optional<BigInt>& limit = std::nullopt) {
  return *factor_within(n, limit, std::nullopt);
}

/// Positive divisors built from the given prime powers, not exceeding bound
/// (when present), sorted ascending.
inline std::vector<BigInt> divisors(const Factorization& f, const std::optional<BigInt>& bound = std::nullopt) {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      BigInt d = out[i];
      for (unsigned k = 0; k < e; ++k) {
        d *= p;
        if (bound && d > *bound) break;
        out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest r >= 0 with r^k >= t.
inline BigInt ceil_root(const BigInt& t, unsigned k) {
  if (sgn(t) <= 0) return BigInt(0);
  BigInt r;
  mpz_root(r.get_mpz_t(), t.get_mpz_t(), k);
  if (ipow(r, k) < t) r += 1;
  return r;
}

/// Upper bound on |x| over all complex roots x of f (deg >= 1): the smaller
/// of the Cauchy and Fujiwara bounds, rounded up to an integer.
inline BigInt root_bound(const UniPoly<BigInt>& f) {
  const int n = f.degree();
  const BigInt lead = abs(f.lc());
  auto ceil_ratio = [&](const BigInt& a) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), BigInt(abs(a)).get_mpz_t(), lead.get_mpz_t());
    return q;
  };
  BigInt cauchy = 0;
  BigInt fujiwara = 0;
  for (int k = 1; k <= n; ++k) {
    const BigInt& a = f.coeffs()[static_cast<std::size_t>(n - k)];
    BigInt ratio = ceil_ratio(a);
    cauchy = std::max(cauchy, ratio);
    if (k == n) {
      BigInt half;
      mpz_cdiv_q_ui(half.get_mpz_t(), ratio.get_mpz_t(), 2);
      ratio = half;
    }
    fujiwara = std::max(fujiwara, ceil_root(ratio, static_cast<unsigned>(k)));
  }
  cauchy += 1;
  fujiwara *= 2;
  return std::min(cauchy, fujiwara);
}

namespace detail {

inline constexpr std::uint64_t kRhoStepBudget = 1u << 16;

/// Integer roots in [-bound, bound] by p-adic lifting of the roots of the
/// squarefree part modulo a small prime. Used when the constant term resists
/// factorization.
inline std::vector<BigInt> integer_roots_lifted(const UniPoly<BigInt>& g, const BigInt& bound) {
  const UniPoly<Rational> gq = to_rational(g);
  const UniPoly<Rational> common = gcd(gq, gq.derivative());
  UniPoly<Rational> sq = divmod(gq, common).first;
  BigInt den = 1;
  for (const auto& c : sq.coeffs()) den = lcm(den, BigInt(c.get_den()));
  std::vector<BigInt> hc;
  for (const auto& c : sq.coeffs()) hc.push_back(BigInt(c * den));
  const UniPoly<BigInt> h = primitive_part(UniPoly<BigInt>(std::move(hc)));
  const UniPoly<BigInt> dh = h.derivative();

  for (unsigned long p : small_primes()) {
    if (p == 2 || mpz_divisible_ui_p(h.lc().get_mpz_t(), p)) continue;
    // Every root mod p must be simple so that it lifts uniquely.
    std::vector<unsigned long> residues;
    bool simple = true;
    for (unsigned long x = 0; x < p && simple; ++x) {
      const BigInt bx(x);
      if (mpz_divisible_ui_p(BigInt(h.evaluate(bx)).get_mpz_t(), p)) {
        if (mpz_divisible_ui_p(BigInt(dh.evaluate(bx)).get_mpz_t(), p)) simple = false;
        residues.push_back(x);
      }
    }
    if (!simple) continue;
    std::vector<BigInt> roots;
    for (unsigned long r0 : residues) {
      BigInt a(r0), modulus(p);
      while (modulus <= 2 * bound) {
        modulus *= modulus;
        BigInt inv, num = h.evaluate(a), der = dh.evaluate(a);
        mpz_mod(der.get_mpz_t(), der.get_mpz_t(), modulus.get_mpz_t());
        mpz_invert(inv.get_mpz_t(), der.get_mpz_t(), modulus.get_mpz_t());
        a -= num * inv;
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
      }
      if (2 * a > modulus) a -= modulus;
      if (cmpabs(a, bound) <= 0 && is_zero(h.evaluate(a))) roots.push_back(a);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  throw Error(ErrorKind::InvalidInput, "no suitable prime for root lifting");
}

}  // namespace detail

/// All integer roots of a nonzero integer polynomial, ascending.
inline std::vector<BigInt> integer_roots(const UniPoly<BigInt>& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "integer_roots of zero polynomial");
  std::vector<BigInt> roots;
  const int low = f.low_degree();
  if (low > 0) roots.emplace_back(0);
  const UniPoly<BigInt> g = f.shift_down(static_cast<std::size_t>(low));
  if (g.degree() >= 1) {
    const BigInt bound = root_bound(g);
    const BigInt c = g.coeffs()[0];
    if (const auto fac = factor_within(c, bound, detail::kRhoStepBudget)) {
      for (const auto& d : divisors(*fac, bound)) {
        if (is_zero(g.evaluate(d))) roots.push_back(d);
        BigInt neg = -d;
        if (is_zero(g.evaluate(neg))) roots.push_back(neg);
      }
    } else {
      for (auto& r : detail::integer_roots_lifted(g, bound)) roots.push_back(std::move(r));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace brauer
