#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "brauer/bigint.hpp"

namespace brauer {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with integer coefficients over a fixed
/// number of variables. Terms are keyed by exponent vector; std::map keeps
/// them in lexicographic order, so the last entry is the lex-leading term.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const BigInt& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, BigInt(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  void add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::InvalidInput, "exponent vector length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const std::pair<const Exponents, BigInt>& leading_term() const { return *terms_.rbegin(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }

  MultiPoly swap_variables(std::size_t i, std::size_t j) const {
    MultiPoly out(nvars_);
    for (const auto& [exps, c] : terms_) {
      Exponents e = exps;
      std::swap(e[i], e[j]);
      out.terms_.emplace(std::move(e), c);
    }
    return out;
  }

  /// Invariant under the adjacent transpositions, which generate S_n.
  bool is_symmetric() const {
    for (std::size_t i = 0; i + 1 < nvars_; ++i)
      if (!(swap_variables(i, i + 1) == *this)) return false;
    return true;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a.check_compatible(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a.check_compatible(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, BigInt(-c));
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, BigInt(ca * cb));
      }
    return out;
  }
  MultiPoly scale(const BigInt& s) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, BigInt(c * s));
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(nvars_, BigInt(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Replace variable i by images[i] (all images share one variable set).
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw Error(ErrorKind::InvalidInput, "substitute: wrong image count");
    const std::size_t target = images.empty() ? 0 : images[0].nvars();
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = constant(target, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(target, BigInt(1)));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
        if (e[i] > 0) term = term * pw[e[i]];
      }
      out = out + term;
    }
    return out;
  }

  template <class R>
  R evaluate(const std::vector<R>& values) const {
    R acc(0);
    for (const auto& [e, c] : terms_) {
      R t(c);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = t * values[i];
      acc = acc + t;
    }
    return acc;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + it->second.get_str() + ")";
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        out += "*" + names.at(i);
        if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
      }
    }
    return out;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw Error(ErrorKind::InvalidInput, "variable set mismatch");
  }

  std::size_t nvars_;
  std::map<Exponents, BigInt> terms_;
};

/// e_k(x_1..x_n) as a polynomial in n variables.
inline MultiPoly elementary_symmetric(std::size_t n, std::size_t k) {
  MultiPoly p(n);
  if (k > n) return p;
  // Enumerate k-subsets by bitmask (n is small).
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != k) continue;
    Exponents e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1u;
    p.add_term(e, BigInt(1));
  }
  return p;
}

/// Express a symmetric polynomial in x_1..x_n through e_1..e_n: the result
/// r satisfies r(e_1(x), ..., e_n(x)) = p(x). Uses leading-term elimination
/// in lex order: a leading monomial x^a (a_1 >= ... >= a_n) is cancelled by
/// c * e_1^(a_1-a_2) ... e_(n-1)^(a_(n-1)-a_n) e_n^(a_n).
inline MultiPoly symmetric_reduce(const MultiPoly& p) {
  const std::size_t n = p.nvars();
  if (!p.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "symmetric_reduce on non-symmetric input");
  std::vector<MultiPoly> e;
  for (std::size_t k = 1; k <= n; ++k) e.push_back(elementary_symmetric(n, k));
  std::vector<std::vector<MultiPoly>> powers(n);
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(n, BigInt(1)));
    while (pw.size() <= k) pw.push_back(pw.back() * e[i]);
    return pw[k];
  };

  MultiPoly rest = p;
  MultiPoly out(n);
  while (!rest.is_zero()) {
    const auto [lead, c] = rest.leading_term();
    Exponents m(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned next = i + 1 < n ? lead[i + 1] : 0;
      if (lead[i] < next) throw Error(ErrorKind::NotSymmetric, "leading exponent not non-increasing");
      m[i] = lead[i] - next;
    }
    MultiPoly sub = MultiPoly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) sub = sub * power(i, m[i]);
    rest = rest - sub;
    out.add_term(m, c);
  }
  return out;
}

}  // namespace brauer
