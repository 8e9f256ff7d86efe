#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/charform.hpp"
#include "brauer/detect.hpp"
#include "brauer/resolvent.hpp"

namespace brauer {

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 100'000'000;
inline constexpr std::size_t kScanChunks = 64;

enum class ScanMode { Exhaustive, Sample };

inline const char* to_string(ScanMode m) { return m == ScanMode::Exhaustive ? "exhaustive" : "sample"; }

struct ScanConfig {
  SymMat5 a = SymMat5::identity();
  long height = 1;  // P: entries of B range over [-P, P]
  ScanMode mode = ScanMode::Sample;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool exact = false;
  std::uint64_t budget = kDefaultExhaustiveBudget;
  bool force_budget = false;
};

/// Budget from BRAUER_SCAN_BUDGET, else the default.
inline std::uint64_t scan_budget_from_env() {
  if (const char* env = std::getenv("BRAUER_SCAN_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "BRAUER_SCAN_BUDGET is not a number");
    }
  }
  return kDefaultExhaustiveBudget;
}

/// Per-matrix result, packed for aggregation and checksumming.
struct Outcome {
  enum : std::uint8_t {
    kDegenerate = 1,
    kS1 = 2,
    kS2 = 4,
    kExactLinear = 8,
    kExactQuadratic = 16,
    kExactChecked = 32,
  };
  std::uint8_t flags = 0;
  std::uint32_t disc_bits = 0;
  std::uint32_t resolvent_bits = 0;
};

struct ScanCounts {
  std::uint64_t total = 0;
  std::uint64_t disc_zero = 0;
  std::uint64_t s1_true = 0;
  std::uint64_t s2_true = 0;
  std::uint64_t candidate = 0;
  std::uint64_t generic_trivial = 0;
  std::uint64_t exact_linear = 0;
  std::uint64_t exact_quadratic = 0;
  std::uint64_t s2_without_exact_split = 0;
  std::uint32_t max_disc_bits = 0;
  std::uint32_t max_resolvent_bits = 0;

  void add(const Outcome& o) {
    ++total;
    max_disc_bits = std::max(max_disc_bits, o.disc_bits);
    max_resolvent_bits = std::max(max_resolvent_bits, o.resolvent_bits);
    if (o.flags & Outcome::kDegenerate) {
      ++disc_zero;
      return;
    }
    const bool s1 = o.flags & Outcome::kS1, s2 = o.flags & Outcome::kS2;
    s1_true += s1;
    s2_true += s2;
    if (s1 || s2)
      ++candidate;
    else
      ++generic_trivial;
    if (o.flags & Outcome::kExactChecked) {
      const bool lin = o.flags & Outcome::kExactLinear, quad = o.flags & Outcome::kExactQuadratic;
      exact_linear += lin;
      exact_quadratic += quad;
      s2_without_exact_split += (s2 && !lin && !quad);
    }
  }

  ScanCounts& operator+=(const ScanCounts& o) {
    total += o.total;
    disc_zero += o.disc_zero;
    s1_true += o.s1_true;
    s2_true += o.s2_true;
    candidate += o.candidate;
    generic_trivial += o.generic_trivial;
    exact_linear += o.exact_linear;
    exact_quadratic += o.exact_quadratic;
    s2_without_exact_split += o.s2_without_exact_split;
    max_disc_bits = std::max(max_disc_bits, o.max_disc_bits);
    max_resolvent_bits = std::max(max_resolvent_bits, o.max_resolvent_bits);
    return *this;
  }

  friend bool operator==(const ScanCounts&, const ScanCounts&) = default;
};

struct ChunkResult {
  ScanCounts counts;
  std::uint64_t checksum = 0xcbf29ce484222325ull;  // FNV-1a offset basis

  void record(const Outcome& o) {
    counts.add(o);
    checksum ^= o.flags;
    checksum *= 0x100000001b3ull;
  }
};

struct ScanReport {
  ScanConfig config;
  ScanCounts counts;
  std::vector<std::uint64_t> chunk_checksums;
  double wall_seconds = 0;  // not part of the serialized report
};

/// Wilson score interval for count/n at the given z.
struct WilsonInterval {
  double estimate = 0;
  double lo = 0;
  double hi = 0;
  double stderr_ = 0;  // half-width / z
};

inline WilsonInterval wilson(std::uint64_t count, std::uint64_t n, double z = 1.96) {
  WilsonInterval w;
  if (n == 0) return w;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(count) / nn;
  const double z2 = z * z;
  const double denom = 1 + z2 / nn;
  const double center = (p + z2 / (2 * nn)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
  w.estimate = p;
  w.lo = std::max(0.0, center - half);
  w.hi = std::min(1.0, center + half);
  w.stderr_ = half / z;
  return w;
}

/// Counter-based generator: the stream for sample i depends only on
/// (seed, i), so partitioning work never changes the draws.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index) : key_(mix(seed ^ mix(index + 0x632be59bd9b4e019ull))) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  /// Uniform in [0, n) without modulo bias (Lemire).
  std::uint64_t below(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

using UpperEntries = std::array<long, 15>;

/// Classifies B for a fixed A. The verdict depends on B only through the
/// characteristic form, so outcomes are memoized on (p_0..p_4); one
/// instance per worker.
class PencilClassifier {
 public:
  PencilClassifier(const SymMat5& a, const ResolventTemplates& t, ClassifyOptions opts)
      : a_(a), ctx_(a, t), opts_(opts) {
    a_fits_ = detail::to_fixed(a, a_fixed_);
  }

  Outcome operator()(const UpperEntries& b) {
    std::array<Checked<std::int64_t>, 25> bf;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) bf[i * 5 + j] = b[SymMat5::index(i, j)];
    if (a_fits_) {
      try {
        const auto c = char_form_coeffs(a_fixed_, bf);
        Key key{c[0].v, c[1].v, c[2].v, c[3].v, c[4].v};
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        BinaryQuintic f;
        for (std::size_t l = 0; l < 6; ++l) f.p[l] = to_bigint(c[l]);
        const Outcome o = evaluate(f);
        if (cache_.size() >= kCacheLimit) cache_.clear();
        cache_.emplace(key, o);
        return o;
      } catch (const Overflow&) {
      }
    }
    SymMat5 bm;
    for (std::size_t k = 0; k < 15; ++k) bm.upper_mut(k) = b[k];
    return evaluate(char_form(a_, bm));
  }

 private:
  using Key = std::array<std::int64_t, 5>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = 0;
      for (auto v : k) h = CounterRng::mix(h ^ static_cast<std::uint64_t>(v));
      return static_cast<std::size_t>(h);
    }
  };
  static constexpr std::size_t kCacheLimit = 1u << 20;

  Outcome evaluate(const BinaryQuintic& f) const {
    const DetectionVerdict v = classify_quintic(f, ctx_, opts_);
    Outcome o;
    o.disc_bits = static_cast<std::uint32_t>(bit_length(v.surface.disc));
    for (const auto& q : v.phi.q) o.resolvent_bits = std::max(o.resolvent_bits, static_cast<std::uint32_t>(bit_length(q)));
    if (v.brauer_status == BrauerStatus::Degenerate) {
      o.flags = Outcome::kDegenerate;
      return o;
    }
    if (v.s1.found) o.flags |= Outcome::kS1;
    if (v.s2.found) o.flags |= Outcome::kS2;
    if (v.factor_type) {
      const bool lin = v.factor_has(1), quad = v.factor_has(2);
      if (lin != v.s1.found)
        throw Error(ErrorKind::OracleMismatch, "rational-root detector disagrees with exact factorization");
      if (quad && !v.s2.found)
        throw Error(ErrorKind::OracleMismatch, "quadratic factor without a rational resolvent root");
      o.flags |= Outcome::kExactChecked;
      if (lin) o.flags |= Outcome::kExactLinear;
      if (quad) o.flags |= Outcome::kExactQuadratic;
    }
    return o;
  }

  SymMat5 a_;
  PencilContext ctx_;
  ClassifyOptions opts_;
  bool a_fits_ = false;
  std::array<Checked<std::int64_t>, 25> a_fixed_;
  std::unordered_map<Key, Outcome, KeyHash> cache_;
};

namespace detail {

/// Split [0, total) into fixed chunks, let workers pull chunks, merge in
/// chunk order. process(chunk_lo, chunk_hi, classifier, result).
template <class MakeClassifier, class Process>
ScanReport run_chunks(const ScanConfig& cfg, std::uint64_t total, MakeClassifier&& make_classifier,
                      Process&& process) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kScanChunks, std::max<std::uint64_t>(total, 1)));
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      auto classifier = make_classifier();
      for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
        const std::uint64_t lo = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * c) / chunks);
        const std::uint64_t hi = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * (c + 1)) / chunks);
        process(lo, hi, classifier, results[c]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };
  const unsigned workers = std::max(1u, cfg.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  ScanReport report;
  report.config = cfg;
  for (const auto& r : results) {
    report.counts += r.counts;
    report.chunk_checksums.push_back(r.checksum);
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace detail

/// (2P+1)^15, or nothing if it does not fit in 64 bits.
inline std::optional<std::uint64_t> box_size(long height) {
  const BigInt n = ipow(BigInt(2 * height + 1), 15);
  if (!mpz_fits_ulong_p(n.get_mpz_t())) return std::nullopt;
  return n.get_ui();
}

/// Every B in the box, in lexicographic order of (b11, b12, ..., b55).
template <class MakeClassifier>
ScanReport scan_exhaustive_with(const ScanConfig& cfg, MakeClassifier&& make_classifier) {
  if (cfg.height < 0) throw Error(ErrorKind::InvalidInput, "P must be non-negative");
  const auto total = box_size(cfg.height);
  if (!total || (!cfg.force_budget && *total > cfg.budget))
    throw Error(ErrorKind::BudgetExceeded, "box of height " + std::to_string(cfg.height) + " exceeds the exhaustive budget");
  const long side = 2 * cfg.height + 1;
  return detail::run_chunks(cfg, *total, make_classifier,
                            [&](std::uint64_t lo, std::uint64_t hi, auto& classify, ChunkResult& out) {
                              if (lo >= hi) return;
                              std::array<long, 15> digits{};
                              std::uint64_t rest = lo;
                              for (std::size_t k = 15; k-- > 0;) {
                                digits[k] = static_cast<long>(rest % static_cast<std::uint64_t>(side));
                                rest /= static_cast<std::uint64_t>(side);
                              }
                              UpperEntries b;
                              for (std::uint64_t i = lo; i < hi; ++i) {
                                for (std::size_t k = 0; k < 15; ++k) b[k] = digits[k] - cfg.height;
                                out.record(classify(b));
                                for (std::size_t k = 15; k-- > 0;) {
                                  if (++digits[k] < side) break;
                                  digits[k] = 0;
                                }
                              }
                            });
}

/// Draw a uniform B for sample `index`.
inline UpperEntries sample_matrix(std::uint64_t seed, std::uint64_t index, long height) {
  CounterRng rng(seed, index);
  UpperEntries b;
  const auto side = static_cast<std::uint64_t>(2 * height + 1);
  for (auto& v : b) v = static_cast<long>(rng.below(side)) - height;
  return b;
}

template <class MakeClassifier>
ScanReport scan_sample_with(const ScanConfig& cfg, MakeClassifier&& make_classifier) {
  if (cfg.height < 0) throw Error(ErrorKind::InvalidInput, "P must be non-negative");
  if (cfg.samples == 0) throw Error(ErrorKind::InvalidInput, "sample mode needs samples >= 1");
  return detail::run_chunks(cfg, cfg.samples, make_classifier,
                            [&](std::uint64_t lo, std::uint64_t hi, auto& classify, ChunkResult& out) {
                              for (std::uint64_t i = lo; i < hi; ++i)
                                out.record(classify(sample_matrix(cfg.seed, i, cfg.height)));
                            });
}

inline auto default_classifier_factory(const ScanConfig& cfg, const ResolventTemplates& t) {
  return [&cfg, &t] { return PencilClassifier(cfg.a, t, ClassifyOptions{cfg.exact}); };
}

inline ScanReport scan_exhaustive(const ScanConfig& cfg, const ResolventTemplates& t) {
  return scan_exhaustive_with(cfg, default_classifier_factory(cfg, t));
}

inline ScanReport scan_sample(const ScanConfig& cfg, const ResolventTemplates& t) {
  return scan_sample_with(cfg, default_classifier_factory(cfg, t));
}

inline ScanReport run_scan(const ScanConfig& cfg, const ResolventTemplates& t) {
  return cfg.mode == ScanMode::Exhaustive ? scan_exhaustive(cfg, t) : scan_sample(cfg, t);
}

struct SeriesReport {
  std::vector<ScanReport> points;
  double slope = 0;
  double slope_stderr = 0;
};

/// Least-squares slope of log(candidate density) against log P. A zero
/// count enters as (0.5)/(n) so the logarithm stays finite.
inline std::pair<double, double> log_log_slope(const std::vector<std::pair<double, double>>& pts) {
  const double n = static_cast<double>(pts.size());
  double mx = 0, my = 0;
  for (auto [x, y] : pts) mx += x, my += y;
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (auto [x, y] : pts) sxx += (x - mx) * (x - mx), sxy += (x - mx) * (y - my);
  const double slope = sxy / sxx;
  double rss = 0;
  for (auto [x, y] : pts) {
    const double r = y - (my + slope * (x - mx));
    rss += r * r;
  }
  const double se = pts.size() > 2 ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
  return {slope, se};
}

template <class MakeClassifierFor>
SeriesReport density_series_with(const ScanConfig& base, const std::vector<long>& heights,
                                 MakeClassifierFor&& make_classifier_for) {
  if (heights.size() < 3) throw Error(ErrorKind::InvalidInput, "density series needs at least 3 heights");
  for (std::size_t i = 1; i < heights.size(); ++i)
    if (heights[i] <= heights[i - 1]) throw Error(ErrorKind::InvalidInput, "heights must be strictly increasing");
  SeriesReport series;
  std::vector<std::pair<double, double>> pts;
  for (long h : heights) {
    ScanConfig cfg = base;
    cfg.mode = ScanMode::Sample;
    cfg.height = h;
    series.points.push_back(scan_sample_with(cfg, make_classifier_for(cfg)));
    const auto& c = series.points.back().counts;
    const double density = c.candidate > 0 ? static_cast<double>(c.candidate) / static_cast<double>(c.total)
                                           : 0.5 / static_cast<double>(c.total);
    pts.emplace_back(std::log(static_cast<double>(h)), std::log(density));
  }
  std::tie(series.slope, series.slope_stderr) = log_log_slope(pts);
  return series;
}

inline SeriesReport density_series(const ScanConfig& base, const std::vector<long>& heights,
                                   const ResolventTemplates& t) {
  return density_series_with(base, heights, [&t](const ScanConfig& cfg) {
    return [a = cfg.a, exact = cfg.exact, &t] { return PencilClassifier(a, t, ClassifyOptions{exact}); };
  });
}

}  // namespace brauer
