#include "subset_scan.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "factorkit/error.hpp"

namespace factorkit {

std::size_t default_enumeration_cutoff() {
  if (const char* env = std::getenv("FACTORKIT_MAX_N")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return std::min<std::size_t>(value, kHardEnumerationLimit);
  }
  return kDefaultEnumerationCutoff;
}

namespace detail {

bool better(const ScanBest& a, const ScanBest& b) {
  if (a.value != b.value) return a.value < b.value;
  const int pa = std::popcount(a.mask);
  const int pb = std::popcount(b.mask);
  if (pa != pb) return pa < pb;
  return a.mask < b.mask;
}

void require_enumerable(std::size_t n, const EnumerationOptions& options, const char* what) {
  const std::size_t limit = std::min(options.max_n, kHardEnumerationLimit);
  if (n > limit)
    throw ResourceError(std::string(what) + ": graph order " + std::to_string(n) +
                        " exceeds the enumeration cutoff " + std::to_string(limit));
}

namespace {

class SliceScanner {
 public:
  SliceScanner(const Graph& g, std::span<const std::int64_t> in_weight, std::span<const std::int64_t> threshold)
      : g_(g), in_weight_(in_weight), threshold_(threshold), d_(g.order()), in_s_(g.order()) {}

  // Scans every S whose vertices >= low_bits agree with `high`.
  ScanBest scan(std::uint64_t high, unsigned low_bits) {
    const auto n = g_.order();
    std::uint64_t mask = high;
    in_weight_sum_ = 0;
    penalty_ = 0;
    for (std::size_t v = 0; v < n; ++v) in_s_[v] = (mask >> v) & 1U;
    for (std::size_t v = 0; v < n; ++v) {
      std::int64_t d = 0;
      for (Vertex u : g_.neighbors(static_cast<Vertex>(v)))
        if (!in_s_[u]) ++d;
      d_[v] = d;
      if (in_s_[v])
        in_weight_sum_ += in_weight_[v];
      else
        penalty_ += term(v);
    }

    ScanBest best{in_weight_sum_ + penalty_, mask};
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < steps; ++i) {
      const auto v = static_cast<std::size_t>(std::countr_zero(i));
      toggle(v);
      mask ^= std::uint64_t{1} << v;
      const ScanBest candidate{in_weight_sum_ + penalty_, mask};
      if (better(candidate, best)) best = candidate;
    }
    return best;
  }

 private:
  std::int64_t term(std::size_t x) const { return std::min<std::int64_t>(d_[x] - threshold_[x], 0); }

  void toggle(std::size_t v) {
    if (!in_s_[v]) {
      penalty_ -= term(v);
      in_weight_sum_ += in_weight_[v];
      in_s_[v] = 1;
      for (Vertex u : g_.neighbors(static_cast<Vertex>(v))) {
        if (in_s_[u]) {
          --d_[u];
        } else {
          penalty_ -= term(u);
          --d_[u];
          penalty_ += term(u);
        }
      }
    } else {
      in_s_[v] = 0;
      for (Vertex u : g_.neighbors(static_cast<Vertex>(v))) {
        if (in_s_[u]) {
          ++d_[u];
        } else {
          penalty_ -= term(u);
          ++d_[u];
          penalty_ += term(u);
        }
      }
      in_weight_sum_ -= in_weight_[v];
      penalty_ += term(v);
    }
  }

  const Graph& g_;
  std::span<const std::int64_t> in_weight_;
  std::span<const std::int64_t> threshold_;
  std::vector<std::int64_t> d_;
  std::vector<std::uint8_t> in_s_;
  std::int64_t in_weight_sum_ = 0;
  std::int64_t penalty_ = 0;
};

}  // namespace

ScanBest minimize_subset_deficiency(const Graph& g, std::span<const std::int64_t> in_weight,
                                    std::span<const std::int64_t> threshold, unsigned workers) {
  const auto n = static_cast<unsigned>(g.order());
  if (n > kHardEnumerationLimit) throw ResourceError("subset scan: graph too large for 64-bit masks");

  unsigned high_bits = 0;
  while (high_bits < n && (1U << high_bits) < std::max(workers, 1U)) ++high_bits;
  // A few extra slices per worker keeps the threads evenly loaded.
  if (workers > 1) high_bits = std::min(n, high_bits + 2);
  const unsigned low_bits = n - high_bits;
  const std::uint64_t slices = std::uint64_t{1} << high_bits;

  auto run_slices = [&](std::uint64_t first, std::uint64_t stride) {
    SliceScanner scanner(g, in_weight, threshold);
    std::optional<ScanBest> best;
    for (std::uint64_t s = first; s < slices; s += stride) {
      auto candidate = scanner.scan(s << low_bits, low_bits);
      if (!best || better(candidate, *best)) best = candidate;
    }
    return best;
  };

  if (workers <= 1 || slices == 1) return *run_slices(0, 1);

  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, slices));
  std::vector<std::optional<ScanBest>> partial(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { partial[t] = run_slices(t, threads); });
  }
  std::optional<ScanBest> best;
  for (const auto& p : partial)
    if (p && (!best || better(*p, *best))) best = p;
  return *best;
}

DeficiencyCertificate certificate_for(const Graph& g, const DegreeFunc& in_weight, const DegreeFunc& threshold,
                                      const VertexSet& S) {
  if (S.universe() != g.order()) throw DomainError("certificate: vertex set universe mismatch");
  DeficiencyCertificate cert{S, VertexSet(g.order()), in_weight.sum(S)};
  for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
    if (S.contains(x)) continue;
    const auto d = static_cast<std::int64_t>(degree_minus(g, S, x));
    if (d < threshold[x]) {
      cert.T.insert(x);
      cert.deficiency += d - threshold[x];
    }
  }
  return cert;
}

}  // namespace detail
}  // namespace factorkit
