#include "pargi/refinement.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "signature_ranker.h"

namespace pargi {

namespace {

using internal::RankSignatures;
using internal::Signature;

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t SatMul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t SatAdd(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::size_t SatPow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = SatMul(r, base);
  return r;
}

// Shared driver: apply `round` until no new class appears or the budget runs
// out. A discrete partition is stable by definition and costs no round.
template <class P, class Round>
RefinementReport<P> Iterate(P initial, std::size_t items, std::size_t max_rounds,
                            Round&& round) {
  RefinementReport<P> report;
  report.color_counts.push_back(initial.num_colors);
  report.partition = std::move(initial);
  if (report.partition.num_colors == items) {
    report.stabilized = true;
    return report;
  }
  while (report.rounds < max_rounds) {
    P next = round(report.partition);
    ++report.rounds;
    report.color_counts.push_back(next.num_colors);
    const bool same = next.num_colors == report.partition.num_colors;
    report.partition = std::move(next);
    if (same) {
      report.stabilized = true;
      break;
    }
  }
  return report;
}

std::size_t Wl2MemoryEstimate(std::size_t n) {
  // Pair colors, local ids and, in the worst case, one stored signature of
  // 2n + 1 words per pair.
  return SatMul(SatMul(n, n), SatAdd(12, SatMul(4, SatAdd(1, SatMul(2, n)))));
}

void CheckBudget(std::size_t required, std::size_t budget, const std::string& what) {
  if (required > budget) {
    throw BudgetError(what + " needs about " + std::to_string(required) +
                          " bytes, over the memory budget of " +
                          std::to_string(budget) + " bytes",
                      required);
  }
}

}  // namespace

std::size_t CeilLog2(std::size_t x) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < x) ++r;
  return r;
}

std::size_t LogRoundBudget(std::size_t n) { return CeilLog2(2 * std::max<std::size_t>(n, 1)); }

// --- 1-WL ----------------------------------------------------------------

VertexPartition InitialVertexPartition(const Graph& g) { return RankColors(g.colors()); }

VertexPartition ColorRefineRound(const Graph& g, const VertexPartition& p,
                                 const Executor& ex) {
  auto ranked = RankSignatures(g.num_vertices(), ex, [&] {
    return [&](std::size_t v, Signature& sig) {
      sig.push_back(p.color_of[v]);
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) sig.push_back(p.color_of[w]);
      std::sort(sig.begin() + 1, sig.end());
    };
  });
  return {std::move(ranked.ids), ranked.num_colors};
}

RefinementReport<VertexPartition> ColorRefine(const Graph& g,
                                              const RefineOptions& options) {
  const Executor ex(options.workers);
  const std::size_t n = g.num_vertices();
  return Iterate(InitialVertexPartition(g), n, options.max_rounds.value_or(n),
                 [&](const VertexPartition& p) { return ColorRefineRound(g, p, ex); });
}

// --- 2-WL ----------------------------------------------------------------

PairColoring InitialPairColoring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const VertexPartition vc = InitialVertexPartition(g);
  auto ranked = RankSignatures(n * n, Executor(1), [&] {
    return [&](std::size_t i, Signature& sig) {
      const auto x = static_cast<Vertex>(i / n);
      const auto y = static_cast<Vertex>(i % n);
      if (x == y) {
        sig = {0, vc.color_of[x]};
      } else {
        sig = {g.adjacent(x, y) ? 2u : 1u};
      }
    };
  });
  return {n, std::move(ranked.ids), ranked.num_colors};
}

PairColoring Wl2Round(const PairColoring& pc, const Executor& ex) {
  const std::size_t n = pc.n;
  const Color* c = pc.color_of.data();
  auto ranked = RankSignatures(n * n, ex, [&] {
    return [&, walks = std::vector<std::uint64_t>(n)](std::size_t i, Signature& sig) mutable {
      const std::size_t x = i / n;
      const std::size_t y = i % n;
      for (std::size_t z = 0; z < n; ++z) {
        walks[z] = (std::uint64_t{c[x * n + z]} << 32) | c[z * n + y];
      }
      std::sort(walks.begin(), walks.end());
      sig.reserve(1 + 2 * n);
      sig.push_back(c[i]);
      for (std::uint64_t w : walks) {
        sig.push_back(static_cast<std::uint32_t>(w >> 32));
        sig.push_back(static_cast<std::uint32_t>(w));
      }
    };
  });
  return {n, std::move(ranked.ids), ranked.num_colors};
}

RefinementReport<PairColoring> Wl2Refine(const Graph& g, const RefineOptions& options) {
  const std::size_t n = g.num_vertices();
  CheckBudget(Wl2MemoryEstimate(n), options.memory_budget_bytes, "2-WL on n=" + std::to_string(n));
  const Executor ex(options.workers);
  return Iterate(InitialPairColoring(g), n * n, options.max_rounds.value_or(n * n),
                 [&](const PairColoring& pc) { return Wl2Round(pc, ex); });
}

PairColoring WalkRefine(const Graph& g, std::size_t walk_length,
                        const RefineOptions& options) {
  if (walk_length == 0) throw std::invalid_argument("walk length must be >= 1");
  const std::size_t n = g.num_vertices();
  CheckBudget(Wl2MemoryEstimate(n), options.memory_budget_bytes, "walk refinement on n=" + std::to_string(n));
  const Executor ex(options.workers);
  PairColoring pc = InitialPairColoring(g);
  const std::size_t rounds = CeilLog2(walk_length);
  for (std::size_t r = 0; r < rounds; ++r) {
    PairColoring next = Wl2Round(pc, ex);
    const bool stable = next.num_colors == pc.num_colors;
    pc = std::move(next);
    if (stable) break;  // every further round is the identity
  }
  return pc;
}

VertexPartition DiagonalPartition(const PairColoring& pc) {
  std::vector<Color> diag(pc.n);
  for (std::size_t v = 0; v < pc.n; ++v) diag[v] = pc.color_of[v * pc.n + v];
  return RankColors(diag);
}

RefinementReport<VertexPartition> SimulateCrByWl2(const Graph& g,
                                                  const RefineOptions& options) {
  const std::size_t n = g.num_vertices();
  CheckBudget(Wl2MemoryEstimate(n), options.memory_budget_bytes,
              "2-WL simulation on n=" + std::to_string(n));
  const Executor ex(options.workers);
  std::size_t budget = LogRoundBudget(n);
  if (options.max_rounds) budget = std::min(budget, *options.max_rounds);

  PairColoring pc = InitialPairColoring(g);
  RefinementReport<VertexPartition> report;
  report.color_counts.push_back(DiagonalPartition(pc).num_colors);
  report.stabilized = pc.num_colors == n * n;
  while (!report.stabilized && report.rounds < budget) {
    PairColoring next = Wl2Round(pc, ex);
    ++report.rounds;
    report.stabilized = next.num_colors == pc.num_colors;
    pc = std::move(next);
    report.color_counts.push_back(DiagonalPartition(pc).num_colors);
  }
  report.partition = DiagonalPartition(pc);
  return report;
}

// --- k-WL ----------------------------------------------------------------

std::size_t WlkMemoryEstimate(std::size_t n, std::size_t k) {
  const std::size_t tuples = SatPow(n, k);
  return SatMul(tuples, SatAdd(12, SatMul(4, SatAdd(1, SatMul(n, k)))));
}

TupleColoring InitialTupleColoring(const Graph& g, std::size_t k,
                                   std::size_t memory_budget) {
  if (k < 1) throw std::invalid_argument("tuple length must be >= 1");
  const std::size_t n = g.num_vertices();
  CheckBudget(WlkMemoryEstimate(n, k), memory_budget,
              std::to_string(k) + "-WL on n=" + std::to_string(n));
  const std::size_t count = SatPow(n, k);
  const VertexPartition vc = InitialVertexPartition(g);
  auto ranked = RankSignatures(count, Executor(1), [&] {
    return [&](std::size_t index, Signature& sig) {
      const std::vector<Vertex> t = TupleAt(index, n, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) sig.push_back(t[i] == t[j]);
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) sig.push_back(g.adjacent(t[i], t[j]));
      }
      for (std::size_t i = 0; i < k; ++i) sig.push_back(vc.color_of[t[i]]);
    };
  });
  return {n, k, std::move(ranked.ids), ranked.num_colors};
}

TupleColoring WlkRound(const TupleColoring& tc, const Executor& ex) {
  const std::size_t n = tc.n;
  const std::size_t k = tc.k;
  std::vector<std::size_t> stride(k);
  for (std::size_t i = k; i-- > 0;) stride[i] = (i + 1 == k) ? 1 : stride[i + 1] * n;
  const Color* c = tc.color_of.data();

  auto ranked = RankSignatures(tc.color_of.size(), ex, [&] {
    struct Worker {
      std::size_t n, k;
      const std::vector<std::size_t>& stride;
      const Color* c;
      std::vector<Color> rows;
      std::vector<std::uint32_t> order;
      void operator()(std::size_t t, Signature& sig) {
        rows.resize(n * k);
        order.resize(n);
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t i = 0; i < k; ++i) {
            const std::size_t digit = (t / stride[i]) % n;
            rows[y * k + i] = c[t - digit * stride[i] + y * stride[i]];
          }
          order[y] = static_cast<std::uint32_t>(y);
        }
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
          return std::lexicographical_compare(rows.begin() + a * k, rows.begin() + (a + 1) * k,
                                              rows.begin() + b * k, rows.begin() + (b + 1) * k);
        });
        sig.reserve(1 + n * k);
        sig.push_back(c[t]);
        for (std::uint32_t y : order) {
          sig.insert(sig.end(), rows.begin() + y * k, rows.begin() + (y + 1) * k);
        }
      }
    };
    return Worker{n, k, stride, c, {}, {}};
  });
  return {n, k, std::move(ranked.ids), ranked.num_colors};
}

RefinementReport<TupleColoring> WlkRefine(const Graph& g, std::size_t k,
                                          const RefineOptions& options) {
  if (k < 2) throw std::invalid_argument("k-WL needs k >= 2");
  const std::size_t n = g.num_vertices();
  TupleColoring initial = InitialTupleColoring(g, k, options.memory_budget_bytes);
  const Executor ex(options.workers);
  const std::size_t count = initial.color_of.size();
  return Iterate(std::move(initial), count, options.max_rounds.value_or(SatPow(n, k)),
                 [&](const TupleColoring& tc) { return WlkRound(tc, ex); });
}

VertexPartition DiagonalPartition(const TupleColoring& tc) {
  std::size_t step = 0;
  for (std::size_t i = 0, s = 1; i < tc.k; ++i, s *= tc.n) step += s;
  std::vector<Color> diag(tc.n);
  for (std::size_t v = 0; v < tc.n; ++v) diag[v] = tc.color_of[v * step];
  return RankColors(diag);
}

}  // namespace pargi
