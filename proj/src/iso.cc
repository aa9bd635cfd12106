#include "pargi/iso.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pargi/gadget.h"

namespace pargi {

const char* ToString(RefinerKind kind) {
  switch (kind) {
    case RefinerKind::kColorRefinement: return "cr";
    case RefinerKind::kWl2LogSim: return "wl2-log-sim";
    case RefinerKind::kKwl: return "kwl";
    case RefinerKind::kGadgetKwl: return "gadget-kwl";
  }
  return "unknown";
}

RefinerKind ParseRefinerKind(const std::string& name) {
  if (name == "cr") return RefinerKind::kColorRefinement;
  if (name == "wl2-log-sim") return RefinerKind::kWl2LogSim;
  if (name == "kwl") return RefinerKind::kKwl;
  if (name == "gadget-kwl") return RefinerKind::kGadgetKwl;
  throw std::invalid_argument("unknown refiner '" + name +
                              "' (expected cr, wl2-log-sim, kwl or gadget-kwl)");
}

const char* ToString(Verdict v) {
  switch (v) {
    case Verdict::kIsomorphic: return "isomorphic";
    case Verdict::kNotIsomorphic: return "not isomorphic";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

VertexPartition RefineVertices(const Graph& g, RefinerKind kind, std::size_t k,
                               std::size_t memory_budget) {
  RefineOptions options;
  options.memory_budget_bytes = memory_budget;
  switch (kind) {
    case RefinerKind::kColorRefinement:
      return ColorRefine(g, options).partition;
    case RefinerKind::kWl2LogSim:
      return SimulateCrByWl2(g, options).partition;
    case RefinerKind::kKwl:
      return DiagonalPartition(WlkRefine(g, k, options).partition);
    case RefinerKind::kGadgetKwl:
      return DiagonalPartition(
          SimulateKwlViaCr(g, k, CrEngine::kSequential, options).tuples);
  }
  throw std::logic_error("unhandled refiner");
}

VertexPartition Individualize(const VertexPartition& vp, Vertex v) {
  if (v >= vp.color_of.size()) throw std::invalid_argument("vertex out of range");
  std::vector<Color> keyed(vp.color_of.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) keyed[i] = vp.color_of[i] * 2 + (i == v ? 1 : 0);
  return RankColors(keyed);
}

bool VerifyIsomorphism(const Graph& g1, const Graph& g2, const Permutation& map) {
  const std::size_t n = g1.num_vertices();
  if (g2.num_vertices() != n || map.size() != n || g1.num_edges() != g2.num_edges()) {
    return false;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g1.color(v) != g2.color(map[v])) return false;
  }
  for (auto [u, v] : g1.edges()) {
    if (!g2.adjacent(map[u], map[v])) return false;
  }
  return true;
}

namespace {

// Cooperative cancellation: a node stops once a sibling to its left (at any
// ancestor level) has produced a witness.
struct StopToken {
  const StopToken* parent = nullptr;
  const std::atomic<std::size_t>* best = nullptr;
  std::size_t index = 0;

  bool Stopped() const {
    for (const StopToken* t = this; t != nullptr; t = t->parent) {
      if (t->best != nullptr && t->best->load(std::memory_order_relaxed) < t->index) return true;
    }
    return false;
  }
};

// Outcome of one subtree. `nodes` and `depth` describe the part of the
// subtree that the sequential search visits, so they do not depend on
// scheduling.
struct Outcome {
  std::optional<Permutation> witness;
  std::size_t nodes = 0;
  std::size_t depth = 0;
};

class Search {
 public:
  Search(const Graph& g1, const Graph& g2, const IsoOptions& options)
      : g1_(g1), g2_(g2), n_(g1.num_vertices()), options_(options),
        shape_(DisjointUnion(g1, g2)), spare_workers_(options.workers - 1) {}

  Outcome Run() { return Explore(shape_.colors(), 0, StopToken{}); }

  bool budget_exceeded() const { return budget_exceeded_.load(); }

 private:
  Outcome Explore(std::vector<Color> colors, std::size_t depth, const StopToken& token) {
    Outcome out;
    out.depth = depth;
    if (budget_exceeded_.load(std::memory_order_relaxed) || token.Stopped()) return out;
    const std::size_t visited = visited_.fetch_add(1) + 1;
    if (options_.node_budget && visited > *options_.node_budget) {
      budget_exceeded_.store(true);
      return out;
    }
    out.nodes = 1;

    const VertexPartition p = RefineVertices(shape_.WithColors(std::move(colors)),
                                             options_.refiner, options_.k,
                                             options_.memory_budget);
    std::vector<std::size_t> left(p.num_colors, 0), right(p.num_colors, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      ++left[p.color_of[v]];
      ++right[p.color_of[n_ + v]];
    }
    if (left != right) return out;

    // Target cell: first smallest non-singleton class.
    std::size_t target = p.num_colors;
    for (std::size_t c = 0; c < p.num_colors; ++c) {
      if (left[c] > 1 && (target == p.num_colors || left[c] < left[target])) target = c;
    }
    if (target == p.num_colors) {
      out.witness = Leaf(p);
      return out;
    }

    Vertex pivot = 0;
    while (p.color_of[pivot] != target) ++pivot;
    std::vector<Vertex> candidates;
    for (Vertex w = 0; w < n_; ++w) {
      if (p.color_of[n_ + w] == target) candidates.push_back(w);
    }
    const auto fresh = static_cast<Color>(p.num_colors);
    auto child_colors = [&](std::size_t i) {
      std::vector<Color> c = p.color_of;
      c[pivot] = fresh;
      c[n_ + candidates[i]] = fresh;
      return c;
    };
    auto absorb = [&out](Outcome& child) {
      out.nodes += child.nodes;
      out.depth = std::max(out.depth, child.depth);
    };

    const int helpers = AcquireWorkers(static_cast<int>(candidates.size()) - 1);
    if (helpers == 0) {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        StopToken child_token{&token, nullptr, 0};
        Outcome child = Explore(child_colors(i), depth + 1, child_token);
        absorb(child);
        if (child.witness) {
          out.witness = std::move(child.witness);
          break;
        }
      }
      return out;
    }

    std::atomic<std::size_t> best{candidates.size()};
    std::atomic<std::size_t> next{0};
    std::vector<Outcome> children(candidates.size());
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < candidates.size();) {
        if (best.load() < i) break;
        StopToken child_token{&token, &best, i};
        children[i] = Explore(child_colors(i), depth + 1, child_token);
        if (children[i].witness) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    {
      std::vector<std::jthread> threads;
      for (int t = 0; t < helpers; ++t) threads.emplace_back(work);
      work();
    }
    spare_workers_.fetch_add(helpers);
    // Branches left of `best` ran to completion; those right of it are
    // discarded, exactly as the sequential search never reaches them.
    const std::size_t b = best.load();
    const std::size_t last = b < candidates.size() ? b : candidates.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) absorb(children[i]);
    if (b < candidates.size()) out.witness = std::move(children[b].witness);
    return out;
  }

  std::optional<Permutation> Leaf(const VertexPartition& p) const {
    std::vector<Vertex> by_color(p.num_colors);
    for (Vertex w = 0; w < n_; ++w) by_color[p.color_of[n_ + w]] = w;
    std::vector<Point> images(n_);
    for (Vertex v = 0; v < n_; ++v) images[v] = by_color[p.color_of[v]];
    Permutation map(std::move(images));
    if (VerifyIsomorphism(g1_, g2_, map)) return map;
    return std::nullopt;
  }

  int AcquireWorkers(int wanted) {
    if (wanted <= 0) return 0;
    int cur = spare_workers_.load();
    while (cur > 0) {
      const int take = std::min(cur, wanted);
      if (spare_workers_.compare_exchange_weak(cur, cur - take)) return take;
    }
    return 0;
  }

  const Graph& g1_;
  const Graph& g2_;
  const std::size_t n_;
  const IsoOptions& options_;
  const Graph shape_;
  std::atomic<int> spare_workers_;
  std::atomic<std::size_t> visited_{0};
  std::atomic<bool> budget_exceeded_{false};
};

double MillisecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

IsoResult Isomorphic(const Graph& g1, const Graph& g2, const IsoOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  IsoResult result;
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) {
    result.verdict = Verdict::kNotIsomorphic;
    result.wall_time_ms = MillisecondsSince(start);
    return result;
  }
  Search search(g1, g2, options);
  Outcome outcome = search.Run();
  result.nodes_explored = outcome.nodes;
  result.max_depth = outcome.depth;
  if (outcome.witness) {
    result.verdict = Verdict::kIsomorphic;
    result.witness = std::move(outcome.witness);
  } else {
    result.verdict = search.budget_exceeded() ? Verdict::kInconclusive : Verdict::kNotIsomorphic;
  }
  result.wall_time_ms = MillisecondsSince(start);
  return result;
}

IsoResult BruteForceIsomorphic(const Graph& g1, const Graph& g2, std::size_t cap) {
  const std::size_t n = g1.num_vertices();
  if (n > cap || g2.num_vertices() > cap) {
    throw std::invalid_argument("brute force is capped at n=" + std::to_string(cap));
  }
  const auto start = std::chrono::steady_clock::now();
  IsoResult result;
  if (g2.num_vertices() != n) {
    result.wall_time_ms = MillisecondsSince(start);
    return result;
  }
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    ++result.nodes_explored;
    Permutation candidate(images);
    if (VerifyIsomorphism(g1, g2, candidate)) {
      result.verdict = Verdict::kIsomorphic;
      result.witness = std::move(candidate);
      break;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  result.wall_time_ms = MillisecondsSince(start);
  return result;
}

}  // namespace pargi
