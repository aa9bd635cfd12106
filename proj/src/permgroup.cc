#include "pargi/permgroup.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "pargi/generators.h"
#include "pargi/parallel.h"

namespace pargi {

GeneratingSet::GeneratingSet(std::size_t n, std::vector<Permutation> gens) : n_(n) {
  for (auto& g : gens) {
    if (g.size() != n) {
      throw std::invalid_argument("generator of degree " + std::to_string(g.size()) +
                                  " in a generating set of degree " + std::to_string(n));
    }
    if (!g.IsIdentity()) gens_.push_back(std::move(g));
  }
}

std::vector<std::vector<Point>> Orbits(const GeneratingSet& gs) {
  const std::size_t n = gs.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit = {start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : gs.gens()) {
        const Point q = g[orbit[head]];
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool IsTransitive(const GeneratingSet& gs) { return Orbits(gs).size() <= 1; }

namespace {

std::size_t Find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Component of 0 in the graph whose edges are the orbit of {0, b}.
std::vector<Point> SmallestBlockContaining(const GeneratingSet& gs, Point b) {
  const std::size_t n = gs.degree();
  std::vector<bool> seen(n * n, false);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::deque<std::pair<Point, Point>> queue = {{0, b}};
  seen[b] = true;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    parent[Find(parent, x)] = Find(parent, y);
    for (const auto& g : gs.gens()) {
      Point gx = g[x], gy = g[y];
      if (gx > gy) std::swap(gx, gy);
      if (!seen[gx * n + gy]) {
        seen[gx * n + gy] = true;
        queue.emplace_back(gx, gy);
      }
    }
  }
  std::vector<Point> block;
  const std::size_t root = Find(parent, 0);
  for (Point p = 0; p < n; ++p) {
    if (Find(parent, p) == root) block.push_back(p);
  }
  return block;
}

}  // namespace

BlockSystem MinimalBlockSystem(const GeneratingSet& gs) {
  if (!IsTransitive(gs)) {
    throw std::invalid_argument("block systems need a transitive group");
  }
  const std::size_t n = gs.degree();
  std::vector<Point> best;
  for (Point b = 1; b < n; ++b) {
    std::vector<Point> block = SmallestBlockContaining(gs, b);
    if (block.size() < n && block.size() > best.size()) best = std::move(block);
  }
  BlockSystem out;
  if (best.empty()) {
    out.primitive = true;
    for (Point p = 0; p < n; ++p) out.blocks.push_back({p});
    return out;
  }
  std::set<std::vector<Point>> system = {best};
  std::deque<std::vector<Point>> queue = {best};
  while (!queue.empty()) {
    const std::vector<Point> block = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gs.gens()) {
      std::vector<Point> image;
      image.reserve(block.size());
      for (Point p : block) image.push_back(g[p]);
      std::sort(image.begin(), image.end());
      if (system.insert(image).second) queue.push_back(std::move(image));
    }
  }
  out.blocks.assign(system.begin(), system.end());
  return out;
}

// --- Stabilizer chain ----------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t n) : n_(n), levels_(n >= 2 ? n - 1 : 0) {
  for (std::size_t i = 0; i < levels_.size(); ++i) RebuildTransversal(i);
}

void StabilizerChain::RebuildTransversal(std::size_t level) {
  Level& l = levels_[level];
  l.transversal.assign(n_, std::nullopt);
  l.transversal[level] = Permutation::Identity(n_);
  std::vector<Point> queue = {static_cast<Point>(level)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point p = queue[head];
    for (const auto& s : l.strong) {
      const Point q = s[p];
      if (!l.transversal[q]) {
        l.transversal[q] = Compose(*l.transversal[p], s);
        queue.push_back(q);
      }
    }
  }
}

std::vector<Permutation> StabilizerChain::Representatives(std::size_t level) const {
  std::vector<Permutation> reps;
  const Level& l = levels_.at(level);
  for (Point p = 0; p < n_; ++p) {
    if (p != level && l.transversal[p]) reps.push_back(*l.transversal[p]);
  }
  return reps;
}

std::size_t StabilizerChain::NumRepresentatives(std::size_t level) const {
  const Level& l = levels_.at(level);
  std::size_t count = 0;
  for (Point p = 0; p < n_; ++p) count += (p != level && l.transversal[p]) ? 1 : 0;
  return count;
}

const Permutation* StabilizerChain::RepresentativeFor(std::size_t level, Point image) const {
  const auto& slot = levels_.at(level).transversal.at(image);
  return slot ? &*slot : nullptr;
}

void StabilizerChain::InsertRepresentative(std::size_t level, Permutation rep) {
  if (rep.size() != n_ || level >= levels_.size()) {
    throw std::invalid_argument("representative does not fit the chain");
  }
  for (Point p = 0; p < level; ++p) {
    if (rep[p] != p) throw std::invalid_argument("representative moves a fixed base point");
  }
  const Point image = rep[level];
  if (levels_[level].transversal[image]) {
    throw std::invalid_argument("level " + std::to_string(level) +
                                " already has a representative for image " +
                                std::to_string(image));
  }
  levels_[level].transversal[image] = std::move(rep);
}

void StabilizerChain::AddStrongGenerator(std::size_t level, const Permutation& g) {
  if (g.size() != n_ || level >= levels_.size()) {
    throw std::invalid_argument("strong generator does not fit the chain");
  }
  for (Point p = 0; p < level; ++p) {
    if (g[p] != p) throw std::invalid_argument("strong generator moves a fixed base point");
  }
  for (std::size_t l = 0; l <= level; ++l) {
    levels_[l].strong.push_back(g);
    RebuildTransversal(l);
  }
}

void StabilizerChain::Close() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
      const Level& level = levels_[i];
      for (Point p = 0; p < n_ && !changed; ++p) {
        if (!level.transversal[p]) continue;
        for (std::size_t s = 0; s < level.strong.size(); ++s) {
          const Permutation& gen = level.strong[s];
          const Permutation& up = *level.transversal[p];
          const Permutation& uq = *level.transversal[gen[p]];
          const Permutation schreier = Compose(Compose(up, gen), Inverse(uq));
          if (schreier.IsIdentity()) continue;
          SiftResult r = Sift(schreier, *this, i + 1);
          if (r.member) continue;
          const auto drop = static_cast<std::size_t>(r.drop_level);
          for (std::size_t l = i + 1; l <= drop; ++l) {
            levels_[l].strong.push_back(r.residue);
            RebuildTransversal(l);
          }
          changed = true;
          break;
        }
      }
    }
  }
}

bool StabilizerChain::CheckInvariants() const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    if (l.transversal.size() != n_) return false;
    for (Point image = 0; image < n_; ++image) {
      if (!l.transversal[image]) continue;
      const Permutation& rep = *l.transversal[image];
      if (rep.size() != n_ || rep[i] != image) return false;
      for (Point p = 0; p < i; ++p) {
        if (rep[p] != p) return false;
      }
    }
  }
  return true;
}

SiftResult Sift(const Permutation& x, const StabilizerChain& chain, std::size_t start_level) {
  if (x.size() != chain.degree()) {
    throw std::invalid_argument("sifting a permutation of the wrong degree");
  }
  Permutation residue = x;
  for (std::size_t i = start_level; i < chain.num_levels(); ++i) {
    const Point image = residue[i];
    if (image == i) continue;
    const Permutation* rep = chain.RepresentativeFor(i, image);
    if (rep == nullptr) return {false, static_cast<int>(i), std::move(residue)};
    residue = Compose(residue, Inverse(*rep));
  }
  return {true, -1, Permutation::Identity(x.size())};
}

StabilizerChain SchreierSims(const GeneratingSet& gs) {
  StabilizerChain chain(gs.degree());
  for (const auto& g : gs.gens()) {
    SiftResult r = Sift(g, chain);
    if (!r.member) chain.AddStrongGenerator(static_cast<std::size_t>(r.drop_level), r.residue);
  }
  chain.Close();
  return chain;
}

BigInt GroupOrder(const StabilizerChain& chain) {
  BigInt order = 1;
  for (std::size_t i = 0; i < chain.num_levels(); ++i) {
    order *= static_cast<unsigned>(chain.NumRepresentatives(i) + 1);
  }
  return order;
}

bool Contains(const StabilizerChain& chain, const Permutation& x) {
  return Sift(x, chain).member;
}

RefinedGenerators RefineGeneratingSet(const GeneratingSet& gs,
                                      const RefineGeneratorsOptions& options) {
  const std::size_t n = gs.degree();
  const auto& elements = gs.gens();
  StabilizerChain chain(n);
  std::vector<Permutation> refined;
  std::optional<SplitMix64> rng;
  if (options.seed) rng.emplace(*options.seed);
  const Executor ex(options.workers);
  std::vector<SiftResult> results(elements.size());
  std::size_t iterations = 0;

  while (true) {
    // The chain is read-only during the parallel sift.
    const StabilizerChain& snapshot = chain;
    ex.ForEach(elements.size(), [&](std::size_t i) { results[i] = Sift(elements[i], snapshot); });

    std::vector<std::size_t> failing;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].member) failing.push_back(i);
    }
    if (failing.empty()) break;
    const std::size_t pick = rng ? failing[rng->Below(failing.size())] : failing.front();
    SiftResult& chosen = results[pick];
    const auto level = static_cast<std::size_t>(chosen.drop_level);
    refined.push_back(chosen.residue);
    if (options.close_chain) {
      chain.AddStrongGenerator(level, chosen.residue);
      chain.Close();
    } else {
      chain.InsertRepresentative(level, std::move(chosen.residue));
    }
    ++iterations;
  }
  return {GeneratingSet(n, std::move(refined)), std::move(chain), iterations};
}

}  // namespace pargi
