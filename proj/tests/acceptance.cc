// Acceptance suite: one PASS/FAIL line per criterion, a JSON summary in the
// report directory, and a non-zero exit code if any hard criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.h"
#include "pargi/gadget.h"
#include "pargi/generators.h"
#include "pargi/graph_io.h"
#include "pargi/iso.h"
#include "pargi/partition.h"
#include "pargi/permgroup.h"
#include "pargi/refinement.h"
#include "pargi/report_json.h"

namespace pargi {
namespace {

namespace fs = std::filesystem;
using testing::NamedGraph;
using testing::Perm;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  bool hard = true;
  std::string detail;
  Json data = Json::object();
};

RefineOptions Workers(int w) {
  RefineOptions o;
  o.workers = w;
  return o;
}

Permutation RandomPerm(std::size_t n, SplitMix64& rng) {
  auto v = RandomPermutation(n, rng);
  return Permutation(std::vector<Point>(v.begin(), v.end()));
}

std::vector<Perm> Images(const std::vector<Permutation>& gens) {
  std::vector<Perm> out;
  for (const auto& g : gens) out.push_back(g.images());
  return out;
}

// Exhaustive connected graphs n <= 7 plus 500 random graphs n <= 32.
const std::vector<NamedGraph>& MainCorpus() {
  static const std::vector<NamedGraph> corpus = testing::Corpus(500, 32, 2024);
  return corpus;
}

// --- 1 -------------------------------------------------------------------

Outcome OracleEquivalence() {
  const auto start = Clock::now();
  const auto& corpus = MainCorpus();
  std::size_t mismatches = 0;
  Json examples = Json::array();
  for (const auto& [name, g] : corpus) {
    const auto expected = testing::NaiveColorRefinement(g).back();
    const auto got = ColorRefine(g, Workers(4)).partition.color_of;
    if (got != expected) {
      ++mismatches;
      if (examples.size() < 5) examples.push_back(name);
    }
  }
  const double secs = Seconds(start);
  Outcome o;
  o.pass = mismatches == 0 && secs < 60;
  o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(mismatches) +
             " mismatches, " + std::to_string(secs).substr(0, 5) + " s (limit 60 s)";
  o.data = {{"graphs", corpus.size()}, {"mismatches", mismatches}, {"seconds", secs},
            {"examples", examples}};
  return o;
}

// --- 2 -------------------------------------------------------------------

Outcome LogRoundSimulation() {
  std::vector<NamedGraph> graphs = MainCorpus();
  for (std::size_t n = 2; n <= 64; ++n) {
    graphs.push_back({"path" + std::to_string(n), MakePath(n)});
    graphs.push_back({"cycle" + std::to_string(n), MakeCycle(n)});
  }
  SplitMix64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 33 + rng.Below(32);
    graphs.push_back({"random-large-" + std::to_string(i), MakeRandom(n, 0.08, rng())});
  }
  std::size_t violations = 0, round_overruns = 0, pairs = 0, finer_pairs = 0, finer_graphs = 0;
  for (const auto& [name, g] : graphs) {
    const std::size_t n = g.num_vertices();
    const auto cr = ColorRefine(g).partition.color_of;
    const auto sim = SimulateCrByWl2(g);
    if (sim.rounds > LogRoundBudget(n)) ++round_overruns;
    const std::size_t finer_before = finer_pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (cr[u] == cr[v]) {
          // 2-WL may split what CR cannot; recorded, not a violation.
          if (sim.partition.color_of[u] != sim.partition.color_of[v]) ++finer_pairs;
          continue;
        }
        ++pairs;
        if (sim.partition.color_of[u] == sim.partition.color_of[v]) ++violations;
      }
    }
    if (finer_pairs > finer_before) ++finer_graphs;
  }
  const Graph p64 = MakePath(64);
  const std::size_t naive_rounds = testing::NaiveColorRefinement(p64).size() - 1;
  const std::size_t splitting_rounds = naive_rounds - 1;
  const std::size_t sim_rounds = SimulateCrByWl2(p64).rounds;
  Outcome o;
  o.pass = violations == 0 && round_overruns == 0 && splitting_rounds >= 31 && sim_rounds <= 7;
  o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(pairs) +
             " CR-distinguished pairs, " + std::to_string(violations) +
             " violations; P_64: CR " + std::to_string(splitting_rounds) +
             " splitting rounds (+1 to confirm), simulation " + std::to_string(sim_rounds) +
             " rounds; strictly finer than CR on " + std::to_string(finer_graphs) + " graphs";
  o.data = {{"graphs", graphs.size()},         {"pairs", pairs},
            {"strictly_finer_graphs", finer_graphs}, {"strictly_finer_pairs", finer_pairs},
            {"violations", violations},        {"round_overruns", round_overruns},
            {"p64_cr_rounds", naive_rounds},   {"p64_cr_splitting_rounds", splitting_rounds},
            {"p64_simulation_rounds", sim_rounds}};
  return o;
}

// --- 3 -------------------------------------------------------------------

Outcome WalkTheorem() {
  std::size_t pairs = 0, violations = 0;
  Json failures = Json::array();
  for (std::size_t n = 8; n <= 32; ++n) {
    const Graph g = MakePath(n);
    const auto history = testing::NaiveColorRefinement(g);
    std::map<std::size_t, PairColoring> walks;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const int h = testing::FirstSplitRound(history, u, v);
        if (h < 1) continue;
        ++pairs;
        const std::size_t len = 2 * static_cast<std::size_t>(h);
        if (!walks.count(len)) walks.emplace(len, WalkRefine(g, len));
        const PairColoring& w = walks.at(len);
        if (w.at(u, u) == w.at(v, v)) {
          ++violations;
          if (failures.size() < 5) failures.push_back({{"n", n}, {"u", u}, {"v", v}, {"h", h}});
        }
      }
    }
  }
  Outcome o;
  o.pass = violations == 0 && pairs > 0;
  o.detail = "P_8..P_32: " + std::to_string(pairs) + " CR-distinguished pairs, " +
             std::to_string(violations) + " violations";
  o.data = {{"pairs", pairs}, {"violations", violations}, {"failures", failures}};
  return o;
}

// --- 4 -------------------------------------------------------------------

Outcome GadgetEquivalence(const fs::path& report_dir) {
  struct Instance {
    std::string name;
    Graph g;
    std::size_t k;
  };
  std::vector<Instance> instances;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto graphs = testing::AllGraphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      instances.push_back({"all" + std::to_string(n) + "-" + std::to_string(i), graphs[i], 2});
    }
  }
  SplitMix64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.Below(4);
    instances.push_back({"sample-" + std::to_string(i), MakeRandom(n, rng.Uniform(), rng()), 3});
  }
  Json counterexamples = Json::array();
  for (const auto& [name, g, k] : instances) {
    const TupleColoring direct = WlkRefine(g, k).partition;
    const TupleColoring via = SimulateKwlViaCr(g, k, CrEngine::kParallel, Workers(2)).tuples;
    if (PartitionsEqual(direct.color_of, via.color_of)) continue;
    const std::size_t n = g.num_vertices();
    Json pairs = Json::array();
    for (std::size_t a = 0; a < direct.color_of.size() && pairs.size() < 10; ++a) {
      for (std::size_t b = a + 1; b < direct.color_of.size() && pairs.size() < 10; ++b) {
        const bool d = direct.color_of[a] != direct.color_of[b];
        const bool v = via.color_of[a] != via.color_of[b];
        if (d != v) {
          pairs.push_back({{"t1", TupleAt(a, n, k)},
                           {"t2", TupleAt(b, n, k)},
                           {"distinguished_by_wlk", d},
                           {"distinguished_by_gadget", v}});
        }
      }
    }
    counterexamples.push_back({{"instance", name},
                               {"graph6", ToGraph6(g)},
                               {"k", k},
                               {"wlk_classes", direct.num_colors},
                               {"gadget_classes", via.num_colors},
                               {"differing_pairs", pairs}});
  }
  Json report = {{"schema_version", kSchemaVersion},
                 {"instances", instances.size()},
                 {"counterexamples", counterexamples}};
  std::ofstream(report_dir / "gadget_counterexamples.json") << report.dump(2) << "\n";
  Outcome o;
  o.pass = counterexamples.empty();
  o.detail = std::to_string(instances.size()) + " instances (n<=5 k=2, 50 samples n<=4 k=3), " +
             std::to_string(counterexamples.size()) +
             " discrepancies; report: gadget_counterexamples.json";
  o.data = {{"instances", instances.size()}, {"discrepancies", counterexamples.size()}};
  return o;
}

// --- 5 -------------------------------------------------------------------

Outcome GeneratingSetRefinement() {
  SplitMix64 rng(55);
  std::size_t failures = 0, max_size = 0, n8 = 0;
  double worst_ratio = 0;
  Json examples = Json::array();
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
    std::vector<Permutation> base;
    for (std::size_t i = 0, m = 1 + rng.Below(4); i < m; ++i) base.push_back(RandomPerm(n, rng));
    // Inflate with random words in the generators.
    std::vector<Permutation> inflated = base;
    while (inflated.size() < 100 + rng.Below(50)) {
      Permutation w = Permutation::Identity(n);
      for (std::size_t len = 1 + rng.Below(8); len > 0; --len) {
        w = Compose(w, base[rng.Below(base.size())]);
      }
      inflated.push_back(w);
    }
    for (std::size_t i = inflated.size(); i > 1; --i) {
      std::swap(inflated[i - 1], inflated[rng.Below(i)]);
    }
    const GeneratingSet gs(n, inflated);
    RefineGeneratorsOptions opts;
    if (t % 2 == 1) opts.seed = rng();
    opts.workers = 4;
    const RefinedGenerators r = RefineGeneratingSet(gs, opts);
    const std::size_t bound = n * CeilLog2(n);
    bool ok = r.gens.size() <= bound;
    if (n <= 7) {
      ok = ok && testing::GroupElements(n, Images(r.gens.gens())) ==
                     testing::GroupElements(n, Images(base));
    } else {
      ++n8;
      const StabilizerChain full = SchreierSims(gs);
      ok = ok && GroupOrder(SchreierSims(r.gens)) == GroupOrder(full);
      for (const auto& g : r.gens.gens()) ok = ok && Contains(full, g);
    }
    max_size = std::max(max_size, r.gens.size());
    worst_ratio = std::max(worst_ratio, static_cast<double>(r.gens.size()) / bound);
    if (!ok) {
      ++failures;
      if (examples.size() < 5) {
        examples.push_back({{"trial", t}, {"n", n}, {"size", r.gens.size()}, {"bound", bound}});
      }
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = "200 groups (" + std::to_string(n8) + " with n=8), " + std::to_string(failures) +
             " failures, largest |A'| " + std::to_string(max_size) + ", worst |A'|/bound " +
             std::to_string(worst_ratio).substr(0, 4);
  o.data = {{"trials", 200}, {"failures", failures}, {"max_size", max_size},
            {"worst_ratio", worst_ratio}, {"examples", examples}};
  return o;
}

// --- 6 -------------------------------------------------------------------

// The system the documented rule must produce, computed from all invariant
// partitions: for each b != 0 the smallest block holding 0 and b, the
// largest proper one (lowest b on ties), and the partition it generates.
std::optional<std::vector<std::vector<Point>>> ExpectedBlocks(std::size_t n,
                                                              const std::vector<Perm>& gens) {
  const auto systems = testing::InvariantPartitions(n, gens);
  std::vector<Point> best;
  for (Point b = 1; b < n; ++b) {
    std::vector<Point> smallest;
    for (const auto& sys : systems) {
      for (const auto& block : sys) {
        const bool has0 = std::binary_search(block.begin(), block.end(), 0u);
        const bool hasb = std::binary_search(block.begin(), block.end(), b);
        if (has0 && hasb && (smallest.empty() || block.size() < smallest.size())) smallest = block;
      }
    }
    if (smallest.size() < n && smallest.size() > best.size()) best = smallest;
  }
  if (best.empty()) return std::nullopt;
  for (auto sys : systems) {
    if (std::find(sys.begin(), sys.end(), best) != sys.end()) {
      std::sort(sys.begin(), sys.end());
      return sys;
    }
  }
  return std::nullopt;
}

Outcome GroupPrimitives() {
  struct Case {
    std::string name;
    std::size_t n;
    std::vector<Permutation> gens;
  };
  auto cyc = [](std::size_t n, std::vector<std::vector<Point>> c) {
    return Permutation::FromCycles(n, c);
  };
  std::vector<Case> cases = {
      {"S_4", 4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}},
      {"A_4", 4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})}},
      {"C_4", 4, {cyc(4, {{0, 1, 2, 3}})}},
      {"C_5", 5, {cyc(5, {{0, 1, 2, 3, 4}})}},
  };
  SplitMix64 rng(66);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.Below(6);
    std::vector<Permutation> gens;
    for (std::size_t i = 0, m = rng.Below(4); i < m; ++i) gens.push_back(RandomPerm(n, rng));
    cases.push_back({"random-" + std::to_string(t), n, gens});
  }
  std::size_t failures = 0, block_checks = 0;
  Json failed = Json::array();
  for (const auto& [name, n, gens] : cases) {
    const GeneratingSet gs(n, gens);
    const auto images = Images(gs.gens());
    const auto elements = testing::GroupElements(n, images);
    bool ok = Orbits(gs) == testing::NaiveOrbits(n, images);
    const StabilizerChain chain = SchreierSims(gs);
    ok = ok && GroupOrder(chain) == elements.size();
    // Sift against every permutation of S_n.
    std::vector<Point> p(n);
    for (Point i = 0; i < n; ++i) p[i] = i;
    do {
      ok = ok && Sift(Permutation(p), chain).member == (elements.count(p) == 1);
    } while (std::next_permutation(p.begin(), p.end()));
    if (IsTransitive(gs) && n >= 1) {
      ++block_checks;
      const BlockSystem bs = MinimalBlockSystem(gs);
      const auto expected = ExpectedBlocks(n, images);
      if (expected) {
        ok = ok && !bs.primitive && bs.blocks == *expected;
      } else {
        ok = ok && bs.primitive && bs.blocks.size() == n;
      }
    }
    if (!ok) {
      ++failures;
      if (failed.size() < 5) failed.push_back(name);
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(cases.size()) + " generating sets (4 named + 100 random), " +
             std::to_string(block_checks) + " block checks, " + std::to_string(failures) +
             " failures";
  o.data = {{"cases", cases.size()}, {"failures", failures}, {"failed", failed}};
  return o;
}

// --- 7 -------------------------------------------------------------------

Outcome SolverCorrectness() {
  std::size_t disagreements = 0, bad_witnesses = 0, pairs = 0, oracle_checked = 0;
  auto check = [&](const Graph& a, const Graph& b, std::optional<bool> truth) {
    ++pairs;
    const IsoResult r = Isomorphic(a, b);
    bool expected;
    if (truth) {
      expected = *truth;
    } else {
      expected = BruteForceIsomorphic(a, b).verdict == Verdict::kIsomorphic;
      ++oracle_checked;
    }
    if (r.verdict == Verdict::kInconclusive || (r.verdict == Verdict::kIsomorphic) != expected) {
      ++disagreements;
    }
    if (r.verdict == Verdict::kIsomorphic && !VerifyIsomorphism(a, b, *r.witness)) ++bad_witnesses;
  };
  SplitMix64 rng(77);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto graphs = testing::ConnectedGraphs(n);
    for (const Graph& a : graphs) {
      for (const Graph& b : graphs) check(a, b, std::nullopt);
      check(a, a.Relabeled(RandomPermutation(n, rng)), std::nullopt);
    }
  }
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng.Below(16);
    const Graph g = MakeRandom(n, 0.1 + 0.5 * rng.Uniform(), rng());
    const Graph h = g.Relabeled(RandomPermutation(n, rng));
    // Isomorphic by construction; the brute-force oracle confirms up to n = 8.
    check(g, h, n <= 8 ? std::nullopt : std::optional<bool>(true));
  }
  Outcome o;
  o.pass = disagreements == 0 && bad_witnesses == 0;
  o.detail = std::to_string(pairs) + " pairs (" + std::to_string(oracle_checked) +
             " brute-force checked), " + std::to_string(disagreements) + " disagreements, " +
             std::to_string(bad_witnesses) + " bad witnesses";
  o.data = {{"pairs", pairs}, {"brute_force_checked", oracle_checked},
            {"disagreements", disagreements}, {"bad_witnesses", bad_witnesses}};
  return o;
}

// --- 8 -------------------------------------------------------------------

std::string Fingerprint(const Graph& g, const Graph& partner, int workers) {
  const std::size_t n = g.num_vertices();
  std::string out;
  out += ToJson(Summarize("cr", n, 1, ColorRefine(g, Workers(workers)))).dump();
  out += ToJson(Summarize("cr-via-wl2", n, 1, SimulateCrByWl2(g, Workers(workers)))).dump();
  out += ToJson(Summarize("wl2", n, 2, Wl2Refine(g, Workers(workers)))).dump();
  if (n <= 7) {
    out += ToJson(Summarize("kwl", n, 3, WlkRefine(g, 3, Workers(workers)))).dump();
    out += ToJson(Summarize("kwl-via-gadget", n, 2,
                            SimulateKwlViaCr(g, 2, CrEngine::kParallel, Workers(workers)).report))
               .dump();
  }
  IsoOptions iso;
  iso.workers = workers;
  SplitMix64 rng(n * 131 + g.num_edges());
  out += ToJson(Isomorphic(g, g.Relabeled(RandomPermutation(n, rng)), iso), false).dump();
  out += ToJson(Isomorphic(g, partner, iso), false).dump();
  return out;
}

Outcome Determinism() {
  const auto& corpus = MainCorpus();
  std::size_t diffs = 0, compared = 0;
  Json examples = Json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i].graph;
    // A partner of the same order, so that the negative search runs too.
    const Graph* partner = &g;
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      if (corpus[j].graph.num_vertices() == g.num_vertices()) {
        partner = &corpus[j].graph;
        break;
      }
    }
    const std::string one = Fingerprint(g, *partner, 1);
    for (int w : {2, 8}) {
      ++compared;
      if (Fingerprint(g, *partner, w) != one) {
        ++diffs;
        if (examples.size() < 5) examples.push_back({{"graph", corpus[i].name}, {"workers", w}});
      }
    }
  }
  Outcome o;
  o.pass = diffs == 0;
  o.detail = std::to_string(corpus.size()) + " graphs x workers {2, 8} vs 1: " +
             std::to_string(diffs) + " diffs in " + std::to_string(compared) + " comparisons";
  o.data = {{"graphs", corpus.size()}, {"comparisons", compared}, {"diffs", diffs},
            {"examples", examples}};
  return o;
}

// --- 9 -------------------------------------------------------------------

Outcome Speedup() {
  const Graph g = MakeRandom(2000, 0.01, 9);
  auto best_of = [&](int workers, VertexPartition& result) {
    double best = 1e300;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = Clock::now();
      result = ColorRefine(g, Workers(workers)).partition;
      best = std::min(best, Seconds(start));
    }
    return best;
  };
  VertexPartition p1, p4;
  const double t1 = best_of(1, p1);
  const double t4 = best_of(4, p4);
  const double speedup = t1 / t4;
  const unsigned cores = std::thread::hardware_concurrency();
  Outcome o;
  o.hard = p1 != p4;  // only the timing part is soft
  o.pass = p1 == p4 && speedup >= 2.0;
  std::ostringstream d;
  d << std::fixed << std::setprecision(2) << "n=2000 p=0.01: 1 worker " << t1 * 1e3
    << " ms, 4 workers " << t4 * 1e3 << " ms, speedup " << speedup << "x (target 2x), "
    << cores << " hardware thread(s), partitions " << (p1 == p4 ? "identical" : "DIFFER");
  o.detail = d.str();
  o.data = {{"t1_ms", t1 * 1e3},
            {"t4_ms", t4 * 1e3},
            {"speedup", speedup},
            {"hardware_threads", cores},
            {"partitions_identical", p1 == p4}};
  return o;
}

}  // namespace
}  // namespace pargi

int main(int argc, char** argv) {
  using namespace pargi;
  fs::path report_dir = "acceptance";
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--report-dir" && i + 1 < argc) {
      report_dir = argv[++i];
    } else if (arg == "--only" && i + 1 < argc) {
      only.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--report-dir DIR] [--only N]...\n";
      return 2;
    }
  }
  fs::create_directories(report_dir);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence (CR)", OracleEquivalence},
      {"log-round simulation", LogRoundSimulation},
      {"2h-walk theorem", WalkTheorem},
      {"gadget equivalence", [&] { return GadgetEquivalence(report_dir); }},
      {"generating-set refinement", GeneratingSetRefinement},
      {"group primitives", GroupPrimitives},
      {"IR solver correctness", SolverCorrectness},
      {"determinism under parallelism", Determinism},
      {"parallel speedup (soft)", Speedup},
  };

  Json summary = {{"schema_version", kSchemaVersion}, {"criteria", Json::array()}};
  bool hard_failure = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = Seconds(start);
    const char* verdict = o.pass ? "PASS" : (o.hard ? "FAIL" : "FAIL (soft)");
    std::cout << "criterion " << id << " " << verdict << "  " << criteria[i].first << ": "
              << o.detail << std::endl;
    if (!o.pass && o.hard) hard_failure = true;
    summary["criteria"].push_back({{"id", id},
                                   {"name", criteria[i].first},
                                   {"pass", o.pass},
                                   {"hard", o.hard},
                                   {"detail", o.detail},
                                   {"seconds", secs},
                                   {"data", o.data}});
  }
  std::ofstream(report_dir / "acceptance.json") << summary.dump(2) << "\n";
  return hard_failure ? 1 : 0;
}
