#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pargi/gadget.h"
#include "pargi/generators.h"
#include "pargi/graph_io.h"
#include "pargi/iso.h"
#include "pargi/permgroup.h"
#include "pargi/refinement.h"
#include "pargi/report_json.h"

namespace pargi::cli {
namespace {

namespace fs = std::filesystem;

// Unreadable files and malformed content, mapped to kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string algo;
  std::size_t k = 2;
  std::optional<std::size_t> max_rounds;
  std::size_t walk_length = 2;
  std::vector<int> workers = {1};
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  std::optional<std::size_t> node_budget;
  std::size_t memory_budget_mib = kDefaultMemoryBudget >> 20;
  bool timing = true;

  // group
  std::string action;
  std::string perm;
  bool residue_only = false;

  // bench
  std::size_t bench_n = 2000;
  double bench_p = 0.01;
  int repeat = 1;

  std::size_t memory_budget() const {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max() >> 20;
    return std::min(memory_budget_mib, kMax) << 20;
  }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph LoadGraph(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseGraphAuto(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + ToString(e.kind()) + " at " + std::to_string(e.position()) +
                     ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Writes to --out when given, otherwise to `out`.
void Emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw InputError("cannot write '" + cfg.out + "'");
  file << text;
}

template <class T>
std::string Join(const std::vector<T>& v) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? " " : "") << v[i];
  return ss.str();
}

Json OrderJson(const BigInt& order) {
  if (order <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(order));
  }
  return Json(order.str());
}

// --- refine ----------------------------------------------------------------

RefinementSummary RunAlgorithm(const Graph& g, const RunConfig& cfg, int workers) {
  RefineOptions options;
  options.max_rounds = cfg.max_rounds;
  options.workers = workers;
  options.memory_budget_bytes = cfg.memory_budget();
  const std::size_t n = g.num_vertices();
  const std::string& a = cfg.algo;
  if (a == "cr") return Summarize(a, n, 1, ColorRefine(g, options));
  if (a == "wl2") return Summarize(a, n, 2, Wl2Refine(g, options));
  if (a == "cr-via-wl2") return Summarize(a, n, 1, SimulateCrByWl2(g, options));
  if (a == "kwl") return Summarize(a, n, cfg.k, WlkRefine(g, cfg.k, options));
  if (a == "kwl-via-gadget") {
    GadgetResult r = SimulateKwlViaCr(g, cfg.k, CrEngine::kParallel, options);
    RefinementSummary s = Summarize(a, n, cfg.k, r.report);
    s.num_colors = r.tuples.num_colors;
    s.partition = r.tuples.color_of;
    return s;
  }
  if (a == "walk") {
    if (cfg.walk_length == 0) throw InputError("--length must be >= 1");
    const Executor ex(workers);
    RefinementSummary s;
    s.algorithm = a;
    s.n = n;
    s.k = 2;
    PairColoring pc = InitialPairColoring(g);
    s.color_counts.push_back(pc.num_colors);
    for (std::size_t r = CeilLog2(cfg.walk_length); r > 0; --r) {
      PairColoring next = Wl2Round(pc, ex);
      s.stabilized = next == pc;
      pc = std::move(next);
      s.color_counts.push_back(pc.num_colors);
      ++s.rounds;
    }
    s.num_colors = pc.num_colors;
    s.partition = std::move(pc.color_of);
    return s;
  }
  throw InputError("unknown algorithm '" + a + "'");
}

std::string RefineText(const RefinementSummary& s) {
  std::ostringstream ss;
  ss << "algorithm: " << s.algorithm << "\n"
     << "n: " << s.n << "\n"
     << "k: " << s.k << "\n"
     << "rounds: " << s.rounds << "\n"
     << "stabilized: " << (s.stabilized ? "true" : "false") << "\n"
     << "color_counts: " << Join(s.color_counts) << "\n"
     << "classes: " << s.num_colors << "\n"
     << "partition: " << Join(s.partition) << "\n";
  return ss.str();
}

int CmdRefine(const RunConfig& cfg, std::ostream& out) {
  const Graph g = LoadGraph(cfg.inputs.at(0));
  const RefinementSummary s = RunAlgorithm(g, cfg, cfg.workers.front());
  Emit(cfg, out, cfg.format == "text" ? RefineText(s) : ToJson(s).dump() + "\n");
  return kOk;
}

// --- iso -------------------------------------------------------------------

int CmdIso(const RunConfig& cfg, std::ostream& out) {
  const Graph g1 = LoadGraph(cfg.inputs.at(0));
  const Graph g2 = LoadGraph(cfg.inputs.at(1));
  IsoOptions options;
  options.refiner = ParseRefinerKind(cfg.algo);
  options.k = cfg.k;
  options.workers = cfg.workers.front();
  options.node_budget = cfg.node_budget;
  options.memory_budget = cfg.memory_budget();
  const IsoResult r = Isomorphic(g1, g2, options);
  if (cfg.format == "text") {
    std::ostringstream ss;
    ss << ToString(r.verdict) << "\n";
    if (r.witness) ss << "witness: " << r.witness->CycleNotation() << "\n";
    ss << "nodes_explored: " << r.nodes_explored << "\n"
       << "max_depth: " << r.max_depth << "\n";
    if (cfg.timing) ss << "wall_time_ms: " << r.wall_time_ms << "\n";
    Emit(cfg, out, ss.str());
  } else {
    Emit(cfg, out, ToJson(r, cfg.timing).dump() + "\n");
  }
  switch (r.verdict) {
    case Verdict::kIsomorphic: return kOk;
    case Verdict::kNotIsomorphic: return kNotIsomorphic;
    case Verdict::kInconclusive: return kInconclusive;
  }
  return kInconclusive;
}

// --- group -----------------------------------------------------------------

Json ParseJsonText(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

int CmdGroup(const RunConfig& cfg, std::ostream& out) {
  const std::string& path = cfg.inputs.at(0);
  GeneratingSet gs(0);
  try {
    gs = GeneratingSetFromJson(ParseJsonText(ReadFile(path), path));
  } catch (const SchemaError& e) {
    throw InputError(path + ": " + e.what());
  }
  const std::size_t n = gs.degree();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["action"] = cfg.action;
  j["degree"] = n;
  std::ostringstream text;

  if (cfg.action == "orbits") {
    const auto orbits = Orbits(gs);
    j["orbits"] = orbits;
    j["transitive"] = orbits.size() <= 1;
    for (const auto& o : orbits) text << "{" << Join(o) << "}\n";
  } else if (cfg.action == "blocks") {
    if (!IsTransitive(gs)) throw InputError("blocks: the group is not transitive");
    const BlockSystem bs = MinimalBlockSystem(gs);
    j["blocks"] = bs.blocks;
    j["primitive"] = bs.primitive;
    for (const auto& b : bs.blocks) text << "{" << Join(b) << "}\n";
    text << (bs.primitive ? "primitive\n" : "imprimitive\n");
  } else if (cfg.action == "order") {
    const BigInt order = GroupOrder(SchreierSims(gs));
    j["order"] = OrderJson(order);
    text << order.str() << "\n";
  } else if (cfg.action == "member") {
    if (cfg.perm.empty()) throw InputError("member: --perm is required");
    Permutation x;
    try {
      x = PermutationFromJson(ParseJsonText(cfg.perm, "--perm"));
    } catch (const SchemaError& e) {
      throw InputError(std::string("--perm: ") + e.what());
    }
    if (x.size() != n) throw InputError("--perm has the wrong degree");
    const SiftResult r = Sift(x, SchreierSims(gs));
    j["permutation"] = ToJson(x);
    j["member"] = r.member;
    j["drop_level"] = r.member ? Json(nullptr) : Json(r.drop_level);
    text << (r.member ? "member" : "not a member") << "\n";
  } else if (cfg.action == "refine-gens") {
    RefineGeneratorsOptions options;
    options.seed = cfg.seed;
    options.workers = cfg.workers.front();
    options.close_chain = !cfg.residue_only;
    const RefinedGenerators r = RefineGeneratingSet(gs, options);
    const std::size_t bound = n * CeilLog2(std::max<std::size_t>(n, 1));
    j["input_size"] = gs.size();
    j["generators"] = ToJson(r.gens);
    j["size"] = r.gens.size();
    j["bound"] = bound;
    j["iterations"] = r.iterations;
    j["order"] = OrderJson(GroupOrder(SchreierSims(r.gens)));
    for (const auto& g : r.gens.gens()) text << g.CycleNotation() << "\n";
    text << "size: " << r.gens.size() << " (bound " << bound << ")\n";
  } else {
    throw InputError("unknown group action '" + cfg.action + "'");
  }
  Emit(cfg, out, cfg.format == "text" ? text.str() : j.dump() + "\n");
  return kOk;
}

// --- bench -----------------------------------------------------------------

struct NamedGraph {
  std::string name;
  Graph graph;
};

std::vector<NamedGraph> LoadCorpus(const RunConfig& cfg) {
  std::vector<NamedGraph> corpus;
  if (cfg.inputs.empty()) {
    const std::uint64_t seed = cfg.seed.value_or(1);
    std::ostringstream name;
    name << "random-n" << cfg.bench_n << "-p" << cfg.bench_p << "-s" << seed;
    corpus.push_back({name.str(), MakeRandom(cfg.bench_n, cfg.bench_p, seed)});
    return corpus;
  }
  std::vector<fs::path> files;
  for (const auto& input : cfg.inputs) {
    if (fs::is_directory(input)) {
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
    } else if (fs::exists(input)) {
      files.push_back(input);
    } else {
      throw InputError("cannot read '" + input + "'");
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const std::string ext = f.extension().string();
    if (ext == ".g6") {
      // One graph per line.
      std::istringstream lines(ReadFile(f.string()));
      std::string line;
      for (std::size_t i = 1; std::getline(lines, line); ++i) {
        if (line.empty()) continue;
        try {
          corpus.push_back({f.filename().string() + ":" + std::to_string(i), ParseGraph6(line)});
        } catch (const ParseError& e) {
          throw InputError(f.string() + ":" + std::to_string(i) + ": " + e.what());
        }
      }
    } else if (ext == ".txt" || ext == ".el") {
      corpus.push_back({f.filename().string(), LoadGraph(f.string())});
    }
  }
  return corpus;
}

int CmdBench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<NamedGraph> corpus = LoadCorpus(cfg);
  std::ostringstream csv;
  csv << "graph,algorithm,workers,rounds,wall_time_ms,speedup_vs_1_worker\n";
  csv << std::fixed << std::setprecision(3);
  for (const auto& [name, g] : corpus) {
    std::vector<double> times;
    std::vector<RefinementSummary> runs;
    for (int w : cfg.workers) {
      double best = std::numeric_limits<double>::infinity();
      RefinementSummary s;
      for (int rep = 0; rep < cfg.repeat; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        s = RunAlgorithm(g, cfg, w);
        const std::chrono::duration<double, std::milli> took =
            std::chrono::steady_clock::now() - start;
        best = std::min(best, took.count());
      }
      times.push_back(best);
      runs.push_back(std::move(s));
    }
    for (std::size_t i = 1; i < runs.size(); ++i) {
      if (ToJson(runs[i]) != ToJson(runs[0])) {
        err << "determinism check failed on " << name << ": workers=" << cfg.workers[i]
            << " differs from workers=" << cfg.workers[0] << "\n";
        return kDeterminismError;
      }
    }
    const auto one = std::find(cfg.workers.begin(), cfg.workers.end(), 1);
    const double baseline = times[one != cfg.workers.end() ? one - cfg.workers.begin() : 0];
    for (std::size_t i = 0; i < runs.size(); ++i) {
      csv << name << "," << cfg.algo << "," << cfg.workers[i] << "," << runs[i].rounds << ","
          << times[i] << "," << (times[i] > 0 ? baseline / times[i] : 1.0) << "\n";
    }
  }
  Emit(cfg, out, csv.str());
  return kOk;
}

// --- gadget ----------------------------------------------------------------

const char* LayerTag(GadgetLayer layer) {
  switch (layer) {
    case GadgetLayer::kBase: return "base";
    case GadgetLayer::kOutU: return "u";
    case GadgetLayer::kOutV: return "v";
  }
  return "?";
}

int CmdGadget(const RunConfig& cfg, std::ostream& out) {
  const Graph g = LoadGraph(cfg.inputs.at(0));
  const GadgetGraph gg = BuildGadget(g, cfg.k, cfg.workers.front(), cfg.memory_budget());
  Json map;
  map["schema_version"] = kSchemaVersion;
  map["n"] = gg.n;
  map["k"] = gg.k;
  map["base_colors"] = gg.base_colors;
  map["num_base"] = gg.num_base();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < gg.layer_of.size(); ++v) {
    const GadgetVertex& gv = gg.layer_of[v];
    Json e;
    e["layer"] = LayerTag(gv.layer);
    if (gv.layer == GadgetLayer::kBase) {
      e["base_index"] = v;
      e["tuple"] = TupleAt(v, gg.n, gg.k);
    } else {
      e["base_index"] = gv.source;
      e["i"] = gv.i;
      if (gv.layer == GadgetLayer::kOutV) e["j"] = gv.j;
    }
    vertices.push_back(std::move(e));
  }
  map["vertices"] = std::move(vertices);

  const std::string map_path = cfg.out + ".map.json";
  {
    std::ofstream edges(cfg.out, std::ios::binary);
    std::ofstream sidecar(map_path, std::ios::binary);
    if (!edges || !sidecar) throw InputError("cannot write '" + cfg.out + "'");
    edges << ToEdgeList(gg.graph);
    sidecar << map.dump() << "\n";
  }
  Json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["vertices"] = gg.graph.num_vertices();
  summary["edges"] = gg.graph.num_edges();
  summary["edge_list"] = cfg.out;
  summary["map"] = map_path;
  out << summary.dump() << "\n";
  return kOk;
}

// --- option wiring -----------------------------------------------------------

void AddCommon(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--workers", cfg.workers, "Worker threads (bench: comma-separated list)")
      ->envname("PARGI_WORKERS")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", cfg.out, "Output path (default: stdout)")->envname("PARGI_OUT");
  sub->add_option("--format", cfg.format, "Output format")
      ->envname("PARGI_FORMAT")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--memory-budget", cfg.memory_budget_mib, "Memory budget in MiB")
      ->envname("PARGI_MEMORY_BUDGET");
  sub->add_option("--seed", cfg.seed, "Random seed")->envname("PARGI_SEED");
}

void AddRefinementOptions(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--algo", cfg.algo, "Refinement algorithm")
      ->envname("PARGI_ALGO")
      ->check(CLI::IsMember({"cr", "wl2", "walk", "kwl", "cr-via-wl2", "kwl-via-gadget"}));
  sub->add_option("--k", cfg.k, "Tuple arity for kwl and kwl-via-gadget")
      ->envname("PARGI_K")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-rounds", cfg.max_rounds, "Round cap")->envname("PARGI_MAX_ROUNDS");
  sub->add_option("--length", cfg.walk_length, "Walk length for --algo walk")
      ->envname("PARGI_LENGTH");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Parallel graph refinement, isomorphism and permutation group tools", "pargi"};
  app.require_subcommand(1);

  auto* refine = app.add_subcommand("refine", "Refine one graph and print the report");
  cfg.algo = "cr";
  AddRefinementOptions(refine, cfg);
  AddCommon(refine, cfg);
  refine->add_option("graph", cfg.inputs, "graph6 or edge-list file")->required()->expected(1);

  auto* iso = app.add_subcommand("iso", "Decide whether two graphs are isomorphic");
  iso->add_option("--algo", cfg.algo, "Refiner used at every search node")
      ->envname("PARGI_ALGO")
      ->check(CLI::IsMember({"cr", "wl2-log-sim", "kwl", "gadget-kwl"}));
  iso->add_option("--k", cfg.k, "Tuple arity for kwl and gadget-kwl")
      ->envname("PARGI_K")
      ->check(CLI::PositiveNumber);
  iso->add_option("--node-budget", cfg.node_budget, "Search node cap")
      ->envname("PARGI_NODE_BUDGET");
  iso->add_flag("--timing,!--no-timing", cfg.timing, "Include wall_time_ms (--no-timing drops it)");
  AddCommon(iso, cfg);
  iso->add_option("graphs", cfg.inputs, "Two graph files")->required()->expected(2);

  auto* group = app.add_subcommand("group", "Permutation group queries");
  group->add_option("action", cfg.action, "orbits | blocks | order | member | refine-gens")
      ->required()
      ->check(CLI::IsMember({"orbits", "blocks", "order", "member", "refine-gens"}));
  group->add_option("generators", cfg.inputs, "JSON generator file")->required()->expected(1);
  group->add_option("--perm", cfg.perm, "Permutation for `member`, as a JSON image array");
  group->add_flag("--residue-only", cfg.residue_only,
                  "refine-gens: record residues without Schreier closure");
  AddCommon(group, cfg);

  auto* bench = app.add_subcommand("bench", "Time refinement across worker counts (CSV)");
  AddRefinementOptions(bench, cfg);
  AddCommon(bench, cfg);
  bench->add_option("corpus", cfg.inputs,
                    "Corpus directories or files (default: one built-in random graph)");
  bench->add_option("--n", cfg.bench_n, "Built-in graph: vertex count");
  bench->add_option("--p", cfg.bench_p, "Built-in graph: edge probability");
  bench->add_option("--repeat", cfg.repeat, "Timed repetitions, best is kept")
      ->check(CLI::PositiveNumber);

  auto* gadget = app.add_subcommand("gadget", "Write the k-tuple gadget graph and its vertex map");
  gadget->add_option("--k", cfg.k, "Tuple arity")->envname("PARGI_K")->check(CLI::PositiveNumber);
  AddCommon(gadget, cfg);
  gadget->get_option("--out")->required();
  gadget->add_option("graph", cfg.inputs, "graph6 or edge-list file")->required()->expected(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*refine) return CmdRefine(cfg, out);
    if (*iso) return CmdIso(cfg, out);
    if (*group) return CmdGroup(cfg, out);
    if (*bench) return CmdBench(cfg, out, err);
    if (*gadget) return CmdGadget(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace pargi::cli
