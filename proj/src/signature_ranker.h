#ifndef PARGI_SRC_SIGNATURE_RANKER_H_
#define PARGI_SRC_SIGNATURE_RANKER_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "pargi/graph.h"
#include "pargi/parallel.h"

namespace pargi::internal {

using Signature = std::vector<std::uint32_t>;

struct RankedSignatures {
  std::vector<Color> ids;
  std::size_t num_colors = 0;
};

// Assigns every item the rank of its signature among all distinct
// signatures, in lexicographic order. Signatures are compared exactly; no
// fingerprinting.
//
// `make_worker()` is called once per chunk and must return a callable
// `worker(i, Signature& out)` that appends item i's signature to an empty
// `out`. Each chunk interns its signatures into a local ordered table in
// parallel; the tables are merged after the barrier and the final ids are
// written back in parallel. Output is independent of the worker count.
template <class MakeWorker>
RankedSignatures RankSignatures(std::size_t count, const Executor& ex,
                                MakeWorker&& make_worker) {
  using Table = std::map<Signature, std::uint32_t>;
  const std::size_t chunks = ex.NumChunks(count);
  std::vector<Table> tables(chunks);
  std::vector<std::uint32_t> local_id(count);

  ex.ForChunks(count, [&](std::size_t c, std::size_t begin, std::size_t end) {
    auto worker = make_worker();
    Table& table = tables[c];
    Signature sig;
    for (std::size_t i = begin; i < end; ++i) {
      sig.clear();
      worker(i, sig);
      auto it = table.try_emplace(sig, static_cast<std::uint32_t>(table.size())).first;
      local_id[i] = it->second;
    }
  });

  std::vector<const Signature*> all;
  for (const Table& t : tables) {
    for (const auto& entry : t) all.push_back(&entry.first);
  }
  std::sort(all.begin(), all.end(),
            [](const Signature* a, const Signature* b) { return *a < *b; });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const Signature* a, const Signature* b) { return *a == *b; }),
            all.end());

  // remap[c][local id] = global rank
  std::vector<std::vector<Color>> remap(chunks);
  ex.ForChunks(chunks, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      remap[c].resize(tables[c].size());
      for (const auto& [sig, id] : tables[c]) {
        auto pos = std::lower_bound(
            all.begin(), all.end(), &sig,
            [](const Signature* a, const Signature* b) { return *a < *b; });
        remap[c][id] = static_cast<Color>(pos - all.begin());
      }
    }
  });

  RankedSignatures out;
  out.num_colors = all.size();
  out.ids.resize(count);
  ex.ForChunks(count, [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out.ids[i] = remap[c][local_id[i]];
  });
  return out;
}

}  // namespace pargi::internal

#endif  // PARGI_SRC_SIGNATURE_RANKER_H_
