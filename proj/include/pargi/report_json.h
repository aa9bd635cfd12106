#ifndef PARGI_REPORT_JSON_H_
#define PARGI_REPORT_JSON_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pargi/iso.h"
#include "pargi/partition.h"
#include "pargi/permgroup.h"
#include "pargi/permutation.h"
#include "pargi/refinement.h"

namespace pargi {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Everything a refinement report prints. `partition` is the flat color array
// of whatever was refined: vertices, ordered pairs or ordered k-tuples.
struct RefinementSummary {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t rounds = 0;
  bool stabilized = false;
  std::vector<std::size_t> color_counts;
  std::size_t num_colors = 0;
  std::vector<Color> partition;
};

template <class P>
RefinementSummary Summarize(std::string algorithm, std::size_t n, std::size_t k,
                            const RefinementReport<P>& r) {
  return {std::move(algorithm), n,       k, r.rounds, r.stabilized, r.color_counts,
          r.partition.num_colors, r.partition.color_of};
}

Json ToJson(const RefinementSummary& s);
RefinementSummary RefinementSummaryFromJson(const Json& j);

// wall_time_ms is emitted only when `with_timing` is set, so that timing-free
// output can be compared byte for byte.
Json ToJson(const IsoResult& r, bool with_timing = true);

Json ToJson(const Permutation& p);
Json ToJson(const GeneratingSet& gs);

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A permutation is a JSON array of images. A generating set is either such
// an array of permutations or {"degree": n, "generators": [...]}; the
// object form is needed for an empty set. Throws SchemaError.
Permutation PermutationFromJson(const Json& j);
GeneratingSet GeneratingSetFromJson(const Json& j);

}  // namespace pargi

#endif  // PARGI_REPORT_JSON_H_
