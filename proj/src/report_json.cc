#include "pargi/report_json.h"

#include <string>
#include <utility>

namespace pargi {

Json ToJson(const RefinementSummary& s) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algorithm"] = s.algorithm;
  j["n"] = s.n;
  j["k"] = s.k;
  j["rounds"] = s.rounds;
  j["stabilized"] = s.stabilized;
  j["color_counts"] = s.color_counts;
  j["num_colors"] = s.num_colors;
  j["partition"] = s.partition;
  return j;
}

RefinementSummary RefinementSummaryFromJson(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw SchemaError("unsupported schema_version");
    }
    RefinementSummary s;
    s.algorithm = j.at("algorithm").get<std::string>();
    s.n = j.at("n").get<std::size_t>();
    s.k = j.at("k").get<std::size_t>();
    s.rounds = j.at("rounds").get<std::size_t>();
    s.stabilized = j.at("stabilized").get<bool>();
    s.color_counts = j.at("color_counts").get<std::vector<std::size_t>>();
    s.num_colors = j.at("num_colors").get<std::size_t>();
    s.partition = j.at("partition").get<std::vector<Color>>();
    return s;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("refinement report: ") + e.what());
  }
}

Json ToJson(const IsoResult& r, bool with_timing) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["verdict"] = ToString(r.verdict);
  j["witness"] = r.witness ? ToJson(*r.witness) : Json(nullptr);
  j["nodes_explored"] = r.nodes_explored;
  j["max_depth"] = r.max_depth;
  if (with_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json ToJson(const Permutation& p) { return Json(p.images()); }

Json ToJson(const GeneratingSet& gs) {
  Json gens = Json::array();
  for (const auto& g : gs.gens()) gens.push_back(ToJson(g));
  return gens;
}

Permutation PermutationFromJson(const Json& j) {
  if (!j.is_array()) throw SchemaError("a permutation must be an array of images");
  std::vector<Point> images;
  images.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw SchemaError("permutation images must be non-negative integers");
    images.push_back(v.get<Point>());
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

GeneratingSet GeneratingSetFromJson(const Json& j) {
  const Json* list = &j;
  std::size_t degree = 0;
  bool degree_known = false;
  if (j.is_object()) {
    if (!j.contains("generators")) throw SchemaError("missing \"generators\"");
    list = &j["generators"];
    if (j.contains("degree")) {
      if (!j["degree"].is_number_unsigned()) throw SchemaError("\"degree\" must be an integer");
      degree = j["degree"].get<std::size_t>();
      degree_known = true;
    }
  }
  if (!list->is_array()) throw SchemaError("generators must be an array");
  std::vector<Permutation> gens;
  for (const auto& g : *list) gens.push_back(PermutationFromJson(g));
  if (!degree_known) {
    if (gens.empty()) throw SchemaError("an empty generator list needs an explicit degree");
    degree = gens.front().size();
  }
  try {
    return GeneratingSet(degree, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace pargi
