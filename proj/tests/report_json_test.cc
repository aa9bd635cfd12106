#include <gtest/gtest.h>

#include "pargi/generators.h"
#include "pargi/report_json.h"

namespace pargi {
namespace {

TEST(ReportJson, RefinementRoundTrip) {
  const auto report = ColorRefine(MakePath(6));
  const RefinementSummary s = Summarize("cr", 6, 1, report);
  const Json j = ToJson(s);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["partition"].size(), 6u);
  EXPECT_EQ(j["num_colors"], 3);
  const RefinementSummary back = RefinementSummaryFromJson(Json::parse(j.dump()));
  EXPECT_EQ(ToJson(back).dump(), j.dump());
  EXPECT_EQ(back.color_counts, report.color_counts);
}

TEST(ReportJson, RefinementSchemaErrors) {
  Json j = ToJson(Summarize("cr", 6, 1, ColorRefine(MakePath(6))));
  j.erase("rounds");
  EXPECT_THROW(RefinementSummaryFromJson(j), SchemaError);
  j = ToJson(Summarize("cr", 6, 1, ColorRefine(MakePath(6))));
  j["schema_version"] = 99;
  EXPECT_THROW(RefinementSummaryFromJson(j), SchemaError);
}

TEST(ReportJson, IsoResultTimingIsSegregated) {
  IsoResult r;
  r.verdict = Verdict::kIsomorphic;
  r.witness = Permutation({1, 0});
  r.nodes_explored = 3;
  r.wall_time_ms = 1.5;
  const Json with = ToJson(r);
  const Json without = ToJson(r, false);
  EXPECT_EQ(with["verdict"], "isomorphic");
  EXPECT_EQ(with["witness"], Json::parse("[1,0]"));
  EXPECT_TRUE(with.contains("wall_time_ms"));
  EXPECT_FALSE(without.contains("wall_time_ms"));
  r.wall_time_ms = 99;
  EXPECT_EQ(ToJson(r, false).dump(), without.dump());
  EXPECT_TRUE(ToJson(IsoResult{})["witness"].is_null());
}

TEST(ReportJson, PermutationsAndGeneratingSets) {
  const Permutation p({2, 0, 1});
  EXPECT_EQ(PermutationFromJson(ToJson(p)), p);
  EXPECT_THROW(PermutationFromJson(Json::parse("[0,0]")), SchemaError);
  EXPECT_THROW(PermutationFromJson(Json::parse("[0,-1]")), SchemaError);
  EXPECT_THROW(PermutationFromJson(Json::parse("{}")), SchemaError);

  const GeneratingSet gs = GeneratingSetFromJson(Json::parse("[[1,0,2],[0,2,1],[0,1,2]]"));
  EXPECT_EQ(gs.degree(), 3u);
  EXPECT_EQ(gs.size(), 2u);
  EXPECT_EQ(GeneratingSetFromJson(ToJson(gs)).gens(), gs.gens());

  const GeneratingSet empty = GeneratingSetFromJson(Json::parse(R"({"degree":4,"generators":[]})"));
  EXPECT_EQ(empty.degree(), 4u);
  EXPECT_THROW(GeneratingSetFromJson(Json::parse("[]")), SchemaError);
  EXPECT_THROW(GeneratingSetFromJson(Json::parse("[[1,0],[0,2,1]]")), SchemaError);
  EXPECT_THROW(GeneratingSetFromJson(Json::parse(R"({"degree":3})")), SchemaError);
}

}  // namespace
}  // namespace pargi
