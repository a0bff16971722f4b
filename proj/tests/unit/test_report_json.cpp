#include <gtest/gtest.h>

#include "turanl2/constructions.hpp"
#include "turanl2/report_json.hpp"

using namespace turanl2;

TEST(Json, RationalsAndBigNumbersAreStrings) {
  EXPECT_EQ(toJson(rat(3, 4)), Json("3/4"));
  auto census = toJson(censusK43(5));
  EXPECT_TRUE(census["optimum"].is_string());
  EXPECT_EQ(census["optimum"], "47");
}

TEST(Json, ChecklistSchema) {
  Checklist c;
  c.items.push_back({"i", "part sizes", rat(1, 2), 1, true});
  Json j = toJson(c);
  ASSERT_TRUE(j.contains("items"));
  EXPECT_EQ(j["items"][0]["id"], "i");
  EXPECT_EQ(j["items"][0]["lhs"], "1/2");
  EXPECT_EQ(j["items"][0]["rhs"], "1");
  EXPECT_EQ(j["items"][0]["pass"], true);
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_FALSE(j["items"][0].contains("what"));
}

TEST(Json, FactsSchema) {
  FactReport r;
  r.facts.push_back({"classes_independent", true, ""});
  r.facts.push_back({"internal_degree", false, "v=3"});
  Json j = toJson(r);
  EXPECT_FALSE(j["facts"][0].contains("witness"));
  EXPECT_EQ(j["facts"][1]["witness"], "v=3");
}

TEST(Json, SimplexSchema) {
  Json j = toJson(verifySimplexInequality(2));
  EXPECT_EQ(j["worst_margin_num"], "289");
  EXPECT_EQ(j["worst_margin_den"], "10800");
  EXPECT_EQ(j["argmin"].size(), 3U);
}

TEST(Json, SweepIsDeterministic) {
  EXPECT_EQ(toJson(balancednessSweep(12)).dump(), toJson(balancednessSweep(12)).dump());
}
