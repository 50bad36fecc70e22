#include <gtest/gtest.h>

#include "jacobi/error.hpp"
#include "jacobi/io.hpp"
#include "support.hpp"

namespace jacobi {
namespace {

TEST(Io, GroupParsing) {
  EXPECT_EQ(parse_group("2,4").factors(), (std::vector<unsigned>{2, 4}));
  EXPECT_EQ(parse_group("7").order(), 7u);
  EXPECT_THROW(parse_group(""), MalformedInput);
  EXPECT_THROW(parse_group("2,,3"), MalformedInput);
  EXPECT_THROW(parse_group("2,x"), MalformedInput);
  EXPECT_THROW(parse_group("0"), MalformedInput);
}

TEST(Io, TableRoundTrip) {
  const auto t = compute_jacobi(testing::field_of_order(8));
  const auto j = table_to_json(t);
  EXPECT_EQ(j["schema"], kTableSchema);
  EXPECT_EQ(j["conductor"], 7);
  const auto back = table_from_json(Json::parse(j.dump()));
  ASSERT_TRUE(std::holds_alternative<JacobiTable>(back));
  EXPECT_EQ(std::get<JacobiTable>(back), t);
}

TEST(Io, F3TableLayout) {
  const auto t = compute_jacobi(testing::field_of_order(3));
  EXPECT_EQ(table_to_json(t).dump(),
            R"({"schema":"jacobi-table/v1","factors":[2],"conductor":2,)"
            R"("entries":[[["1/2"],["-1/2"]],[["-1/2"],["1/2"]]]})");
}

TEST(Io, ApproxTableRoundTrip) {
  const auto a = embed(compute_jacobi(testing::field_of_order(5)));
  const auto back = table_from_json(table_to_json(a));
  ASSERT_TRUE(std::holds_alternative<ApproxTable>(back));
  EXPECT_EQ(std::get<ApproxTable>(back).values, a.values);
}

TEST(Io, MalformedTables) {
  const auto good = table_to_json(compute_jacobi(testing::field_of_order(3)));
  auto wrong_schema = good;
  wrong_schema["schema"] = "other";
  EXPECT_THROW(table_from_json(wrong_schema), MalformedInput);
  auto wrong_conductor = good;
  wrong_conductor["conductor"] = 3;
  EXPECT_THROW(table_from_json(wrong_conductor), MalformedInput);
  auto short_rows = good;
  short_rows["entries"].erase(1);
  EXPECT_THROW(table_from_json(short_rows), MalformedInput);
  auto bad_value = good;
  bad_value["entries"][0][0][0] = "1/0";
  EXPECT_THROW(table_from_json(bad_value), MalformedInput);
  EXPECT_THROW(table_from_json(Json::array()), MalformedInput);
}

TEST(Io, FieldRoundTrip) {
  const auto f = testing::field_of_order(9);
  const auto j = field_to_json(f, true);
  EXPECT_EQ(j["modulus"], Json({1, 0, 1}));
  EXPECT_EQ(j["generator"], Json({1, 1}));
  EXPECT_EQ(j["addition"].size(), 9u);
  const auto back = field_from_json(j);
  EXPECT_EQ(back.order(), 9u);
  EXPECT_FALSE(field_to_json(testing::field_of_order(81), true).contains("addition"));

  auto tampered = j;
  tampered["modulus"] = Json({2, 0, 1});
  EXPECT_THROW(field_from_json(tampered), MalformedInput);
  auto not_prime = j;
  not_prime["p"] = 4;
  EXPECT_THROW(field_from_json(not_prime), MalformedInput);
}

TEST(Io, ReportsAreDeterministic) {
  const auto t = compute_jacobi(testing::field_of_order(7));
  const auto a = dump(reconstruction_to_json(reconstruct(t)));
  const auto b = dump(reconstruction_to_json(reconstruct(t)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
  const auto j = Json::parse(a);
  EXPECT_EQ(j["outcome"]["case"], "field");
  EXPECT_EQ(j["outcome"]["c"], Json({3}));
  EXPECT_EQ(j["addition"].size(), 7u);
  EXPECT_EQ(j["kappa"], Json({"-1/6", "0"}));
}

TEST(Io, VerificationReportCarriesWitness) {
  const auto t = compute_jacobi(testing::field_of_order(5));
  const auto bad = t.with_entry(1, 2, -t(1, 2));
  const auto j = verification_to_json(bad.group(), verify_all(bad));
  EXPECT_EQ(j["A"]["verdict"], "fail");
  EXPECT_EQ(j["A"]["witness"]["at"], Json::parse("[[1],[2]]"));
  EXPECT_FALSE(j["all_pass"].get<bool>());
}

TEST(Io, RunConfigValidation) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.verify.exhaustive_max_m = 50;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = RunConfig{};
  cfg.verify.tolerance = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
}

}  // namespace
}  // namespace jacobi
