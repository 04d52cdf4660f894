#include <gtest/gtest.h>

#include "hrep/models.hpp"
#include "hrep/suites/acceptance.hpp"
#include "hrep/suites/ce_oracle.hpp"
#include "hrep/suites/commands.hpp"
#include "hrep/suites/fixtures.hpp"
#include "hrep/suites/schema.hpp"

namespace {

using namespace hrep;
using namespace hrep::suites;

std::vector<std::size_t> dims(const SuiteResult& r) {
  std::vector<std::size_t> out;
  for (const auto& d : r.data.at("dims")) out.push_back(d.get<std::size_t>());
  return out;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

class GeneratedKind : public ::testing::TestWithParam<std::string> {};

TEST_P(GeneratedKind, RoundTripsThroughTheSchema) {
  const auto files = generate_example(GetParam(), kDefaultSeed);
  ASSERT_FALSE(files.empty());
  std::optional<FiniteGroupoid> groupoid;
  std::optional<SmoothGroupoid> smooth;
  for (const auto& [name, doc] : files) {
    const Json reparsed = parse_json_text(dump(doc), name);
    EXPECT_EQ(dump(reparsed), dump(doc)) << name;
    if (doc.contains("brackets")) {
      EXPECT_EQ(dump(algebra_to_json(algebra_from_json(reparsed))), dump(doc)) << name;
    } else if (doc.contains("arrows")) {
      groupoid = groupoid_from_json(reparsed);
      EXPECT_EQ(dump(groupoid_to_json(*groupoid)), dump(doc)) << name;
    } else if (doc.contains("kind")) {
      smooth = smooth_model_from_json(reparsed);
      EXPECT_EQ(dump(smooth_model_to_json(*smooth)), dump(doc)) << name;
    } else if (doc.contains("lambda")) {
      const auto g = smooth ? *smooth : SmoothGroupoid::pair_chart(doc["lambda"].size());
      EXPECT_EQ(dump(connection_to_json(connection_from_json(reparsed, g), g)), dump(doc)) << name;
    } else if (doc.contains("F")) {
      ASSERT_TRUE(groupoid.has_value()) << name;
      const Nerve n(*groupoid, 4);
      EXPECT_EQ(dump(rep_to_json(rep_from_json(reparsed, n), n)), dump(doc)) << name;
    } else {
      ADD_FAILURE() << "unrecognized example " << name;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Examples, GeneratedKind,
                         ::testing::Values("sl2", "abelian-3", "heisenberg", "pair-finite-3", "pair-chart-1",
                                           "pair-chart-2", "matrix-heisenberg", "lambda-quadratic", "gauge-demo-3"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Schema, SyntaxErrorsCarryLineAndColumn) {
  const std::string msg = message_of([] { parse_json_text("{\n  \"rank\": 2,\n  oops\n}", "in.json"); });
  EXPECT_EQ(msg.rfind("in.json:3:3:", 0), 0u) << msg;
}

TEST(Schema, SchemaErrorsCarryAPointer) {
  EXPECT_NE(message_of([] { algebra_from_json(Json::parse(R"({"base": "point"})")); }).find("\"rank\""),
            std::string::npos);
  EXPECT_NE(message_of([] { algebra_from_json(Json::parse(R"({"base": "point", "rank": "3"})")); }).find("/rank"),
            std::string::npos);
  EXPECT_NE(message_of([] {
              algebra_from_json(Json::parse(R"({"base": "point", "rank": 2, "brackets": {"1,0": {"0": "1"}}})"));
            }).find("/brackets/1,0"),
            std::string::npos);
  EXPECT_NE(message_of([] {
              algebra_from_json(Json::parse(R"({"base": "point", "rank": 2, "brackets": {"0,1": {"0": "1/0"}}})"));
            }).find("/brackets/0,1/0"),
            std::string::npos);
}

TEST(Schema, RejectsStructuresFailingTheirAxioms) {
  const Json jacobi = Json::parse(R"({"base": "point", "rank": 3, "brackets": {"0,1": {"2": "1"}, "1,2": {"1": "1"}}})");
  EXPECT_NE(message_of([&] { algebra_from_json(jacobi); }).find("Jacobi"), std::string::npos);
  Json g = groupoid_to_json(FiniteGroupoid::pair(2));
  g["inverses"][1] = 1;
  EXPECT_FALSE(message_of([&] { groupoid_from_json(g); }).empty());
  const Json conn = Json::parse(R"({"lambda": [["2"]]})");
  EXPECT_NE(message_of([&] { connection_from_json(conn, SmoothGroupoid::pair_chart(1)); }).find("/lambda"),
            std::string::npos);
  const Json rep = Json::parse(R"({"degrees": [0], "F": {"1": [{"simplex": [0, 1], "matrix": [["1"]]}]}})");
  EXPECT_NE(message_of([&] { rep_from_json(rep, Nerve(FiniteGroupoid::pair(2), 2)); }).find("/F/1/0/simplex"),
            std::string::npos);
}

TEST(Commands, RigidAlgebrasHaveVanishingDeformationCohomology) {
  for (const auto& a : {models::sl2(), models::so3()}) {
    const SuiteResult r = cohomology_command(a, Coefficients::kAdjoint, 3);
    EXPECT_TRUE(r.checks.front().pass);
    EXPECT_EQ(dims(r), (std::vector<std::size_t>{0, 0, 0, 0}));
  }
}

TEST(Commands, CohomologyAgreesWithTheDenseOracle) {
  struct Case {
    AlgebroidModel model;
    oracle::LieData lie;
  };
  for (const auto& c : {Case{models::sl2(), oracle::sl2()}, Case{models::heisenberg(), oracle::heisenberg()}}) {
    const std::vector<RationalMatrix> trivial(c.lie.dim, RationalMatrix(1, 1));
    EXPECT_EQ(dims(cohomology_command(c.model, Coefficients::kTrivial, 3)),
              oracle::dense_cohomology_dims(c.lie, trivial, 3));
    EXPECT_EQ(dims(cohomology_command(c.model, Coefficients::kAdjoint, 3)),
              oracle::dense_cohomology_dims(c.lie, oracle::adjoint_rep(c.lie), 3));
  }
}

TEST(Commands, CohomologyNeedsAPointBase) {
  EXPECT_THROW(cohomology_command(models::affine_line(), Coefficients::kTrivial, 2), InputError);
}

TEST(Commands, VanEstVerifyPassesOnTheBundledModels) {
  for (const auto& [g, sigma] : {std::pair{SmoothGroupoid::pair_chart(1), quadratic_conn()},
                                 std::pair{SmoothGroupoid::pair_chart(1), skew_conn()},
                                 std::pair{SmoothGroupoid::pair_chart(2), planar_conn()},
                                 std::pair{SmoothGroupoid::heisenberg(), EhresmannConn{}}}) {
    const SuiteResult r = van_est_verify_command(g, sigma, 3, 7);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  }
}

TEST(Commands, CheckGroupoidRepDetectsABrokenEquation) {
  const auto files = generate_example("gauge-demo-3", 5);
  const FiniteGroupoid g = groupoid_from_json(files[0].second);
  const SuiteResult good = check_groupoid_rep_command(g, files[1].second, 4);
  for (const auto& c : good.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  EXPECT_FALSE(good.data.at("nonzero_higher_arities").empty());

  Json broken = files[1].second;
  auto& m = broken["F"]["2"][0]["matrix"][0][2];
  m = to_string(parse_rational(m.get<std::string>()) + 1);
  const SuiteResult bad = check_groupoid_rep_command(g, broken, 4);
  ASSERT_FALSE(bad.checks.empty());
  EXPECT_FALSE(bad.checks.front().pass);
  EXPECT_NE(bad.checks.front().detail.find("equation"), std::string::npos) << bad.checks.front().detail;

  Json off_degree = files[1].second;
  off_degree["F"]["2"][0]["matrix"][0][0] = "1";
  EXPECT_NE(message_of([&] { check_groupoid_rep_command(g, off_degree, 4); }).find("/F/2/0/matrix/0/0"),
            std::string::npos);
}

TEST(Commands, CheckGroupoidRepCapsTheNerve) {
  EXPECT_THROW(check_groupoid_rep_command(FiniteGroupoid::pair(8), Json::parse(R"({"degrees": [0], "F": {}})"), 6),
               InputError);
}

TEST(Commands, ReportsAreDeterministicForAFixedSeed) {
  const auto run = [] {
    return dump(to_json(van_est_verify_command(SmoothGroupoid::pair_chart(2), planar_conn(), 4, 99)));
  };
  EXPECT_EQ(run(), run());
}

}  // namespace
