#include <gtest/gtest.h>

#include "hinv/catalog.hpp"
#include "hinv/io.hpp"
#include "hinv/oracle.hpp"

using namespace hinv;

TEST(HMatrixJson, StrangeDocument) {
  const json doc = to_json(strange3());
  EXPECT_EQ(doc.dump(), R"({"n":3,"rows":[["3/4"],["-1/4","4/7"],["-1/12","-1/14","7/12"]]})");
  EXPECT_EQ(hmatrix_from_json(doc), strange3());
}

TEST(HMatrixJson, RoundTrip) {
  oracle::Rng rng(71);
  for (int size = 0; size <= 8; ++size) {
    const HMatrix h = oracle::random_hmatrix(rng, size);
    ASSERT_EQ(hmatrix_from_json(json::parse(to_json(h).dump())), h);
  }
  for (int n = 4; n <= 9; ++n) ASSERT_EQ(hmatrix_from_json(to_json(second_mixed(n, 2))), second_mixed(n, 2));
}

TEST(HMatrixJson, SchemaErrors) {
  EXPECT_THROW(hmatrix_from_json(json::parse(R"({"rows":[]})")), std::invalid_argument);
  EXPECT_THROW(hmatrix_from_json(json::parse(R"({"n":2,"rows":[["1"]]})")), std::invalid_argument);
  EXPECT_THROW(hmatrix_from_json(json::parse(R"({"n":1,"rows":[["1","2"]]})")), std::invalid_argument);
  EXPECT_THROW(hmatrix_from_json(json::parse(R"({"n":1,"rows":[[0.5]]})")), std::invalid_argument);
  EXPECT_THROW(hmatrix_from_json(json::parse(R"({"n":1,"rows":[["1/0"]]})")), std::invalid_argument);
  // integers are accepted as exact values
  EXPECT_EQ(hmatrix_from_json(json::parse(R"({"n":1,"rows":[[1]]})"))(1, 1), 1);
}

TEST(QProfileJson, RoundTripAndSparseKeys) {
  const QProfile q = q_profile(strange3());
  const json doc = to_json(q);
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["q"]["1,1"], "5/12");
  EXPECT_FALSE(doc["q"].contains("3,2"));
  EXPECT_EQ(qprofile_from_json(doc), q);
  EXPECT_THROW(qprofile_from_json(json::parse(R"({"n":3,"q":{"3,1":"1"}})")), std::invalid_argument);
}

TEST(VerdictJson, Shapes) {
  const json opt = to_json(certify(strange3()));
  EXPECT_EQ(opt["status"], "optimal");
  EXPECT_EQ(opt["lambda"]["4,3"], "7/3");
  EXPECT_EQ(opt["lambda"]["2,1"], "0");
  EXPECT_TRUE(opt["negative"].empty());
  EXPECT_EQ(opt["residuals"]["1"], "0");

  const json bad = to_json(certify(h_dual(strange3())));
  EXPECT_EQ(bad["status"], "certificate_violated");
  EXPECT_EQ(bad["lambda"]["4,2"], "-3/7");
  EXPECT_TRUE(std::find(bad["negative"].begin(), bad["negative"].end(), json::array({4, 2})) !=
              bad["negative"].end());

  const json inv = to_json(certify(HMatrix(2)));
  EXPECT_EQ(inv["status"], "invariance_violated");
  EXPECT_EQ(inv["residuals"]["1"], "-1");
  EXPECT_EQ(inv["residuals"]["2"], "-1/3");
  EXPECT_TRUE(inv["lambda"].empty());
}

TEST(WitnessJson, Shape) {
  const GramWitness w = suboptimality_witness(h_dual(strange3()), 4, 2);
  const json doc = to_json(w);
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["violated_pair"], json::array({4, 2}));
  EXPECT_EQ(doc["bound_sq"], "1/4");
  EXPECT_EQ(doc["gram"].size(), 5u);
  EXPECT_EQ(doc["gram"][4][4], "1");
  EXPECT_EQ(parse_rational(doc["residual_sq"].get<std::string>()), w.residual_sq);
  EXPECT_FALSE(doc.contains("vectors"));
  EXPECT_EQ(to_json(w, true)["vectors"].size(), 5u);
}
