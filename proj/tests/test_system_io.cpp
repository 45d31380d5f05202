#include <string>

#include <gtest/gtest.h>

#include "fucik/certify.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"
#include "fucik/fourier.hpp"
#include "fucik/gram.hpp"
#include "fucik/envelope.hpp"
#include "fucik/system_io.hpp"

using namespace fucik;

namespace {

std::string spec_path(const std::string& name) { return std::string(FUCIK_SPECS_DIR) + "/" + name; }

}  // namespace

TEST(Parse, MinimalSpecDerivesBeta) {
  const auto spec = parse_system_spec_text(R"({"entries": [{"n": 2, "alpha": 6.25}, {"n": 1}]})");
  ASSERT_EQ(spec.entries.size(), 2u);
  EXPECT_NEAR(spec.entries.at(2).beta, solve_beta(2, 6.25), 0.0);
  EXPECT_TRUE(spec.entries.at(1) == (FucikPoint{1, 1.0, 1.0}));
  EXPECT_EQ(spec.split.kind, SplitKind::deviating_evens);
  EXPECT_EQ(spec.mode, Mode::theorem1);
}

TEST(Parse, DerivesAlphaFromBeta) {
  const auto spec = parse_system_spec_text(R"({"entries": [{"n": 3, "beta": 4.0}]})");
  EXPECT_NEAR(spec.entries.at(3).alpha, 16.0, 1e-12);
}

TEST(Parse, BothCoordinatesAreChecked) {
  EXPECT_NO_THROW(parse_system_spec_text(R"({"entries": [{"n": 3, "alpha": 16.0, "beta": 4.0}]})"));
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [{"n": 3, "alpha": 16.0, "beta": 4.5}]})"),
               OffCurveError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [{"n": 3, "alpha": 4.0, "beta": 16.0}]})"),
               ReflectedCurveError);
  EXPECT_THROW(load_system_spec(spec_path("off_curve.json")), OffCurveError);
}

TEST(Parse, SplitAndModeForms) {
  auto s = parse_system_spec_text(R"({"entries": [{"n": 2, "alpha": 5}], "split": "auto", "mode": "remark"})");
  EXPECT_EQ(s.split.kind, SplitKind::automatic);
  EXPECT_EQ(s.mode, Mode::remark);
  s = parse_system_spec_text(R"({"entries": [{"n": 2, "alpha": 5}], "split": [2]})");
  EXPECT_EQ(s.split.kind, SplitKind::explicit_list);
  EXPECT_EQ(s.split.indices, (std::set<int>{2}));
  s = parse_system_spec_text(R"({"entries": [{"n": 2, "alpha": 5}], "split": "default", "tail": "identity"})");
  EXPECT_EQ(s.split.kind, SplitKind::deviating_evens);

  EXPECT_EQ(parse_split("auto").kind, SplitKind::automatic);
  EXPECT_EQ(parse_split("default").kind, SplitKind::deviating_evens);
  EXPECT_EQ(parse_split("2,4,6").indices, (std::set<int>{2, 4, 6}));
  EXPECT_THROW(parse_split("2,x"), InputError);
  EXPECT_EQ(parse_mode("theorem1"), Mode::theorem1);
  EXPECT_THROW(parse_mode("lemma"), InputError);
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(load_system_spec(spec_path("malformed.json")), InputError);
  EXPECT_THROW(load_system_spec(spec_path("does_not_exist.json")), InputError);
  EXPECT_THROW(parse_system_spec_text("[]"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": {}})"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [{"alpha": 5}]})"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [{"n": 2}]})"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [{"n": 2, "alpha": "5"}]})"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [{"n": 2, "alpha": 5}, {"n": 2, "alpha": 6}]})"),
               InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [], "split": "some"})"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [], "split": [2.5]})"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [], "tail": "random"})"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [{"n": 2, "alpha": 5}], "split": [3]})"), InputError);
  EXPECT_THROW(parse_system_spec_text(R"({"entries": [{"n": 2, "alpha": 0.5}]})"), DomainError);
}

TEST(Round12, KeepsTwelveDigits) {
  EXPECT_EQ(round12(0.0), 0.0);
  EXPECT_EQ(round12(1.0 / 3.0), 0.333333333333);
  EXPECT_EQ(round12(6.492789368515176), 6.49278936852);
  EXPECT_EQ(round12(-2.5e-20), -2.5e-20);
}

TEST(Serialize, CertificateFields) {
  const auto cert = certify_theorem1(load_system_spec(spec_path("threshold_6_4.json")));
  const auto j = serialize(cert);
  for (const char* key : {"mode", "lambda_star_sq", "sup_gamma", "envelope_sq", "total", "margin", "pass",
                          "verdict", "per_index"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_EQ(j["per_index"].size(), 1u);
  EXPECT_EQ(j["per_index"][0]["set"], "N");
  EXPECT_EQ(j["per_index"][0]["method"], "envelope");
  EXPECT_EQ(j["sup_gamma"].get<double>(), 6.4);
}

TEST(Serialize, EigenfunctionAndEnvelope) {
  const auto j = serialize(build(gamma2_point(6.25)));
  EXPECT_EQ(j["n"], 2);
  ASSERT_EQ(j["bumps"].size(), 2u);
  EXPECT_EQ(j["bumps"][0]["sign"], 1);
  EXPECT_EQ(j["bumps"][1]["end"].get<double>(), round12(3.141592653589793));
  const auto e = serialize(envelope_E(5.0));
  EXPECT_EQ(e["value"].get<double>(), 0.527297336254);
  EXPECT_EQ(e["tail_method"], "closed-form");
}

TEST(Serialize, GramWitnessFields) {
  const auto w = gram_witness(load_system_spec(spec_path("diag.json")), 8);
  const auto j = serialize(w);
  EXPECT_EQ(j["size"], 8);
  EXPECT_TRUE(j["inside_window"].get<bool>());
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_EQ(j["min_eig"].get<double>(), 1.0);
}
