#include "doctest.h"
#include "qgr/error.hpp"
#include "qgr/serialize.hpp"
#include "test_support.hpp"

using namespace qgr;

namespace {

const Scalar r = Scalar::r();
const Scalar s = Scalar::s();

}  // namespace

TEST_CASE("scalars round-trip through their text form") {
  std::mt19937_64 rng(2);
  Algebra gl2(2, Kind::gl);
  for (const Scalar& x : {Scalar(0), Scalar(1), s - r, (r + s).inverse() * r, Params::generic().half_power(-3)}) {
    CHECK(scalar_from_json(to_json(x)) == x);
    CHECK(to_json(scalar_from_json(to_json(x))) == to_json(x));
  }
  CHECK_THROWS_AS(scalar_from_json(Json(3)), Error);
}

TEST_CASE("Theta at alpha_1 as a tensor record") {
  Algebra sl2(2, Kind::sl);
  PairingContext ctx(sl2);
  ThetaOperator th(ctx);
  const Json j = to_json(th.theta({1}));
  REQUIRE(j["terms"].size() == 1);
  const Json& term = j["terms"][0];
  CHECK(term["coeff"] == (s - r).to_string());
  CHECK(term["legs"][0]["f"] == Json::array({1}));
  CHECK(term["legs"][0]["e"] == Json::array());
  CHECK(term["legs"][1]["e"] == Json::array({1}));
  CHECK(tensor_from_json(sl2, j) == th.theta({1}));
}

TEST_CASE("elements, tensors and dual pairs re-export byte-identically") {
  Algebra gl3(3, Kind::gl);
  PairingContext ctx(gl3);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const Element x = testing::random_element(rng, gl3, 3);
    const std::string text = dump_json(to_json(x));
    const Element back = element_from_json(gl3, parse_json(text));
    CHECK(back == x);
    CHECK(dump_json(to_json(back)) == text);
    const Tensor d = coproduct(x);
    const std::string dt = dump_json(to_json(d));
    CHECK(dump_json(to_json(tensor_from_json(gl3, parse_json(dt)))) == dt);
  }
  const DualPair dp = ctx.dual_bases({1, 1});
  const std::string text = dump_json(to_json(dp));
  const DualPair back = dual_pair_from_json(gl3, parse_json(text));
  CHECK(back.u.size() == dp.u.size());
  CHECK(dump_json(to_json(back)) == text);
  const std::string bad_letter = R"j({"terms":[{"coeff":"(1)","key":{"f":[5],"t":[0,0,0,0,0,0],"e":[]}}]})j";
  CHECK_THROWS_AS(element_from_json(gl3, parse_json(bad_letter)), Error);
  CHECK_THROWS_AS(parse_json("{"), Error);
}

TEST_CASE("reports: sorted checks, empty report, round trip") {
  Report empty;
  empty.command = "none";
  CHECK(dump_json(to_json(empty)) ==
        "{\n  \"command\": \"none\",\n  \"config\": {},\n  \"details\": {\n    \"checks\": []\n  },\n"
        "  \"pass\": true,\n  \"residual_count\": 0\n}\n");

  Report rep;
  rep.command = "demo";
  rep.config = {{"n", "2"}, {"kind", "gl"}};
  rep.add("zeta", true);
  rep.add("alpha", false, "x");
  ReportDocument doc{rep, Json{{"extra", Json::array({1, 2})}}};
  const std::string text = dump_json(to_json(doc));
  const Json j = parse_json(text);
  CHECK(j["details"]["checks"][0]["label"] == "alpha");
  CHECK(j["residual_count"] == 1);
  CHECK(j["pass"] == false);
  const ReportDocument back = report_from_json(j);
  CHECK(back.artifacts["extra"] == Json::array({1, 2}));
  CHECK(dump_json(to_json(back)) == text);

  Json tampered = j;
  tampered["pass"] = true;
  CHECK_THROWS_AS(report_from_json(tampered), Error);
}

TEST_CASE("pairing table, module and braid map exports") {
  Algebra gl2(2, Kind::gl);
  PairingContext ctx(gl2);
  const auto table = pairing_table(ctx, 2);
  const std::string text = dump_json(to_json(table));
  CHECK(dump_json(to_json(pairing_table_from_json(parse_json(text)))) == text);

  WeightModule m(ctx, Weight{{1, 0}}, 3);
  const Json jm = to_json(m);
  CHECK(jm["basis"].size() == m.dim());
  CHECK(jm["action"].contains("e1"));
  CHECK(jm["depth"] == 3);

  ThetaOperator th(ctx);
  ModuleActions a(m);
  const BraidMap rm = build_R(th, a, a, 1);
  const Json jr = to_json(rm);
  CHECK(jr["budget"] == 1);
  CHECK(!jr["entries"].empty());
  CHECK(dump_json(jr) == dump_json(to_json(build_R(th, a, a, 1))));
}
