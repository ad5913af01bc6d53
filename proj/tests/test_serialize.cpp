#include "doctest.h"

#include "qgrass/error.hpp"
#include "qgrass/serialize.hpp"

using namespace qgrass;

TEST_CASE("elements and derivations round trip through JSON") {
  Ambient a{2, 4};
  GrassElement x = straighten(parse_word("[13][12]", a), a) + GrassElement::scalar(a, (QRat(1) + qpow(1)) / (QRat(1) + qpow(2)));
  Json j = to_json(x);
  CHECK(j["schema"] == "qgrass.element/1");
  CHECK(grass_element_from_json(Json::parse(j.dump())) == x);

  GrassDerivation d = inner(GrassElement::generator(PluckerIndex(a, {1, 3}))) + column_derivation(a, 2);
  GrassDerivation back = grass_derivation_from_json(Json::parse(to_json(d).dump()));
  CHECK(back == d);
  CHECK(back.shift == d.shift);

  MatShape s{2, 3};
  QMDerivation qd = row_derivation(s, 1) + inner(gen(s, 1, 2));
  CHECK(qm_derivation_from_json(Json::parse(to_json(qd).dump())) == qd);
  CHECK(to_json(dtilde_row(a, 1))["flavor"] == "dehomogenised");

  auto res = normalize(d);
  AdjustmentLog log = adjustment_log_from_json(Json::parse(to_json(res.log, a).dump()));
  CHECK(log == res.log);
  CHECK(replay(d, log) == res.normalized);
}

TEST_CASE("readers reject foreign schemas") {
  CHECK_THROWS_AS(grass_element_from_json(Json{{"schema", "other/1"}}), ParseError);
  CHECK_THROWS_AS(adjustment_log_from_json(Json::array()), ParseError);
  Json d = to_json(row_derivation(MatShape{2, 2}, 1));
  CHECK_THROWS_AS(grass_derivation_from_json(d), ParseError);
}

TEST_CASE("report JSON is reproducible") {
  Ambient a{2, 4};
  std::string first = to_json(hh1_window(a, {0}, 2)).dump();
  std::string second = to_json(hh1_window(a, {0}, 2)).dump();
  CHECK(first == second);
  Json j = Json::parse(first);
  CHECK(j["schema"] == "qgrass.hh1-report/1");
  CHECK(j["shifts"][0]["dim_hh1"] == 4);
}
