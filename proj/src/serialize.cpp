#include "qgrass/serialize.hpp"

#include "qgrass/error.hpp"

namespace qgrass {

namespace {

void expect_schema(const Json& j, const char* schema) {
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != schema)
    throw ParseError(std::string("expected schema ") + schema);
}

Json terms_json(const GrassElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"word", to_string(w)}, {"coeff", c.to_string()}});
  return terms;
}

GrassElement terms_from_json(const Json& terms, Ambient a) {
  GrassElement x(a);
  for (const auto& t : terms) {
    std::string w = t.at("word").get<std::string>();
    PluckerWord word = w == "1" ? PluckerWord{} : parse_word(w, a);
    x.add_term(word, QRat::parse(t.at("coeff").get<std::string>()));
  }
  return x;
}

Json qm_terms_json(const QMElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) terms.push_back({{"monomial", to_string(m, x.shape())}, {"coeff", c.to_string()}});
  return terms;
}

std::string generator_name(MatShape s, int g) {
  return "x[" + std::to_string(s.row(g)) + "," + std::to_string(s.col(g)) + "]";
}

} // namespace

Json ambient_json(Ambient a) { return {{"k", a.k}, {"n", a.n}}; }

Ambient ambient_from_json(const Json& j) {
  Ambient a{j.at("k").get<int>(), j.at("n").get<int>()};
  check_ambient(a);
  return a;
}

Json to_json(const GrassElement& x) {
  return {{"schema", "qgrass.element/1"}, {"ambient", ambient_json(x.ambient())}, {"terms", terms_json(x)}};
}

GrassElement grass_element_from_json(const Json& j) {
  expect_schema(j, "qgrass.element/1");
  return terms_from_json(j.at("terms"), ambient_from_json(j.at("ambient")));
}

Json to_json(const GrassDerivation& d) {
  Json images = Json::object();
  for (const auto& [g, x] : d.images) images[to_string(g)] = terms_json(x);
  Json j = {{"schema", "qgrass.derivation/1"}, {"flavor", "grassmannian"}, {"ambient", ambient_json(d.ambient)}};
  j["shift"] = d.shift ? Json(*d.shift) : Json(nullptr);
  j["verified_degree"] = d.verified_degree;
  j["images"] = images;
  return j;
}

Json to_json(const QMDerivation& d) {
  Json images = Json::object();
  for (const auto& [g, x] : d.images) images[generator_name(d.shape, g)] = qm_terms_json(x);
  return {{"schema", "qgrass.derivation/1"},
          {"flavor", "quantum-matrix"},
          {"shape", {{"m", d.shape.m}, {"n", d.shape.n}}},
          {"images", images}};
}

Json to_json(const TDerivation& d) {
  auto t_json = [](const TElement& t) {
    Json out = Json::object();
    for (const auto& [e, x] : t.terms()) out[std::to_string(e)] = qm_terms_json(x);
    return out;
  };
  Json images = Json::object();
  MatShape s{d.ambient.k, d.ambient.p()};
  for (const auto& [g, x] : d.images) images[generator_name(s, g)] = t_json(x);
  images["y"] = t_json(d.y_image);
  return {{"schema", "qgrass.derivation/1"},
          {"flavor", "dehomogenised"},
          {"ambient", ambient_json(d.ambient)},
          {"images", images}};
}

GrassDerivation grass_derivation_from_json(const Json& j) {
  expect_schema(j, "qgrass.derivation/1");
  if (j.at("flavor") != "grassmannian") throw ParseError("expected a grassmannian derivation");
  Ambient a = ambient_from_json(j.at("ambient"));
  GrassDerivation d(a);
  if (!j.at("shift").is_null()) d.shift = j.at("shift").get<int>();
  d.verified_degree = j.value("verified_degree", 0);
  for (const auto& [g, terms] : j.at("images").items()) d.set(parse_plucker(g, a), terms_from_json(terms, a));
  return d;
}

QMDerivation qm_derivation_from_json(const Json& j) {
  expect_schema(j, "qgrass.derivation/1");
  if (j.at("flavor") != "quantum-matrix") throw ParseError("expected a quantum-matrix derivation");
  MatShape s{j.at("shape").at("m").get<int>(), j.at("shape").at("n").get<int>()};
  check_shape(s);
  QMDerivation d(s);
  for (const auto& [name, terms] : j.at("images").items()) {
    QMMonomial mon = parse_monomial(name, s);
    if (mon.degree() != 1) throw ParseError("bad generator name '" + name + "'");
    QMElement x(s);
    for (const auto& t : terms)
      x.add_term(parse_monomial(t.at("monomial").get<std::string>(), s), QRat::parse(t.at("coeff").get<std::string>()));
    d.set(mon.last(), x);
  }
  return d;
}

Json to_json(const AdjustmentLog& log, Ambient a) {
  Json steps = Json::array();
  for (const auto& adj : log) {
    if (adj.kind == Adjustment::Kind::inner)
      steps.push_back({{"kind", "inner"}, {"z", terms_json(adj.z)}});
    else
      steps.push_back({{"kind", "column"}, {"column", adj.column}, {"coefficient", adj.coefficient.to_string()}});
  }
  return {{"schema", "qgrass.adjustment-log/1"}, {"ambient", ambient_json(a)}, {"steps", steps}};
}

AdjustmentLog adjustment_log_from_json(const Json& j) {
  expect_schema(j, "qgrass.adjustment-log/1");
  Ambient a = ambient_from_json(j.at("ambient"));
  AdjustmentLog log;
  for (const auto& s : j.at("steps")) {
    Adjustment adj;
    adj.z = GrassElement(a);
    if (s.at("kind") == "inner") {
      adj.kind = Adjustment::Kind::inner;
      adj.z = terms_from_json(s.at("z"), a);
    } else if (s.at("kind") == "column") {
      adj.kind = Adjustment::Kind::column;
      adj.column = s.at("column").get<int>();
      adj.coefficient = QRat::parse(s.at("coefficient").get<std::string>());
    } else {
      throw ParseError("unknown adjustment kind");
    }
    log.push_back(std::move(adj));
  }
  return log;
}

Json to_json(const NonsquareDecomposition& c) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : c.a) a.push_back(x.to_string());
  for (const auto& x : c.b) b.push_back(x.to_string());
  return {{"schema", "qgrass.decomposition/1"}, {"row", a}, {"column", b}};
}

Json to_json(const HH1Report& r) {
  Json shifts = Json::array();
  for (const auto& s : r.shifts) {
    Json bycap = Json::object();
    for (const auto& [c, d] : s.dim_der_by_cap) bycap[std::to_string(c)] = d;
    shifts.push_back({{"shift", s.shift},
                      {"dim_der", s.dim_der},
                      {"dim_inn", s.dim_inn},
                      {"dim_hh1", s.dim_hh1},
                      {"dim_der_by_cap", bycap},
                      {"coset_basis", s.coset_labels},
                      {"inner_contained", s.inner_contained},
                      {"closure", s.closure},
                      {"leibniz", s.leibniz},
                      {"specialisation_agrees", s.specialisation_agrees},
                      {"blocks", s.blocks},
                      {"certificate", s.certificate}});
  }
  Json j = {{"schema", "qgrass.hh1-report/1"},
            {"tool_version", kToolVersion},
            {"ambient", ambient_json(r.ambient)},
            {"cap", r.cap},
            {"cap_label", r.cap_label},
            {"limitation", r.limitation}};
  j["specialisation"] = r.specialisation ? Json(r.specialisation->get_str()) : Json(nullptr);
  j["column_independence"] = r.column_independence ? Json(*r.column_independence) : Json(nullptr);
  j["shifts"] = shifts;
  return j;
}

} // namespace qgrass
