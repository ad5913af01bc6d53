#include "doctest.h"

#include "qgrass/error.hpp"
#include "qgrass/linalg.hpp"
#include "qgrass/qgrass.hpp"

#include <filesystem>
#include <random>

using namespace qgrass;

namespace {

const Ambient G24{2, 4}, G25{2, 5}, G36{3, 6};

PluckerIndex P(Ambient a, std::vector<int> c) { return PluckerIndex(a, c); }
PluckerWord W(Ambient a, const std::string& s) { return parse_word(s, a); }
GrassElement E(Ambient a, const std::string& s) { return GrassElement::word(a, W(a, s)); }

// Independent oracle: solve embed(word) = sum c_S embed(S) over the given
// candidate standard monomials with a nullspace of the augmented system.
std::vector<QRat> oracle_solve(Ambient a, const PluckerWord& w, const std::vector<PluckerWord>& basis) {
  std::vector<QMElement> cols;
  for (const auto& s : basis) cols.push_back(embed(s, a));
  cols.push_back(embed(w, a));
  std::set<QMMonomial> rows;
  for (const auto& c : cols)
    for (const auto& [m, x] : c.terms()) rows.insert(m);
  Matrix m(rows.size(), cols.size());
  std::size_t r = 0;
  for (const auto& mon : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = cols[c].coeff(mon);
    ++r;
  }
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  std::vector<QRat> out;
  QRat last = ns[0].back();
  for (std::size_t c = 0; c + 1 < cols.size(); ++c) out.push_back(-ns[0][c] / last);
  return out;
}

}  // namespace

TEST_CASE("partial order and weights") {
  CHECK(plucker_leq(P(G24, {1, 2}), P(G24, {1, 3})));
  CHECK_FALSE(plucker_leq(P(G24, {1, 4}), P(G24, {2, 3})));
  CHECK_FALSE(plucker_leq(P(G24, {2, 3}), P(G24, {1, 4})));
  for (Ambient a : {G24, G25, G36})
    for (const auto& j : pluckers(a)) CHECK(plucker_leq(leftmost(a), j));
  CHECK(weights(P(G24, {2, 3})).d == 1);
  CHECK(weights(P(G24, {2, 3})).e == 1);
  CHECK(weights(rightmost(G25)).d == 2);
  CHECK(weights(leftmost(G25)).d == 0);
  CHECK(pluckers(G36).size() == 20);
  CHECK(Ambient{1, 3}.degenerate());
  CHECK_FALSE(G24.degenerate());
}

TEST_CASE("embedding") {
  MatShape s = G24.shape();
  auto e = embed(W(G24, "[12]"), G24);
  CHECK(e == gen(s, 1, 1) * gen(s, 2, 2) - qpow(1) * (gen(s, 1, 2) * gen(s, 2, 1)));
  CHECK(embed(PluckerWord{}, G24) == QMElement::scalar(s, QRat(1)));
  auto big = embed(W(G24, "[12][34]"), G24);
  for (const auto& [m, c] : big.terms()) {
    auto bc = bicontent(m, s);
    CHECK(bc.rows == std::vector<int>{2, 2});
    CHECK(bc.cols == std::vector<int>{1, 1, 1, 1});
  }
}

TEST_CASE("straightening examples") {
  CHECK(straighten(W(G24, "[12][13]"), G24) == E(G24, "[12][13]"));
  auto s = straighten(W(G24, "[13][12]"), G24);
  CHECK(s == qpow(-1) * E(G24, "[12][13]"));
  CHECK(to_string(s) == "q^-1 [12][13]");

  auto w = W(G24, "[14][23]");
  std::vector<PluckerWord> basis{W(G24, "[12][34]"), W(G24, "[13][24]")};
  CHECK_FALSE(is_standard(w));
  auto coeffs = oracle_solve(G24, w, basis);
  GrassElement expected(G24);
  for (std::size_t i = 0; i < basis.size(); ++i) expected.add_term(basis[i], coeffs[i]);
  CHECK(straighten(w, G24) == expected);
  CHECK(straighten_direct(w, G24) == expected);
}

TEST_CASE("standard monomial counts") {
  std::vector<std::size_t> g24{1, 6, 20, 50, 105};
  for (int d = 0; d <= 4; ++d) CHECK(standard_monomials(G24, d).size() == g24[static_cast<std::size_t>(d)]);
  CHECK(standard_monomials(G25, 2).size() == 50);
  CHECK(standard_monomials(G36, 2).size() == 175);
  for (const auto& w : standard_monomials(G25, 3)) CHECK(is_standard(w));
}

TEST_CASE("basis theorem at small degree") {
  for (int d = 1; d <= 3; ++d) {
    auto r = check_basis(G24, d);
    CHECK(r.independent);
    CHECK(r.spanning);
  }
  auto r = check_basis(G25, 2, ExecPolicy::serial);
  CHECK(r.independent);
  CHECK(r.spanning);
  CHECK(r.words == 100);
}

TEST_CASE("commutation with the extreme coordinates") {
  for (Ambient a : {G24, G25, G36}) {
    auto u = GrassElement::generator(leftmost(a));
    auto w = GrassElement::generator(rightmost(a));
    for (const auto& i : pluckers(a)) {
      auto x = GrassElement::generator(i);
      CHECK(u * x == qpow(weights(i).d) * (x * u));
      CHECK(w * x == qpow(-weights(i).e) * (x * w));
    }
  }
}

TEST_CASE("no nonconstant standard monomial commutes with both u and w") {
  auto u = GrassElement::generator(leftmost(G24));
  auto w = GrassElement::generator(rightmost(G24));
  for (int d = 1; d <= 3; ++d)
    for (const auto& s : standard_monomials(G24, d)) {
      auto x = GrassElement::word(G24, s);
      CHECK((!commutator(u, x).is_zero() || !commutator(w, x).is_zero()));
    }
}

TEST_CASE("q-commutation modulo u") {
  // v = {1,3}, alpha = {2,4}, t = |alpha \ v| = 2.
  auto lhs = straighten(W(G24, "[13][24]"), G24);
  auto rhs = qpow(2) * straighten(W(G24, "[24][13]"), G24);
  CHECK(!(lhs - rhs).is_zero());
  CHECK(quotient_mod_u(lhs - rhs).is_zero());
  CHECK(quotient_mod_u(E(G24, "[12][34]")).is_zero());
  CHECK(quotient_mod_u(E(G24, "[34]")) == E(G24, "[34]"));
}

TEST_CASE("products agree with the embedding") {
  std::mt19937_64 rng(17);
  const auto& gens = pluckers(G24);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(0, 2);
  for (int it = 0; it < 25; ++it) {
    PluckerWord a, b;
    for (int i = len(rng); i > 0; --i) a.factors.push_back(gens[pick(rng)]);
    for (int i = len(rng); i > 0; --i) b.factors.push_back(gens[pick(rng)]);
    auto sa = straighten(a, G24), sb = straighten(b, G24);
    auto prod = sa * sb;
    CHECK(prod.is_standard());
    CHECK(embed(prod) == embed(a, G24) * embed(b, G24));
    CHECK(straighten(prod) == prod);
    CHECK(straighten(a * b, G24) == straighten_direct(a * b, G24));
    CHECK(GrassElement::scalar(G24, QRat(1)) * sa == sa);
  }
}

TEST_CASE("word syntax") {
  CHECK(to_string(W(G24, "[13][12]")) == "[13][12]");
  CHECK_THROWS_AS(parse_word("[15]", G24), ParseError);
  CHECK_THROWS_AS(parse_word("[1]", G24), ParseError);
  CHECK_THROWS_AS(parse_word("13]", G24), ParseError);
  Ambient wide{2, 12};
  auto w = parse_word("[1,12][3,4]", wide);
  CHECK(to_string(w) == "[1,12][3,4]");
  CHECK(support(GrassElement(G24)).empty());
  auto x = E(G24, "[12]") + QRat(2) * E(G24, "[34]");
  CHECK(support(x).size() == 2);
}

TEST_CASE("disk cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qgrass-test-cache";
  fs::remove_all(dir);
  set_cache_directory(dir);
  clear_straightening_memory();
  Ambient a{2, 5};
  warm_cache(a, 2);
  auto entries = list_cache(dir);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].degree == 2);
  auto before = straighten(W(a, "[35][14]"), a);
  clear_straightening_memory();
  auto after = straighten(W(a, "[35][14]"), a);
  CHECK(before == after);
  CHECK(straighten_stats(a).disk_loads == 1);
  CHECK(clear_cache(dir) == 1);
  CHECK(list_cache(dir).empty());
  set_cache_directory({});
  clear_straightening_memory();
  fs::remove_all(dir);
}
