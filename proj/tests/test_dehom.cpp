#include "doctest.h"

#include "qgrass/dehom.hpp"
#include "qgrass/error.hpp"

#include <random>

using namespace qgrass;

namespace {

const Ambient G24{2, 4}, G25{2, 5}, G36{3, 6};

PluckerIndex P(Ambient a, std::vector<int> c) { return PluckerIndex(a, c); }

GrassElement random_grass(Ambient a, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-2, 2), e(-1, 1);
  const auto& gens = pluckers(a);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  GrassElement out(a);
  for (int t = 0; t < 3; ++t) {
    PluckerWord w;
    for (int i = deg(rng); i > 0; --i) w.factors.push_back(gens[pick(rng)]);
    out += straighten(w, a) * (QRat(c(rng)) * qpow(e(rng)));
  }
  return out;
}

// x_a x_b expressed as G [u]^-2.
GrassElement pair(Ambient a, int i, int j, int k, int l) {
  MatShape s{a.k, a.p()};
  return grass_numerator(a, {s.index(i, j), s.index(k, l)});
}

}  // namespace

TEST_CASE("T multiplication") {
  Ambient a = G24;
  auto y = TElement::y_power(a, 1), yi = TElement::y_power(a, -1);
  auto x11 = TElement::x(a, 1, 1), x22 = TElement::x(a, 2, 2);
  CHECK(y * x11 == qpow(1) * (x11 * y));
  CHECK(y * yi == TElement::scalar(a, QRat(1)));
  CHECK(y * (x11 * x22) * yi == qpow(2) * (x11 * x22));
}

TEST_CASE("generator and minor formulas") {
  CHECK(gen_from_grass(G24, 1, 1).index == P(G24, {1, 3}));
  CHECK(gen_from_grass(G24, 2, 1).index == P(G24, {2, 3}));
  CHECK(gen_from_grass(G24, 1, 2).index == P(G24, {1, 4}));
  CHECK(gen_from_grass(G24, 1, 2).yexp == -1);
  CHECK(minor_to_plucker(G24, {1}, {1}).index == P(G24, {1, 3}));
  CHECK(minor_to_plucker(G24, {1, 2}, {1, 2}).index == P(G24, {3, 4}));
  CHECK(minor_to_plucker(G36, {1, 2, 3}, {1, 2, 3}).index == P(G36, {4, 5, 6}));
  CHECK_THROWS_AS(gen_from_grass(G24, 3, 1), DomainError);
  CHECK(plucker_to_T(leftmost(G24)) == TElement::y_power(G24, 1));
  CHECK(plucker_to_T(P(G24, {1, 3})) == TElement::x(G24, 1, 1) * TElement::y_power(G24, 1));
  CHECK(plucker_to_T(P(G24, {3, 4})) ==
        TElement::from_matrix(G24, quantum_minor(MatShape{2, 2}, {1, 2}, {1, 2}), 1));
}

TEST_CASE("minor and Plücker formulas invert each other") {
  for (Ambient a : {G24, G25, G36}) {
    for (const auto& l : pluckers(a)) {
      auto [rows, cols] = plucker_minor_sets(l);
      if (rows.empty()) {
        CHECK(l == leftmost(a));
        continue;
      }
      CHECK(minor_to_plucker(a, rows, cols).index == l);
      CHECK(plucker_to_T(l) == TElement::from_matrix(a, quantum_minor(MatShape{a.k, a.p()}, rows, cols), 1));
    }
  }
}

TEST_CASE("the x_ij satisfy the quantum matrix relations in grass arithmetic") {
  for (Ambient a : {G24, G25, G36}) {
    QRat q = qpow(1), qi = qpow(-1);
    int k = a.k, p = a.p();
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= p; ++j)
        for (int r = 1; r <= k; ++r)
          for (int s = 1; s <= p; ++s) {
            if (i == r && j < s) CHECK((pair(a, i, j, r, s) - q * pair(a, r, s, i, j)).is_zero());
            if (j == s && i < r) CHECK((pair(a, i, j, r, s) - q * pair(a, r, s, i, j)).is_zero());
            if (i < r && j > s) CHECK((pair(a, i, j, r, s) - pair(a, r, s, i, j)).is_zero());
            if (i < r && j < s)
              CHECK((pair(a, i, j, r, s) - pair(a, r, s, i, j) - (q - qi) * pair(a, i, s, r, j)).is_zero());
          }
    // y x_ij = q x_ij y, i.e. [u][L] = q [L][u].
    auto u = GrassElement::generator(leftmost(a));
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= p; ++j) {
        auto l = GrassElement::generator(gen_from_grass(a, i, j).index);
        CHECK(u * l == q * (l * u));
      }
  }
}

TEST_CASE("rightmost coordinate is the rightmost minor") {
  for (Ambient a : {G24, G25, G36}) {
    auto m = TElement::from_matrix(a, rightmost_minor(a), 0);
    CHECK(t_to_grass(m * TElement::y_power(a, 1)) == GrassElement::generator(rightmost(a)));
    CHECK(grass_to_T(GrassElement::generator(rightmost(a)), -1) == m);
  }
}

TEST_CASE("round trips and multiplicativity") {
  std::mt19937_64 rng(23);
  CHECK(grass_to_T(GrassElement::generator(leftmost(G24)), 0) == TElement::y_power(G24, 1));
  for (int it = 0; it < 20; ++it) {
    auto x = random_grass(G24, rng, 2), z = random_grass(G24, rng, 2);
    auto tx = grass_to_T(x);
    CHECK(t_to_grass(tx) == x);
    CHECK(grass_to_T(x * z) == grass_to_T(x) * grass_to_T(z));
  }
  CHECK_THROWS_AS(t_to_grass(TElement::y_power(G24, -1)), DomainError);
  CHECK_THROWS_AS(t_to_grass(TElement::x(G24, 1, 1)), DomainError);
}

TEST_CASE("weight decompositions") {
  std::mt19937_64 rng(29);
  for (Ambient a : {G24, G25}) {
    auto m = TElement::from_matrix(a, rightmost_minor(a), 0);
    auto y = TElement::y_power(a, 1), yi = TElement::y_power(a, -1);
    for (int it = 0; it < 5; ++it) {
      auto t = grass_to_T(random_grass(a, rng, 2), -1) + TElement::x(a, 1, 1) * y;
      auto yw = y_weight_decompose(t);
      TElement sum(a);
      for (const auto& [w, c] : yw) {
        CHECK(y * c == qpow(w) * (c * y));
        sum += c;
      }
      CHECK(sum == t);
      auto mw = minor_weight_decompose(t);
      TElement sum2(a);
      for (const auto& [w, c] : mw) {
        CHECK(m * c == qpow(-w) * (c * m));
        sum2 += c;
      }
      CHECK(sum2 == t);
    }
    CHECK(y_weight_decompose(y).begin()->first == 0);
  }
  auto x11 = minor_weight_decompose(TElement::x(G24, 1, 1));
  CHECK((x11.begin()->first == 0 || x11.begin()->first == 1));
  CHECK_THROWS_AS(minor_weight_decompose(TElement::x(Ambient{3, 5}, 1, 1)), DomainError);
}
