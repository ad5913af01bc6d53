#include "doctest.h"

#include "qgrass/deriv.hpp"
#include "qgrass/error.hpp"
#include "qgrass/hh1solver.hpp"

#include <random>

using namespace qgrass;

namespace {

const Ambient G24{2, 4}, G25{2, 5}, G35{3, 5}, G36{3, 6};

GrassElement gen_of(Ambient a, const std::vector<int>& cols) { return GrassElement::generator(PluckerIndex(a, cols)); }

QRat random_coeff(std::mt19937_64& rng) {
  int a = static_cast<int>(rng() % 7) - 3;
  int b = static_cast<int>(rng() % 5) - 2;
  return QRat(a) + QRat(b) * qpow(1);
}

GrassElement random_element(Ambient a, int degree, int terms, std::mt19937_64& rng) {
  const auto& basis = standard_monomials(a, degree);
  GrassElement out(a);
  for (int t = 0; t < terms; ++t) out += GrassElement::word(a, basis[rng() % basis.size()], random_coeff(rng));
  return out;
}

TDerivation negate(TDerivation d) { return QRat(-1) * std::move(d); }

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

} // namespace

TEST_CASE("column derivations scale the coordinates containing their column") {
  for (Ambient a : {G24, G25, G36}) {
    GrassDerivation sum(a, 0);
    for (int i = 1; i <= a.n; ++i) {
      GrassDerivation d = column_derivation(a, i);
      CHECK(d.verified_degree == 2);
      for (const auto& g : pluckers(a)) {
        GrassElement x = GrassElement::generator(g);
        CHECK(d.image(g) == (g.contains(i) ? x : GrassElement(a)));
      }
      sum += d;
    }
    // The average over all columns is the identity on generators.
    sum *= QRat(1) / QRat(a.k);
    for (const auto& g : pluckers(a)) CHECK(sum.image(g) == GrassElement::generator(g));
  }
  CHECK(column_derivation(G24, 1).image(PluckerIndex(G24, {1, 2})) == gen_of(G24, {1, 2}));
  CHECK(column_derivation(G24, 3).image(PluckerIndex(G24, {1, 2})).is_zero());
  CHECK_THROWS_AS(column_derivation(G24, 5), DomainError);

  // On products D_i([I][J]) = (delta(i in I) + delta(i in J)) [I][J].
  for (int i = 1; i <= 4; ++i)
    for (const auto& x : pluckers(G24))
      for (const auto& y : pluckers(G24)) {
        GrassElement prod = mul(GrassElement::generator(x), GrassElement::generator(y));
        CHECK(apply(column_derivation(G24, i), prod) == prod * QRat(int(x.contains(i)) + int(y.contains(i))));
      }
  CHECK(apply(column_derivation(G24, 2), GrassElement::scalar(G24, QRat(5))).is_zero());
}

TEST_CASE("row and column derivations of quantum matrices") {
  MatShape s23{2, 3};
  CHECK(apply(row_derivation(s23, 1), gen(s23, 1, 2)) == gen(s23, 1, 2));
  CHECK(apply(row_derivation(s23, 1), gen(s23, 2, 2)).is_zero());
  for (MatShape s : {MatShape{2, 2}, MatShape{2, 3}, MatShape{3, 3}, MatShape{3, 4}}) {
    QMDerivation rows(s), cols(s);
    for (int i = 1; i <= s.m; ++i) rows += row_derivation(s, i);
    for (int j = 1; j <= s.n; ++j) cols += col_derivation(s, j);
    CHECK(rows == cols);
  }
  // Action on every quantum minor of 2x3 and 3x3.
  for (MatShape s : {MatShape{2, 3}, MatShape{3, 3}})
    for (int t = 1; t <= s.m; ++t)
      for (const auto& rs : subsets(s.m, t))
        for (const auto& cs : subsets(s.n, t)) {
          QMElement mnr = quantum_minor(s, rs, cs);
          for (int i = 1; i <= s.m; ++i) {
            bool in = std::find(rs.begin(), rs.end(), i) != rs.end();
            CHECK(apply(row_derivation(s, i), mnr) == (in ? mnr : QMElement(s)));
          }
          for (int j = 1; j <= s.n; ++j) {
            bool in = std::find(cs.begin(), cs.end(), j) != cs.end();
            CHECK(apply(col_derivation(s, j), mnr) == (in ? mnr : QMElement(s)));
          }
        }
  MatShape s22{2, 2};
  QMElement det = quantum_determinant(s22);
  CHECK(apply(col_derivation(s22, 2), det) == det);
  CHECK_THROWS_AS(row_derivation(s23, 3), DomainError);
}

TEST_CASE("inner derivations") {
  CHECK(inner(GrassElement::scalar(G24, QRat(3))).is_zero());
  CHECK(inner(QMElement::scalar(MatShape{2, 2}, QRat(3))).is_zero());
  CHECK(inner(TElement::scalar(G24, QRat(3))) == TDerivation(G24));
  CHECK(inner(quantum_determinant(MatShape{2, 2})).is_zero());
  CHECK(inner(quantum_determinant(MatShape{3, 3})).is_zero());

  // ad of a power of [u] on [w].
  for (Ambient a : {G24, G25}) {
    PluckerIndex u = leftmost(a), w = rightmost(a);
    for (int m = 1; m <= 2; ++m) {
      PluckerWord um;
      um.factors.assign(static_cast<std::size_t>(m), u);
      PluckerWord umw = um;
      umw.factors.push_back(w);
      QRat c = QRat(1) - qpow(-weights(w).d * m);
      CHECK(inner(GrassElement::word(a, um)).image(w) == GrassElement::word(a, umw, c));
    }
  }

  // Only scalars are central among standard monomials of low degree.
  for (int d = 1; d <= 3; ++d)
    for (const auto& z : standard_monomials(G24, d)) CHECK_FALSE(inner(GrassElement::word(G24, z)).is_zero());

  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    GrassElement z = random_element(G24, 1 + static_cast<int>(rng() % 2), 2, rng);
    GrassElement x = random_element(G24, 1 + static_cast<int>(rng() % 2), 2, rng);
    CHECK(apply(inner(z), x) == mul(z, x) - mul(x, z));
  }
}

TEST_CASE("extended row and column derivations on Pluecker coordinates") {
  for (Ambient a : {G24, G25, G36}) {
    for (const auto& g : pluckers(a)) {
      TElement x = grass_to_T(GrassElement::generator(g));
      for (int i = 1; i <= a.k; ++i) {
        QRat c(g.contains(a.k + 1 - i) ? -1 : 0);
        CHECK(apply(dtilde_row(a, i), x) == x * c);
        // The literal choice y -> y instead gives (delta(i in A) + 1)[I].
        TDerivation lit = dtilde_row(a, i);
        lit.y_image = TElement::y_power(a, 1);
        CHECK(apply(lit, x) == x * QRat(g.contains(a.k + 1 - i) ? 1 : 2));
      }
      for (int j = 1; j <= a.p(); ++j) CHECK(apply(dtilde_col(a, j), x) == x * QRat(g.contains(a.k + j) ? 1 : 0));
    }
    for (int i = 1; i <= a.k; ++i) CHECK(dtilde_row(a, i) == negate(dtilde_column(a, a.k + 1 - i)));
    for (int j = 1; j <= a.p(); ++j) CHECK(dtilde_col(a, j) == dtilde_column(a, a.k + j));
  }
  // G(2,4) spelled out.
  CHECK(dtilde_row(G24, 1) == negate(dtilde_column(G24, 2)));
  CHECK(dtilde_row(G24, 2) == negate(dtilde_column(G24, 1)));
  CHECK(dtilde_col(G24, 1) == dtilde_column(G24, 3));
  CHECK(dtilde_col(G24, 2) == dtilde_column(G24, 4));
  CHECK(dtilde_row(G24, 1) == negate(extend_general(column_derivation(G24, 2))));
}

TEST_CASE("sum of all extended column derivations") {
  for (Ambient a : {G24, G25}) {
    TDerivation sum(a);
    for (int i = 1; i <= a.n; ++i) sum += dtilde_column(a, i);
    CHECK(sum.images.empty());
    CHECK(sum.y_image == TElement::y_power(a, 1) * QRat(a.k));
  }
}

TEST_CASE("extension to T and restriction to quantum matrices") {
  CHECK(extend_to_T(GrassDerivation(G24, 0)) == TDerivation(G24));
  CHECK_THROWS_AS(extend_to_T(column_derivation(G24, 1)), PreconditionError);

  GrassDerivation d = column_derivation(G24, 3) - column_derivation(G24, 4);
  TDerivation t = extend_to_T(d);
  CHECK(t.y_image.is_zero());
  CHECK(t == dtilde_col(G24, 1) + negate(dtilde_col(G24, 2)));
  QMDerivation r = restrict_to_R(t);
  CHECK(images_homogeneous_of_degree(r, 1));
  CHECK(r == col_derivation(MatShape{2, 2}, 1) - col_derivation(MatShape{2, 2}, 2));
  CHECK(restrict_to_R(TDerivation(G24)).is_zero());

  CHECK_THROWS_AS(restrict_to_R(dtilde_row(G24, 1)), PreconditionError);
  CHECK_THROWS_AS(restrict_to_R(dtilde_col(G24, 2)), PreconditionError);  // does not kill the minor
  CHECK_THROWS_AS(restrict_to_R(TDerivation(G35)), PreconditionError);

  // Agreement of T-side Leibniz with the grassmannian side on x_ij = [L][u]^-1.
  TDerivation e = extend_general(column_derivation(G25, 4));
  for (int g = 0; g < 6; ++g) {
    MatShape s{2, 3};
    TElement x = TElement::x(G25, s.row(g), s.col(g));
    CHECK(apply(e, x) == e.image(g));
  }
}

TEST_CASE("normalization of simple derivations") {
  PluckerIndex u = leftmost(G24), w = rightmost(G24);

  auto zero = normalize(GrassDerivation(G24, 0));
  CHECK(zero.ok);
  CHECK(zero.log.empty());
  CHECK(zero.normalized.is_zero());

  auto d1 = normalize(column_derivation(G24, 1));
  CHECK(d1.ok);
  REQUIRE(d1.log.size() == 1);
  CHECK(d1.log[0].kind == Adjustment::Kind::column);
  CHECK(d1.log[0].column == 1);
  CHECK(d1.log[0].coefficient == QRat(1));
  CHECK(d1.normalized.is_zero());

  auto in = normalize(inner(gen_of(G24, {1, 3})));
  CHECK(in.ok);
  CHECK_FALSE(in.log.empty());
  for (const auto& adj : in.log) CHECK(adj.kind == Adjustment::Kind::inner);
  CHECK(in.normalized.image(u).is_zero());
  CHECK(in.normalized.image(w).is_zero());
  CHECK(replay(inner(gen_of(G24, {1, 3})), in.log) == in.normalized);
  CHECK(verify(in.normalized, 2));
  CHECK(normalize(in.normalized).log.empty());
}

TEST_CASE("normalization of 50 seeded derivations") {
  PluckerIndex u = leftmost(G24), w = rightmost(G24);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    std::mt19937_64 rng(seed);
    GrassDerivation d(G24);
    for (int i = 1; i <= 4; ++i)
      if (rng() % 2) d += random_coeff(rng) * column_derivation(G24, i);
    d += inner(random_element(G24, 1, 1 + static_cast<int>(rng() % 3), rng));
    if (rng() % 2) d += inner(random_element(G24, 1, 1, rng));
    auto res = normalize(d);
    INFO("seed " << seed << ": " << res.failure);
    CHECK(res.ok);
    CHECK(res.normalized.image(u).is_zero());
    CHECK(res.normalized.image(w).is_zero());
    CHECK(replay(d, res.log) == res.normalized);
    CHECK(normalize(res.normalized).log.empty());
  }
}

TEST_CASE("complement-reversal transport") {
  CHECK(psi(PluckerIndex(G25, {1, 2})) == PluckerIndex(G35, {1, 2, 3}));
  CHECK(psi(PluckerIndex(G24, {1, 3})) == PluckerIndex(G24, {1, 3}));
  for (Ambient a : {G24, G25, G35})
    for (const auto& g : pluckers(a)) {
      CHECK(psi_inverse(psi(g)) == g);
      CHECK(weights(psi(g)).d == weights(g).d);
    }
  // Relations go to relations.
  for (Ambient a : {G24, G25})
    for (const auto& r : relation_kernel(a, 2).basis) CHECK(psi(r).is_zero());

  CHECK(psi_transport(GrassDerivation(G25, 0)).is_zero());
  for (Ambient a : {G24, G25, G35}) {
    Ambient b{a.n - a.k, a.n};
    GrassDerivation sum(b, 0);
    for (int j = 1; j <= a.n; ++j) sum += column_derivation(b, j);
    for (int i = 1; i <= a.n; ++i) {
      GrassDerivation expect = QRat(1) / QRat(a.n - a.k) * sum - column_derivation(b, a.n + 1 - i);
      CHECK(psi_transport(column_derivation(a, i)) == expect);
    }
  }
}

TEST_CASE("non-square decomposition") {
  MatShape s{2, 3};
  auto c = decompose_nonsquare(col_derivation(s, 1));
  CHECK(c.a == std::vector<QRat>{QRat(0), QRat(0)});
  CHECK(c.b == std::vector<QRat>{QRat(1), QRat(0), QRat(0)});

  QMDerivation bad = row_derivation(s, 1) - col_derivation(s, 2) - col_derivation(s, 3);
  QMElement minor = quantum_minor(s, {1, 2}, {2, 3});
  CHECK(apply(bad, minor) == minor * QRat(-1));
  CHECK_THROWS_AS(decompose_nonsquare(bad), PreconditionError);
  CHECK_THROWS_AS(decompose_nonsquare(inner(gen(s, 1, 1))), PreconditionError);
  CHECK_THROWS_AS(decompose_nonsquare(QMDerivation(MatShape{2, 2})), PreconditionError);

  std::mt19937_64 rng(11);
  for (MatShape sh : {MatShape{2, 3}, MatShape{2, 4}, MatShape{3, 4}})
    for (int t = 0; t < 10; ++t) {
      NonsquareDecomposition in;
      for (int i = 0; i < sh.m; ++i) in.a.push_back(random_coeff(rng));
      for (int j = 0; j < sh.n; ++j) in.b.push_back(random_coeff(rng));
      // Kill the rightmost minor: sum a + sum of the last m b's = 0.
      QRat excess(0);
      for (const auto& x : in.a) excess += x;
      for (int j = sh.n - sh.m; j < sh.n; ++j) excess += in.b[static_cast<std::size_t>(j)];
      in.b.back() -= excess;
      QMDerivation d = reconstruct(sh, in);
      auto out = decompose_nonsquare(d);
      CHECK(out.a[0] == QRat(0));
      CHECK(reconstruct(sh, out) == d);
    }
}

TEST_CASE("Leibniz rule on random products") {
  std::mt19937_64 rng(3);
  std::vector<GrassDerivation> ds;
  for (int i = 1; i <= 4; ++i) ds.push_back(column_derivation(G24, i));
  ds.push_back(inner(random_element(G24, 1, 2, rng)));
  ds.push_back(normalize(inner(gen_of(G24, {2, 3}))).normalized);
  for (const auto& d : ds)
    for (int t = 0; t < 4; ++t) {
      GrassElement x = random_element(G24, 1 + static_cast<int>(rng() % 2), 2, rng);
      GrassElement y = random_element(G24, 1, 2, rng);
      CHECK(leibniz_holds(d, x, y));
    }

  MatShape s{2, 3};
  std::vector<QMDerivation> qs{row_derivation(s, 1), col_derivation(s, 3), inner(gen(s, 1, 2))};
  for (const auto& d : qs) {
    QMElement x = gen(s, 2, 1) + gen(s, 1, 3) * qpow(2);
    QMElement y = gen(s, 1, 1) * gen(s, 2, 3);
    CHECK(apply(d, x * y) == apply(d, x) * y + x * apply(d, y));
  }

  TElement x = TElement::x(G24, 1, 2) * TElement::y_power(G24, -1);
  TElement y = TElement::y_power(G24, 2) + TElement::x(G24, 2, 1);
  for (const auto& d : {dtilde_row(G24, 1), dtilde_col(G24, 2), dtilde_column(G24, 2), inner(x)})
    CHECK(apply(d, x * y) == apply(d, x) * y + x * apply(d, y));
}

TEST_CASE("degree-preserving solver output has diagonal parts on u and w") {
  auto space = solve_der_space(G24, 0, 3);
  PluckerIndex u = leftmost(G24), w = rightmost(G24);
  for (const auto& d : space.basis) {
    for (const auto& g : pluckers(G24)) CHECK(graded_component(d.image(g), 0).is_zero());
    GrassElement du = d.image(u), dw = d.image(w);
    CHECK(du == GrassElement::generator(u, du.coeff(PluckerWord{{u}})));
    CHECK(dw == GrassElement::generator(w, dw.coeff(PluckerWord{{w}})));
  }
  CHECK(solve_der_space(G24, -1, 3).basis.empty());
}
