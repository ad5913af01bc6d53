#include "doctest.h"

#include "qgrass/error.hpp"
#include "qgrass/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace qgrass;

namespace {

QMElement random_element(MatShape s, std::mt19937_64& rng, int max_deg = 3) {
  std::uniform_int_distribution<int> g(0, s.size() - 1), d(0, max_deg), c(-2, 2), e(-1, 1);
  QMElement out(s);
  for (int t = 0; t < 3; ++t) {
    QMMonomial m;
    int deg = d(rng);
    for (int i = 0; i < deg; ++i) ++m.exps[static_cast<std::size_t>(g(rng))];
    out.add_term(m, QRat(c(rng)) * qpow(e(rng)));
  }
  return out;
}

// Column form: sum over sigma of (-q)^inv(sigma) x_{r_sigma(1), c_1} ... x_{r_sigma(k), c_k},
// normalised with the word rewriter only.
QMElement column_form_minor(MatShape s, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  QMElement out(s);
  do {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inv;
    std::vector<int> word;
    for (std::size_t t = 0; t < perm.size(); ++t) word.push_back(s.index(rows[perm[t]], cols[t]));
    QRat c = (inv % 2 ? QRat(-1) : QRat(1)) * qpow(inv);
    out += c * reduce_word(s, word);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("2x2 relations") {
  MatShape s{2, 2};
  auto a = gen(s, 1, 1), b = gen(s, 1, 2), c = gen(s, 2, 1), d = gen(s, 2, 2);
  QRat q = qpow(1), qi = qpow(-1);
  CHECK(b * a == qi * (a * b));
  CHECK(c * a == qi * (a * c));
  CHECK(d * b == qi * (b * d));
  CHECK(d * c == qi * (c * d));
  CHECK(c * b == b * c);
  CHECK(d * a == a * d - (q - qi) * (b * c));
  auto det = quantum_determinant(s);
  CHECK(det == a * d - q * (b * c));
  CHECK(det == d * a - qi * (b * c));
  CHECK(to_string(det) == "(-q) x[1,2]·x[2,1] + x[1,1]·x[2,2]");
}

TEST_CASE("rewriting is confluent") {
  std::mt19937_64 rng(3);
  for (MatShape s : {MatShape{2, 2}, MatShape{2, 3}, MatShape{3, 3}}) {
    std::uniform_int_distribution<int> g(0, s.size() - 1);
    for (int it = 0; it < 30; ++it) {
      std::vector<int> word(5);
      for (auto& w : word) w = g(rng);
      auto left = reduce_word(s, word, RewriteStrategy::leftmost);
      CHECK(reduce_word(s, word, RewriteStrategy::rightmost) == left);
      CHECK(reduce_word(s, word, RewriteStrategy::random, rng()) == left);
      QMElement prod = QMElement::scalar(s, QRat(1));
      for (int w : word) prod = prod * gen(s, s.row(w), s.col(w));
      CHECK(prod == left);
    }
  }
}

TEST_CASE("longer words in 3x4 reduce to the same normal form") {
  MatShape s{3, 4};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> g(0, s.size() - 1);
  for (int it = 0; it < 25; ++it) {
    std::vector<int> word(6);
    for (auto& w : word) w = g(rng);
    auto left = reduce_word(s, word, RewriteStrategy::leftmost);
    CHECK(reduce_word(s, word, RewriteStrategy::rightmost) == left);
    CHECK(reduce_word(s, word, RewriteStrategy::random, rng()) == left);
  }
}

TEST_CASE("rightmost maximal minor q-commutes with every generator") {
  // Generators in the leftmost n-m columns pick up q; the others commute.
  for (MatShape s : {MatShape{2, 3}, MatShape{2, 4}, MatShape{3, 4}}) {
    std::vector<int> rows(static_cast<std::size_t>(s.m)), cols(static_cast<std::size_t>(s.m));
    std::iota(rows.begin(), rows.end(), 1);
    std::iota(cols.begin(), cols.end(), s.n - s.m + 1);
    QMElement minor = column_form_minor(s, rows, cols);
    for (int i = 1; i <= s.m; ++i)
      for (int j = 1; j <= s.n; ++j) {
        QMElement x = gen(s, i, j);
        QRat c = j <= s.n - s.m ? qpow(1) : QRat(1);
        CHECK(x * minor == c * (minor * x));
      }
  }
}

TEST_CASE("multiplication is associative and matches the reference") {
  std::mt19937_64 rng(5);
  MatShape s{2, 3};
  for (int it = 0; it < 20; ++it) {
    auto a = random_element(s, rng), b = random_element(s, rng), c = random_element(s, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == mul_reference(a, b));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("quantum determinant is central") {
  for (int n : {2, 3}) {
    MatShape s{n, n};
    auto det = quantum_determinant(s);
    for (int g = 0; g < s.size(); ++g) CHECK(commutator(det, gen(s, s.row(g), s.col(g))).is_zero());
  }
}

TEST_CASE("minors agree with the column form") {
  MatShape s{3, 4};
  CHECK(quantum_minor(s, {1, 2}, {2, 4}) == column_form_minor(s, {1, 2}, {2, 4}));
  CHECK(quantum_minor(s, {1, 2, 3}, {1, 3, 4}) == column_form_minor(s, {1, 2, 3}, {1, 3, 4}));
  MatShape sq{4, 4};
  int saved = minor_permutation_threshold();
  set_minor_permutation_threshold(2);
  auto by_expansion = quantum_minor(sq, {1, 2, 3, 4}, {1, 2, 3, 4});
  set_minor_permutation_threshold(saved);
  CHECK(by_expansion == column_form_minor(sq, {1, 2, 3, 4}, {1, 2, 3, 4}));
}

TEST_CASE("bicontent and gradings") {
  MatShape s{2, 3};
  auto m = quantum_minor(s, {1, 2}, {1, 3});
  for (const auto& [mon, c] : m.terms()) {
    auto bc = bicontent(mon, s);
    CHECK(bc.rows == std::vector<int>{1, 1});
    CHECK(bc.cols == std::vector<int>{1, 0, 1});
  }
  CHECK(m.is_homogeneous());
  CHECK(graded_component(m, 2) == m);
  CHECK(graded_component(m, 1).is_zero());
}

TEST_CASE("monomial text round trip and domain errors") {
  MatShape s{3, 3};
  auto m = (gen(s, 1, 2) * gen(s, 1, 2) * gen(s, 3, 1)).terms().begin()->first;
  auto text = to_string(m, s);
  CHECK(text == "x[1,2]^2·x[3,1]");
  CHECK(parse_monomial(text, s) == m);
  CHECK_THROWS_AS(gen(s, 4, 1), DomainError);
  CHECK_THROWS_AS(check_shape(MatShape{6, 6}), DomainError);
}
