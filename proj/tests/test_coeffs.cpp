#include "doctest.h"

#include "qgrass/coeffs.hpp"
#include "qgrass/error.hpp"

#include <random>

using namespace qgrass;

namespace {

QRat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2), len(1, 3);
  auto poly = [&](bool ordinary) {
    std::map<int, mpq_class> t;
    int n = len(rng);
    for (int i = 0; i < n; ++i) t[ordinary ? std::abs(e(rng)) : e(rng)] += c(rng);
    return QPoly::from_terms(t);
  };
  QPoly num = poly(false), den = poly(true);
  if (den.is_zero()) den = QPoly(1);
  return QRat(num, den);
}

}  // namespace

TEST_CASE("poly arithmetic") {
  QPoly q = QPoly::monomial(1, 1);
  QPoly a = q + QPoly(1);
  QPoly b = q - QPoly(1);
  CHECK(a * b == q * q - QPoly(1));
  CHECK((a * b).to_string() == "-1*q^0+1*q^2");
  CHECK(QPoly::div_exact(a * b, b) == a);
  CHECK(QPoly::gcd(a * b, a * a) == a);
  CHECK(QPoly::parse("-1*q^0+1*q^2") == a * b);
  CHECK(q.shifted(-3) == QPoly::monomial(1, -2));
  CHECK_THROWS_AS(QPoly::div_exact(a, b), Error);
}

TEST_CASE("rational functions are canonical") {
  QPoly q = QPoly::monomial(1, 1);
  QRat x(q * q - QPoly(1), q - QPoly(1));
  CHECK(x.is_polynomial());
  CHECK(x == QRat(q + QPoly(1)));
  QRat inv = qpow(1).inverse();
  CHECK(inv == qpow(-1));
  CHECK(inv.pretty() == "q^-1");
  QRat y = QRat(1) / (QRat(q) - QRat(1));
  CHECK(y.den().coeff(0) == 1);
  CHECK(QRat::parse(y.to_string()) == y);
  CHECK_THROWS_AS(QRat(1) / QRat(0), DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    QRat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == QRat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(QRat::parse(a.to_string()) == a);
  }
}

TEST_CASE("evaluation agrees with arithmetic") {
  std::mt19937_64 rng(11);
  mpq_class q0(2, 3);
  for (int it = 0; it < 100; ++it) {
    QRat a = random_rat(rng), b = random_rat(rng);
    if (a.den().eval(q0) == 0 || b.den().eval(q0) == 0) continue;
    CHECK(eval_at(a * b, q0) == eval_at(a, q0) * eval_at(b, q0));
    CHECK(eval_at(a + b, q0) == eval_at(a, q0) + eval_at(b, q0));
  }
  CHECK_THROWS_AS(eval_at(qpow(1), mpq_class(1)), EvaluationError);
  QRat pole = QRat(1) / (QRat(QPoly::monomial(1, 1)) - QRat(2));
  CHECK_THROWS_AS(eval_at(pole, mpq_class(2)), EvaluationError);
}

TEST_CASE("mod p evaluation is a ring map") {
  std::mt19937_64 rng(13);
  const std::uint64_t p = 1000003, q0 = 12345;
  for (int it = 0; it < 100; ++it) {
    QRat a = random_rat(rng), b = random_rat(rng);
    auto ea = eval_mod(a, q0, p), eb = eval_mod(b, q0, p), eab = eval_mod(a * b, q0, p);
    if (ea && eb && eab)
      CHECK(*eab == static_cast<std::uint64_t>((static_cast<unsigned __int128>(*ea) * *eb) % p));
  }
}

TEST_CASE("pretty monomials") {
  CHECK(pretty_monomial(1, 0) == "1");
  CHECK(pretty_monomial(1, -1) == "q^-1");
  CHECK(pretty_monomial(-2, 3) == "-2 q^3");
  CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
