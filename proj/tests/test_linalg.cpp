#include "doctest.h"

#include "qgrass/error.hpp"
#include "qgrass/linalg.hpp"

using namespace qgrass;

namespace {

QRat q(int k) { return qpow(k); }

}  // namespace

TEST_CASE("nullspace of a q-dependent matrix") {
  // rows (1, q, q^2) and (q, q^2, q^3) are dependent; (1, 1, 1) is not.
  Matrix a(3, 3);
  for (int c = 0; c < 3; ++c) {
    a(0, c) = q(c);
    a(1, c) = q(c + 1);
    a(2, c) = QRat(1);
  }
  CHECK(rank(a) == 2);
  CHECK(rank_at(a, mpq_class(2, 3)) == 2);
  auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) CHECK(dot(a.row(r), ns[0]).is_zero());
  CHECK(ns[0][2] == QRat(1));
}

TEST_CASE("rank drops only at special values") {
  Matrix a(2, 2);
  a(0, 0) = QRat(1);
  a(0, 1) = q(1);
  a(1, 0) = q(1);
  a(1, 1) = QRat(1);
  CHECK(rank(a) == 2);
  CHECK(rank_at(a, mpq_class(2)) == 2);
  Matrix inv = inverse(a);
  Vector e0{QRat(1), QRat(0)};
  Vector col0{inv(0, 0), inv(1, 0)};
  CHECK(multiply(a, col0) == e0);
}

TEST_CASE("independent rows and singular inverse") {
  Matrix a(4, 2);
  a(0, 0) = QRat(1);
  a(1, 0) = QRat(2);
  a(2, 1) = q(-1);
  a(3, 0) = QRat(1);
  a(3, 1) = QRat(1);
  auto rows = independent_rows(a);
  CHECK(rows == std::vector<std::size_t>{0, 2});
  Matrix sing(2, 2);
  sing(0, 0) = QRat(1);
  sing(1, 0) = QRat(1);
  CHECK_THROWS_AS(inverse(sing), ConsistencyError);
}

TEST_CASE("empty constraint set gives the identity basis") {
  Matrix a(0, 3);
  CHECK(nullspace(a).size() == 3);
}
