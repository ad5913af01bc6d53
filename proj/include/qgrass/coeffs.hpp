#pragma once

// Exact arithmetic in K = Q(q).
//
// QPoly is a Laurent polynomial in q with rational coefficients, stored
// densely from its lowest exponent. QRat is a reduced fraction of two such
// polynomials whose denominator is an ordinary polynomial with constant
// term 1, so equal field elements have identical representations.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgrass {

class QPoly {
public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const mpq_class& c);

  static QPoly monomial(const mpq_class& c, int exponent);
  static QPoly from_terms(const std::map<int, mpq_class>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// True for c*q^k (units of the Laurent ring), including constants.
  bool is_monomial() const { return coeffs_.size() == 1; }

  /// Lowest and highest exponents; only meaningful when nonzero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  mpq_class coeff(int exponent) const;
  const mpq_class& lowest_coeff() const { return coeffs_.front(); }
  const mpq_class& highest_coeff() const { return coeffs_.back(); }
  std::map<int, mpq_class> terms() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const mpq_class& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& c) { return a *= c; }

  /// Multiplies by q^k.
  QPoly shifted(int k) const;

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Monic gcd of the ordinary parts (powers of q are units).
  static QPoly gcd(const QPoly& a, const QPoly& b);
  /// Exact quotient; throws if b does not divide a in Q[q, 1/q].
  static QPoly div_exact(const QPoly& a, const QPoly& b);

  mpq_class eval(const mpq_class& q0) const;
  /// Evaluation in Z/p at q0; nullopt when a coefficient denominator vanishes mod p.
  std::optional<std::uint64_t> eval_mod(std::uint64_t q0, std::uint64_t p) const;

  /// Canonical text: terms "c*q^k" sorted by exponent joined by '+', "0" for zero.
  std::string to_string() const;
  static QPoly parse(std::string_view text);

  std::size_t hash() const;

private:
  void trim();

  int low_ = 0;
  std::vector<mpq_class> coeffs_;
};

class QRat {
public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QRat(const mpq_class& c) : num_(c), den_(1) {}
  explicit QRat(QPoly num) : num_(std::move(num)), den_(1) {}
  /// Builds num/den in canonical form; throws DivisionByZero on a zero denominator.
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// c*q^k for some rational c != 0 and integer k.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  QRat inverse() const;
  /// Multiplies by q^k without renormalising.
  QRat shifted(int k) const;

  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;
  /// Human-oriented rendering ("q^-1", "-2 q", "(q^2 - 1)/(q + 1)").
  std::string pretty() const;
  static QRat parse(std::string_view text);

  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

private:
  void normalize();

  QPoly num_;
  QPoly den_;
};

/// The monomial q^k.
QRat qpow(int k);

/// Evaluates x at q = q0. Throws EvaluationError for q0 in {0, 1, -1} or at a pole.
mpq_class eval_at(const QRat& x, const mpq_class& q0);

/// Evaluation in Z/p; nullopt when the value is undefined mod p.
std::optional<std::uint64_t> eval_mod(const QRat& x, std::uint64_t q0, std::uint64_t p);

/// Parses "a" or "a/b" into a rational; throws ParseError.
mpq_class parse_rational(std::string_view text);

/// Pretty form of a single term c*q^k, e.g. "q^-1", "-2 q^3", "1".
std::string pretty_monomial(const mpq_class& c, int k);

} // namespace qgrass
