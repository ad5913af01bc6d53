#pragma once

// The quantum matrix algebra O_q(M(m,n)).
//
// Elements are kept in PBW normal form: linear combinations of ordered
// monomials in the generators x_ij, ordered lexicographically (row-major).
// Products are normalised by the four q-commutation rules; the production
// path memoises (normal monomial) * (generator) per shape, and a plain word
// rewriter is kept as the reference implementation.

#include "qgrass/coeffs.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qgrass {

struct MatShape {
  int m = 1;
  int n = 1;

  int size() const { return m * n; }
  /// Generator index of x_ij (1-based i, j) in row-major order.
  int index(int i, int j) const { return (i - 1) * n + (j - 1); }
  int row(int g) const { return g / n + 1; }
  int col(int g) const { return g % n + 1; }

  auto operator<=>(const MatShape&) const = default;
};

/// Largest supported number of generators m*n.
inline constexpr int kMaxGenerators = 32;

/// Throws DomainError unless 1 <= m, 1 <= n and m*n <= kMaxGenerators.
void check_shape(MatShape shape);

/// Exponent vector of a PBW monomial, indexed by generator position.
struct QMMonomial {
  std::array<std::uint8_t, kMaxGenerators> exps{};

  int degree() const;
  /// Index of the largest generator present, or -1 for the empty monomial.
  int last() const;
  /// Generators in PBW order, repeated by multiplicity.
  std::vector<int> word() const;

  auto operator<=>(const QMMonomial&) const = default;
};

struct Bicontent {
  std::vector<int> rows;  // length m
  std::vector<int> cols;  // length n

  auto operator<=>(const Bicontent&) const = default;
};

class QMElement {
public:
  using Terms = std::map<QMMonomial, QRat>;

  QMElement() = default;
  explicit QMElement(MatShape shape) : shape_(shape) {}

  static QMElement scalar(MatShape shape, const QRat& c);
  static QMElement monomial(MatShape shape, const QMMonomial& mon, const QRat& c = QRat(1));

  MatShape shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (zero when absent).
  QRat coeff(const QMMonomial& mon) const;

  /// Adds c*mon, dropping the term if it cancels.
  void add_term(const QMMonomial& mon, const QRat& c);

  QMElement operator-() const;
  QMElement& operator+=(const QMElement& o);
  QMElement& operator-=(const QMElement& o);
  QMElement& operator*=(const QRat& c);
  friend QMElement operator+(QMElement a, const QMElement& b) { return a += b; }
  friend QMElement operator-(QMElement a, const QMElement& b) { return a -= b; }
  friend QMElement operator*(QMElement a, const QRat& c) { return a *= c; }
  friend QMElement operator*(const QRat& c, QMElement a) { return a *= c; }
  friend QMElement operator*(const QMElement& a, const QMElement& b);

  friend bool operator==(const QMElement& a, const QMElement& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

  /// True when every term has the same degree (zero counts as homogeneous).
  bool is_homogeneous() const;

private:
  MatShape shape_;
  Terms terms_;
};

/// The generator x_ij; throws DomainError when out of range.
QMElement gen(MatShape shape, int i, int j);

/// Product in PBW normal form (memoised production path).
QMElement mul(const QMElement& a, const QMElement& b);

/// Normal form of (normal monomial) * x_g.
QMElement mul_monomial_generator(MatShape shape, const QMMonomial& mon, int g);

enum class RewriteStrategy { leftmost, rightmost, random };

/// Reference rewriter: normalises the word x_{w0} x_{w1} ... by repeatedly
/// rewriting an out-of-order adjacent pair chosen by `strategy`.
QMElement reduce_word(MatShape shape, const std::vector<int>& word,
                      RewriteStrategy strategy = RewriteStrategy::leftmost, std::uint64_t seed = 0);

/// Product computed with the reference rewriter only.
QMElement mul_reference(const QMElement& a, const QMElement& b,
                        RewriteStrategy strategy = RewriteStrategy::leftmost);

QMElement commutator(const QMElement& a, const QMElement& b);

/// Sum over permutations with coefficient (-q)^{inversions}; square shapes only.
QMElement quantum_determinant(MatShape shape);

/// Permutation sizes at or below this use the permutation sum; larger minors
/// expand along the first row.
void set_minor_permutation_threshold(int t);
int minor_permutation_threshold();

/// The quantum minor [I|J] (1-based, sorted, |I| = |J| >= 1), cached per shape.
QMElement quantum_minor(MatShape shape, const std::vector<int>& rows, const std::vector<int>& cols);

Bicontent bicontent(const QMMonomial& mon, MatShape shape);
QMElement graded_component(const QMElement& a, int degree);
QMElement bigraded_component(const QMElement& a, const Bicontent& content);

/// x[i,j]^e factors joined by a middle dot, in PBW order; "1" for the empty monomial.
std::string to_string(const QMMonomial& mon, MatShape shape);
QMMonomial parse_monomial(const std::string& text, MatShape shape);
/// Human-readable sum, e.g. "x[1,1]·x[2,2] + (-q) x[1,2]·x[2,1]".
std::string to_string(const QMElement& a);

/// Monomial counter for statistics and benchmarks.
std::size_t product_cache_size(MatShape shape);
void clear_product_caches();

} // namespace qgrass
