#pragma once

// Derivations of O_q(G(k,n)), O_q(M(m,n)) and T, stored by their values on
// generators and extended by the Leibniz rule.

#include "qgrass/dehom.hpp"
#include "qgrass/qgrass.hpp"
#include "qgrass/qmatrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qgrass {

struct GrassDerivation {
  Ambient ambient;
  /// Common degree shift of the images (image degree = 1 + shift); nullopt for mixed sums.
  std::optional<int> shift;
  std::map<PluckerIndex, GrassElement> images;  // absent generators map to zero
  /// 0 = unverified; d = the Leibniz extension kills the relation kernel in degrees 2..d.
  int verified_degree = 0;

  GrassDerivation() = default;
  explicit GrassDerivation(Ambient a, std::optional<int> s = std::nullopt) : ambient(a), shift(s) {}

  GrassElement image(const PluckerIndex& g) const;
  void set(const PluckerIndex& g, const GrassElement& x);
  bool is_zero() const;

  GrassDerivation& operator+=(const GrassDerivation& o);
  GrassDerivation& operator-=(const GrassDerivation& o);
  GrassDerivation& operator*=(const QRat& c);
  friend GrassDerivation operator+(GrassDerivation a, const GrassDerivation& b) { return a += b; }
  friend GrassDerivation operator-(GrassDerivation a, const GrassDerivation& b) { return a -= b; }
  friend GrassDerivation operator*(const QRat& c, GrassDerivation a) { return a *= c; }
  /// Equal images on every generator (shift and status ignored).
  friend bool operator==(const GrassDerivation& a, const GrassDerivation& b);
};

struct QMDerivation {
  MatShape shape;
  std::map<int, QMElement> images;  // generator index -> image

  QMDerivation() = default;
  explicit QMDerivation(MatShape s) : shape(s) {}

  QMElement image(int g) const;
  void set(int g, const QMElement& x);
  bool is_zero() const;

  QMDerivation& operator+=(const QMDerivation& o);
  QMDerivation& operator-=(const QMDerivation& o);
  QMDerivation& operator*=(const QRat& c);
  friend QMDerivation operator+(QMDerivation a, const QMDerivation& b) { return a += b; }
  friend QMDerivation operator-(QMDerivation a, const QMDerivation& b) { return a -= b; }
  friend QMDerivation operator*(const QRat& c, QMDerivation a) { return a *= c; }
  friend bool operator==(const QMDerivation& a, const QMDerivation& b);
};

struct TDerivation {
  Ambient ambient;
  std::map<int, TElement> images;  // generator index of O_q(M(k,p)) -> image
  TElement y_image;

  TDerivation() = default;
  explicit TDerivation(Ambient a);

  TElement image(int g) const;
  /// -y^-1 D(y) y^-1.
  TElement y_inverse_image() const;

  TDerivation& operator+=(const TDerivation& o);
  TDerivation& operator*=(const QRat& c);
  friend TDerivation operator+(TDerivation a, const TDerivation& b) { return a += b; }
  friend TDerivation operator*(const QRat& c, TDerivation a) { return a *= c; }
  friend bool operator==(const TDerivation& a, const TDerivation& b);
};

// Leibniz application.

/// D on a single word, straightened; the word need not be standard.
GrassElement apply_word(const GrassDerivation& d, const PluckerWord& w);
/// Linear extension over the terms of x (formal combinations allowed).
GrassElement apply(const GrassDerivation& d, const GrassElement& x);
/// D on a word x_{g1}...x_{gt}, computed in PBW normal form.
QMElement apply_word(const QMDerivation& d, const std::vector<int>& word);
QMElement apply(const QMDerivation& d, const QMElement& x);
TElement apply(const TDerivation& d, const TElement& x);

// Named families.

/// D_i([I]) = delta(i in I) [I].
GrassDerivation column_derivation(Ambient a, int i);
/// D_{i*}(x_rs) = delta_ir x_rs.
QMDerivation row_derivation(MatShape s, int i);
/// D_{*j}(x_rs) = delta_js x_rs.
QMDerivation col_derivation(MatShape s, int j);

GrassDerivation inner(const GrassElement& z);
QMDerivation inner(const QMElement& z);
TDerivation inner(const TElement& z);

/// Extension to T via D(x_ij) = D([L]) [u]^-1 + [L] D([u]^-1) and D(y) = D([u]).
TDerivation extend_general(const GrassDerivation& d);
/// Extension with D(y) = 0; throws PreconditionError unless D([u]) = 0.
TDerivation extend_to_T(const GrassDerivation& d);

/// Extension of D_{i*} with y -> -y (the sign under which D~_{i*}([I]) = -delta(k+1-i in I)[I]).
TDerivation dtilde_row(Ambient a, int i);
/// Extension of D_{*j} with y -> 0.
TDerivation dtilde_col(Ambient a, int j);
/// Extension of the column derivation D_i (y -> y for i <= k, 0 otherwise).
TDerivation dtilde_column(Ambient a, int i);

/// Restriction to R = O_q(M(k,p)). Requires 2k <= n, D(y) = 0 and D killing
/// the rightmost minor (PreconditionError); throws ConsistencyError if an
/// image leaves R.
QMDerivation restrict_to_R(const TDerivation& d);
bool images_homogeneous_of_degree(const QMDerivation& d, int degree);

// Adjustment pipeline.

struct Adjustment {
  enum class Kind { inner, column };
  Kind kind = Kind::inner;
  GrassElement z;     // inner: D <- D - ad_z
  int column = 0;     // column: D <- D - coefficient * D_column
  QRat coefficient;

  friend bool operator==(const Adjustment&, const Adjustment&) = default;
};

using AdjustmentLog = std::vector<Adjustment>;

struct NormalizeResult {
  GrassDerivation normalized;
  AdjustmentLog log;
  bool ok = false;
  /// Non-empty when D'([u]) or D'([w]) is nonzero after the pipeline.
  std::string failure;
};

/// Removes mixed [u]^a S terms from D([u]), [u]^{a-1}[w] terms from D([w]),
/// then lambda D_1 and alpha D_n, so that D'([u]) = D'([w]) = 0.
NormalizeResult normalize(const GrassDerivation& d);
GrassDerivation replay(const GrassDerivation& d, const AdjustmentLog& log);

// Transport along [I] -> [w0(complement of I)].

PluckerIndex psi(const PluckerIndex& i);
PluckerIndex psi_inverse(const PluckerIndex& j);
/// Algebra map on standard-form elements of G(k,n), straightened in G(n-k,n).
GrassElement psi(const GrassElement& x);
GrassElement psi_inverse(const GrassElement& x);
/// psi D psi^-1 on G(n-k,n).
GrassDerivation psi_transport(const GrassDerivation& d);

// Non-square decomposition.

struct NonsquareDecomposition {
  std::vector<QRat> a;  // coefficients of D_{i*}, a[0] = 0
  std::vector<QRat> b;  // coefficients of D_{*j}
};

/// For O_q(M(m,n)) with m < n: writes D = sum a_i D_{i*} + sum b_j D_{*j}.
/// Throws PreconditionError on inadmissible input and ConsistencyError if a
/// step of the construction fails.
NonsquareDecomposition decompose_nonsquare(const QMDerivation& d);
QMDerivation reconstruct(MatShape s, const NonsquareDecomposition& c);

// Checks.

/// Leibniz extension kills the relation kernel in degrees 2..cap.
bool verify(GrassDerivation& d, int cap);
/// D(ab) = D(a) b + a D(b) on the given elements.
bool leibniz_holds(const GrassDerivation& d, const GrassElement& a, const GrassElement& b);

std::string to_string(const GrassDerivation& d);

} // namespace qgrass
