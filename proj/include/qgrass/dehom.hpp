#pragma once

// Dehomogenisation: O_q(G(k,n))[[u]^-1] = O_q(M(k,p))[y, y^-1; sigma], p = n - k,
// with y = [u] and sigma(x_ij) = q x_ij.
//
// A TElement is a finite sum of a_e y^e with a_e in O_q(M(k,p)) written to the
// left of the y power.

#include "qgrass/qgrass.hpp"
#include "qgrass/qmatrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qgrass {

class TElement {
public:
  using Terms = std::map<int, QMElement>;

  TElement() = default;
  explicit TElement(Ambient a);

  static TElement scalar(Ambient a, const QRat& c);
  /// a * y^e.
  static TElement from_matrix(Ambient a, const QMElement& x, int yexp = 0);
  static TElement y_power(Ambient a, int e);
  /// The generator x_ij of O_q(M(k,p)).
  static TElement x(Ambient a, int i, int j);

  Ambient ambient() const { return ambient_; }
  MatShape shape() const { return {ambient_.k, ambient_.p()}; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of y^e (zero when absent).
  QMElement coeff(int e) const;

  TElement operator-() const;
  TElement& operator+=(const TElement& o);
  TElement& operator-=(const TElement& o);
  TElement& operator*=(const QRat& c);
  friend TElement operator+(TElement a, const TElement& b) { return a += b; }
  friend TElement operator-(TElement a, const TElement& b) { return a -= b; }
  friend TElement operator*(TElement a, const QRat& c) { return a *= c; }
  friend TElement operator*(const QRat& c, TElement a) { return a *= c; }
  friend TElement operator*(const TElement& a, const TElement& b);

  friend bool operator==(const TElement& a, const TElement& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

private:
  void add(int e, const QMElement& x);

  Ambient ambient_;
  Terms terms_;
};

/// a * b with y^e b = sigma^e(b) y^e.
TElement t_mul(const TElement& a, const TElement& b);
/// sigma^r: scales each PBW term of degree d by q^{rd}.
QMElement sigma_power(const QMElement& x, int r);

struct PluckerFraction {
  PluckerIndex index;  // [L]
  int yexp = -1;       // the element is [L] [u]^yexp
};

/// x_ij = [{1..k} \ {k+1-i} u {j+k}] [u]^-1.
PluckerFraction gen_from_grass(Ambient a, int i, int j);
/// [I|J] = [{1..k} \ (k+1-I) u (k+J)] [u]^-1.
PluckerFraction minor_to_plucker(Ambient a, const std::vector<int>& rows, const std::vector<int>& cols);
/// [L] = [I|J] y with I = (k+1) - ({1..k} \ L), J = (L \ {1..k}) - k.
TElement plucker_to_T(const PluckerIndex& l);
/// Row and column sets of the minor attached to [L].
std::pair<std::vector<int>, std::vector<int>> plucker_minor_sets(const PluckerIndex& l);

/// Image of a * [u]^upow in T.
TElement grass_to_T(const GrassElement& a, int upow = 0);
/// Inverse of grass_to_T on O_q(G(k,n)); throws DomainError("not in subalgebra") otherwise.
GrassElement t_to_grass(const TElement& t);

/// For a PBW word x_{g1}...x_{gd} of O_q(M(k,p)) returns G with
/// x_{g1}...x_{gd} = G [u]^-d, i.e. q^{-sum (r-1) d(L_r)} [L1]...[Ld] straightened.
GrassElement grass_numerator(Ambient a, const std::vector<int>& word);

using WeightDecomposition = std::map<int, TElement>;

/// Eigencomponents of a -> y a y^-1 (weight = PBW degree of the coefficient).
WeightDecomposition y_weight_decompose(const TElement& t);
/// Eigencomponents of c -> M c M^-1 with M = [1..k | p+1-k..p], recorded as
/// M c = q^{-i} c M. Requires 2k <= n; throws DomainError otherwise.
WeightDecomposition minor_weight_decompose(const TElement& t);
/// The rightmost k x k minor of O_q(M(k,p)).
QMElement rightmost_minor(Ambient a);

/// "{-1: x[1,1], 0: 1}" style rendering.
std::string to_string(const TElement& t);

} // namespace qgrass
