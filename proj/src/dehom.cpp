#include "qgrass/dehom.hpp"

#include "qgrass/error.hpp"

#include <algorithm>

namespace qgrass {

namespace {

MatShape t_shape(Ambient a) {
  if (a.p() < 1) throw DomainError("dehomogenisation needs n > k");
  return {a.k, a.p()};
}

std::vector<int> upto(int k) {
  std::vector<int> v;
  for (int i = 1; i <= k; ++i) v.push_back(i);
  return v;
}

void check_subset(const std::vector<int>& s, int bound, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > bound) throw DomainError(std::string(what) + " index out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw DomainError(std::string(what) + " must be strictly increasing");
  }
}

} // namespace

TElement::TElement(Ambient a) : ambient_(a) { t_shape(a); }

TElement TElement::scalar(Ambient a, const QRat& c) { return from_matrix(a, QMElement::scalar(t_shape(a), c), 0); }

TElement TElement::from_matrix(Ambient a, const QMElement& x, int yexp) {
  TElement out(a);
  if (x.shape() != out.shape()) throw DomainError("TElement: coefficient shape mismatch");
  out.add(yexp, x);
  return out;
}

TElement TElement::y_power(Ambient a, int e) { return from_matrix(a, QMElement::scalar(t_shape(a), QRat(1)), e); }

TElement TElement::x(Ambient a, int i, int j) { return from_matrix(a, gen(t_shape(a), i, j), 0); }

QMElement TElement::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QMElement(shape()) : it->second;
}

void TElement::add(int e, const QMElement& x) {
  if (x.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, x);
  if (inserted) return;
  it->second += x;
  if (it->second.is_zero()) terms_.erase(it);
}

TElement TElement::operator-() const {
  TElement out = *this;
  for (auto& [e, x] : out.terms_) x = -x;
  return out;
}

TElement& TElement::operator+=(const TElement& o) {
  if (o.ambient_ != ambient_) throw DomainError("TElement: ambient mismatch");
  for (const auto& [e, x] : o.terms_) add(e, x);
  return *this;
}

TElement& TElement::operator-=(const TElement& o) { return *this += -o; }

TElement& TElement::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

QMElement sigma_power(const QMElement& x, int r) {
  if (r == 0) return x;
  QMElement out(x.shape());
  for (const auto& [m, c] : x.terms()) out.add_term(m, c * qpow(r * m.degree()));
  return out;
}

TElement t_mul(const TElement& a, const TElement& b) {
  if (a.ambient() != b.ambient()) throw DomainError("t_mul: ambient mismatch");
  TElement out(a.ambient());
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, z] : b.terms()) out += TElement::from_matrix(a.ambient(), x * sigma_power(z, i), i + j);
  return out;
}

TElement operator*(const TElement& a, const TElement& b) { return t_mul(a, b); }

PluckerFraction gen_from_grass(Ambient a, int i, int j) {
  if (i < 1 || i > a.k || j < 1 || j > a.p()) throw DomainError("gen_from_grass: index out of range");
  return minor_to_plucker(a, {i}, {j});
}

PluckerFraction minor_to_plucker(Ambient a, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw DomainError("minor_to_plucker: |I| != |J|");
  check_subset(rows, a.k, "row");
  check_subset(cols, a.p(), "column");
  std::vector<int> l;
  for (int c = 1; c <= a.k; ++c)
    if (std::find(rows.begin(), rows.end(), a.k + 1 - c) == rows.end()) l.push_back(c);
  for (int j : cols) l.push_back(a.k + j);
  return {PluckerIndex(a, l), -1};
}

std::pair<std::vector<int>, std::vector<int>> plucker_minor_sets(const PluckerIndex& l) {
  Ambient a = l.ambient();
  std::vector<int> rows, cols;
  for (int c = a.k; c >= 1; --c)
    if (!l.contains(c)) rows.push_back(a.k + 1 - c);
  for (int c = a.k + 1; c <= a.n; ++c)
    if (l.contains(c)) cols.push_back(c - a.k);
  return {rows, cols};
}

TElement plucker_to_T(const PluckerIndex& l) {
  Ambient a = l.ambient();
  auto [rows, cols] = plucker_minor_sets(l);
  QMElement m = rows.empty() ? QMElement::scalar(t_shape(a), QRat(1)) : quantum_minor(t_shape(a), rows, cols);
  return TElement::from_matrix(a, m, 1);
}

TElement grass_to_T(const GrassElement& g, int upow) {
  Ambient a = g.ambient();
  TElement out(a);
  for (const auto& [w, c] : g.terms()) {
    TElement term = TElement::scalar(a, c);
    for (const auto& f : w.factors) term = term * plucker_to_T(f);
    out += term;
  }
  return out * TElement::y_power(a, upow);
}

GrassElement grass_numerator(Ambient a, const std::vector<int>& word) {
  MatShape s = t_shape(a);
  PluckerWord w;
  int shift = 0;
  for (std::size_t r = 0; r < word.size(); ++r) {
    PluckerIndex l = gen_from_grass(a, s.row(word[r]), s.col(word[r])).index;
    shift -= static_cast<int>(r) * weights(l).d;
    w.factors.push_back(l);
  }
  return straighten(w, a) * qpow(shift);
}

GrassElement t_to_grass(const TElement& t) {
  Ambient a = t.ambient();
  // Multiply on the right by y^e so that every term becomes a genuine
  // grassmannian element, then divide by [u]^e again.
  int e = 0;
  for (const auto& [i, x] : t.terms())
    for (const auto& [m, c] : x.terms()) e = std::max(e, m.degree() - i);
  GrassElement g(a);
  PluckerIndex u = leftmost(a);
  for (const auto& [i, x] : t.terms())
    for (const auto& [m, c] : x.terms()) {
      GrassElement num = grass_numerator(a, m.word()) * c;
      PluckerWord tail;
      tail.factors.assign(static_cast<std::size_t>(i + e - m.degree()), u);
      g += mul(num, GrassElement::word(a, tail));
    }
  GrassElement out(a);
  for (const auto& [w, c] : g.terms()) {
    int lead = 0;
    while (lead < w.degree() && w.factors[static_cast<std::size_t>(lead)] == u) ++lead;
    if (lead < e) throw DomainError("not in subalgebra: negative power of [u] remains");
    PluckerWord rest{{w.factors.begin() + e, w.factors.end()}};
    // [u]^e S = q^{e d(S)} S [u]^e.
    out.add_term(rest, c * qpow(e * weight_d(rest)));
  }
  return out;
}

QMElement rightmost_minor(Ambient a) {
  MatShape s = t_shape(a);
  if (2 * a.k > a.n) throw DomainError("rightmost k x k minor needs 2k <= n");
  std::vector<int> cols;
  for (int j = a.p() + 1 - a.k; j <= a.p(); ++j) cols.push_back(j);
  return quantum_minor(s, upto(a.k), cols);
}

WeightDecomposition y_weight_decompose(const TElement& t) {
  WeightDecomposition out;
  for (const auto& [e, x] : t.terms())
    for (const auto& [m, c] : x.terms()) {
      auto [it, ins] = out.try_emplace(m.degree(), t.ambient());
      it->second += TElement::from_matrix(t.ambient(), QMElement::monomial(t.shape(), m, c), e);
    }
  return out;
}

WeightDecomposition minor_weight_decompose(const TElement& t) {
  Ambient a = t.ambient();
  if (2 * a.k > a.n) throw DomainError("minor_weight_decompose needs 2k <= n");
  MatShape s = t.shape();
  const int first_fixed = a.p() + 1 - a.k;
  WeightDecomposition out;
  for (const auto& [e, x] : t.terms())
    for (const auto& [m, c] : x.terms()) {
      int w = a.k * e;
      for (int g : m.word())
        if (s.col(g) < first_fixed) ++w;
      auto [it, ins] = out.try_emplace(w, a);
      it->second += TElement::from_matrix(a, QMElement::monomial(s, m, c), e);
    }
  return out;
}

std::string to_string(const TElement& t) {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, x] : t.terms()) {
    if (!first) out += ", ";
    out += std::to_string(e) + ": " + to_string(x);
    first = false;
  }
  return out + "}";
}

} // namespace qgrass
