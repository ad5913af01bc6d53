#include "qgrass/deriv.hpp"

#include "qgrass/concurrent_cache.hpp"
#include "qgrass/error.hpp"
#include "qgrass/hh1solver.hpp"

#include <algorithm>

namespace qgrass {

namespace {

std::optional<int> combine_shift(std::optional<int> a, bool a_zero, std::optional<int> b, bool b_zero) {
  if (a_zero) return b;
  if (b_zero) return a;
  if (a && b && *a == *b) return a;
  return std::nullopt;
}

template <class Map>
void add_images(Map& dst, const Map& src, int sign) {
  for (const auto& [g, x] : src) {
    auto it = dst.find(g);
    if (it == dst.end()) {
      if (!x.is_zero()) dst.emplace(g, sign > 0 ? x : -x);
      continue;
    }
    if (sign > 0)
      it->second += x;
    else
      it->second -= x;
    if (it->second.is_zero()) dst.erase(it);
  }
}

template <class Map>
bool same_images(const Map& a, const Map& b) {
  // Zero images are never stored, so the maps compare directly.
  return a == b;
}

QMElement qm_word(MatShape s, const std::vector<int>& word, std::size_t from, std::size_t to) {
  QMElement out = QMElement::scalar(s, QRat(1));
  for (std::size_t i = from; i < to; ++i) out = out * gen(s, s.row(word[i]), s.col(word[i]));
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// GrassDerivation

GrassElement GrassDerivation::image(const PluckerIndex& g) const {
  auto it = images.find(g);
  return it == images.end() ? GrassElement(ambient) : it->second;
}

void GrassDerivation::set(const PluckerIndex& g, const GrassElement& x) {
  if (g.ambient() != ambient) throw DomainError("derivation generator from another ambient");
  if (x.is_zero())
    images.erase(g);
  else
    images[g] = x;
}

bool GrassDerivation::is_zero() const { return images.empty(); }

GrassDerivation& GrassDerivation::operator+=(const GrassDerivation& o) {
  if (o.ambient != ambient) throw DomainError("derivation ambient mismatch");
  shift = combine_shift(shift, is_zero(), o.shift, o.is_zero());
  add_images(images, o.images, +1);
  verified_degree = std::min(verified_degree, o.verified_degree);
  return *this;
}

GrassDerivation& GrassDerivation::operator-=(const GrassDerivation& o) {
  if (o.ambient != ambient) throw DomainError("derivation ambient mismatch");
  shift = combine_shift(shift, is_zero(), o.shift, o.is_zero());
  add_images(images, o.images, -1);
  verified_degree = std::min(verified_degree, o.verified_degree);
  return *this;
}

GrassDerivation& GrassDerivation::operator*=(const QRat& c) {
  if (c.is_zero()) {
    images.clear();
    return *this;
  }
  for (auto& [g, x] : images) x *= c;
  return *this;
}

bool operator==(const GrassDerivation& a, const GrassDerivation& b) {
  return a.ambient == b.ambient && same_images(a.images, b.images);
}

// ---------------------------------------------------------------------------
// QMDerivation

QMElement QMDerivation::image(int g) const {
  auto it = images.find(g);
  return it == images.end() ? QMElement(shape) : it->second;
}

void QMDerivation::set(int g, const QMElement& x) {
  if (g < 0 || g >= shape.size()) throw DomainError("derivation generator out of range");
  if (x.is_zero())
    images.erase(g);
  else
    images[g] = x;
}

bool QMDerivation::is_zero() const { return images.empty(); }

QMDerivation& QMDerivation::operator+=(const QMDerivation& o) {
  if (o.shape != shape) throw DomainError("derivation shape mismatch");
  add_images(images, o.images, +1);
  return *this;
}

QMDerivation& QMDerivation::operator-=(const QMDerivation& o) {
  if (o.shape != shape) throw DomainError("derivation shape mismatch");
  add_images(images, o.images, -1);
  return *this;
}

QMDerivation& QMDerivation::operator*=(const QRat& c) {
  if (c.is_zero()) {
    images.clear();
    return *this;
  }
  for (auto& [g, x] : images) x *= c;
  return *this;
}

bool operator==(const QMDerivation& a, const QMDerivation& b) {
  return a.shape == b.shape && same_images(a.images, b.images);
}

// ---------------------------------------------------------------------------
// TDerivation

TDerivation::TDerivation(Ambient a) : ambient(a), y_image(a) {}

TElement TDerivation::image(int g) const {
  auto it = images.find(g);
  return it == images.end() ? TElement(ambient) : it->second;
}

TElement TDerivation::y_inverse_image() const {
  TElement yi = TElement::y_power(ambient, -1);
  return -(yi * y_image * yi);
}

TDerivation& TDerivation::operator+=(const TDerivation& o) {
  if (o.ambient != ambient) throw DomainError("derivation ambient mismatch");
  add_images(images, o.images, +1);
  y_image += o.y_image;
  return *this;
}

TDerivation& TDerivation::operator*=(const QRat& c) {
  if (c.is_zero()) {
    images.clear();
    y_image = TElement(ambient);
    return *this;
  }
  for (auto& [g, x] : images) x *= c;
  y_image *= c;
  return *this;
}

bool operator==(const TDerivation& a, const TDerivation& b) {
  return a.ambient == b.ambient && same_images(a.images, b.images) && a.y_image == b.y_image;
}

// ---------------------------------------------------------------------------
// Leibniz application

GrassElement apply_word(const GrassDerivation& d, const PluckerWord& w) {
  Ambient a = d.ambient;
  GrassElement out(a);
  GrassElement prefix = GrassElement::scalar(a, QRat(1));
  for (std::size_t r = 0; r < w.factors.size(); ++r) {
    GrassElement img = d.image(w.factors[r]);
    if (!img.is_zero()) {
      GrassElement term = mul(prefix, img);
      for (std::size_t s = r + 1; s < w.factors.size() && !term.is_zero(); ++s) term = times_generator(term, w.factors[s]);
      out += term;
    }
    prefix = times_generator(prefix, w.factors[r]);
  }
  return out;
}

GrassElement apply(const GrassDerivation& d, const GrassElement& x) {
  if (!x.is_zero() && x.ambient() != d.ambient) throw DomainError("apply: ambient mismatch");
  GrassElement out(d.ambient);
  for (const auto& [w, c] : x.terms()) out += apply_word(d, w) * c;
  return out;
}

QMElement apply_word(const QMDerivation& d, const std::vector<int>& word) {
  MatShape s = d.shape;
  QMElement out(s);
  QMElement prefix = QMElement::scalar(s, QRat(1));
  for (std::size_t r = 0; r < word.size(); ++r) {
    QMElement img = d.image(word[r]);
    if (!img.is_zero()) out += prefix * img * qm_word(s, word, r + 1, word.size());
    prefix = prefix * gen(s, s.row(word[r]), s.col(word[r]));
  }
  return out;
}

QMElement apply(const QMDerivation& d, const QMElement& x) {
  if (x.shape() != d.shape) throw DomainError("apply: shape mismatch");
  QMElement out(d.shape);
  for (const auto& [m, c] : x.terms()) out += apply_word(d, m.word()) * c;
  return out;
}

TElement apply(const TDerivation& d, const TElement& x) {
  Ambient a = d.ambient;
  if (x.ambient() != a) throw DomainError("apply: ambient mismatch");
  MatShape s = x.shape();
  TElement out(a);
  TElement dyi = d.y_inverse_image();
  for (const auto& [e, coeff] : x.terms()) {
    TElement ye = TElement::y_power(a, e);
    // D(y^e)
    TElement dye(a);
    if (e > 0) {
      for (int r = 0; r < e; ++r) dye += TElement::y_power(a, r) * d.y_image * TElement::y_power(a, e - 1 - r);
    } else if (e < 0) {
      int m = -e;
      for (int r = 0; r < m; ++r) dye += TElement::y_power(a, -r) * dyi * TElement::y_power(a, -(m - 1 - r));
    }
    for (const auto& [mon, c] : coeff.terms()) {
      auto word = mon.word();
      TElement mon_t = TElement::from_matrix(a, QMElement::monomial(s, mon), 0);
      TElement acc(a);
      TElement prefix = TElement::scalar(a, QRat(1));
      for (std::size_t r = 0; r < word.size(); ++r) {
        TElement img = d.image(word[r]);
        if (!img.is_zero())
          acc += prefix * img * TElement::from_matrix(a, qm_word(s, word, r + 1, word.size()), 0);
        prefix = prefix * TElement::x(a, s.row(word[r]), s.col(word[r]));
      }
      out += (acc * ye + mon_t * dye) * c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families

GrassDerivation column_derivation(Ambient a, int i) {
  if (i < 1 || i > a.n) throw DomainError("column derivation index out of range");
  static ConcurrentCache<std::pair<Ambient, int>, GrassDerivation> memo;
  return memo.get_or_compute({a, i}, [&] {
    GrassDerivation d(a, 0);
    for (const auto& g : pluckers(a))
      if (g.contains(i)) d.set(g, GrassElement::generator(g));
    verify(d, 2);
    return d;
  });
}

QMDerivation row_derivation(MatShape s, int i) {
  check_shape(s);
  if (i < 1 || i > s.m) throw DomainError("row derivation index out of range");
  QMDerivation d(s);
  for (int j = 1; j <= s.n; ++j) d.set(s.index(i, j), gen(s, i, j));
  return d;
}

QMDerivation col_derivation(MatShape s, int j) {
  check_shape(s);
  if (j < 1 || j > s.n) throw DomainError("column derivation index out of range");
  QMDerivation d(s);
  for (int i = 1; i <= s.m; ++i) d.set(s.index(i, j), gen(s, i, j));
  return d;
}

GrassDerivation inner(const GrassElement& z) {
  Ambient a = z.ambient();
  GrassDerivation d(a, z.homogeneous_degree());
  for (const auto& g : pluckers(a)) {
    GrassElement x = GrassElement::generator(g);
    d.set(g, mul(z, x) - mul(x, z));
  }
  return d;
}

QMDerivation inner(const QMElement& z) {
  MatShape s = z.shape();
  QMDerivation d(s);
  for (int g = 0; g < s.size(); ++g) d.set(g, commutator(z, gen(s, s.row(g), s.col(g))));
  return d;
}

TDerivation inner(const TElement& z) {
  Ambient a = z.ambient();
  TDerivation d(a);
  MatShape s = z.shape();
  for (int g = 0; g < s.size(); ++g) {
    TElement x = TElement::x(a, s.row(g), s.col(g));
    TElement v = z * x - x * z;
    if (!v.is_zero()) d.images[g] = v;
  }
  TElement y = TElement::y_power(a, 1);
  d.y_image = z * y - y * z;
  return d;
}

TDerivation extend_general(const GrassDerivation& d) {
  Ambient a = d.ambient;
  MatShape s{a.k, a.p()};
  TDerivation out(a);
  out.y_image = grass_to_T(d.image(leftmost(a)));
  TElement dyi = out.y_inverse_image();
  for (int g = 0; g < s.size(); ++g) {
    PluckerIndex l = gen_from_grass(a, s.row(g), s.col(g)).index;
    TElement v = grass_to_T(d.image(l), -1) + plucker_to_T(l) * dyi;
    if (!v.is_zero()) out.images[g] = v;
  }
  return out;
}

TDerivation extend_to_T(const GrassDerivation& d) {
  if (!d.image(leftmost(d.ambient)).is_zero()) throw PreconditionError("extend_to_T needs D([u]) = 0");
  return extend_general(d);
}

TDerivation dtilde_row(Ambient a, int i) {
  MatShape s{a.k, a.p()};
  QMDerivation r = row_derivation(s, i);
  TDerivation out(a);
  for (const auto& [g, x] : r.images) out.images[g] = TElement::from_matrix(a, x, 0);
  out.y_image = -TElement::y_power(a, 1);
  return out;
}

TDerivation dtilde_col(Ambient a, int j) {
  MatShape s{a.k, a.p()};
  QMDerivation c = col_derivation(s, j);
  TDerivation out(a);
  for (const auto& [g, x] : c.images) out.images[g] = TElement::from_matrix(a, x, 0);
  return out;
}

TDerivation dtilde_column(Ambient a, int i) { return extend_general(column_derivation(a, i)); }

QMDerivation restrict_to_R(const TDerivation& d) {
  Ambient a = d.ambient;
  if (2 * a.k > a.n) throw PreconditionError("restrict_to_R needs 2k <= n");
  if (!d.y_image.is_zero()) throw PreconditionError("restrict_to_R needs D(y) = 0");
  if (!apply(d, TElement::from_matrix(a, rightmost_minor(a), 0)).is_zero())
    throw PreconditionError("restrict_to_R needs D to kill the rightmost minor");
  MatShape s{a.k, a.p()};
  QMDerivation out(s);
  for (const auto& [g, img] : d.images) {
    for (const auto& [e, x] : img.terms())
      if (e != 0) throw ConsistencyError("restrict_to_R: image of a generator leaves R");
    out.set(g, img.coeff(0));
  }
  return out;
}

bool images_homogeneous_of_degree(const QMDerivation& d, int degree) {
  for (const auto& [g, x] : d.images)
    for (const auto& [m, c] : x.terms())
      if (m.degree() != degree) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Adjustment pipeline

namespace {

int leading_u(const PluckerWord& w, const PluckerIndex& u) {
  int a = 0;
  while (a < w.degree() && w.factors[static_cast<std::size_t>(a)] == u) ++a;
  return a;
}

void apply_adjustment(GrassDerivation& d, const Adjustment& adj) {
  if (adj.kind == Adjustment::Kind::inner)
    d -= inner(adj.z);
  else
    d -= adj.coefficient * column_derivation(d.ambient, adj.column);
}

} // namespace

NormalizeResult normalize(const GrassDerivation& d) {
  Ambient a = d.ambient;
  PluckerIndex u = leftmost(a), w = rightmost(a);
  NormalizeResult res;
  res.normalized = d;
  GrassDerivation& cur = res.normalized;
  auto record = [&](Adjustment adj) {
    apply_adjustment(cur, adj);
    res.log.push_back(std::move(adj));
  };
  const std::size_t guard = 64 + 4 * (cur.image(u).size() + cur.image(w).size());

  // Mixed terms [u]^a S of D([u]).
  for (std::size_t iter = 0; iter < guard; ++iter) {
    GrassElement du = cur.image(u);
    auto it = std::find_if(du.terms().begin(), du.terms().end(), [&](const auto& t) {
      int lead = leading_u(t.first, u);
      return lead >= 1 && lead < t.first.degree();
    });
    if (it == du.terms().end()) break;
    const PluckerWord& s = it->first;
    int dd = weight_d(s);
    PluckerWord zw{{s.factors.begin() + 1, s.factors.end()}};
    QRat scale = it->second / (qpow(-dd) - QRat(1));
    record({Adjustment::Kind::inner, GrassElement::word(a, zw, scale), 0, QRat(0)});
  }

  // Terms [u]^{a-1}[w] (a > 1) of D([w]).
  const int dw = weights(w).d;
  for (std::size_t iter = 0; iter < guard; ++iter) {
    GrassElement dwv = cur.image(w);
    auto it = std::find_if(dwv.terms().begin(), dwv.terms().end(), [&](const auto& t) {
      const PluckerWord& x = t.first;
      int lead = leading_u(x, u);
      return lead >= 1 && x.degree() == lead + 1 && x.factors.back() == w;
    });
    if (it == dwv.terms().end()) break;
    int m = it->first.degree() - 1;
    PluckerWord zw;
    zw.factors.assign(static_cast<std::size_t>(m), u);
    QRat scale = it->second / (QRat(1) - qpow(-dw * m));
    record({Adjustment::Kind::inner, GrassElement::word(a, zw, scale), 0, QRat(0)});
  }

  QRat lambda = cur.image(u).coeff(PluckerWord{{u}});
  if (!lambda.is_zero()) record({Adjustment::Kind::column, GrassElement(a), 1, lambda});
  QRat alpha = cur.image(w).coeff(PluckerWord{{w}});
  if (!alpha.is_zero()) record({Adjustment::Kind::column, GrassElement(a), a.n, alpha});

  GrassElement ru = cur.image(u), rw = cur.image(w);
  res.ok = ru.is_zero() && rw.is_zero();
  if (!res.ok) {
    res.failure = "after adjustment D'([u]) = " + to_string(ru) + " and D'([w]) = " + to_string(rw);
  }
  return res;
}

GrassDerivation replay(const GrassDerivation& d, const AdjustmentLog& log) {
  GrassDerivation cur = d;
  for (const auto& adj : log) apply_adjustment(cur, adj);
  return cur;
}

// ---------------------------------------------------------------------------
// psi

PluckerIndex psi(const PluckerIndex& i) {
  Ambient a = i.ambient();
  std::vector<int> cols;
  for (int c = 1; c <= a.n; ++c)
    if (!i.contains(c)) cols.push_back(a.n + 1 - c);
  return PluckerIndex(Ambient{a.n - a.k, a.n}, cols);
}

PluckerIndex psi_inverse(const PluckerIndex& j) { return psi(j); }

namespace {

GrassElement map_words(const GrassElement& x, Ambient target, PluckerIndex (*f)(const PluckerIndex&)) {
  GrassElement out(target);
  for (const auto& [w, c] : x.terms()) {
    PluckerWord img;
    for (const auto& l : w.factors) img.factors.push_back(f(l));
    out += straighten(img, target) * c;
  }
  return out;
}

} // namespace

GrassElement psi(const GrassElement& x) {
  Ambient a = x.ambient();
  return map_words(x, Ambient{a.n - a.k, a.n}, static_cast<PluckerIndex (*)(const PluckerIndex&)>(&psi));
}

GrassElement psi_inverse(const GrassElement& x) { return psi(x); }

GrassDerivation psi_transport(const GrassDerivation& d) {
  Ambient a = d.ambient;
  Ambient target{a.n - a.k, a.n};
  GrassDerivation out(target, d.shift);
  for (const auto& j : pluckers(target)) out.set(j, psi(d.image(psi_inverse(j))));
  return out;
}

// ---------------------------------------------------------------------------
// Non-square decomposition

NonsquareDecomposition decompose_nonsquare(const QMDerivation& d) {
  MatShape s = d.shape;
  const int m = s.m, n = s.n;
  if (m >= n) throw PreconditionError("decompose_nonsquare needs m < n");
  if (!images_homogeneous_of_degree(d, 1)) throw PreconditionError("decompose_nonsquare needs degree-one images");
  std::vector<int> rows, right;
  for (int i = 1; i <= m; ++i) rows.push_back(i);
  for (int j = n - m + 1; j <= n; ++j) right.push_back(j);
  if (!apply(d, quantum_minor(s, rows, right)).is_zero())
    throw PreconditionError("decompose_nonsquare needs D to kill the rightmost minor");

  const int split = n - m;  // columns 1..split form B, the rest C
  for (const auto& [g, x] : d.images) {
    bool in_b = s.col(g) <= split;
    for (const auto& [mon, c] : x.terms())
      for (int h : mon.word())
        if ((s.col(h) <= split) != in_b)
          throw ConsistencyError(in_b ? "D(B) is not contained in B" : "D(C) is not contained in C");
  }

  auto diagonal = [&](int g) -> QRat {
    QMElement x = d.image(g);
    QMMonomial mon;
    mon.exps[static_cast<std::size_t>(g)] = 1;
    QRat c = x.coeff(mon);
    if (!(x == QMElement::monomial(s, mon, c) || x.is_zero()))
      throw ConsistencyError("image of x_" + std::to_string(s.row(g)) + std::to_string(s.col(g)) +
                             " is not a multiple of the generator");
    return c;
  };

  NonsquareDecomposition out;
  out.a.assign(static_cast<std::size_t>(m), QRat(0));
  out.b.assign(static_cast<std::size_t>(n), QRat(0));
  // Square block C: c_rs = a_r + b_s with a_1 = 0.
  for (int j = split + 1; j <= n; ++j) out.b[static_cast<std::size_t>(j - 1)] = diagonal(s.index(1, j));
  for (int i = 2; i <= m; ++i)
    out.a[static_cast<std::size_t>(i - 1)] = diagonal(s.index(i, split + 1)) - out.b[static_cast<std::size_t>(split)];
  for (int i = 1; i <= m; ++i)
    for (int j = split + 1; j <= n; ++j)
      if (!(diagonal(s.index(i, j)) == out.a[static_cast<std::size_t>(i - 1)] + out.b[static_cast<std::size_t>(j - 1)]))
        throw ConsistencyError("square block is not a combination of row and column derivations");
  // Remainder on B is a combination of the D_{*j}.
  for (int j = 1; j <= split; ++j) {
    QRat bj = diagonal(s.index(1, j)) - out.a[0];
    for (int i = 2; i <= m; ++i)
      if (!(diagonal(s.index(i, j)) - out.a[static_cast<std::size_t>(i - 1)] == bj))
        throw ConsistencyError("remainder on B is not a combination of column derivations");
    out.b[static_cast<std::size_t>(j - 1)] = bj;
  }
  if (!(reconstruct(s, out) == d)) throw ConsistencyError("reconstruction differs from the input");
  return out;
}

QMDerivation reconstruct(MatShape s, const NonsquareDecomposition& c) {
  QMDerivation out(s);
  for (int i = 1; i <= s.m; ++i) out += c.a[static_cast<std::size_t>(i - 1)] * row_derivation(s, i);
  for (int j = 1; j <= s.n; ++j) out += c.b[static_cast<std::size_t>(j - 1)] * col_derivation(s, j);
  return out;
}

// ---------------------------------------------------------------------------
// Checks

bool verify(GrassDerivation& d, int cap) {
  for (int deg = 2; deg <= cap; ++deg)
    for (const auto& r : relation_kernel(d.ambient, deg).basis)
      if (!apply(d, r).is_zero()) {
        d.verified_degree = 0;
        return false;
      }
  d.verified_degree = cap;
  return true;
}

bool leibniz_holds(const GrassDerivation& d, const GrassElement& a, const GrassElement& b) {
  return apply(d, mul(a, b)) == mul(apply(d, a), b) + mul(a, apply(d, b));
}

std::string to_string(const GrassDerivation& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [g, x] : d.images) {
    if (!out.empty()) out += "; ";
    out += "D(" + to_string(g) + ") = " + to_string(x);
  }
  return out;
}

} // namespace qgrass
