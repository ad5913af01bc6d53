#include "qgrass/checks.hpp"

#include "qgrass/error.hpp"
#include "qgrass/linalg.hpp"

#include <algorithm>
#include <concepts>
#include <random>
#include <sstream>

namespace qgrass {

namespace {

/// Collects the first failure as the witness and counts the checked cases.
class Tally {
public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::string& witness) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = witness;
  }
  template <class F>
    requires std::invocable<F&>
  void check(bool ok, F&& witness) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = witness();
  }
  CheckResult done(const std::string& summary = {}) {
    r_.pass = failures_ == 0;
    std::ostringstream d;
    if (r_.pass)
      d << cases_ << " cases" << (summary.empty() ? "" : "; " + summary);
    else
      d << failures_ << " of " << cases_ << " cases failed; first: " << first_;
    r_.detail = d.str();
    return r_;
  }

private:
  CheckResult r_;
  std::size_t cases_ = 0, failures_ = 0;
  std::string first_;
};

std::string amb(Ambient a) { return "G(" + std::to_string(a.k) + "," + std::to_string(a.n) + ")"; }
std::string shp(MatShape s) { return std::to_string(s.m) + "x" + std::to_string(s.n); }

QRat small_coeff(std::mt19937_64& rng) {
  int a = static_cast<int>(rng() % 7) - 3;
  int b = static_cast<int>(rng() % 5) - 2;
  return QRat(a) + QRat(b) * qpow(1);
}

GrassElement random_grass(Ambient a, int degree, int terms, std::mt19937_64& rng) {
  const auto& basis = standard_monomials(a, degree);
  GrassElement out(a);
  for (int t = 0; t < terms; ++t) out += GrassElement::word(a, basis[rng() % basis.size()], small_coeff(rng));
  return out;
}

QMElement random_qm(MatShape s, int max_degree, int terms, std::mt19937_64& rng) {
  QMElement out(s);
  for (int t = 0; t < terms; ++t) {
    QMElement m = QMElement::scalar(s, small_coeff(rng));
    int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    for (int i = 0; i < d; ++i) {
      int g = static_cast<int>(rng() % static_cast<std::uint64_t>(s.size()));
      m = m * gen(s, s.row(g), s.col(g));
    }
    out += m;
  }
  return out;
}

GrassDerivation random_derivation(Ambient a, std::mt19937_64& rng) {
  GrassDerivation d(a);
  for (int i = 1; i <= a.n; ++i)
    if (rng() % 2) d += small_coeff(rng) * column_derivation(a, i);
  d += inner(random_grass(a, 1, 1 + static_cast<int>(rng() % 3), rng));
  return d;
}

GrassElement pair(Ambient a, int i, int j, int k, int l) {
  MatShape s{a.k, a.p()};
  return grass_numerator(a, {s.index(i, j), s.index(k, l)});
}

TDerivation negated(TDerivation d) { return QRat(-1) * std::move(d); }

std::size_t derivation_rank(const std::vector<GrassDerivation>& ds) {
  std::map<std::pair<PluckerIndex, PluckerWord>, std::size_t> coord;
  for (const auto& d : ds)
    for (const auto& [g, x] : d.images)
      for (const auto& [w, c] : x.terms()) coord.try_emplace({g, w}, coord.size());
  if (coord.empty()) return 0;
  Matrix m(0, coord.size());
  for (const auto& d : ds) {
    std::vector<QRat> row(coord.size());
    for (const auto& [g, x] : d.images)
      for (const auto& [w, c] : x.terms()) row[coord.at({g, w})] = c;
    m.append_row(row);
  }
  return rank(m);
}

} // namespace

namespace checks {

CheckResult basis(Ambient a, int max_degree, ExecPolicy policy) {
  Tally t("basis " + amb(a));
  std::string summary;
  for (int d = 1; d <= max_degree; ++d) {
    BasisCheck b = check_basis(a, d, policy);
    t.check(b.independent && b.spanning, "degree " + std::to_string(d));
    summary += (summary.empty() ? "" : ", ") + std::string("deg ") + std::to_string(d) + ": " +
               std::to_string(b.standard) + " standard";
  }
  return t.done(summary);
}

CheckResult uw_commutation(Ambient a) {
  Tally t("u-w commutation " + amb(a));
  GrassElement u = GrassElement::generator(leftmost(a)), w = GrassElement::generator(rightmost(a));
  for (const auto& g : pluckers(a)) {
    GrassElement x = GrassElement::generator(g);
    Weights wt = weights(g);
    t.check(mul(u, x) == mul(x, u) * qpow(wt.d), [&] { return "[u]" + to_string(g); });
    t.check(mul(w, x) == mul(x, w) * qpow(-wt.e), [&] { return "[w]" + to_string(g); });
  }
  return t.done();
}

CheckResult commutation_mod_u(Ambient a) {
  Tally t("commutation mod u " + amb(a));
  std::vector<int> vc;
  for (int i = 1; i < a.k; ++i) vc.push_back(i);
  vc.push_back(a.k + 1);
  PluckerIndex v(a, vc);
  GrassElement gv = GrassElement::generator(v);
  for (const auto& g : pluckers(a)) {
    if (g == v || g == leftmost(a) || g < v) continue;
    int tt = 0;
    for (int c : g.columns())
      if (!v.contains(c)) ++tt;
    GrassElement x = GrassElement::generator(g);
    t.check(quotient_mod_u(mul(gv, x) - mul(x, gv) * qpow(tt)).is_zero(), [&] { return to_string(g); });
  }
  return t.done();
}

CheckResult minor_commutation(MatShape s) {
  Tally t("minor commutation " + shp(s));
  if (s.m >= s.n) throw PreconditionError("minor commutation needs m < n");
  std::vector<int> rows, cols;
  for (int i = 1; i <= s.m; ++i) rows.push_back(i);
  for (int j = s.n - s.m + 1; j <= s.n; ++j) cols.push_back(j);
  QMElement minor = quantum_minor(s, rows, cols);
  for (int i = 1; i <= s.m; ++i)
    for (int j = 1; j <= s.n; ++j) {
      QMElement x = gen(s, i, j);
      QRat c = j < s.n - s.m + 1 ? qpow(1) : QRat(1);
      t.check(x * minor == c * (minor * x), [&] { return "x[" + std::to_string(i) + "," + std::to_string(j) + "]"; });
    }
  return t.done();
}

CheckResult dehomogenisation(Ambient a) {
  Tally t("dehomogenisation " + amb(a));
  const QRat q = qpow(1), qi = qpow(-1);
  const int k = a.k, p = a.p();
  auto at = [](int i, int j, int r, int s) {
    return "(" + std::to_string(i) + std::to_string(j) + "," + std::to_string(r) + std::to_string(s) + ")";
  };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= p; ++j)
      for (int r = 1; r <= k; ++r)
        for (int s = 1; s <= p; ++s) {
          if ((i == r && j < s) || (j == s && i < r))
            t.check((pair(a, i, j, r, s) - q * pair(a, r, s, i, j)).is_zero(), [&] { return at(i, j, r, s); });
          else if (i < r && j > s)
            t.check((pair(a, i, j, r, s) - pair(a, r, s, i, j)).is_zero(), [&] { return at(i, j, r, s); });
          else if (i < r && j < s)
            t.check((pair(a, i, j, r, s) - pair(a, r, s, i, j) - (q - qi) * pair(a, i, s, r, j)).is_zero(),
                    [&] { return at(i, j, r, s); });
        }
  GrassElement u = GrassElement::generator(leftmost(a));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= p; ++j) {
      GrassElement l = GrassElement::generator(gen_from_grass(a, i, j).index);
      t.check(mul(u, l) == q * mul(l, u), [&] { return "y x" + std::to_string(i) + std::to_string(j); });
    }
  MatShape sh{k, p};
  for (const auto& l : pluckers(a)) {
    auto [rows, cols] = plucker_minor_sets(l);
    if (rows.empty()) continue;
    t.check(minor_to_plucker(a, rows, cols).index == l, [&] { return "minor of " + to_string(l); });
    t.check(plucker_to_T(l) == TElement::from_matrix(a, quantum_minor(sh, rows, cols), 1),
            [&] { return "coordinate " + to_string(l); });
    GrassElement x = GrassElement::generator(l);
    t.check(t_to_grass(grass_to_T(x)) == x, [&] { return "round trip " + to_string(l); });
  }
  if (2 * k <= a.n) {
    TElement m = TElement::from_matrix(a, rightmost_minor(a), 0);
    t.check(grass_to_T(GrassElement::generator(rightmost(a)), -1) == m, "rightmost minor");
  }
  return t.done(2 * k <= a.n ? "" : "rightmost-minor identity needs 2k <= n");
}

CheckResult column_derivations(Ambient a) {
  Tally t("column derivations " + amb(a));
  GrassDerivation sum(a, 0);
  for (int i = 1; i <= a.n; ++i) {
    GrassDerivation d = column_derivation(a, i);
    t.check(d.verified_degree >= 2, "D_" + std::to_string(i) + " not verified");
    for (const auto& g : pluckers(a))
      t.check(d.image(g) == (g.contains(i) ? GrassElement::generator(g) : GrassElement(a)),
              [&] { return "D_" + std::to_string(i) + to_string(g); });
    sum += d;
  }
  sum *= QRat(1) / QRat(a.k);
  for (const auto& g : pluckers(a))
    t.check(sum.image(g) == GrassElement::generator(g), [&] { return "average on " + to_string(g); });
  return t.done();
}

CheckResult extended_row_column(Ambient a) {
  Tally t("extended row/column derivations " + amb(a));
  for (const auto& g : pluckers(a)) {
    TElement x = grass_to_T(GrassElement::generator(g));
    for (int i = 1; i <= a.k; ++i)
      t.check(apply(dtilde_row(a, i), x) == x * QRat(g.contains(a.k + 1 - i) ? -1 : 0),
              [&] { return "row " + std::to_string(i) + " on " + to_string(g); });
    for (int j = 1; j <= a.p(); ++j)
      t.check(apply(dtilde_col(a, j), x) == x * QRat(g.contains(a.k + j) ? 1 : 0),
              [&] { return "column " + std::to_string(j) + " on " + to_string(g); });
  }
  return t.done();
}

CheckResult extension_identities(Ambient a) {
  Tally t("extension identities " + amb(a));
  for (int i = 1; i <= a.k; ++i)
    t.check(dtilde_row(a, i) == negated(dtilde_column(a, a.k + 1 - i)), [&] { return "row " + std::to_string(i); });
  for (int j = 1; j <= a.p(); ++j)
    t.check(dtilde_col(a, j) == dtilde_column(a, a.k + j), [&] { return "column " + std::to_string(j); });
  return t.done();
}

CheckResult extended_column_sum(Ambient a) {
  Tally t("extended column sum " + amb(a));
  TDerivation sum(a);
  for (int i = 1; i <= a.n; ++i) sum += dtilde_column(a, i);
  MatShape s{a.k, a.p()};
  for (int g = 0; g < s.size(); ++g) t.check(sum.image(g).is_zero(), "x image nonzero");
  t.check(sum.y_image == TElement::y_power(a, 1) * QRat(a.k), "y image");
  return t.done();
}

CheckResult row_column_sum(MatShape s) {
  Tally t("row/column sum " + shp(s));
  QMDerivation rows(s), cols(s);
  for (int i = 1; i <= s.m; ++i) rows += row_derivation(s, i);
  for (int j = 1; j <= s.n; ++j) cols += col_derivation(s, j);
  for (int g = 0; g < s.size(); ++g) t.check(rows.image(g) == cols.image(g), "generator " + std::to_string(g));
  return t.done();
}

CheckResult weight_gradings(Ambient a, std::uint64_t seed) {
  if (2 * a.k > a.n) throw PreconditionError("weight gradings need 2k <= n");
  Tally t("weight gradings " + amb(a));
  std::mt19937_64 rng(seed);
  MatShape s{a.k, a.p()};
  TElement y = TElement::y_power(a, 1);
  TElement m = TElement::from_matrix(a, rightmost_minor(a), 0);
  for (int it = 0; it < 6; ++it) {
    TElement x(a);
    for (int term = 0; term < 4; ++term) {
      int e = static_cast<int>(rng() % 5) - 2;
      x += TElement::from_matrix(a, random_qm(s, 2, 1, rng), e);
    }
    TElement sum(a), sum2(a);
    for (const auto& [w, c] : y_weight_decompose(x)) {
      t.check(y * c == qpow(w) * (c * y), "y weight");
      sum += c;
      if (w != 1) continue;
      for (const auto& [mw, part] : minor_weight_decompose(c)) {
        if (mw != 0 && mw != 1) continue;
        for (const auto& [ye, coeff] : part.terms()) t.check(ye == 0 || a.k < 2, "weight-one part outside R");
      }
    }
    for (const auto& [w, c] : minor_weight_decompose(x)) {
      t.check(m * c == qpow(-w) * (c * m), "minor weight");
      sum2 += c;
    }
    t.check(sum == x && sum2 == x, "decomposition does not sum back");
  }
  return t.done();
}

CheckResult restriction_to_R(Ambient a, std::uint64_t seed, int samples) {
  if (2 * a.k > a.n) throw PreconditionError("restriction to R needs 2k <= n");
  Tally t("restriction to R " + amb(a));
  std::mt19937_64 rng(seed);
  QMElement minor = rightmost_minor(a);
  std::vector<GrassDerivation> ds;
  GrassDerivation cols(a, 0);
  cols += column_derivation(a, a.n - 1);
  cols -= column_derivation(a, a.n);
  ds.push_back(cols);
  for (int i = 0; i < samples; ++i) ds.push_back(random_derivation(a, rng));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto res = normalize(ds[i]);
    t.check(res.ok, res.failure);
    if (!res.ok) continue;
    TDerivation e = extend_to_T(res.normalized);
    t.check(apply(e, TElement::from_matrix(a, minor, 0)).is_zero(), "sample " + std::to_string(i) + " moves the minor");
    try {
      restrict_to_R(e);
      t.check(true, "");
    } catch (const Error& err) {
      t.check(false, "sample " + std::to_string(i) + ": " + err.what());
    }
  }
  return t.done();
}

CheckResult normalization(Ambient a, int samples, std::uint64_t seed) {
  Tally t("normalization " + amb(a));
  PluckerIndex u = leftmost(a), w = rightmost(a);
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    GrassDerivation d = random_derivation(a, rng);
    auto res = normalize(d);
    std::string tag = "seed " + std::to_string(seed + static_cast<std::uint64_t>(i));
    t.check(res.ok, [&] { return tag + ": " + res.failure; });
    t.check(res.normalized.image(u).is_zero() && res.normalized.image(w).is_zero(), tag + ": u/w image");
    t.check(replay(d, res.log) == res.normalized, tag + ": replay");
    t.check(normalize(res.normalized).log.empty(), tag + ": not idempotent");
  }
  return t.done();
}

CheckResult hh1_dimension(Ambient a, const std::vector<int>& shifts, int cap, const WindowOptions& opt) {
  Tally t("HH1 " + amb(a));
  HH1Report r = hh1_window(a, shifts, cap, opt);
  std::string summary = "cap " + std::to_string(cap) + ", quotient dims";
  for (const auto& s : r.shifts) {
    std::size_t expect = s.shift == 0 ? static_cast<std::size_t>(a.n) : 0;
    summary += " " + std::to_string(s.shift) + ":" + std::to_string(s.dim_hh1);
    t.check(s.dim_hh1 == expect, [&] { return "shift " + std::to_string(s.shift) + " gives " + std::to_string(s.dim_hh1); });
    t.check(s.inner_contained && s.closure && s.leibniz && s.specialisation_agrees,
            [&] { return "shift " + std::to_string(s.shift) + " consistency flags"; });
    if (s.shift == 0) {
      std::vector<std::string> want;
      for (int i = 1; i <= a.n; ++i) want.push_back("D_" + std::to_string(i));
      t.check(s.coset_labels == want, "coset basis is not D_1..D_n");
    }
  }
  if (r.column_independence) t.check(*r.column_independence, "test vectors");
  return t.done(summary);
}

CheckResult nonsquare_decomposition(MatShape s, ExecPolicy policy) {
  Tally t("non-square decomposition " + shp(s));
  auto space = qm_derivation_space(s, true, policy);
  // Predicted: span of all row and column derivations, cut by one nonzero
  // linear condition (the minor is an eigenvector of each of them).
  std::map<std::pair<int, QMMonomial>, std::size_t> coord;
  std::vector<QMDerivation> family;
  for (int i = 1; i <= s.m; ++i) family.push_back(row_derivation(s, i));
  for (int j = 1; j <= s.n; ++j) family.push_back(col_derivation(s, j));
  for (const auto& d : family)
    for (const auto& [g, x] : d.images)
      for (const auto& [mon, c] : x.terms()) coord.try_emplace({g, mon}, coord.size());
  Matrix m(0, coord.size());
  for (const auto& d : family) {
    std::vector<QRat> row(coord.size());
    for (const auto& [g, x] : d.images)
      for (const auto& [mon, c] : x.terms()) row[coord.at({g, mon})] = c;
    m.append_row(row);
  }
  std::size_t predicted = rank(m) - 1;
  t.check(space.size() == predicted,
          [&] { return "dimension " + std::to_string(space.size()) + " vs " + std::to_string(predicted); });
  for (std::size_t i = 0; i < space.size(); ++i) {
    try {
      auto c = decompose_nonsquare(space[i]);
      t.check(reconstruct(s, c) == space[i], "reconstruction " + std::to_string(i));
    } catch (const Error& e) {
      t.check(false, "basis element " + std::to_string(i) + ": " + e.what());
    }
  }
  return t.done("dimension " + std::to_string(space.size()));
}

CheckResult confluence(MatShape s, int max_length, int samples, std::uint64_t seed) {
  Tally t("confluence " + shp(s));
  std::mt19937_64 rng(seed);
  for (int it = 0; it < samples; ++it) {
    int len = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_length - 1));
    std::vector<int> word;
    for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(s.size())));
    QMElement left = reduce_word(s, word, RewriteStrategy::leftmost);
    QMElement prod = QMElement::scalar(s, QRat(1));
    for (int g : word) prod = prod * gen(s, s.row(g), s.col(g));
    t.check(reduce_word(s, word, RewriteStrategy::rightmost) == left && reduce_word(s, word, RewriteStrategy::random, rng()) == left &&
                prod == left,
            [&] {
              std::string w;
              for (int g : word) w += std::to_string(g) + " ";
              return "word " + w;
            });
  }
  return t.done();
}

CheckResult associativity(MatShape s, int samples, std::uint64_t seed) {
  Tally t("associativity " + shp(s));
  std::mt19937_64 rng(seed);
  for (int it = 0; it < samples; ++it) {
    QMElement x = random_qm(s, 2, 2, rng), y = random_qm(s, 2, 2, rng), z = random_qm(s, 2, 2, rng);
    t.check((x * y) * z == x * (y * z), "sample " + std::to_string(it));
    t.check(x * y == mul_reference(x, y), "reference product " + std::to_string(it));
  }
  return t.done();
}

CheckResult determinant_centrality(int m) {
  Tally t("determinant centrality " + std::to_string(m) + "x" + std::to_string(m));
  MatShape s{m, m};
  QMElement det = quantum_determinant(s);
  for (int g = 0; g < s.size(); ++g) t.check(commutator(det, gen(s, s.row(g), s.col(g))).is_zero(), "generator " + std::to_string(g));
  return t.done();
}

CheckResult leibniz(Ambient a, int samples, std::uint64_t seed) {
  Tally t("Leibniz " + amb(a));
  std::mt19937_64 rng(seed);
  // Inner parts raise degree by one; degree 4 is out of reach past ten generators.
  int max_x = pluckers(a).size() > 10 ? 1 : 2;
  for (int it = 0; it < samples; ++it) {
    GrassDerivation d = random_derivation(a, rng);
    GrassElement x = random_grass(a, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_x)), 2, rng);
    GrassElement y = random_grass(a, 1, 2, rng);
    t.check(leibniz_holds(d, x, y), "sample " + std::to_string(it));
  }
  MatShape s{a.k, a.p()};
  for (int it = 0; it < samples; ++it) {
    QMDerivation d = inner(random_qm(s, 1, 2, rng));
    d += row_derivation(s, 1);
    QMElement x = random_qm(s, 2, 2, rng), y = random_qm(s, 2, 2, rng);
    t.check(apply(d, x * y) == apply(d, x) * y + x * apply(d, y), "matrix sample " + std::to_string(it));
  }
  return t.done();
}

CheckResult psi_agreement(Ambient a, int cap) {
  Tally t("transport " + amb(a));
  Ambient b{a.n - a.k, a.n};
  HH1Report ra = hh1_window(a, {0}, cap), rb = hh1_window(b, {0}, cap);
  t.check(ra.shifts[0].dim_hh1 == rb.shifts[0].dim_hh1, "quotient dimensions differ");
  std::vector<GrassDerivation> moved;
  for (int i = 1; i <= a.n; ++i) {
    GrassDerivation d = psi_transport(column_derivation(a, i));
    t.check(verify(d, cap), "transported D_" + std::to_string(i) + " fails the relations");
    moved.push_back(d);
  }
  // Degree-0 inner derivations vanish, so independence modulo inner is plain independence.
  t.check(derivation_rank(moved) == static_cast<std::size_t>(a.n), "transported family is dependent");
  return t.done(amb(a) + " and " + amb(b) + " both " + std::to_string(ra.shifts[0].dim_hh1));
}

CheckResult specialisation(Ambient a, const std::vector<int>& shifts, int cap, const mpq_class& q0) {
  Tally t("specialisation " + amb(a) + " at " + q0.get_str());
  WindowOptions opt;
  opt.specialisation = q0;
  HH1Report r = hh1_window(a, shifts, cap, opt);
  for (const auto& s : r.shifts) t.check(s.specialisation_agrees, "shift " + std::to_string(s.shift));
  return t.done();
}

} // namespace checks

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{
      "column-derivations", "u-w-commutation",      "commutation-mod-u", "extended-row-column",
      "extension-identities", "extended-column-sum", "row-column-sum",    "dehomogenisation",
      "weight-gradings",    "restriction",          "minor-commutation", "normalization",
      "leibniz",            "hh1"};
  return names;
}

std::string check_precondition(const std::string& name, Ambient a) {
  if (name == "weight-gradings" || name == "restriction")
    return 2 * a.k <= a.n ? "" : "needs 2k <= n";
  if (name == "minor-commutation") return a.k < a.p() ? "" : "needs k < n - k";
  if (name == "hh1") return a.k >= 2 && a.k <= a.n - 2 ? "" : "ambient outside 2 <= k <= n-2";
  if (std::find(lemma_names().begin(), lemma_names().end(), name) == lemma_names().end())
    throw DomainError("unknown check '" + name + "'");
  return "";
}

CheckResult run_named_check(const std::string& name, Ambient a, std::uint64_t seed, ExecPolicy policy) {
  check_ambient(a);
  std::string why = check_precondition(name, a);
  if (!why.empty()) throw PreconditionError(name + ": " + why);
  MatShape s{a.k, a.p()};
  if (name == "column-derivations") return checks::column_derivations(a);
  if (name == "u-w-commutation") return checks::uw_commutation(a);
  if (name == "commutation-mod-u") return checks::commutation_mod_u(a);
  if (name == "extended-row-column") return checks::extended_row_column(a);
  if (name == "extension-identities") return checks::extension_identities(a);
  if (name == "extended-column-sum") return checks::extended_column_sum(a);
  if (name == "row-column-sum") return checks::row_column_sum(s);
  if (name == "dehomogenisation") return checks::dehomogenisation(a);
  if (name == "weight-gradings") return checks::weight_gradings(a, seed);
  if (name == "restriction") return checks::restriction_to_R(a, seed);
  if (name == "minor-commutation") return checks::minor_commutation(s);
  if (name == "normalization") return checks::normalization(a, 10, seed);
  if (name == "leibniz") return checks::leibniz(a, 5, seed);
  WindowOptions opt;
  opt.policy = policy;
  opt.seed = seed;
  return checks::hh1_dimension(a, {0}, 2, opt);
}

} // namespace qgrass
