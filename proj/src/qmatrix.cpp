#include "qgrass/qmatrix.hpp"

#include "qgrass/concurrent_cache.hpp"
#include "qgrass/error.hpp"

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>

namespace qgrass {

namespace {

using Terms = QMElement::Terms;
using TermsPtr = std::shared_ptr<const Terms>;

const char* const kDot = "\xC2\xB7";

void accumulate(Terms& acc, const QMMonomial& mon, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(mon, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

struct PairTerm {
  QRat coeff;
  int first;
  int second;
};

const QRat& q_inverse() {
  static const QRat v = qpow(-1);
  return v;
}

const QRat& q_hat() {
  static const QRat v = qpow(1) - qpow(-1);
  return v;
}

// Rewrites x_h x_g with h > g (row-major) into ordered pairs.
std::vector<PairTerm> rewrite_pair(MatShape shape, int h, int g) {
  int k = shape.row(h), l = shape.col(h);
  int i = shape.row(g), j = shape.col(g);
  if (k == i || l == j) return {{q_inverse(), g, h}};
  if (l < j) return {{QRat(1), g, h}};
  // k > i, l > j
  return {{QRat(1), g, h}, {-q_hat(), shape.index(i, l), shape.index(k, j)}};
}

struct ProductTable {
  explicit ProductTable(MatShape s) : shape(s) {}

  MatShape shape;
  ConcurrentCache<std::pair<QMMonomial, int>, TermsPtr> products;
  ConcurrentCache<std::pair<std::uint32_t, std::uint32_t>, QMElement> minors;
};

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<MatShape, std::unique_ptr<ProductTable>>& registry() {
  static std::map<MatShape, std::unique_ptr<ProductTable>> r;
  return r;
}

ProductTable& table(MatShape shape) {
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[shape];
  if (!slot) slot = std::make_unique<ProductTable>(shape);
  return *slot;
}

TermsPtr single(const QMMonomial& mon) {
  auto t = std::make_shared<Terms>();
  t->emplace(mon, QRat(1));
  return t;
}

QMMonomial bumped(const QMMonomial& mon, int g) {
  QMMonomial r = mon;
  if (r.exps[static_cast<std::size_t>(g)] == 255) throw DomainError("monomial exponent overflow");
  ++r.exps[static_cast<std::size_t>(g)];
  return r;
}

TermsPtr times_generator(ProductTable& table, const QMMonomial& mon, int g) {
  int last = mon.last();
  if (last <= g) return single(bumped(mon, g));
  return table.products.get_or_compute({mon, g}, [&] {
    QMMonomial rest = mon;
    --rest.exps[static_cast<std::size_t>(last)];
    auto acc = std::make_shared<Terms>();
    for (const auto& pt : rewrite_pair(table.shape, last, g)) {
      TermsPtr left = times_generator(table, rest, pt.first);
      for (const auto& [m1, c1] : *left) {
        TermsPtr right = times_generator(table, m1, pt.second);
        QRat c = pt.coeff * c1;
        for (const auto& [m2, c2] : *right) accumulate(*acc, m2, c * c2);
      }
    }
    return TermsPtr(acc);
  });
}

Terms times_word(ProductTable& table, Terms cur, const std::vector<int>& word) {
  for (int g : word) {
    Terms next;
    for (const auto& [m, c] : cur) {
      TermsPtr r = times_generator(table, m, g);
      for (const auto& [m2, c2] : *r) accumulate(next, m2, c * c2);
    }
    cur = std::move(next);
  }
  return cur;
}

std::uint32_t mask_of(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= 1u << (i - 1);
  return m;
}

int inversions(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

QRat minus_q_power(int e) {
  QRat c = qpow(e);
  return e % 2 ? -c : c;
}

std::atomic<int> g_permutation_threshold{4};

QMElement minor_uncached(MatShape shape, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t t = rows.size();
  if (static_cast<int>(t) <= g_permutation_threshold.load()) {
    ProductTable& tab = table(shape);
    Terms acc;
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> word;
      word.reserve(t);
      for (std::size_t r = 0; r < t; ++r) word.push_back(shape.index(rows[r], cols[static_cast<std::size_t>(perm[r])]));
      Terms one;
      one.emplace(QMMonomial{}, minus_q_power(inversions(perm)));
      for (const auto& [m, c] : times_word(tab, std::move(one), word)) accumulate(acc, m, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    QMElement out(shape);
    for (const auto& [m, c] : acc) out.add_term(m, c);
    return out;
  }
  // First-row expansion: [I|J] = sum_l (-q)^l x_{i0, j_l} [I - i0 | J - j_l].
  QMElement out(shape);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t l = 0; l < t; ++l) {
    std::vector<int> sub_cols;
    for (std::size_t c = 0; c < t; ++c)
      if (c != l) sub_cols.push_back(cols[c]);
    QMElement term = mul(gen(shape, rows[0], cols[l]), quantum_minor(shape, sub_rows, sub_cols));
    out += term * minus_q_power(static_cast<int>(l));
  }
  return out;
}

} // namespace

void check_shape(MatShape shape) {
  if (shape.m < 1 || shape.n < 1 || shape.size() > kMaxGenerators)
    throw DomainError("unsupported quantum matrix shape " + std::to_string(shape.m) + "x" + std::to_string(shape.n));
}

int QMMonomial::degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

int QMMonomial::last() const {
  for (int g = kMaxGenerators - 1; g >= 0; --g)
    if (exps[static_cast<std::size_t>(g)]) return g;
  return -1;
}

std::vector<int> QMMonomial::word() const {
  std::vector<int> w;
  for (int g = 0; g < kMaxGenerators; ++g)
    for (int e = 0; e < exps[static_cast<std::size_t>(g)]; ++e) w.push_back(g);
  return w;
}

QMElement QMElement::scalar(MatShape shape, const QRat& c) { return monomial(shape, QMMonomial{}, c); }

QMElement QMElement::monomial(MatShape shape, const QMMonomial& mon, const QRat& c) {
  QMElement e(shape);
  e.add_term(mon, c);
  return e;
}

QRat QMElement::coeff(const QMMonomial& mon) const {
  auto it = terms_.find(mon);
  return it == terms_.end() ? QRat() : it->second;
}

void QMElement::add_term(const QMMonomial& mon, const QRat& c) { accumulate(terms_, mon, c); }

QMElement QMElement::operator-() const {
  QMElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

QMElement& QMElement::operator+=(const QMElement& o) {
  if (o.shape_ != shape_) throw DomainError("quantum matrix shape mismatch");
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

QMElement& QMElement::operator-=(const QMElement& o) {
  if (o.shape_ != shape_) throw DomainError("quantum matrix shape mismatch");
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

QMElement& QMElement::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

QMElement operator*(const QMElement& a, const QMElement& b) { return mul(a, b); }

bool QMElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

QMElement gen(MatShape shape, int i, int j) {
  check_shape(shape);
  if (i < 1 || i > shape.m || j < 1 || j > shape.n)
    throw DomainError("generator x[" + std::to_string(i) + "," + std::to_string(j) + "] out of range for " +
                      std::to_string(shape.m) + "x" + std::to_string(shape.n));
  QMMonomial mon;
  mon.exps[static_cast<std::size_t>(shape.index(i, j))] = 1;
  return QMElement::monomial(shape, mon);
}

QMElement mul_monomial_generator(MatShape shape, const QMMonomial& mon, int g) {
  check_shape(shape);
  QMElement out(shape);
  for (const auto& [m, c] : *times_generator(table(shape), mon, g)) out.add_term(m, c);
  return out;
}

QMElement mul(const QMElement& a, const QMElement& b) {
  if (a.shape() != b.shape()) throw DomainError("quantum matrix shape mismatch");
  check_shape(a.shape());
  ProductTable& tab = table(a.shape());
  Terms acc;
  for (const auto& [mb, cb] : b.terms()) {
    Terms cur = times_word(tab, a.terms(), mb.word());
    for (const auto& [m, c] : cur) accumulate(acc, m, c * cb);
  }
  QMElement out(a.shape());
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

QMElement reduce_word(MatShape shape, const std::vector<int>& word, RewriteStrategy strategy, std::uint64_t seed) {
  check_shape(shape);
  for (int g : word)
    if (g < 0 || g >= shape.size()) throw DomainError("generator index out of range in word");
  std::mt19937_64 rng(seed);
  std::map<std::vector<int>, QRat> work;
  work.emplace(word, QRat(1));
  QMElement out(shape);
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    std::vector<int> w = std::move(node.key());
    QRat c = std::move(node.mapped());
    std::vector<std::size_t> bad;
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) bad.push_back(p);
    if (bad.empty()) {
      QMMonomial mon;
      for (int g : w) mon = bumped(mon, g);
      out.add_term(mon, c);
      continue;
    }
    std::size_t p = bad.front();
    if (strategy == RewriteStrategy::rightmost) p = bad.back();
    if (strategy == RewriteStrategy::random) p = bad[rng() % bad.size()];
    for (const auto& pt : rewrite_pair(shape, w[p], w[p + 1])) {
      std::vector<int> w2 = w;
      w2[p] = pt.first;
      w2[p + 1] = pt.second;
      QRat add = c * pt.coeff;
      auto [it, inserted] = work.try_emplace(std::move(w2), add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return out;
}

QMElement mul_reference(const QMElement& a, const QMElement& b, RewriteStrategy strategy) {
  if (a.shape() != b.shape()) throw DomainError("quantum matrix shape mismatch");
  QMElement out(a.shape());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> w = ma.word();
      std::vector<int> wb = mb.word();
      w.insert(w.end(), wb.begin(), wb.end());
      out += reduce_word(a.shape(), w, strategy) * (ca * cb);
    }
  }
  return out;
}

QMElement commutator(const QMElement& a, const QMElement& b) { return mul(a, b) - mul(b, a); }

QMElement quantum_determinant(MatShape shape) {
  if (shape.m != shape.n) throw DomainError("quantum determinant needs a square shape");
  std::vector<int> idx(static_cast<std::size_t>(shape.m));
  std::iota(idx.begin(), idx.end(), 1);
  return quantum_minor(shape, idx, idx);
}

void set_minor_permutation_threshold(int t) { g_permutation_threshold.store(std::max(1, t)); }
int minor_permutation_threshold() { return g_permutation_threshold.load(); }

QMElement quantum_minor(MatShape shape, const std::vector<int>& rows, const std::vector<int>& cols) {
  check_shape(shape);
  if (rows.size() != cols.size() || rows.empty()) throw DomainError("quantum minor needs |I| = |J| >= 1");
  auto check = [](const std::vector<int>& v, int bound, const char* what) {
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a] < 1 || v[a] > bound) throw DomainError(std::string("quantum minor ") + what + " index out of range");
      if (a > 0 && v[a] <= v[a - 1]) throw DomainError(std::string("quantum minor ") + what + " indices must increase");
    }
  };
  check(rows, shape.m, "row");
  check(cols, shape.n, "column");
  return table(shape).minors.get_or_compute({mask_of(rows), mask_of(cols)},
                                            [&] { return minor_uncached(shape, rows, cols); });
}

Bicontent bicontent(const QMMonomial& mon, MatShape shape) {
  Bicontent b{std::vector<int>(static_cast<std::size_t>(shape.m), 0), std::vector<int>(static_cast<std::size_t>(shape.n), 0)};
  for (int g = 0; g < shape.size(); ++g) {
    int e = mon.exps[static_cast<std::size_t>(g)];
    b.rows[static_cast<std::size_t>(shape.row(g) - 1)] += e;
    b.cols[static_cast<std::size_t>(shape.col(g) - 1)] += e;
  }
  return b;
}

QMElement graded_component(const QMElement& a, int degree) {
  QMElement out(a.shape());
  for (const auto& [m, c] : a.terms())
    if (m.degree() == degree) out.add_term(m, c);
  return out;
}

QMElement bigraded_component(const QMElement& a, const Bicontent& content) {
  QMElement out(a.shape());
  for (const auto& [m, c] : a.terms())
    if (bicontent(m, a.shape()) == content) out.add_term(m, c);
  return out;
}

std::string to_string(const QMMonomial& mon, MatShape shape) {
  std::string out;
  for (int g = 0; g < shape.size(); ++g) {
    int e = mon.exps[static_cast<std::size_t>(g)];
    if (!e) continue;
    if (!out.empty()) out += kDot;
    out += "x[" + std::to_string(shape.row(g)) + "," + std::to_string(shape.col(g)) + "]";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

QMMonomial parse_monomial(const std::string& text, MatShape shape) {
  QMMonomial mon;
  if (text == "1") return mon;
  std::size_t pos = 0;
  const std::string dot = kDot;
  while (pos < text.size()) {
    std::size_t next = text.find(dot, pos);
    std::string factor = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? text.size() : next + dot.size();
    int i = 0, j = 0, e = 1;
    char tail = 0;
    int got = std::sscanf(factor.c_str(), "x[%d,%d]%c%d", &i, &j, &tail, &e);
    if (got < 2 || (got >= 3 && tail != '^') || (got == 3)) throw ParseError("bad monomial factor '" + factor + "'");
    if (i < 1 || i > shape.m || j < 1 || j > shape.n || e < 1 || e > 255)
      throw ParseError("monomial factor out of range '" + factor + "'");
    mon.exps[static_cast<std::size_t>(shape.index(i, j))] += static_cast<std::uint8_t>(e);
  }
  return mon;
}

std::string to_string(const QMElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += to_string(m, a.shape());
    } else if (m.degree() == 0) {
      out += "(" + c.pretty() + ")";
    } else {
      out += "(" + c.pretty() + ") " + to_string(m, a.shape());
    }
  }
  return out;
}

std::size_t product_cache_size(MatShape shape) { return table(shape).products.size(); }

void clear_product_caches() {
  std::lock_guard lock(registry_mutex());
  registry().clear();
}

} // namespace qgrass
