#include "qgrass/linalg.hpp"

#include "qgrass/error.hpp"

#include <algorithm>

namespace qgrass {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using PolyRow = std::vector<QPoly>;

QPoly lcm(const QPoly& a, const QPoly& b) {
  QPoly g = QPoly::gcd(a, b);
  return QPoly::div_exact(a * b, g);
}

PolyRow to_poly_row(const Matrix& a, std::size_t r) {
  QPoly l(1);
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!a(r, c).is_zero() && !a(r, c).den().is_one()) l = lcm(l, a(r, c).den());
  PolyRow row(a.cols());
  QRat scale(l);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (a(r, c).is_zero()) continue;
    QRat x = a(r, c) * scale;
    row[c] = x.num();
  }
  return row;
}

void strip_content(PolyRow& row) {
  QPoly g;
  bool first = true;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    if (first) {
      g = QPoly::gcd(x, x);
      first = false;
    } else {
      g = QPoly::gcd(g, x);
    }
    if (g.is_one()) break;
  }
  if (first) return;
  if (!g.is_one())
    for (auto& x : row)
      if (!x.is_zero()) x = QPoly::div_exact(x, g);
  // Normalise the rational content and the power of q of the first entry.
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    mpq_class inv = mpq_class(1) / x.lowest_coeff();
    int shift = -x.low();
    for (auto& y : row)
      if (!y.is_zero()) y = (y * inv).shifted(shift);
    break;
  }
}

std::size_t poly_size(const QPoly& p) { return p.is_zero() ? 0 : static_cast<std::size_t>(p.high() - p.low() + 1); }

} // namespace

std::vector<QRat> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(const std::vector<QRat>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw DomainError("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& which) const {
  Matrix out(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(which[i], c);
  return out;
}

EchelonForm reduce_fraction_free(const Matrix& a) {
  std::vector<PolyRow> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    rows.push_back(to_poly_row(a, r));
    strip_content(rows.back());
  }
  std::vector<bool> used(rows.size(), false);
  std::vector<std::size_t> pivot_row_of;
  EchelonForm out;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r][c].is_zero()) continue;
      if (best == rows.size() || poly_size(rows[r][c]) < poly_size(rows[best][c])) best = r;
    }
    if (best == rows.size()) continue;
    used[best] = true;
    pivot_row_of.push_back(best);
    out.pivot_cols.push_back(c);
    const PolyRow& piv = rows[best];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best || rows[r][c].is_zero()) continue;
      QPoly f = rows[r][c];
      for (std::size_t cc = 0; cc < a.cols(); ++cc) {
        if (piv[cc].is_zero()) {
          if (!rows[r][cc].is_zero()) rows[r][cc] = rows[r][cc] * piv[c];
          continue;
        }
        rows[r][cc] = rows[r][cc] * piv[c] - f * piv[cc];
      }
      strip_content(rows[r]);
    }
  }
  for (std::size_t r : pivot_row_of) out.rows.push_back(rows[r]);
  return out;
}

std::size_t rank(const Matrix& a) { return reduce_fraction_free(a).rows.size(); }

std::size_t rank_at(const Matrix& a, const mpq_class& q0) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) m[r][c] = eval_at(a(r, c), q0);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < a.cols() && rk < a.rows(); ++c) {
    std::size_t p = rk;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rk]);
    for (std::size_t r = rk + 1; r < a.rows(); ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rk][c];
      for (std::size_t cc = c; cc < a.cols(); ++cc) m[r][cc] -= f * m[rk][cc];
    }
    ++rk;
  }
  return rk;
}

std::optional<ModRank> rank_mod_p(const Matrix& a, std::uint64_t q0, std::uint64_t p) {
  std::vector<std::vector<u64>> basis;  // reduced rows, each with a pivot
  std::vector<std::size_t> pivots;
  ModRank out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<u64> row(a.cols(), 0);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c).is_zero()) continue;
      auto v = eval_mod(a(r, c), q0, p);
      if (!v) return std::nullopt;
      row[c] = *v;
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      u64 f = row[pivots[b]];
      if (!f) continue;
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (basis[b][c]) row[c] = (row[c] + p - mulmod(f, basis[b][c], p)) % p;
    }
    std::size_t pc = 0;
    while (pc < a.cols() && row[pc] == 0) ++pc;
    if (pc == a.cols()) continue;
    u64 inv = powmod(row[pc], p - 2, p);
    for (auto& x : row) x = mulmod(x, inv, p);
    basis.push_back(std::move(row));
    pivots.push_back(pc);
    out.pivot_rows.push_back(r);
    if (basis.size() == a.cols()) break;
  }
  out.rank = basis.size();
  return out;
}

std::vector<std::size_t> independent_rows(const Matrix& a) {
  static constexpr std::uint64_t kPoints[] = {kSpecialisationPoint, 987654321ull, 31415926535ull};
  std::vector<std::size_t> best;
  for (auto q0 : kPoints) {
    auto mr = rank_mod_p(a, q0);
    if (mr && mr->rank > best.size()) best = mr->pivot_rows;
    if (best.size() == a.cols()) return best;
  }
  // Exact greedy fallback.
  std::vector<std::size_t> chosen;
  std::size_t current = 0;
  for (std::size_t r = 0; r < a.rows() && chosen.size() < a.cols(); ++r) {
    auto trial = chosen;
    trial.push_back(r);
    std::size_t rk = rank(a.select_rows(trial));
    if (rk > current) {
      chosen = std::move(trial);
      current = rk;
    }
  }
  return chosen;
}

namespace {

std::vector<Vector> nullspace_from(const EchelonForm& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = QRat(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      const auto& row = e.rows[r];
      if (row[f].is_zero()) continue;
      v[e.pivot_cols[r]] = -QRat(row[f], row[e.pivot_cols[r]]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

std::vector<Vector> nullspace(const Matrix& a) {
  if (a.rows() == 0) {
    std::vector<Vector> out;
    for (std::size_t f = 0; f < a.cols(); ++f) {
      Vector v(a.cols());
      v[f] = QRat(1);
      out.push_back(std::move(v));
    }
    return out;
  }
  auto mr = rank_mod_p(a);
  if (mr && mr->pivot_rows.size() < a.rows()) {
    Matrix sub = a.select_rows(mr->pivot_rows);
    auto candidate = nullspace_from(reduce_fraction_free(sub), a.cols());
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) {
      auto row = a.row(r);
      for (const auto& v : candidate)
        if (!dot(row, v).is_zero()) {
          ok = false;
          break;
        }
    }
    if (ok) return candidate;
  }
  return nullspace_from(reduce_fraction_free(a), a.cols());
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = QRat(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw ConsistencyError("inverse: singular matrix");
    if (p != c)
      for (std::size_t cc = 0; cc < n; ++cc) {
        std::swap(m(p, cc), m(c, cc));
        std::swap(inv(p, cc), inv(c, cc));
      }
    QRat pinv = m(c, c).inverse();
    for (std::size_t cc = 0; cc < n; ++cc) {
      if (!m(c, cc).is_zero()) m(c, cc) *= pinv;
      if (!inv(c, cc).is_zero()) inv(c, cc) *= pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      QRat f = m(r, c);
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (!m(c, cc).is_zero()) m(r, cc) -= f * m(c, cc);
        if (!inv(c, cc).is_zero()) inv(r, cc) -= f * inv(c, cc);
      }
    }
  }
  return inv;
}

Vector multiply(const Matrix& a, const Vector& x) {
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero() && !x[c].is_zero()) out[r] += a(r, c) * x[c];
  return out;
}

QRat dot(const std::vector<QRat>& a, const Vector& x) {
  QRat s;
  for (std::size_t c = 0; c < a.size(); ++c)
    if (!a[c].is_zero() && !x[c].is_zero()) s += a[c] * x[c];
  return s;
}

} // namespace qgrass
