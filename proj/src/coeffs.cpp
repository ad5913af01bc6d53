#include "qgrass/coeffs.hpp"

#include "qgrass/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qgrass {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 mpz_mod(const mpz_class& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

// Ordinary polynomials (index = exponent) used by gcd and exact division.
using Dense = std::vector<mpq_class>;

void strip(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a := a mod b, returns quotient. b must be nonzero and stripped.
Dense divmod(Dense& a, const Dense& b) {
  strip(a);
  Dense quot;
  if (a.size() < b.size()) return quot;
  quot.assign(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class& lead = b.back();
  for (std::size_t i = a.size(); i >= b.size(); --i) {
    std::size_t top = i - 1;
    if (a[top] == 0) continue;
    mpq_class f = a[top] / lead;
    std::size_t shift = top + 1 - b.size();
    quot[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  strip(a);
  return quot;
}

} // namespace

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const mpq_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly QPoly::monomial(const mpq_class& c, int exponent) {
  QPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

QPoly QPoly::from_terms(const std::map<int, mpq_class>& terms) {
  QPoly p;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    if (first) {
      p.low_ = e;
      first = false;
    }
    p.coeffs_.resize(static_cast<std::size_t>(e - p.low_) + 1, mpq_class(0));
    p.coeffs_[static_cast<std::size_t>(e - p.low_)] = c;
  }
  p.trim();
  return p;
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

mpq_class QPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, mpq_class> QPoly::terms() const {
  std::map<int, mpq_class> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpq_class(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - low_) + 1, mpq_class(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::shifted(int k) const {
  QPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return QPoly();
  Dense x(a.coeffs_.begin(), a.coeffs_.end());
  Dense y(b.coeffs_.begin(), b.coeffs_.end());
  strip(x);
  strip(y);
  while (!y.empty()) {
    divmod(x, y);
    std::swap(x, y);
  }
  mpq_class lead = x.back();
  for (auto& c : x) c /= lead;
  QPoly g;
  g.coeffs_ = std::move(x);
  g.low_ = 0;
  g.trim();
  return g;
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return QPoly();
  Dense x(a.coeffs_.begin(), a.coeffs_.end());
  Dense y(b.coeffs_.begin(), b.coeffs_.end());
  Dense quot = divmod(x, y);
  if (!x.empty()) throw ConsistencyError("QPoly::div_exact: nonzero remainder");
  QPoly r;
  r.coeffs_ = std::move(quot);
  r.low_ = a.low_ - b.low_;
  r.trim();
  return r;
}

mpq_class QPoly::eval(const mpq_class& q0) const {
  if (is_zero()) return 0;
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
  mpq_class base = low_ >= 0 ? q0 : mpq_class(1) / q0;
  mpq_class scale = 1;
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

std::optional<std::uint64_t> QPoly::eval_mod(std::uint64_t q0, std::uint64_t p) const {
  if (is_zero()) return 0;
  if (q0 % p == 0) return std::nullopt;
  u64 acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    u64 den = mpz_mod(coeffs_[i].get_den(), p);
    if (den == 0) return std::nullopt;
    u64 c = mulmod(mpz_mod(coeffs_[i].get_num(), p), invmod(den, p), p);
    acc = (mulmod(acc, q0, p) + c) % p;
  }
  u64 base = low_ >= 0 ? q0 % p : invmod(q0 % p, p);
  return mulmod(acc, powmod(base, static_cast<u64>(std::abs(low_)), p), p);
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out += '+';
    first = false;
    out += coeffs_[i].get_str();
    out += "*q^";
    out += std::to_string(low_ + static_cast<int>(i));
  }
  return out;
}

QPoly QPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "0") return QPoly();
  if (s.empty()) throw ParseError("empty polynomial");
  std::map<int, mpq_class> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t plus = s.find('+', pos);
    std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    pos = plus == std::string::npos ? s.size() : plus + 1;
    auto star = term.find("*q^");
    if (star == std::string::npos) throw ParseError("bad polynomial term '" + term + "'");
    mpq_class c = parse_rational(term.substr(0, star));
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(term.substr(star + 3), &used);
      if (used != term.size() - star - 3) throw ParseError("bad exponent in '" + term + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad exponent in '" + term + "'");
    }
    terms[e] += c;
  }
  return from_terms(terms);
}

std::size_t QPoly::hash() const {
  std::size_t h = static_cast<std::size_t>(low_) * 1000003u + coeffs_.size();
  for (const auto& c : coeffs_) {
    h = h * 1099511628211ull + mpz_get_ui(c.get_num_mpz_t()) + (mpz_sgn(c.get_num_mpz_t()) < 0 ? 7u : 0u);
    h = h * 1099511628211ull + mpz_get_ui(c.get_den_mpz_t());
  }
  return h;
}

// ---------------------------------------------------------------------------

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void QRat::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    mpq_class inv = mpq_class(1) / den_.lowest_coeff();
    num_ = num_.shifted(-den_.low());
    num_ *= inv;
    den_ = QPoly(1);
    return;
  }
  int s = den_.low();
  den_ = den_.shifted(-s);
  num_ = num_.shifted(-s);
  int t = num_.low();
  QPoly n0 = num_.shifted(-t);
  QPoly g = QPoly::gcd(n0, den_);
  if (!g.is_one()) {
    n0 = QPoly::div_exact(n0, g);
    den_ = QPoly::div_exact(den_, g);
  }
  mpq_class c = den_.lowest_coeff();
  int dl = den_.low();
  if (c != 1 || dl != 0) {
    mpq_class inv = mpq_class(1) / c;
    den_ *= inv;
    n0 *= inv;
    den_ = den_.shifted(-dl);
    n0 = n0.shifted(-dl);
  }
  num_ = n0.shifted(t);
  if (den_.is_monomial()) normalize();
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QRat(den_, num_);
}

QRat QRat::shifted(int k) const {
  QRat r = *this;
  r.num_ = r.num_.shifted(k);
  return r;
}

std::string QRat::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

namespace {

std::string pretty_poly(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string t = pretty_monomial(c, e);
    if (first) {
      out = t;
      first = false;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

} // namespace

std::string pretty_monomial(const mpq_class& c, int k) {
  std::string qpart;
  if (k == 1) qpart = "q";
  else if (k != 0) qpart = "q^" + std::to_string(k);
  if (qpart.empty()) return c.get_str();
  if (c == 1) return qpart;
  if (c == -1) return "-" + qpart;
  return c.get_str() + " " + qpart;
}

std::string QRat::pretty() const {
  if (den_.is_one()) return pretty_poly(num_);
  std::string n = pretty_poly(num_);
  if (!num_.is_monomial()) n = "(" + n + ")";
  return n + "/(" + pretty_poly(den_) + ")";
}

QRat QRat::parse(std::string_view text) {
  std::string s(text);
  auto mid = s.find(")/(");
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')' && mid != std::string::npos) {
    QPoly n = QPoly::parse(s.substr(1, mid - 1));
    QPoly d = QPoly::parse(s.substr(mid + 3, s.size() - mid - 4));
    if (d.is_zero()) throw ParseError("zero denominator in '" + s + "'");
    return QRat(std::move(n), std::move(d));
  }
  return QRat(QPoly::parse(s));
}

QRat qpow(int k) { return QRat(QPoly::monomial(1, k)); }

mpq_class eval_at(const QRat& x, const mpq_class& q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw EvaluationError("eval_at: q0 = " + q0.get_str() + " is forbidden (must avoid 0, 1, -1)");
  mpq_class d = x.den().eval(q0);
  if (d == 0) throw EvaluationError("eval_at: pole at q0 = " + q0.get_str());
  return x.num().eval(q0) / d;
}

std::optional<std::uint64_t> eval_mod(const QRat& x, std::uint64_t q0, std::uint64_t p) {
  auto n = x.num().eval_mod(q0, p);
  auto d = x.den().eval_mod(q0, p);
  if (!n || !d || *d == 0) return std::nullopt;
  return mulmod(*n, invmod(*d, p), p);
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw ParseError("bad rational '" + s + "'");
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

} // namespace qgrass
