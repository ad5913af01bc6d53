#pragma once

// The quantum grassmannian O_q(G(k,n)): the subalgebra of O_q(M(k,n))
// generated by the maximal quantum minors [J] = [1..k | J].
//
// Elements are kept as combinations of standard monomials [I1][I2]...[It]
// with I1 <= I2 <= ... componentwise. Straightening solves against the PBW
// expansions of the standard monomials of the same degree and column
// content; those systems are built lazily, shared between threads and can be
// persisted to a cache directory.

#include "qgrass/coeffs.hpp"
#include "qgrass/exec.hpp"
#include "qgrass/qmatrix.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qgrass {

struct Ambient {
  int k = 1;
  int n = 2;

  int p() const { return n - k; }
  MatShape shape() const { return {k, n}; }
  /// Outside 2 <= k <= n-2. Such ambients work but are flagged.
  bool degenerate() const { return k < 2 || k > n - 2; }

  auto operator<=>(const Ambient&) const = default;
};

/// Throws DomainError unless 1 <= k < n <= 32.
void check_ambient(Ambient a);

class PluckerIndex {
public:
  PluckerIndex() = default;
  /// Columns must be k distinct values in 1..n (any order); throws DomainError otherwise.
  PluckerIndex(Ambient a, const std::vector<int>& columns);
  static PluckerIndex from_mask(Ambient a, std::uint32_t mask);

  Ambient ambient() const { return {k_, n_}; }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> columns() const;
  bool contains(int column) const { return column >= 1 && column <= n_ && (mask_ >> (column - 1)) & 1u; }

  friend bool operator==(const PluckerIndex& a, const PluckerIndex& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  /// Lexicographic on the sorted column lists (a linear extension of plucker_leq).
  friend std::strong_ordering operator<=>(const PluckerIndex& a, const PluckerIndex& b);

private:
  int k_ = 0;
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

struct PluckerWord {
  std::vector<PluckerIndex> factors;

  int degree() const { return static_cast<int>(factors.size()); }
  auto operator<=>(const PluckerWord&) const = default;
};

PluckerWord operator*(const PluckerWord& a, const PluckerWord& b);

/// [1..k] and [n-k+1..n].
PluckerIndex leftmost(Ambient a);
PluckerIndex rightmost(Ambient a);

/// All C(n,k) Plücker coordinates in lexicographic order.
const std::vector<PluckerIndex>& pluckers(Ambient a);

/// Componentwise comparison i_l <= j_l; throws DomainError on ambient mismatch.
bool plucker_leq(const PluckerIndex& a, const PluckerIndex& b);
bool is_standard(const PluckerWord& w);

struct Weights {
  int d = 0;  // |I \ u|
  int e = 0;  // |I \ w|
};
Weights weights(const PluckerIndex& i);
/// Sum of d over the factors.
int weight_d(const PluckerWord& w);

/// Column multiplicities of a word (length n).
std::vector<int> column_content(const PluckerWord& w, Ambient a);

class GrassElement {
public:
  using Terms = std::map<PluckerWord, QRat>;

  GrassElement() = default;
  explicit GrassElement(Ambient a) : ambient_(a) {}

  static GrassElement scalar(Ambient a, const QRat& c);
  static GrassElement word(Ambient a, const PluckerWord& w, const QRat& c = QRat(1));
  static GrassElement generator(const PluckerIndex& i, const QRat& c = QRat(1));

  Ambient ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QRat coeff(const PluckerWord& w) const;
  /// Adds c*w, dropping the term if it cancels. Does not straighten.
  void add_term(const PluckerWord& w, const QRat& c);

  GrassElement operator-() const;
  GrassElement& operator+=(const GrassElement& o);
  GrassElement& operator-=(const GrassElement& o);
  GrassElement& operator*=(const QRat& c);
  friend GrassElement operator+(GrassElement a, const GrassElement& b) { return a += b; }
  friend GrassElement operator-(GrassElement a, const GrassElement& b) { return a -= b; }
  friend GrassElement operator*(GrassElement a, const QRat& c) { return a *= c; }
  friend GrassElement operator*(const QRat& c, GrassElement a) { return a *= c; }
  /// Straightened product.
  friend GrassElement operator*(const GrassElement& a, const GrassElement& b);

  friend bool operator==(const GrassElement& a, const GrassElement& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

  /// True when all words are standard.
  bool is_standard() const;
  /// Degree shared by all terms, or nullopt if mixed (zero gives nullopt).
  std::optional<int> homogeneous_degree() const;

private:
  Ambient ambient_;
  Terms terms_;
};

/// Product of the maximal minors in O_q(M(k,n)).
QMElement embed(const PluckerWord& w, Ambient a);
QMElement embed(const GrassElement& x);

/// Standard-monomial expansion of a word, folded one generator at a time
/// through the memo (standard monomial, generator) -> straightened product.
GrassElement straighten(const PluckerWord& w, Ambient a);
/// Straightens every term of a formal combination.
GrassElement straighten(const GrassElement& x);
/// Reference path: embeds the whole word and solves once.
GrassElement straighten_direct(const PluckerWord& w, Ambient a);
/// Expresses a PBW element of O_q(M(k,n)) lying in one degree of the
/// grassmannian in the standard basis; throws ConsistencyError if it does not.
GrassElement from_matrix_element(const QMElement& x, Ambient a, int degree);

/// Product with one generator on the right, straightened.
GrassElement times_generator(const GrassElement& x, const PluckerIndex& j);
/// Product with one generator on the left, straightened.
GrassElement generator_times(const PluckerIndex& j, const GrassElement& x);
GrassElement mul(const GrassElement& a, const GrassElement& b);
GrassElement commutator(const GrassElement& a, const GrassElement& b);
GrassElement graded_component(const GrassElement& x, int degree);

/// Standard monomials of one degree in lexicographic order (the empty word for degree 0).
const std::vector<PluckerWord>& standard_monomials(Ambient a, int degree);
/// Position of a standard monomial in standard_monomials(a, degree), or nullopt.
std::optional<std::size_t> standard_position(const PluckerWord& w, Ambient a);

std::set<PluckerWord> support(const GrassElement& x);
/// Drops every standard monomial with a factor [u].
GrassElement quotient_mod_u(const GrassElement& x);

struct BasisCheck {
  int degree = 0;
  std::size_t standard = 0;  // number of standard monomials
  std::size_t words = 0;     // number of words checked for spanning
  std::size_t blocks = 0;    // column-content blocks
  bool independent = false;  // every block has full column rank (exact)
  bool spanning = false;     // every word expansion is reproduced exactly
};
/// Exact independence and spanning check for all words of a degree.
BasisCheck check_basis(Ambient a, int degree, ExecPolicy policy = ExecPolicy::parallel);

/// Text: "[13][24]" for n <= 9, "[1,13][2,4]" otherwise; "1" for the empty word.
std::string to_string(const PluckerIndex& i);
std::string to_string(const PluckerWord& w);
/// "q^-1 [12][13] + 2 [14]".
std::string to_string(const GrassElement& x);
PluckerIndex parse_plucker(const std::string& text, Ambient a);
PluckerWord parse_word(const std::string& text, Ambient a);

// Straightening cache.

/// Directory used for persisted straightening data. Initialised from the
/// QGRASS_CACHE_DIR environment variable; empty disables persistence.
void set_cache_directory(const std::filesystem::path& dir);
std::filesystem::path cache_directory();

struct CacheEntry {
  Ambient ambient;
  int degree = 0;
  std::filesystem::path file;
  std::uintmax_t bytes = 0;
};
std::vector<CacheEntry> list_cache(const std::filesystem::path& dir);
/// Removes cache files; returns how many were removed.
std::size_t clear_cache(const std::filesystem::path& dir);
/// Builds (and persists, when a directory is set) degrees 1..max_degree.
void warm_cache(Ambient a, int max_degree, ExecPolicy policy = ExecPolicy::parallel);

/// Drops all in-memory straightening data.
void clear_straightening_memory();

struct StraightenStats {
  std::size_t degrees = 0;
  std::size_t blocks = 0;
  std::size_t memo_entries = 0;
  std::size_t disk_loads = 0;
};
StraightenStats straighten_stats(Ambient a);

} // namespace qgrass
