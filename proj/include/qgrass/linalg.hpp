#pragma once

// Exact linear algebra over Q(q).
//
// Elimination is fraction-free on polynomial rows with content stripping.
// A specialisation pass (q -> q0 in Z/p) picks a set of independent rows
// first; the exact elimination then runs on that subset and the result is
// checked exactly against every row.

#include "qgrass/coeffs.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qgrass {

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QRat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QRat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<QRat> row(std::size_t r) const;
  void append_row(const std::vector<QRat>& row);
  Matrix select_rows(const std::vector<std::size_t>& which) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QRat> data_;
};

using Vector = std::vector<QRat>;

/// Default prime (2^61 - 1) and evaluation point for the specialisation pass.
inline constexpr std::uint64_t kSpecialisationPrime = 2305843009213693951ull;
inline constexpr std::uint64_t kSpecialisationPoint = 1234567891ull;

struct EchelonForm {
  std::vector<std::vector<QPoly>> rows;  // reduced rows (one per pivot)
  std::vector<std::size_t> pivot_cols;   // pivot column of each row
};

/// Fraction-free Gauss-Jordan reduction of the given rows.
EchelonForm reduce_fraction_free(const Matrix& a);

/// Exact rank over Q(q).
std::size_t rank(const Matrix& a);

/// Rank after specialising q -> q0 (exact over Q). Throws EvaluationError at poles.
std::size_t rank_at(const Matrix& a, const mpq_class& q0);

/// Rank mod p at q0; nullopt if some entry is undefined there.
struct ModRank {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};
std::optional<ModRank> rank_mod_p(const Matrix& a, std::uint64_t q0 = kSpecialisationPoint,
                                  std::uint64_t p = kSpecialisationPrime);

/// Indices of a maximal set of independent rows (specialisation first,
/// exact fallback), in increasing order.
std::vector<std::size_t> independent_rows(const Matrix& a);

/// Basis of {x : a x = 0}. Each vector has a 1 in one free column and zeros
/// in the other free columns, free columns in increasing order.
std::vector<Vector> nullspace(const Matrix& a);

/// Inverse of a square matrix; throws ConsistencyError if singular.
Matrix inverse(const Matrix& a);

Vector multiply(const Matrix& a, const Vector& x);
QRat dot(const std::vector<QRat>& a, const Vector& x);

} // namespace qgrass
