// Dense matrices over Q(q) and fraction-free elimination.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symcrystal/qcoeff.hpp"

namespace symcrystal {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix column(const std::vector<RatFunc>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const RatFunc& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  QMatrix transpose() const;
  /// Entrywise q -> q^{-1}.
  QMatrix bar() const;
  bool is_zero() const;
  std::vector<RatFunc> col(std::size_t c) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const RatFunc& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> a_;
};

/// Result of fraction-free Gauss-Jordan elimination.  Rows are first scaled
/// to Laurent-polynomial entries; every pivot of the reduced matrix equals the
/// final pivot `det` and the non-pivot columns hold minors of the input.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<LaurentPoly>> reduced;
  LaurentPoly det;  // last pivot (1 when rank is 0)
};

/// Fraction-free Gauss-Jordan on the first `elim_cols` columns (all columns
/// when elim_cols is npos).  Pivot choice prefers the entry with the fewest
/// terms, then smallest degree span.
Echelon fraction_free_echelon(const QMatrix& m, std::size_t elim_cols = static_cast<std::size_t>(-1));

std::size_t rank(const QMatrix& m);
/// Solves A X = B for square nonsingular A; nullopt when A is singular.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);
std::optional<QMatrix> inverse(const QMatrix& a);
/// Some solution x of A x = b (free variables set to zero), nullopt if
/// inconsistent.
std::optional<std::vector<RatFunc>> solve_any(const QMatrix& a, const std::vector<RatFunc>& b);

std::string to_string(const QMatrix& m);

}  // namespace symcrystal
