#include "symcrystal/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace symcrystal {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = RatFunc(1);
  return m;
}

QMatrix QMatrix::column(const std::vector<RatFunc>& v) {
  QMatrix m(v.size(), 1);
  for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::bar() const {
  QMatrix b = *this;
  for (auto& x : b.a_) x = x.bar();
  return b;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<RatFunc> QMatrix::col(std::size_t c) const {
  std::vector<RatFunc> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatFunc& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) p(r, c) += x * b(k, c);
    }
  return p;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix s = a;
  for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] += b.a_[k];
  return s;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix s = a;
  for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] -= b.a_[k];
  return s;
}

QMatrix operator*(const RatFunc& s, const QMatrix& a) {
  QMatrix r = a;
  for (auto& x : r.a_) x = s * x;
  return r;
}

namespace {

// Scales a row of rational functions to Laurent polynomials.
std::vector<LaurentPoly> clear_row(const QMatrix& m, std::size_t r) {
  LaurentPoly l(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const RatFunc& x = m(r, c);
    if (x.is_zero() || x.den().is_constant()) continue;
    const LaurentPoly g = LaurentPoly::gcd(l, x.den());
    l = l * LaurentPoly::exact_div(x.den(), g);
  }
  std::vector<LaurentPoly> row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const RatFunc& x = m(r, c);
    if (x.is_zero()) continue;
    row[c] = LaurentPoly::exact_div(x.num() * l, x.den());
  }
  return row;
}

std::size_t pivot_cost(const LaurentPoly& p) {
  std::size_t terms = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++terms;
  return terms * 1024 + p.coeffs().size();
}

}  // namespace

Echelon fraction_free_echelon(const QMatrix& m, std::size_t elim_cols) {
  if (elim_cols > m.cols()) elim_cols = m.cols();
  Echelon e;
  auto& a = e.reduced;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(clear_row(m, r));
  LaurentPoly prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < elim_cols && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    std::size_t best_cost = 0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (a[r][col].is_zero()) continue;
      const std::size_t cost = pivot_cost(a[r][col]);
      if (best == m.rows() || cost < best_cost) {
        best = r;
        best_cost = cost;
      }
    }
    if (best == m.rows()) continue;
    std::swap(a[row], a[best]);
    const LaurentPoly piv = a[row][col];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const LaurentPoly factor = a[r][col];
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c == col) continue;
        LaurentPoly v = piv * a[r][c];
        if (!factor.is_zero() && !a[row][c].is_zero()) v -= factor * a[row][c];
        a[r][c] = LaurentPoly::exact_div(v, prev);
      }
      a[r][col] = LaurentPoly();
    }
    prev = piv;
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rank = row;
  e.det = prev;
  return e;
}

std::size_t rank(const QMatrix& m) { return fraction_free_echelon(m).rank; }

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.rows();
  QMatrix aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  Echelon e = fraction_free_echelon(aug, n);
  if (e.rank < n) return std::nullopt;
  QMatrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    const LaurentPoly& d = e.reduced[r][e.pivot_cols[r]];
    for (std::size_t c = 0; c < b.cols(); ++c) {
      const LaurentPoly& v = e.reduced[r][n + c];
      if (!v.is_zero()) x(e.pivot_cols[r], c) = RatFunc(v, d);
    }
  }
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) { return solve(a, QMatrix::identity(a.rows())); }

std::optional<std::vector<RatFunc>> solve_any(const QMatrix& a, const std::vector<RatFunc>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_any: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = fraction_free_echelon(aug, a.cols());
  for (std::size_t r = e.rank; r < a.rows(); ++r)
    if (!e.reduced[r][a.cols()].is_zero()) return std::nullopt;
  std::vector<RatFunc> x(a.cols());
  for (std::size_t r = 0; r < e.rank; ++r) {
    const LaurentPoly& v = e.reduced[r][a.cols()];
    if (!v.is_zero()) x[e.pivot_cols[r]] = RatFunc(v, e.reduced[r][e.pivot_cols[r]]);
  }
  return x;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

}  // namespace symcrystal
