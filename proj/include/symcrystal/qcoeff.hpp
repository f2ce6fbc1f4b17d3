// Exact arithmetic in Q(q): Laurent polynomials with rational coefficients,
// normalized rational functions, quantum integers and the bar involution.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symcrystal {

/// Finite sum  sum_e c_e q^e  with c_e in Q.  Stored densely from the lowest
/// nonzero exponent; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, const mpq_class& coeff = 1);
  static LaurentPoly q() { return monomial(1); }
  /// Builds from (lowest exponent, coefficients); trims zeros.
  static LaurentPoly from_coeffs(int low, std::vector<mpq_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return is_zero() || (lo_ == 0 && c_.size() == 1); }
  bool is_monomial() const { return c_.size() == 1; }
  /// Lowest / highest exponent; undefined for zero.
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  mpq_class coeff(int exponent) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& leading() const { return c_.back(); }
  const mpq_class& trailing() const { return c_.front(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  /// q -> q^{-1}.
  LaurentPoly bar() const;
  mpq_class eval(const mpq_class& x) const;

  /// Exact quotient a / b; throws std::domain_error when b does not divide a.
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
  /// Monic gcd in Q[q, q^{-1}] (normalized to lowest exponent 0).
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Positive integer L such that L * this has integer coefficients.
  mpz_class coeff_denominator_lcm() const;
  /// gcd of numerators of the coefficients (for integer polys: the content).
  mpz_class coeff_numerator_gcd() const;

  std::string to_string() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<mpq_class> c_;
};

/// Element of Q(q) kept in the normal form  num / den  where both have integer
/// coefficients, den has lowest exponent 0 and a positive constant term,
/// gcd(num, den) = 1 and the joint integer content is 1.  Equality is
/// structural.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int c) : num_(c), den_(1) { normalize(); }  // NOLINT
  RatFunc(const mpq_class& c) : num_(c), den_(1) { normalize(); }  // NOLINT
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) { normalize(); }  // NOLINT
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc q() { return RatFunc(LaurentPoly::q()); }
  static RatFunc q_pow(int k) { return RatFunc(LaurentPoly::monomial(k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == LaurentPoly(1) && den_ == LaurentPoly(1); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RatFunc inverse() const;

  RatFunc bar() const;

  /// Membership in A = Q[q, q^{-1}].
  bool in_A() const { return den_.is_constant(); }
  /// Regular at q = 0.
  bool in_A0() const { return is_zero() || num_.low() >= 0; }
  /// Regular at q = infinity.
  bool in_Ainf() const { return is_zero() || num_.high() <= den_.high(); }
  /// Membership in q Q[q].
  bool in_qZq() const { return is_zero() || (in_A() && num_.low() >= 1); }

  /// The Laurent polynomial this equals; throws if not in A.
  LaurentPoly as_laurent() const;
  /// Exact substitution q = x; nullopt at a pole.
  std::optional<mpq_class> eval(const mpq_class& x) const;
  std::optional<mpq_class> eval_at_one() const { return eval(1); }

  std::string to_string() const;
  /// Accepts the grammar printed by to_string: sums, products (* or ·),
  /// quotients, parentheses, q, q^k with integer k, integer/rational literals.
  static RatFunc parse(std::string_view text);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_{1};
};

/// Quantum integer [k] = (q^k - q^{-k}) / (q - q^{-1}).
LaurentPoly qint(int k);
/// Quantum factorial [k]! ; throws std::invalid_argument for k < 0.
LaurentPoly qfact(int k);
/// prod_{v=1}^m [2v], the modified divided-power normalizer.
LaurentPoly qeven_fact(int m);

inline RatFunc bar(const RatFunc& x) { return x.bar(); }

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace symcrystal
