#include "symcrystal/qcoeff.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symcrystal {

namespace {

using Poly = std::vector<mpq_class>;  // ordinary polynomial, index = exponent

void trim_high(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim_high(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly quot(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    quot[shift] = factor;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim_high(a);
  }
  return {quot, a};
}

// Scales p to an integer polynomial with content 1.
void make_primitive(Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p)
    if (c.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& c : p) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& c : p) c /= g;
}

// Pseudo-remainder of integer polynomials: lc(b)^k * a mod b, all in Z[q].
Poly poly_prem(Poly a, const Poly& b) {
  trim_high(a);
  const std::size_t db = b.size() - 1;
  const mpq_class lb = b.back();
  while (a.size() >= b.size()) {
    const mpq_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
    a.pop_back();
    trim_high(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim_high(a);
  trim_high(b);
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = poly_prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const mpq_class lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpq_class& coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.lo_ = exponent;
    p.c_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<mpq_class> coeffs) {
  LaurentPoly p;
  p.lo_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<int>(first);
  }
}

mpq_class LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < lo_ || exponent > high()) return 0;
  return c_[static_cast<std::size_t>(exponent - lo_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int nlo = std::min(lo_, o.lo_);
  const int nhi = std::max(high(), o.high());
  if (nlo < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - nlo), mpq_class(0));
    lo_ = nlo;
  }
  c_.resize(static_cast<std::size_t>(nhi - lo_ + 1));
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    c_[static_cast<std::size_t>(o.lo_ - lo_) + k] += o.c_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t x = 0; x < a.c_.size(); ++x) {
    if (a.c_[x] == 0) continue;
    for (std::size_t y = 0; y < b.c_.size(); ++y) out[x + y] += a.c_[x] * b.c_[y];
  }
  return LaurentPoly::from_coeffs(a.lo_ + b.lo_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<mpq_class> rev(c_.rbegin(), c_.rend());
  return from_coeffs(-high(), std::move(rev));
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
  if (is_zero()) return 0;
  if (x == 0 && lo_ < 0) throw std::domain_error("LaurentPoly::eval: pole at q = 0");
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  mpq_class scale = 1;
  const int e = lo_;
  mpq_class base = e >= 0 ? x : mpq_class(1) / x;
  for (int k = 0; k < (e >= 0 ? e : -e); ++k) scale *= base;
  return acc * scale;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly::exact_div: division by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly r = a;
    r *= mpq_class(1) / b.c_[0];
    return r.shifted(-b.lo_);
  }
  auto [quot, rem] = poly_divmod(a.c_, b.c_);
  if (!rem.empty()) throw std::domain_error("LaurentPoly::exact_div: not divisible");
  return from_coeffs(a.lo_ - b.lo_, std::move(quot));
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return from_coeffs(0, poly_gcd(b.c_, {}));
  if (b.is_zero()) return from_coeffs(0, poly_gcd(a.c_, {}));
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
  return from_coeffs(0, poly_gcd(a.c_, b.c_));
}

mpz_class LaurentPoly::coeff_denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& c : c_) {
    if (c.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return l;
}

mpz_class LaurentPoly::coeff_numerator_gcd() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= lo_; --e) {
    const mpq_class& c = c_[static_cast<std::size_t>(e - lo_)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const mpq_class a = abs(c);
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int s = den_.low();
  if (s != 0) {
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
  }
  if (!den_.is_constant()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = LaurentPoly::exact_div(num_, g);
      den_ = LaurentPoly::exact_div(den_, g);
    }
  }
  mpz_class l = num_.coeff_denominator_lcm();
  const mpz_class ld = den_.coeff_denominator_lcm();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  if (l != 1) {
    num_ *= mpq_class(l);
    den_ *= mpq_class(l);
  }
  mpz_class g = num_.coeff_numerator_gcd();
  const mpz_class gd = den_.coeff_numerator_gcd();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
  mpq_class scale(1);
  if (g != 1) scale = mpq_class(1) / mpq_class(g);
  if (den_.trailing() < 0) scale = -scale;
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  num_ = num_ * o.num_;
  if (!o.den_.is_constant() || o.den_.trailing() != 1) den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc::inverse: zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

LaurentPoly RatFunc::as_laurent() const {
  if (!in_A()) throw std::domain_error("RatFunc::as_laurent: not a Laurent polynomial");
  LaurentPoly r = num_;
  r *= mpq_class(1) / den_.trailing();
  return r;
}

std::optional<mpq_class> RatFunc::eval(const mpq_class& x) const {
  if (x == 0 && !in_A0()) return std::nullopt;
  if (x == 0) {
    return num_.coeff(0) / den_.coeff(0);
  }
  const mpq_class d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
  if (in_A()) return as_laurent().to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse_all() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("RatFunc parse error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_dot() const {
    return pos_ + 1 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xC2 &&
           static_cast<unsigned char>(s_[pos_ + 1]) == 0xB7;
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        const char op = s_[pos_++];
        RatFunc t = term();
        if (op == '+') acc += t; else acc -= t;
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) return acc;
      if (s_[pos_] == '*') {
        ++pos_;
        acc *= unary();
      } else if (at_dot()) {
        pos_ += 2;
        acc *= unary();
      } else if (s_[pos_] == '/') {
        ++pos_;
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (s_[pos_] == '(' || s_[pos_] == 'q') {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return -unary();
    }
    if (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  long signed_integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    bool paren = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      paren = true;
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = !neg;
        ++pos_;
      }
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    return neg ? -v : v;
  }

  RatFunc power() {
    RatFunc base = primary();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      const long e = signed_integer();
      if (e < 0 && base.is_zero()) fail("zero to a negative power");
      RatFunc r(1);
      const RatFunc b = e < 0 ? base.inverse() : base;
      for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
      return r;
    }
    return base;
  }

  RatFunc primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'q') {
      ++pos_;
      return RatFunc::q();
    }
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------

LaurentPoly qint(int k) {
  if (k == 0) return {};
  if (k < 0) return -qint(-k);
  std::vector<mpq_class> c(static_cast<std::size_t>(2 * k - 1));
  for (std::size_t j = 0; j < c.size(); j += 2) c[j] = 1;
  return LaurentPoly::from_coeffs(-(k - 1), std::move(c));
}

LaurentPoly qfact(int k) {
  if (k < 0) throw std::invalid_argument("qfact: negative argument");
  LaurentPoly r(1);
  for (int v = 1; v <= k; ++v) r *= qint(v);
  return r;
}

LaurentPoly qeven_fact(int m) {
  if (m < 0) throw std::invalid_argument("qeven_fact: negative argument");
  LaurentPoly r(1);
  for (int v = 1; v <= m; ++v) r *= qint(2 * v);
  return r;
}

}  // namespace symcrystal
