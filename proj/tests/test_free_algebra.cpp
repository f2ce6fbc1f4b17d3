#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcrystal/free_algebra.hpp"

using namespace symcrystal;

namespace {

const Window W(-3, 3);
const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);

WordVector f(std::initializer_list<int> letters, const RatFunc& c = RatFunc(1)) {
  return WordVector::word(W, Word(letters), c);
}

Multisegment ms(std::initializer_list<std::tuple<int, int, int>> e) {
  Multisegment m;
  for (auto [i, j, n] : e) m.add(Segment{i, j}, n);
  return m;
}

// Right-peeling recursion (a f_i, b) = (a, e*_i b), independent of word_form.
RatFunc form_from_right(const WordVector& x, const WordVector& y) {
  RatFunc acc;
  for (const auto& [u, cu] : x.terms()) {
    if (u.empty()) {
      acc += cu * y.coeff({});
      continue;
    }
    const int i = u.back();
    const WordVector head = WordVector::word(W, Word(u.begin(), u.end() - 1), cu);
    acc += form_from_right(head, estar(i, y));
  }
  return acc;
}

WordVector random_homogeneous(std::mt19937& rng, const Content& c) {
  const auto words = words_of_content(c);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> expo(-2, 2);
  WordVector v(W);
  for (const auto& w : words)
    if (rng() % 2) v.add(w, RatFunc(coef(rng)) * RatFunc::q_pow(expo(rng)));
  if (v.is_zero()) v.add(words.front(), RatFunc(1));
  return v;
}

Content random_content(std::mt19937& rng, int degree) {
  Content c;
  const auto idx = W.indices();
  for (int k = 0; k < degree; ++k) ++c[idx[rng() % idx.size()]];
  return c;
}

}  // namespace

TEST_CASE("mul") {
  CHECK(mul(f({1}), f({3})) == f({1, 3}));
  CHECK(mul(WordVector::one(W), f({1, 3})) == f({1, 3}));
  CHECK(mul(f({1}) - q * f({3}), f({1})) == f({1, 1}) - q * f({3, 1}));
  CHECK_THROWS_AS(mul(f({1}), WordVector::letter(Window(-5, 5), 1)), std::invalid_argument);
  CHECK_THROWS_AS(f({5}), std::out_of_range);
}

TEST_CASE("Ad(t_i)") {
  CHECK(ad_t(1, f({1})) == f({1}, RatFunc::q_pow(-2)));
  CHECK(ad_t(1, f({3})) == f({3}, q));
  const WordVector far = WordVector::letter(Window(1, 5), 5);
  CHECK(ad_t(1, far) == far);
}

TEST_CASE("e'_i and e*_i") {
  CHECK(eprime(1, f({1})) == WordVector::one(W));
  CHECK(eprime(1, f({3, 1})) == f({3}, q));
  CHECK(eprime(1, f({1, 1})) == f({1}, RatFunc(1) + RatFunc::q_pow(-2)));
  CHECK(estar(1, f({1, 3})) == f({3}, q));
  CHECK(estar(3, f({1, 3})) == f({1}));
}

TEST_CASE("form examples") {
  CHECK(form(WordVector::one(W), WordVector::one(W)) == RatFunc(1));
  CHECK(form(f({1, 3}), f({3, 1})) == q);
  CHECK(form(f({1, 1}), f({1, 1})) == RatFunc(1) + RatFunc::q_pow(-2));
  CHECK(form(f({1}), f({3})).is_zero());
}

TEST_CASE("form: symmetry, adjunction and the right-peeling oracle") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const int deg = 1 + static_cast<int>(rng() % 4);
    const Content c = random_content(rng, deg);
    const WordVector x = random_homogeneous(rng, c);
    const WordVector y = random_homogeneous(rng, c);
    CHECK(form(x, y) == form(y, x));
    CHECK(form(x, y) == form_from_right(x, y));
    const int i = c.begin()->first;
    Content smaller = c;
    if (--smaller[i] == 0) smaller.erase(i);
    const WordVector z = random_homogeneous(rng, smaller);
    CHECK(form(eprime(i, x), z) == form(x, left_mul(i, z)));
  }
}

TEST_CASE("e'_i and e*_j commute") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const WordVector x = random_homogeneous(rng, random_content(rng, 4));
    const int i = W.indices()[rng() % 4];
    const int j = W.indices()[rng() % 4];
    CHECK(eprime(i, estar(j, x)) == estar(j, eprime(i, x)));
  }
}

TEST_CASE("Serre elements and distant commutators vanish") {
  CHECK(is_zero_in_uq(f({1, 1, 3}) - RatFunc(qint(2)) * f({1, 3, 1}) + f({3, 1, 1})));
  const Window w5(1, 5);
  CHECK(is_zero_in_uq(WordVector::word(w5, {1, 5}) - WordVector::word(w5, {5, 1})));
  CHECK(!is_zero_in_uq(f({1, 3}) - f({3, 1})));
  for (int i : W.indices())
    for (int j : W.indices()) {
      if (i == j) continue;
      if (root_pairing(i, j) == -1) {
        CHECK(is_zero_in_uq(f({i, i, j}) - RatFunc(qint(2)) * f({i, j, i}) + f({j, i, i})));
      } else {
        CHECK(is_zero_in_uq(f({i, j}) - f({j, i})));
      }
    }
}

TEST_CASE("PBW segments and elements") {
  CHECK(pbw_segment(W, 1, 1) == f({1}));
  CHECK(pbw_segment(W, 1, 3) == f({1, 3}) - q * f({3, 1}));
  const WordVector inner = f({-1, 1}) - q * f({1, -1});
  CHECK(pbw_segment(W, -1, 3) == mul(inner, f({3})) - q * mul(f({3}), inner));
  CHECK(pbw_element(W, {}) == WordVector::one(W));
  CHECK(pbw_element(W, ms({{1, 1, 1}, {3, 3, 1}})) == f({3, 1}));
  CHECK(pbw_element(W, ms({{1, 1, 2}})) == f({1, 1}, RatFunc(1) / (q + qi)));
  CHECK_THROWS_AS(pbw_segment(W, 1, 5), std::out_of_range);
}

TEST_CASE("PBW coordinates") {
  const Multisegment m13 = ms({{1, 3, 1}});
  const Multisegment m1p3 = ms({{1, 1, 1}, {3, 3, 1}});
  auto c = pbw_coords(f({1, 3}));
  CHECK(c.size() == 2);
  CHECK(c[m13] == RatFunc(1));
  CHECK(c[m1p3] == q);
  CHECK(pbw_coords(f({1, 1, 3}) - RatFunc(qint(2)) * f({1, 3, 1}) + f({3, 1, 1})).empty());
  for (const auto& [content, block] : multisegment_blocks(W, 3))
    for (const auto& m : block) {
      const auto cm = pbw_coords(pbw_element(W, m));
      REQUIRE(cm.size() == 1);
      CHECK(cm.begin()->first == m);
      CHECK(cm.begin()->second == RatFunc(1));
    }
  // residual check
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    const WordVector x = random_homogeneous(rng, random_content(rng, 3));
    WordVector sum(W);
    for (const auto& [m, v] : pbw_coords(x)) sum += v * pbw_element(W, m);
    CHECK(is_zero_in_uq(x - sum));
  }
}

TEST_CASE("Gram matrices are nonsingular") {
  for (const auto& [content, block] : multisegment_blocks(W, 4)) {
    const PbwBlock& b = pbw_block(content);
    CHECK(b.basis == block);
    CHECK(rank(b.gram) == b.basis.size());
  }
}

TEST_CASE("modified root operators") {
  CHECK(mod_ftilde(1, WordVector::one(W)) == f({1}));
  CHECK(mod_etilde(1, f({1})) == WordVector::one(W));
  CHECK(is_zero_in_uq(mod_ftilde(1, f({3})) - f({1, 3})));
  CHECK(mod_etilde(1, f({3})).is_zero());
}

TEST_CASE("bar") {
  CHECK(bar_vec(f({1}, q)) == f({1}, qi));
  CHECK(bar_vec(f({1, 3})) == f({1, 3}));
  CHECK(bar_vec(pbw_segment(W, 1, 3)) == f({1, 3}) - qi * f({3, 1}));
}

TEST_CASE("crystal compatibility of P(m), small degree") {
  for (const auto& m : enumerate_multisegments(W, 3))
    for (int i : W.indices()) {
      INFO("m = " << m.to_string() << ", i = " << i);
      const auto cf = pbw_coords(mod_ftilde(i, pbw_element(W, m)));
      const Multisegment target = ftilde(i, m);
      for (const auto& [n, v] : cf) {
        CHECK(v.in_A0());
        CHECK(*v.eval(0) == (n == target ? 1 : 0));
      }
      CHECK(cf.count(target) == 1);
    }
}

TEST_CASE("string form") {
  CHECK(pbw_segment(W, 1, 3).to_string() == "f[1]·f[3] - q·f[3]·f[1]");
  CHECK(WordVector::one(W).to_string() == "1");
  CHECK(WordVector(W).to_string() == "0");
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    WordVector x = random_homogeneous(rng, random_content(rng, 3));
    x *= RatFunc(1) / (q + 2);
    CHECK(WordVector::parse(x.to_string(), W) == x);
  }
  CHECK(WordVector::parse("f[1]*f[3] - q*f[3]*f[1]", W) == pbw_segment(W, 1, 3));
  CHECK(WordVector::parse("(q + q^-1)·f[-1]", W) == f({-1}, q + qi));
  CHECK_THROWS_AS(WordVector::parse("f[7]", W), ParseError);
  CHECK_THROWS_AS(WordVector::parse("f[1", W), ParseError);
}
