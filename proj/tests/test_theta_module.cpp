#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcrystal/theta_module.hpp"

using namespace symcrystal;

namespace {

const Window W(-3, 3);
const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);
const WordVector phi = WordVector::one(W);

WordVector f(std::initializer_list<int> letters, const RatFunc& c = RatFunc(1)) {
  return WordVector::word(W, Word(letters), c);
}

Multisegment ms(std::initializer_list<std::tuple<int, int, int>> e) {
  Multisegment m;
  for (auto [i, j, n] : e) m.add(Segment{i, j}, n);
  return m;
}

bool same_class(const WordVector& a, const WordVector& b) { return theta_coords(a - b).empty(); }

WordVector random_word_vector(std::mt19937& rng, int degree) {
  const auto idx = W.indices();
  Word w;
  for (int k = 0; k < degree; ++k) w.push_back(idx[rng() % idx.size()]);
  const SymContent s = symmetrize(content(w));
  WordVector v(W);
  for (const auto& c : contents_of(s))
    for (const auto& u : words_of_content(c))
      if (rng() % 3 == 0) v.add(u, RatFunc(static_cast<int>(rng() % 5) - 2) * RatFunc::q_pow(static_cast<int>(rng() % 3) - 1));
  if (v.is_zero()) v.add(w, RatFunc(1));
  return v;
}

}  // namespace

TEST_CASE("F_i acts by left multiplication") {
  CHECK(F_op(1, phi) == f({1}));
  CHECK(same_class(F_op(-1, phi), f({1})));
  CHECK(F_op(1, f({3})) == f({1, 3}));
  CHECK(same_class(F_op(3, phi), ptheta_vector(W, ms({{3, 3, 1}}))));
  CHECK(!same_class(F_op(1, f({1})), F_op(-1, f({1}))));
}

TEST_CASE("E_i") {
  CHECK(E_op(1, phi).is_zero());
  CHECK(E_op(1, f({1})) == phi);
  CHECK(E_op(1, f({-1})) == phi);
  CHECK(E_op(3, f({1, 3})) == f({1}, q));
}

TEST_CASE("the two formulas for E_i agree") {
  std::mt19937 rng(1);
  for (int t = 0; t < 30; ++t) {
    const WordVector v = random_word_vector(rng, 1 + static_cast<int>(rng() % 4));
    for (int i : W.indices()) CHECK(E_op(i, v) == E_op_commuting(i, v));
  }
}

TEST_CASE("T_i") {
  CHECK(T_op(1, phi) == phi);
  // 1 and -1 are neighbours: (a_1 + a_{-1}, a_1) = 2 - 1
  CHECK(T_op(1, f({1})) == f({1}, qi));
  CHECK(T_op(1, f({3})) == f({3}, q));
  CHECK(T_op(1, f({-1})) == f({-1}, qi));
  CHECK(T_op(3, f({1})) == f({1}, q));
}

TEST_CASE("P_theta vectors") {
  CHECK(ptheta_vector(W, {}) == phi);
  CHECK(ptheta_vector(W, ms({{-1, 1, 1}})) == (RatFunc(1) / (q + qi)) * (f({-1, 1}) - q * f({1, -1})));
  CHECK(ptheta_vector(W, ms({{1, 1, 2}})) == f({1, 1}, RatFunc(1) / (q + qi)));
  CHECK_THROWS_AS(ptheta_vector(W, ms({{-3, 1, 1}})), std::invalid_argument);
}

TEST_CASE("theta coordinates") {
  auto c = theta_coords(f({-1}));
  CHECK(c.size() == 1);
  CHECK(c[ms({{1, 1, 1}})] == RatFunc(1));
  c = theta_coords(f({1, 1}));
  CHECK(c.size() == 1);
  CHECK(c[ms({{1, 1, 2}})] == RatFunc(qfact(2)));
  for (const auto& m : enumerate_theta(W, 3)) {
    const auto cm = theta_coords(ptheta_vector(W, m));
    REQUIRE(cm.size() == 1);
    CHECK(cm.begin()->first == m);
    CHECK(cm.begin()->second == RatFunc(1));
  }
}

TEST_CASE("theta form") {
  CHECK(theta_form(phi, phi) == RatFunc(1));
  CHECK(theta_form(f({1}), f({1})) == RatFunc(1));
  CHECK(theta_form(f({1}), f({-1})) == RatFunc(1));
  std::mt19937 rng(2);
  for (int t = 0; t < 25; ++t) {
    const WordVector u = random_word_vector(rng, 3);
    const WordVector v = random_word_vector(rng, 3);
    CHECK(theta_form(u, v) == theta_form(v, u));
    const WordVector w = random_word_vector(rng, 2);
    for (int i : W.indices()) CHECK(theta_form(E_op(i, u), w) == theta_form(u, F_op(i, w)));
  }
}

TEST_CASE("E_i is well defined on the quotient") {
  for (int d = 0; d <= 2; ++d)
    for (const auto& m : enumerate_multisegments(W, d)) {
      if (m.degree() != d) continue;
      const WordVector p = pbw_element(W, m);
      for (int k = 1; k <= 3; k += 2) {
        const WordVector gen = mul(p, f({k})) - mul(p, f({-k}));
        CHECK(theta_coords(gen).empty());
        for (int i : W.indices()) CHECK(theta_coords(E_op(i, gen)).empty());
      }
    }
}

TEST_CASE("block dimensions and the ideal route") {
  for (const auto& [key, basis] : theta_blocks(W, 3)) {
    const IdealReduction red = ideal_reduction(key);
    CHECK(red.quotient_dim() == basis.size());
    CHECK(red.ptheta_spans);
  }
  std::mt19937 rng(4);
  for (int t = 0; t < 8; ++t) {
    const WordVector v = random_word_vector(rng, 1 + static_cast<int>(rng() % 3));
    const auto by_ideal = theta_coords_by_ideal(v);
    REQUIRE(by_ideal);
    CHECK(*by_ideal == theta_coord_vector(v));
  }
}

TEST_CASE("modified root operators") {
  auto [e0, f0] = theta_mod_ops(-1, phi);
  CHECK(e0.is_zero());
  CHECK(same_class(f0, ptheta_vector(W, ms({{1, 1, 1}}))));
  auto [e1, f1] = theta_mod_ops(1, ptheta_vector(W, ms({{1, 1, 1}})));
  CHECK(same_class(e1, phi));
  const auto [e3, f3] = theta_mod_ops(-3, ptheta_vector(W, ms({{3, 3, 1}})));
  const auto c = theta_coords(f3);
  for (const auto& [n, v] : c) CHECK(*v.eval(0) == (n == ms({{3, 3, 2}}) ? 1 : 0));
  CHECK(same_class(e3, phi));
}

TEST_CASE("bar") {
  CHECK(bar_theta(phi) == phi);
  CHECK(bar_theta(f({1}, q)) == f({1}, qi));
  const Multisegment m = ms({{-1, 1, 1}});
  const auto c = theta_coords(bar_theta(ptheta_vector(W, m)));
  CHECK(c.at(m) == RatFunc(1));
  for (const auto& [n, v] : c) {
    CHECK(v.in_A());
    if (!(n == m)) CHECK(cmp_cry_lex(n, m) < 0);
  }
}

TEST_CASE("words have A-coordinates") {
  std::mt19937 rng(8);
  const auto idx = W.indices();
  for (int t = 0; t < 20; ++t) {
    Word w;
    const int d = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < d; ++k) w.push_back(idx[rng() % idx.size()]);
    for (const auto& [m, v] : theta_coords(WordVector::word(W, w))) CHECK(v.in_A());
  }
}
