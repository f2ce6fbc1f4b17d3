#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "symcrystal/theta_multiseg.hpp"

using namespace symcrystal;

namespace {
Multisegment ms(std::initializer_list<std::tuple<int, int, int>> e) {
  Multisegment m;
  for (auto [i, j, n] : e) m.add(Segment{i, j}, n);
  return m;
}
Multisegment ab(int a, int b) { return ms({{-1, 1, a}, {1, 1, b}}); }
}  // namespace

TEST_CASE("theta restriction") {
  CHECK(is_theta_restricted(ms({{-1, 1, 1}, {3, 5, 2}})));
  CHECK(!is_theta_restricted(ms({{-1, -1, 1}})));
  CHECK_THROWS_WITH_AS(validate_theta(ms({{-3, 1, 1}})), doctest::Contains("<-3,1>"), std::invalid_argument);
}

TEST_CASE("theta epsilon examples") {
  CHECK(theta_epsilon(1, {}) == 0);
  CHECK(theta_epsilon(1, ms({{1, 1, 1}})) == 1);
  CHECK(theta_epsilon(3, ms({{3, 3, 1}})) == 1);
}

TEST_CASE("F~_{-k} examples") {
  CHECK(theta_Ftilde(1, {}) == ms({{1, 1, 1}}));
  CHECK(theta_Ftilde(1, ms({{1, 1, 1}})) == ms({{-1, 1, 1}}));
  CHECK(theta_Ftilde(3, ms({{3, 3, 1}})) == ms({{3, 3, 2}}));
}

TEST_CASE("signature rule examples") {
  const CrystalTriple e = theta_signature_ops(1, {});
  CHECK(e == CrystalTriple{0, std::nullopt, ms({{1, 1, 1}})});
  const Multisegment m = ms({{-1, 1, 1}});
  CHECK(theta_signature_ops(1, m) == theta_formula_ops(1, m));
  const CrystalTriple t = theta_signature_ops(3, ms({{3, 3, 1}}));
  CHECK(t == CrystalTriple{1, Multisegment{}, ms({{3, 3, 2}})});
  CHECK(theta_formula_ops(3, ms({{3, 3, 1}})) == t);
}

TEST_CASE("positive indices use the type-A rule") {
  CHECK(theta_F(3, {}) == ms({{3, 3, 1}}));
  CHECK(theta_F(3, ms({{3, 3, 1}})) == ms({{3, 3, 2}}));
  CHECK(theta_E(1, ms({{1, 1, 1}})) == Multisegment{});
}

TEST_CASE("Example: the (-1)-chain") {
  Multisegment cur;
  for (int step = 0; step < 10; ++step) {
    const auto enc = ab_encoding(cur);
    REQUIRE(enc);
    CHECK(enc->first == step / 2);
    CHECK(enc->second == step % 2);
    cur = theta_F(-1, cur);
  }
}

TEST_CASE("Example: the n / -n ladder for n = 3") {
  for (int m = 0; m <= 4; ++m) {
    const Multisegment x = ms({{3, 3, m}});
    CHECK(theta_F(3, x) == ms({{3, 3, m + 1}}));
    CHECK(theta_F(-3, x) == ms({{3, 3, m + 1}}));
  }
}

TEST_CASE("enumeration") {
  const Window w1(-1, 1);
  const auto d1 = enumerate_theta(w1, 1);
  CHECK(d1.size() == 2);
  const auto d2 = enumerate_theta(w1, 2);
  CHECK(d2.size() == 4);
  for (const auto& m : {Multisegment{}, ms({{1, 1, 1}}), ms({{1, 1, 2}}), ms({{-1, 1, 1}})})
    CHECK(std::count(d2.begin(), d2.end(), m) == 1);
  const auto d3 = enumerate_theta(Window(-3, 3), 1);
  CHECK(d3.size() == 3);
  CHECK_THROWS_AS(theta_blocks(Window(-1, 3), 2), std::invalid_argument);
}

TEST_CASE("formulas agree with the signature rule and crystal axioms hold") {
  for (const auto& m : enumerate_theta(Window(-5, 5), 5)) {
    for (int k = 1; k <= 5; k += 2) {
      INFO("m = " << m.to_string() << ", k = -" << k);
      CHECK(theta_formula_ops(k, m) == theta_signature_ops(k, m));
    }
    for (int idx = -5; idx <= 5; idx += 2) {
      INFO("m = " << m.to_string() << ", index = " << idx);
      const Multisegment f = theta_F(idx, m);
      CHECK(is_theta_restricted(f));
      CHECK(theta_E(idx, f) == m);
      const auto e = theta_E(idx, m);
      if (e) {
        CHECK(is_theta_restricted(*e));
        CHECK(theta_F(idx, *e) == m);
      }
      int n = 0;
      std::optional<Multisegment> cur = m;
      while ((cur = theta_E(idx, *cur))) ++n;
      CHECK(n == theta_eps(idx, m));
      const int k = idx < 0 ? -idx : idx;
      CHECK(sym_content(f)[k] == sym_content(m)[k] + 1);
    }
  }
}
