#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "symcrystal/multiseg.hpp"

using namespace symcrystal;

namespace {
Multisegment ms(std::initializer_list<std::tuple<int, int, int>> e) {
  Multisegment m;
  for (auto [i, j, n] : e) m.add(Segment{i, j}, n);
  return m;
}
}  // namespace

TEST_CASE("segment validation") {
  CHECK_THROWS_AS(Segment(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Segment(3, 1), std::invalid_argument);
  CHECK(Segment(-1, 3).length() == 3);
}

TEST_CASE("PBW ordering") {
  CHECK(cmp_pbw({1, 1}, {-1, 1}) > 0);
  CHECK(cmp_pbw({-1, 1}, {-1, -1}) > 0);
  CHECK(cmp_pbw({3, 3}, {3, 3}) == 0);
}

TEST_CASE("crystal ordering") {
  CHECK(cmp_cry({-1, 1}, {1, 1}) > 0);
  CHECK(cmp_cry({1, 1}, {-1, -1}) > 0);
  const Multisegment m = ms({{1, 3, 1}});
  CHECK(cmp_cry_multiseg(m, m) == 0);
  // <1,3> vs <1> + <3>: the segment <1,3> is the crystal-largest present.
  CHECK(cmp_cry_multiseg(ms({{1, 3, 1}}), ms({{1, 1, 1}, {3, 3, 1}})) > 0);
  CHECK_THROWS_AS(cmp_cry_multiseg(ms({{1, 1, 1}}), ms({{3, 3, 1}})), std::invalid_argument);
}

TEST_CASE("orderings are total orders") {
  std::vector<Segment> segs;
  for (int i = -5; i <= 5; i += 2)
    for (int j = i; j <= 5; j += 2) segs.emplace_back(i, j);
  for (const auto& a : segs)
    for (const auto& b : segs) {
      CHECK((cmp_pbw(a, b) == 0) == (a == b));
      CHECK((cmp_cry(a, b) == 0) == (a == b));
      CHECK(cmp_pbw(a, b) == (0 <=> cmp_pbw(b, a)));
      for (const auto& c : segs) {
        if (cmp_pbw(a, b) > 0 && cmp_pbw(b, c) > 0) CHECK(cmp_pbw(a, c) > 0);
        if (cmp_cry(a, b) > 0 && cmp_cry(b, c) > 0) CHECK(cmp_cry(a, c) > 0);
      }
    }
  for (const auto& [content, block] : multisegment_blocks(Window(-3, 3), 4)) {
    for (std::size_t x = 0; x + 1 < block.size(); ++x) CHECK(cmp_cry_multiseg(block[x], block[x + 1]) > 0);
  }
}

TEST_CASE("epsilon examples") {
  CHECK(epsilon(1, {}) == 0);
  CHECK(epsilon(1, ms({{1, 1, 1}})) == 1);
  CHECK(epsilon(1, ms({{3, 3, 1}})) == 0);
}

TEST_CASE("etilde / ftilde examples") {
  CHECK(ftilde(1, {}) == ms({{1, 1, 1}}));
  CHECK(ftilde(1, ms({{3, 3, 1}})) == ms({{1, 3, 1}}));
  CHECK(etilde(1, ms({{1, 3, 1}})) == ms({{3, 3, 1}}));
  CHECK(!etilde(1, {}).has_value());
}

TEST_CASE("signature rule examples") {
  const CrystalTriple empty = signature_ops(1, {});
  CHECK(empty.epsilon == 0);
  CHECK(!empty.e);
  CHECK(empty.f == ms({{1, 1, 1}}));
  const CrystalTriple t = signature_ops(1, ms({{3, 3, 1}}));
  CHECK(t == CrystalTriple{0, std::nullopt, ms({{1, 3, 1}})});
  // <1> + <3> at i = 1: the "+" of <3> precedes the "-" of <1> and cancels.
  const Multisegment m = ms({{1, 1, 1}, {3, 3, 1}});
  const CrystalTriple expected{0, std::nullopt, ms({{1, 1, 2}, {3, 3, 1}})};
  CHECK(signature_ops(1, m) == expected);
  CHECK(formula_ops(1, m) == expected);
}

TEST_CASE("formulas agree with the signature rule") {
  const auto all = enumerate_multisegments(Window(-3, 3), 4);
  for (const auto& m : all)
    for (int i = -5; i <= 5; i += 2) {
      INFO("m = " << m.to_string() << ", i = " << i);
      CHECK(formula_ops(i, m) == signature_ops(i, m));
    }
}

TEST_CASE("crystal axioms") {
  for (const auto& m : enumerate_multisegments(Window(-3, 3), 4))
    for (int i = -3; i <= 3; i += 2) {
      const Multisegment f = ftilde(i, m);
      CHECK(etilde(i, f) == m);
      CHECK(f.content()[i] == m.content()[i] + 1);
      int n = 0;
      std::optional<Multisegment> cur = m;
      while ((cur = etilde(i, *cur))) ++n;
      CHECK(n == epsilon(i, m));
      if (auto e = etilde(i, m)) {
        CHECK(ftilde(i, *e) == m);
        auto c = e->content();
        CHECK(c[i] + 1 == m.content()[i]);
      }
    }
}

TEST_CASE("enumeration") {
  const auto a = enumerate_multisegments(Window(1, 1), 2);
  CHECK(a.size() == 3);
  CHECK(std::count(a.begin(), a.end(), ms({{1, 1, 2}})) == 1);
  CHECK(enumerate_multisegments(Window(1, 3), 1).size() == 3);
  const auto b = enumerate_multisegments(Window(1, 3), 2);
  CHECK(b.size() == 7);
  CHECK(std::count(b.begin(), b.end(), ms({{1, 3, 1}})) == 1);
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = x + 1; y < b.size(); ++y) CHECK(!(b[x] == b[y]));
  CHECK_THROWS_AS(Window::from_list({-3, 1}), std::invalid_argument);
  CHECK(Window::from_list({3, 1, -1, -3}) == Window(-3, 3));
}
