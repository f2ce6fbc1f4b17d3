#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcrystal/canonical.hpp"

using namespace symcrystal;

namespace {

const Window W(-3, 3);
const RatFunc q = RatFunc::q();
const RatFunc qi = RatFunc::q_pow(-1);

Multisegment ms(std::initializer_list<std::tuple<int, int, int>> e) {
  Multisegment m;
  for (auto [i, j, n] : e) m.add(Segment{i, j}, n);
  return m;
}

WordVector f(std::initializer_list<int> letters) { return WordVector::word(W, Word(letters)); }

}  // namespace

TEST_CASE("type A bar matrix for content {1,3}") {
  auto model = make_model(Kind::TypeA, W);
  const BlockKey key{{1, 1}, {3, 1}};
  const auto b = bar_matrix(*model, key);
  REQUIRE(b.index.size() == 2);
  CHECK(b.index[0] == ms({{1, 3, 1}}));
  CHECK(b.index[1] == ms({{1, 1, 1}, {3, 3, 1}}));
  CHECK(b.entries(0, 0) == RatFunc(1));
  CHECK(b.entries(1, 0) == q - qi);
  CHECK(b.entries(0, 1).is_zero());
  CHECK(b.entries(1, 1) == RatFunc(1));
  CHECK(b.entries * b.entries.bar() == QMatrix::identity(2));
}

TEST_CASE("type A lower global basis for content {1,3}") {
  auto model = make_model(Kind::TypeA, W);
  const BlockKey key{{1, 1}, {3, 1}};
  const auto c = global_lower(*model, key);
  CHECK(c.entries(1, 0) == q);
  CHECK(c.entries(0, 1).is_zero());
  const WordVector g = model->combine(key, c.entries.col(0));
  CHECK(g == f({1, 3}));
  CHECK(bar_vec(f({1, 3})) == f({1, 3}));
}

TEST_CASE("singleton blocks are trivial") {
  auto model = make_model(Kind::TypeA, W);
  const BlockKey key{{1, 2}};
  CHECK(bar_matrix(*model, key).entries == QMatrix::identity(1));
  CHECK(global_lower(*model, key).entries == QMatrix::identity(1));
}

TEST_CASE("both recursions give the same global basis") {
  for (Kind k : {Kind::TypeA, Kind::Theta}) {
    auto model = make_model(k, W);
    for (const auto& [key, basis] : model->blocks(4)) {
      INFO(to_string(k) << " " << key_to_string(key));
      CHECK(global_lower(*model, key).entries == global_lower_by_g(*model, key).entries);
    }
  }
}

TEST_CASE("global bases: invariance, triangularity, duality") {
  for (Kind k : {Kind::TypeA, Kind::Theta}) {
    auto model = make_model(k, W);
    for (const auto& [key, basis] : model->blocks(4)) {
      INFO(to_string(k) << " " << key_to_string(key));
      const QMatrix b = bar_matrix(*model, key).entries;
      const QMatrix c = global_lower(*model, key).entries;
      const QMatrix u = global_upper(*model, key).entries;
      const std::size_t n = basis.size();
      CHECK(b * b.bar() == QMatrix::identity(n));
      CHECK(b * c.bar() == c);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          if (r == s) {
            CHECK(c(r, s) == RatFunc(1));
          } else if (r < s) {
            CHECK(c(r, s).is_zero());
          } else {
            CHECK(c(r, s).in_qZq());
          }
        }
      CHECK(c.transpose() * model->gram(key) * u == QMatrix::identity(n));
      // G^low built as a vector is bar invariant as a vector
      for (std::size_t m = 0; m < n; ++m) {
        const WordVector g = model->combine(key, c.col(m));
        CHECK(model->coords(bar_vec(g)) == c.col(m));
      }
    }
  }
}

TEST_CASE("theta block of <-1,1>") {
  auto model = make_model(Kind::Theta, W);
  const BlockKey key{{1, 2}};
  const auto b = bar_matrix(*model, key);
  REQUIRE(b.index.size() == 2);
  CHECK(b.index[0] == ms({{-1, 1, 1}}));
  CHECK(b.index[1] == ms({{1, 1, 2}}));
  CHECK(b.entries(0, 1).is_zero());
  // brute-force bar fixation: G = P(<-1,1>) + x P(2<1>), x in qQ[q], bar(G) = G
  const RatFunc x = global_lower(*model, key).entries(1, 0);
  CHECK(x.in_qZq());
  CHECK(b.entries(1, 0) + x.bar() == x);
}

TEST_CASE("theta duality on <1>") {
  auto model = make_model(Kind::Theta, W);
  const BlockKey key{{1, 1}};
  const WordVector up = model->combine(key, global_upper(*model, key).entries.col(0));
  const WordVector low = model->combine(key, global_lower(*model, key).entries.col(0));
  CHECK(theta_form(up, low) == RatFunc(1));
}

TEST_CASE("type A duality by direct form evaluation") {
  auto model = make_model(Kind::TypeA, W);
  const BlockKey key{{1, 1}, {3, 1}};
  const QMatrix c = global_lower(*model, key).entries;
  const QMatrix u = global_upper(*model, key).entries;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      CHECK(form(model->combine(key, u.col(a)), model->combine(key, c.col(b))) == RatFunc(a == b ? 1 : 0));
}

TEST_CASE("multiplicity polynomials") {
  auto a = make_model(Kind::TypeA, W);
  const auto t = multiplicity_polys(*a, 1, {}, Side::F);
  REQUIRE(t);
  REQUIRE(t->cols.size() == 1);
  CHECK(t->direct(0, 0) == RatFunc(1));
  CHECK(t->adjoint(0, 0) == RatFunc(1));
  CHECK(!multiplicity_polys(*a, 1, {}, Side::E));

  auto th = make_model(Kind::Theta, W);
  const auto u = multiplicity_polys(*th, -1, {}, Side::F);
  REQUIRE(u);
  CHECK(u->direct == u->adjoint);

  for (Kind k : {Kind::TypeA, Kind::Theta}) {
    auto model = make_model(k, W);
    for (const auto& [key, basis] : model->blocks(2))
      for (int i : W.indices())
        for (Side s : {Side::E, Side::F}) {
          const auto m = multiplicity_polys(*model, i, key, s);
          if (!m) continue;
          INFO(to_string(k) << " " << key_to_string(key) << " i=" << i);
          CHECK(m->direct == m->adjoint);
          for (std::size_t r = 0; r < m->direct.rows(); ++r)
            for (std::size_t c = 0; c < m->direct.cols(); ++c) {
              const auto v = m->direct(r, c).eval_at_one();
              REQUIRE(v);
              CHECK(v->get_den() == 1);
            }
        }
  }
}

TEST_CASE("balancedness") {
  for (Kind k : {Kind::TypeA, Kind::Theta}) {
    auto model = make_model(k, W);
    for (const auto& [key, basis] : model->blocks(3)) {
      const auto err = check_balanced(*model, key, 7, 3);
      CHECK_MESSAGE(!err, (err ? *err : std::string()));
    }
  }
}
