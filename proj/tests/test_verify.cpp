#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcrystal/verify.hpp"

using namespace symcrystal;

namespace {

Multisegment ms(std::initializer_list<std::tuple<int, int, int>> e) {
  Multisegment m;
  for (auto [i, j, n] : e) m.add(Segment{i, j}, n);
  return m;
}

bool has_edge(const CrystalGraph& g, const Multisegment& a, const Multisegment& b, int i) {
  for (const auto& e : g.edges)
    if (e.source == a && e.target == b && e.index == i) return true;
  return false;
}

}  // namespace

TEST_CASE("every suite passes at small scale") {
  for (Kind k : {Kind::TypeA, Kind::Theta})
    for (const auto& name : suite_names()) {
      VerifyConfig cfg;
      cfg.mode = k;
      cfg.window = Window(-3, 3);
      cfg.max_degree = 2;
      cfg.parallel = 2;
      const SuiteReport r = run_suite(name, cfg);
      INFO(r.to_text());
      CHECK(r.pass);
      CHECK(!r.counts.empty());
    }
}

TEST_CASE("parallel and serial reports agree") {
  VerifyConfig cfg;
  cfg.mode = Kind::Theta;
  cfg.max_degree = 3;
  const std::string serial = run_suite("global-basis", cfg).to_text();
  cfg.parallel = 3;
  CHECK(run_suite("global-basis", cfg).to_text() == serial);
}

TEST_CASE("bad configurations") {
  VerifyConfig cfg;
  CHECK_THROWS_AS(run_suite("nope", cfg), std::invalid_argument);
  cfg.mode = Kind::Theta;
  cfg.window = Window(1, 3);
  CHECK_THROWS_AS(run_suite("gram", cfg), std::invalid_argument);
}

TEST_CASE("crystal graphs") {
  const auto a = crystal_graph(Kind::TypeA, Window(1, 1), 2);
  CHECK(a.nodes == std::vector<Multisegment>{{}, ms({{1, 1, 1}}), ms({{1, 1, 2}})});
  CHECK(a.edges.size() == 2);

  const auto t = crystal_graph(Kind::Theta, Window(-1, 1), 2);
  CHECK(t.nodes.size() == 4);
  CHECK(has_edge(t, {}, ms({{1, 1, 1}}), -1));
  CHECK(has_edge(t, ms({{1, 1, 1}}), ms({{-1, 1, 1}}), -1));
  CHECK(node_label(t, ms({{-1, 1, 1}})) == "{1,0}");

  const auto ladder = crystal_graph(Kind::Theta, Window(-3, 3), 2, {3, -3});
  CHECK(ladder.nodes == std::vector<Multisegment>{{}, ms({{3, 3, 1}}), ms({{3, 3, 2}})});
  for (int i : {3, -3}) {
    CHECK(has_edge(ladder, {}, ms({{3, 3, 1}}), i));
    CHECK(has_edge(ladder, ms({{3, 3, 1}}), ms({{3, 3, 2}}), i));
  }
  const std::string dot = to_dot(ladder);
  CHECK(dot.rfind("digraph crystal {", 0) == 0);
  CHECK(dot.find("n0 -> n1 [label=\"-3\"];") != std::string::npos);
  CHECK_THROWS_AS(crystal_graph(Kind::TypeA, Window(-1, 1), 2, {5}), std::out_of_range);
}

TEST_CASE("operator matrices") {
  auto model = make_model(Kind::TypeA, Window(-3, 3));
  const QMatrix m = operator_matrix(*model, 1, Side::F, {});
  CHECK(m.rows() == 1);
  CHECK(m(0, 0) == RatFunc(1));
  CHECK_THROWS_AS(operator_matrix(*model, 1, Side::E, {}), std::invalid_argument);
}
