// Invariant suites over a window and degree bound, shared by the CLI and the
// acceptance runner; crystal graphs.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symcrystal/canonical.hpp"

namespace symcrystal {

struct VerifyConfig {
  Kind mode = Kind::TypeA;
  Window window{-3, 3};
  int max_degree = 4;
  int parallel = 1;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  /// (identity, number of instances checked)
  std::vector<std::pair<std::string, long>> counts;
  std::string counterexample;  // first failure, empty on success
  std::vector<std::string> warnings;

  void count(const std::string& what, long n = 1);
  /// Records the first failure; later ones only bump the failure tally.
  void fail(const std::string& what);
  void merge(const SuiteReport& other);
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config);

/// Runs fn(0..n-1) on up to `threads` workers.  Each call must only touch its
/// own output slot.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// Operator matrix of raise (E) or lower (F) at index i from block `source`
/// to its shifted block: column n holds the coordinates of op(b_n).
QMatrix operator_matrix(const BlockModel& model, int i, Side side, const BlockKey& source);

struct CrystalEdge {
  Multisegment source;
  Multisegment target;
  int index = 0;
};

struct CrystalGraph {
  Kind kind = Kind::TypeA;
  Window window;
  std::vector<Multisegment> nodes;  // by degree, then decreasing crystal order
  std::vector<CrystalEdge> edges;   // in node order, then by index
};

/// Closure of the empty multisegment under F~_i, i in `indices` (all window
/// indices when empty), up to max_degree.
CrystalGraph crystal_graph(Kind kind, const Window& window, int max_degree, const std::vector<int>& indices = {});

/// Node label: {a,b} when the window is {-1,1} in theta mode, else the
/// multisegment string.
std::string node_label(const CrystalGraph& g, const Multisegment& m);
std::string to_dot(const CrystalGraph& g);

}  // namespace symcrystal
