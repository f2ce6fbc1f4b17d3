// Bar matrices, lower and upper global bases and multiplicity polynomials for
// U_q^- (type A) and V_theta(0).
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "symcrystal/theta_module.hpp"

namespace symcrystal {

enum class Kind { TypeA, Theta };

/// Content (type A) or symmetrized content (theta).
using BlockKey = std::map<int, int>;

std::string to_string(Kind k);
std::string key_to_string(const BlockKey& key);

/// One of the two module structures, with a fixed window for vectors.
class BlockModel {
 public:
  virtual ~BlockModel() = default;
  virtual Kind kind() const = 0;
  const Window& window() const { return window_; }

  virtual std::map<BlockKey, std::vector<Multisegment>> blocks(int max_degree) const = 0;
  virtual const std::vector<Multisegment>& basis(const BlockKey& key) const = 0;
  /// (b_m, b_n) for the basis of the block.
  virtual const QMatrix& gram(const BlockKey& key) const = 0;
  virtual WordVector vector(const Multisegment& m) const = 0;
  virtual BlockKey key_of(const WordVector& v) const = 0;
  /// Coordinates of a homogeneous vector in the basis of its block.
  virtual std::vector<RatFunc> coords(const WordVector& v) const = 0;
  /// e'_i, resp. E_i.
  virtual WordVector raise(int i, const WordVector& v) const = 0;
  /// f_i, resp. F_i (left multiplication in both cases).
  WordVector lower(int i, const WordVector& v) const { return left_mul(i, v); }
  /// Block reached by raise (step = -1) or lower (step = +1); nullopt when
  /// the raise leaves nothing.
  virtual std::optional<BlockKey> shift(const BlockKey& key, int i, int step) const = 0;

  /// Vector with the given coordinates in the block.
  WordVector combine(const BlockKey& key, const std::vector<RatFunc>& c) const;

 protected:
  explicit BlockModel(Window w) : window_(w) {}
  Window window_;
};

std::unique_ptr<BlockModel> make_model(Kind kind, const Window& window);

/// Coordinates of v in the block `key`; zero vectors are allowed.  Throws
/// std::logic_error if v lives in another block.
std::vector<RatFunc> coords_in(const BlockModel& model, const BlockKey& key, const WordVector& v);

struct TransitionMatrix {
  Kind kind = Kind::TypeA;
  BlockKey block;
  std::vector<Multisegment> index;  // decreasing crystal order
  QMatrix entries;
};

/// B with bar(b_n) = sum_m B_{mn} b_m.  Throws std::runtime_error if B is not
/// unitriangular with Laurent-polynomial entries.
TransitionMatrix bar_matrix(const BlockModel& model, const BlockKey& key);
/// C with G^low(m) = sum_n C_{nm} b_n.
TransitionMatrix global_lower(const BlockModel& model, const BlockKey& key);
/// Same basis by the recursion G(m) = b_m + sum_{n < m} d_n G(n).
TransitionMatrix global_lower_by_g(const BlockModel& model, const BlockKey& key);
/// U with G^up(m) = sum_n U_{nm} b_n, U = (C^T Gram)^{-1}.
TransitionMatrix global_upper(const BlockModel& model, const BlockKey& key);

enum class Side { E, F };

/// Side E: raise G^up(b) = sum_{b'} c_{b,b'} G^up(b'); side F: lower G^up(b).
/// Rows are b (source block), columns b' (target block).
struct MultiplicityTable {
  Kind kind = Kind::TypeA;
  int i = 1;
  Side side = Side::E;
  BlockKey source;
  BlockKey target;
  std::vector<Multisegment> rows;
  std::vector<Multisegment> cols;
  QMatrix direct;   // applying the operator to G^up
  QMatrix adjoint;  // coefficients of G^low(b) in the adjoint operator on G^low(b')
};

std::optional<MultiplicityTable> multiplicity_polys(const BlockModel& model, int i, const BlockKey& source, Side side);

/// Splits random A-combinations of the global basis into a part in L and a
/// part in q^-1 bar(L), checking both memberships.  Returns a description of
/// the first failure.
std::optional<std::string> check_balanced(const BlockModel& model, const BlockKey& key, unsigned seed, int trials);

}  // namespace symcrystal
