#include "symcrystal/canonical.hpp"

#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace symcrystal {

std::string to_string(Kind k) { return k == Kind::TypeA ? "typeA" : "theta"; }

std::string key_to_string(const BlockKey& key) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, n] : key) {
    os << (first ? "" : ",") << i << ":" << n;
    first = false;
  }
  os << "}";
  return os.str();
}

WordVector BlockModel::combine(const BlockKey& key, const std::vector<RatFunc>& c) const {
  const auto& b = basis(key);
  WordVector out(window_);
  for (std::size_t m = 0; m < b.size(); ++m)
    if (!c[m].is_zero()) out += c[m] * vector(b[m]);
  return out;
}

namespace {

std::optional<BlockKey> shifted_key(const BlockKey& key, int index, int step) {
  BlockKey k = key;
  const int n = (k.count(index) ? k.at(index) : 0) + step;
  if (n < 0) return std::nullopt;
  if (n == 0) {
    k.erase(index);
  } else {
    k[index] = n;
  }
  return k;
}

class TypeAModel final : public BlockModel {
 public:
  explicit TypeAModel(Window w) : BlockModel(w) {}
  Kind kind() const override { return Kind::TypeA; }
  std::map<BlockKey, std::vector<Multisegment>> blocks(int max_degree) const override {
    return multisegment_blocks(window_, max_degree);
  }
  const std::vector<Multisegment>& basis(const BlockKey& key) const override { return pbw_block(key).basis; }
  const QMatrix& gram(const BlockKey& key) const override { return pbw_block(key).gram; }
  WordVector vector(const Multisegment& m) const override { return pbw_element(window_, m); }
  BlockKey key_of(const WordVector& v) const override { return v.content(); }
  std::vector<RatFunc> coords(const WordVector& v) const override { return pbw_coord_vector(v); }
  WordVector raise(int i, const WordVector& v) const override { return eprime(i, v); }
  std::optional<BlockKey> shift(const BlockKey& key, int i, int step) const override {
    return shifted_key(key, i, step);
  }
};

class ThetaModel final : public BlockModel {
 public:
  explicit ThetaModel(Window w) : BlockModel(w) {
    if (!w.symmetric()) throw std::invalid_argument("theta mode needs a window symmetric under i -> -i");
  }
  Kind kind() const override { return Kind::Theta; }
  std::map<BlockKey, std::vector<Multisegment>> blocks(int max_degree) const override {
    return theta_blocks(window_, max_degree);
  }
  const std::vector<Multisegment>& basis(const BlockKey& key) const override { return theta_block(key).basis; }
  const QMatrix& gram(const BlockKey& key) const override { return theta_block(key).gram; }
  WordVector vector(const Multisegment& m) const override { return ptheta_vector(window_, m); }
  BlockKey key_of(const WordVector& v) const override { return sym_content(v); }
  std::vector<RatFunc> coords(const WordVector& v) const override { return theta_coord_vector(v); }
  WordVector raise(int i, const WordVector& v) const override { return E_op(i, v); }
  std::optional<BlockKey> shift(const BlockKey& key, int i, int step) const override {
    return shifted_key(key, i < 0 ? -i : i, step);
  }
};

struct MatrixCache {
  std::shared_mutex mu;
  std::map<std::tuple<int, int, BlockKey>, QMatrix> values;
};

MatrixCache& matrix_cache() {
  static MatrixCache cache;
  return cache;
}

template <class Fn>
QMatrix cached(int what, const BlockModel& model, const BlockKey& key, Fn&& compute) {
  MatrixCache& cache = matrix_cache();
  const auto k = std::make_tuple(what, static_cast<int>(model.kind()), key);
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.values.find(k);
    if (it != cache.values.end()) return it->second;
  }
  QMatrix value = compute();
  std::unique_lock lock(cache.mu);
  return cache.values.emplace(k, std::move(value)).first->second;
}

// Part of a Laurent polynomial in strictly positive degrees.
RatFunc positive_part(const LaurentPoly& p) {
  LaurentPoly out;
  for (int e = std::max(1, p.low()); e <= p.high(); ++e) out += LaurentPoly::monomial(e, p.coeff(e));
  return RatFunc(out);
}

RatFunc split_antisymmetric(const RatFunc& r, const BlockKey& key, std::size_t row, std::size_t col) {
  if (r.is_zero()) return r;
  if (!r.in_A() || !(r + r.bar()).is_zero())
    throw std::runtime_error("global_lower: no solution of c - bar(c) = " + r.to_string() + " in block " +
                             key_to_string(key) + " at (" + std::to_string(row) + "," + std::to_string(col) + ")");
  return positive_part(r.as_laurent());
}

}  // namespace

std::vector<RatFunc> coords_in(const BlockModel& model, const BlockKey& key, const WordVector& v) {
  if (v.is_zero()) return std::vector<RatFunc>(model.basis(key).size());
  if (model.key_of(v) != key) throw std::logic_error("vector outside the expected block " + key_to_string(key));
  return model.coords(v);
}

std::unique_ptr<BlockModel> make_model(Kind kind, const Window& window) {
  if (kind == Kind::TypeA) return std::make_unique<TypeAModel>(window);
  return std::make_unique<ThetaModel>(window);
}

TransitionMatrix bar_matrix(const BlockModel& model, const BlockKey& key) {
  const auto& basis = model.basis(key);
  QMatrix b = cached(0, model, key, [&] {
    const std::size_t n = basis.size();
    QMatrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      const auto col = coords_in(model, key, bar_vec(model.vector(basis[c])));
      for (std::size_t r = 0; r < n; ++r) out(r, c) = col[r];
    }
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) {
        const RatFunc& x = out(r, c);
        const bool ok = r == c ? x.is_one() : (r < c ? x.is_zero() : x.in_A());
        if (!ok)
          throw std::runtime_error("bar_matrix: block " + key_to_string(key) + " entry (" + basis[r].to_string() +
                                   ", " + basis[c].to_string() + ") = " + x.to_string() +
                                   " breaks unitriangularity over A");
      }
    return out;
  });
  return {model.kind(), key, basis, std::move(b)};
}

TransitionMatrix global_lower(const BlockModel& model, const BlockKey& key) {
  const auto& basis = model.basis(key);
  QMatrix c = cached(1, model, key, [&] {
    const QMatrix b = bar_matrix(model, key).entries;
    const std::size_t n = basis.size();
    QMatrix out(n, n);
    for (std::size_t m = 0; m < n; ++m) {
      out(m, m) = RatFunc(1);
      for (std::size_t r = m + 1; r < n; ++r) {
        RatFunc acc;
        for (std::size_t k = m; k < r; ++k)
          if (!b(r, k).is_zero() && !out(k, m).is_zero()) acc += b(r, k) * out(k, m).bar();
        out(r, m) = split_antisymmetric(acc, key, r, m);
      }
    }
    return out;
  });
  return {model.kind(), key, basis, std::move(c)};
}

TransitionMatrix global_lower_by_g(const BlockModel& model, const BlockKey& key) {
  const auto& basis = model.basis(key);
  const std::size_t n = basis.size();
  const QMatrix b = bar_matrix(model, key).entries;
  QMatrix g(n, n);  // columns: coordinates of G(m) in the basis
  for (std::size_t m = n; m-- > 0;) {
    // bar(b_m) - b_m expressed through the G(k), k > m (all bar-invariant)
    std::vector<RatFunc> d(n);
    for (std::size_t r = m + 1; r < n; ++r) d[r] = b(r, m);
    std::vector<RatFunc> a(n);
    for (std::size_t k = m + 1; k < n; ++k) {
      a[k] = d[k];
      if (a[k].is_zero()) continue;
      for (std::size_t r = k + 1; r < n; ++r) d[r] -= a[k] * g(r, k);
    }
    for (std::size_t r = 0; r < n; ++r) g(r, m) = r == m ? RatFunc(1) : RatFunc();
    for (std::size_t k = m + 1; k < n; ++k) {
      const RatFunc dk = split_antisymmetric(a[k], key, k, m);
      if (dk.is_zero()) continue;
      for (std::size_t r = k; r < n; ++r) g(r, m) += dk * g(r, k);
    }
  }
  return {model.kind(), key, basis, std::move(g)};
}

TransitionMatrix global_upper(const BlockModel& model, const BlockKey& key) {
  const auto& basis = model.basis(key);
  QMatrix u = cached(2, model, key, [&] {
    const QMatrix c = global_lower(model, key).entries;
    auto inv = inverse(c.transpose() * model.gram(key));
    if (!inv) throw std::runtime_error("global_upper: singular Gram matrix in block " + key_to_string(key));
    return std::move(*inv);
  });
  return {model.kind(), key, basis, std::move(u)};
}

std::optional<MultiplicityTable> multiplicity_polys(const BlockModel& model, int i, const BlockKey& source,
                                                    Side side) {
  if (!model.window().contains(i)) throw std::out_of_range("index " + std::to_string(i) + " outside window");
  const int step = side == Side::E ? -1 : 1;
  const auto target = model.shift(source, i, step);
  if (!target) return std::nullopt;
  MultiplicityTable t;
  t.kind = model.kind();
  t.i = i;
  t.side = side;
  t.source = source;
  t.target = *target;
  t.rows = model.basis(source);
  t.cols = model.basis(*target);
  const std::size_t ns = t.rows.size();
  const std::size_t nt = t.cols.size();
  auto op = [&](const WordVector& v) { return side == Side::E ? model.raise(i, v) : model.lower(i, v); };
  auto adj = [&](const WordVector& v) { return side == Side::E ? model.lower(i, v) : model.raise(i, v); };

  const QMatrix us = global_upper(model, source).entries;
  const QMatrix ut = global_upper(model, *target).entries;
  auto ut_inv = inverse(ut);
  if (!ut_inv) throw std::runtime_error("multiplicity_polys: singular upper transition matrix");
  t.direct = QMatrix(ns, nt);
  for (std::size_t b = 0; b < ns; ++b) {
    const auto x = coords_in(model, *target, op(model.combine(source, us.col(b))));
    const QMatrix y = *ut_inv * QMatrix::column(x);
    for (std::size_t k = 0; k < nt; ++k) t.direct(b, k) = y(k, 0);
  }

  const QMatrix cs = global_lower(model, source).entries;
  const QMatrix ct = global_lower(model, *target).entries;
  auto cs_inv = inverse(cs);
  if (!cs_inv) throw std::runtime_error("multiplicity_polys: singular lower transition matrix");
  t.adjoint = QMatrix(ns, nt);
  for (std::size_t k = 0; k < nt; ++k) {
    const auto x = coords_in(model, source, adj(model.combine(*target, ct.col(k))));
    const QMatrix z = *cs_inv * QMatrix::column(x);
    for (std::size_t b = 0; b < ns; ++b) t.adjoint(b, k) = z(b, 0);
  }
  return t;
}

std::optional<std::string> check_balanced(const BlockModel& model, const BlockKey& key, unsigned seed, int trials) {
  const auto& basis = model.basis(key);
  const std::size_t n = basis.size();
  const QMatrix c = global_lower(model, key).entries;
  auto c_inv = inverse(c);
  if (!c_inv) return "global basis matrix is singular in block " + key_to_string(key);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> expo(-3, 3);
  for (int t = 0; t < trials; ++t) {
    std::vector<RatFunc> x(n);
    for (auto& v : x)
      for (int k = 0; k < 2; ++k) v += RatFunc(coef(rng)) * RatFunc::q_pow(expo(rng));
    const QMatrix a = *c_inv * QMatrix::column(x);
    std::vector<RatFunc> hi(n);
    std::vector<RatFunc> lo(n);
    for (std::size_t m = 0; m < n; ++m) {
      if (!a(m, 0).in_A()) return "G-coordinate " + a(m, 0).to_string() + " not in A, block " + key_to_string(key);
      const LaurentPoly p = a(m, 0).as_laurent();
      LaurentPoly h;
      LaurentPoly l;
      for (int e = p.low(); e <= p.high(); ++e) (e >= 0 ? h : l) += LaurentPoly::monomial(e, p.coeff(e));
      hi[m] = RatFunc(h);
      lo[m] = RatFunc(l);
    }
    const QMatrix part1 = c * QMatrix::column(hi);
    for (std::size_t m = 0; m < n; ++m)
      if (!(part1(m, 0).in_A() && part1(m, 0).in_A0()))
        return "L-part coordinate " + part1(m, 0).to_string() + " not in Q[q], block " + key_to_string(key);
    const QMatrix part2 = c * QMatrix::column(lo);
    const auto barred = coords_in(model, key, bar_vec(model.combine(key, part2.col(0))));
    for (const auto& v : barred)
      if (!v.in_qZq()) return "bar of the second part has coordinate " + v.to_string() + ", block " + key_to_string(key);
    for (std::size_t m = 0; m < n; ++m)
      if (!(part1(m, 0) + part2(m, 0) == x[m])) return "split does not reassemble, block " + key_to_string(key);
  }
  return std::nullopt;
}

}  // namespace symcrystal
