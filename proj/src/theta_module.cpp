#include "symcrystal/theta_module.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace symcrystal {

namespace {

int pairing_with(int i, const Content& c) {
  int s = 0;
  for (const auto& [j, n] : c) s += root_pairing(i, j) * n;
  return s;
}

Window sym_window(const SymContent& s) {
  if (s.empty()) return Window{};
  const int k = s.rbegin()->first;
  return Window(-k, k);
}

}  // namespace

SymContent sym_content(const WordVector& v) {
  if (v.is_zero()) return {};
  const SymContent s = symmetrize(content(v.terms().begin()->first));
  for (const auto& [w, c] : v.terms())
    if (symmetrize(content(w)) != s) throw std::invalid_argument("theta vector is not homogeneous");
  return s;
}

WordVector F_op(int i, const WordVector& v) { return left_mul(i, v); }

WordVector E_op(int i, const WordVector& v) { return eprime(i, v) + ad_t(i, estar(-i, v)); }

WordVector T_op(int i, const WordVector& v) {
  WordVector out(v.window());
  for (const auto& [w, c] : v.terms()) {
    const Content b = content(w);
    out.add(w, c * RatFunc::q_pow(-(pairing_with(i, b) + pairing_with(-i, b))));
  }
  return out;
}

WordVector E_op_commuting(int i, const WordVector& v) {
  WordVector out(v.window());
  for (const auto& [w, c] : v.terms()) {
    if (w.empty()) continue;
    const int j = w.front();
    const WordVector tail = WordVector::word(v.window(), Word(w.begin() + 1, w.end()), c);
    out += RatFunc::q_pow(-root_pairing(i, j)) * left_mul(j, E_op_commuting(i, tail));
    if (j == i) out += tail;
    if (j == -i) out += T_op(i, tail);
  }
  return out;
}

WordVector bar_theta(const WordVector& v) { return bar_vec(v); }

namespace {

std::pair<WordVector, LaurentPoly> ptheta_unscaled(const Window& window, const Multisegment& m) {
  std::vector<std::pair<Segment, int>> segs(m.entries().begin(), m.entries().end());
  std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) { return cmp_pbw(a.first, b.first) > 0; });
  WordVector acc = WordVector::one(window);
  LaurentPoly scale(1);
  for (const auto& [s, n] : segs) {
    const WordVector seg = pbw_segment(window, s.i, s.j);
    for (int k = 0; k < n; ++k) acc = mul(acc, seg);
    scale *= s.i == -s.j ? qeven_fact(n) : qfact(n);
  }
  return {acc, scale};
}

// E_i on a single word, as (word, exponent of q) pairs.
template <class Fn>
void e_word(int i, const Word& u, Fn&& emit) {
  int left = 0;
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p] == i) {
      Word w = u;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
      emit(w, -left);
    }
    left += root_pairing(i, u[p]);
  }
  int right = 0;
  for (std::size_t p = u.size(); p-- > 0;) {
    if (u[p] == -i) {
      Word w = u;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
      emit(w, -right - pairing_with(i, content(w)));
    }
    right += root_pairing(-i, u[p]);
  }
}

std::string pair_key(const Word& u, const Word& v) {
  std::string k;
  k.reserve(u.size() + v.size() + 1);
  for (int a : u) k.push_back(static_cast<char>(a + 64));
  k.push_back('|');
  for (int b : v) k.push_back(static_cast<char>(b + 64));
  return k;
}

struct FormCache {
  std::shared_mutex mu;
  std::unordered_map<std::string, LaurentPoly> values;
};

FormCache& form_cache() {
  static FormCache cache;
  return cache;
}

// (u, f_j v') = (E_j u, v')
LaurentPoly theta_form_rec(const Word& u, const Word& v) {
  if (v.empty()) return u.empty() ? LaurentPoly(1) : LaurentPoly();
  FormCache& cache = form_cache();
  const std::string key = pair_key(u, v);
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }
  const Word rest(v.begin() + 1, v.end());
  LaurentPoly acc;
  e_word(v.front(), u, [&](const Word& w, int e) { acc += theta_form_rec(w, rest).shifted(e); });
  std::unique_lock lock(cache.mu);
  cache.values.emplace(key, acc);
  return acc;
}

struct ThetaCache {
  std::shared_mutex mu;
  std::map<SymContent, std::unique_ptr<ThetaBlock>> blocks;
  std::map<SymContent, std::unique_ptr<IdealReduction>> ideals;
};

ThetaCache& theta_cache() {
  static ThetaCache cache;
  return cache;
}

std::unique_ptr<ThetaBlock> build_block(const SymContent& key) {
  auto b = std::make_unique<ThetaBlock>();
  b->key = key;
  b->basis = theta_multisegments_of(key);
  for (const auto& c : contents_of(key))
    for (auto& w : words_of_content(c)) b->words.push_back(std::move(w));
  std::sort(b->words.begin(), b->words.end());
  for (std::size_t k = 0; k < b->words.size(); ++k) b->word_index[b->words[k]] = k;
  const Window window = sym_window(key);
  const std::size_t nb = b->basis.size();
  const std::size_t nw = b->words.size();

  std::vector<LaurentPoly> scale(nb);
  std::vector<std::vector<std::pair<std::size_t, LaurentPoly>>> cols(nb);
  for (std::size_t m = 0; m < nb; ++m) {
    auto [vec, s] = ptheta_unscaled(window, b->basis[m]);
    scale[m] = s;
    for (const auto& [w, x] : vec.terms()) cols[m].emplace_back(b->word_index.at(w), x.as_laurent());
  }
  std::vector<std::vector<LaurentPoly>> r(nb, std::vector<LaurentPoly>(nw));
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t w = 0; w < nw; ++w) {
      LaurentPoly acc;
      for (const auto& [u, x] : cols[m]) {
        const LaurentPoly f = theta_form_rec(b->words[u], b->words[w]);
        if (!f.is_zero()) acc += x * f;
      }
      r[m][w] = std::move(acc);
    }
  QMatrix g0(nb, nb);
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t n = 0; n < nb; ++n) {
      LaurentPoly acc;
      for (const auto& [u, x] : cols[n]) acc += r[m][u] * x;
      g0(m, n) = RatFunc(acc);
    }
  QMatrix rm(nb, nw);
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t w = 0; w < nw; ++w) rm(m, w) = RatFunc(r[m][w]);
  auto sol = solve(g0, rm);
  if (!sol) throw std::runtime_error("theta_block: singular Gram matrix of the P_theta basis");
  b->coord_map = std::move(*sol);
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t w = 0; w < nw; ++w)
      if (!b->coord_map(m, w).is_zero()) b->coord_map(m, w) *= RatFunc(scale[m]);
  b->gram = QMatrix(nb, nb);
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t n = 0; n < nb; ++n) b->gram(m, n) = g0(m, n) / RatFunc(scale[m] * scale[n]);
  return b;
}

// Columns of PBW coordinates over all genuine contents of a block.
struct Ambient {
  std::vector<Content> contents;
  std::map<Content, std::size_t> offset;
  std::size_t dim = 0;

  explicit Ambient(const SymContent& key) : contents(contents_of(key)) {
    for (const auto& c : contents) {
      offset[c] = dim;
      dim += pbw_block(c).basis.size();
    }
  }

  void place(const WordVector& x, std::vector<RatFunc>& col) const {
    std::map<Content, WordVector> parts;
    for (const auto& [w, c] : x.terms()) {
      auto it = parts.try_emplace(content(w), x.window()).first;
      it->second.add(w, c);
    }
    for (const auto& [c, part] : parts) {
      const auto v = pbw_coord_vector(part);
      const std::size_t off = offset.at(c);
      for (std::size_t k = 0; k < v.size(); ++k) col[off + k] += v[k];
    }
  }
};

// [ideal generators | P_theta images] as columns.
QMatrix ideal_system(const SymContent& key, std::size_t& n_ideal) {
  const Ambient amb(key);
  const Window window = sym_window(key);
  std::vector<std::vector<RatFunc>> cols;
  for (const auto& [k, n] : key) {
    SymContent smaller = key;
    if (--smaller[k] == 0) smaller.erase(k);
    for (const auto& c : contents_of(smaller))
      for (const auto& m : pbw_block(c).basis) {
        const WordVector p = pbw_element(window, m);
        const WordVector gen = mul(p, WordVector::letter(window, k)) - mul(p, WordVector::letter(window, -k));
        std::vector<RatFunc> col(amb.dim);
        amb.place(gen, col);
        cols.push_back(std::move(col));
      }
  }
  n_ideal = cols.size();
  for (const auto& m : theta_block(key).basis) {
    std::vector<RatFunc> col(amb.dim);
    amb.place(ptheta_vector(window, m), col);
    cols.push_back(std::move(col));
  }
  QMatrix a(amb.dim, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < amb.dim; ++r) a(r, c) = cols[c][r];
  return a;
}

}  // namespace

WordVector ptheta_vector(const Window& window, const Multisegment& m) {
  validate_theta(m);
  auto [vec, scale] = ptheta_unscaled(window, m);
  if (!scale.is_constant() || scale.trailing() != 1) vec *= RatFunc(LaurentPoly(1), scale);
  return vec;
}

LaurentPoly theta_word_form(const Word& u, const Word& v) {
  if (u.size() != v.size() || symmetrize(content(u)) != symmetrize(content(v))) return {};
  return theta_form_rec(u, v);
}

RatFunc theta_form(const WordVector& u, const WordVector& v) {
  RatFunc acc;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      const LaurentPoly f = theta_word_form(a, b);
      if (!f.is_zero()) acc += ca * cb * RatFunc(f);
    }
  return acc;
}

const ThetaBlock& theta_block(const SymContent& key) {
  ThetaCache& cache = theta_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.blocks.find(key);
    if (it != cache.blocks.end()) return *it->second;
  }
  auto built = build_block(key);
  std::unique_lock lock(cache.mu);
  auto [it, fresh] = cache.blocks.emplace(key, std::move(built));
  return *it->second;
}

std::vector<RatFunc> theta_coord_vector(const WordVector& v) {
  const ThetaBlock& b = theta_block(sym_content(v));
  std::vector<RatFunc> out(b.basis.size());
  for (const auto& [w, c] : v.terms()) {
    const std::size_t k = b.word_index.at(w);
    for (std::size_t m = 0; m < out.size(); ++m)
      if (!b.coord_map(m, k).is_zero()) out[m] += b.coord_map(m, k) * c;
  }
  return out;
}

std::map<Multisegment, RatFunc> theta_coords(const WordVector& v) {
  std::map<Multisegment, RatFunc> out;
  if (v.is_zero()) return out;
  const ThetaBlock& b = theta_block(sym_content(v));
  const auto x = theta_coord_vector(v);
  for (std::size_t m = 0; m < x.size(); ++m)
    if (!x[m].is_zero()) out.emplace(b.basis[m], x[m]);
  return out;
}

IdealReduction ideal_reduction(const SymContent& key) {
  ThetaCache& cache = theta_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.ideals.find(key);
    if (it != cache.ideals.end()) return *it->second;
  }
  std::size_t n_ideal = 0;
  const QMatrix a = ideal_system(key, n_ideal);
  QMatrix ideal(a.rows(), n_ideal);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < n_ideal; ++c) ideal(r, c) = a(r, c);
  auto red = std::make_unique<IdealReduction>();
  red->ambient_dim = a.rows();
  red->ideal_rank = n_ideal == 0 ? 0 : rank(ideal);
  red->ptheta_spans = rank(a) == a.rows();
  std::unique_lock lock(cache.mu);
  auto [it, fresh] = cache.ideals.emplace(key, std::move(red));
  return *it->second;
}

std::optional<std::vector<RatFunc>> theta_coords_by_ideal(const WordVector& v) {
  const SymContent key = sym_content(v);
  std::size_t n_ideal = 0;
  const QMatrix a = ideal_system(key, n_ideal);
  std::vector<RatFunc> rhs(a.rows());
  Ambient(key).place(v, rhs);
  auto sol = solve_any(a, rhs);
  if (!sol) return std::nullopt;
  return std::vector<RatFunc>(sol->begin() + static_cast<std::ptrdiff_t>(n_ideal), sol->end());
}

std::pair<WordVector, WordVector> theta_mod_ops(int i, const WordVector& v) {
  int top = 0;
  for (const auto& [w, c] : v.terms())
    top = std::max(top, static_cast<int>(std::count(w.begin(), w.end(), i) + std::count(w.begin(), w.end(), -i)));
  const auto u = qboson_pieces(i, v, top, [i](const WordVector& x) { return E_op(i, x); });
  WordVector e(v.window());
  WordVector f(v.window());
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (n >= 1) e += divided_left_mul(i, static_cast<int>(n) - 1, u[n]);
    f += divided_left_mul(i, static_cast<int>(n) + 1, u[n]);
  }
  return {e, f};
}

}  // namespace symcrystal
