#include "symcrystal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace symcrystal {

void SuiteReport::count(const std::string& what, long n) {
  for (auto& [k, v] : counts)
    if (k == what) {
      v += n;
      return;
    }
  counts.emplace_back(what, n);
}

void SuiteReport::fail(const std::string& what) {
  if (pass) counterexample = what;
  pass = false;
  count("failures");
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& [k, v] : other.counts) count(k, v);
  if (!other.pass && pass) counterexample = other.counterexample;
  pass = pass && other.pass;
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << suite << ": " << (pass ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : counts) os << "  " << k << ": " << v << "\n";
  for (const auto& w : warnings) os << "  warning: " << w << "\n";
  if (!pass) os << "  counterexample: " << counterexample << "\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "crystal-axioms", "oracle-cross-check", "serre",          "gram",     "pbw-crystal-compat",
      "bar-triangular", "global-basis",       "theta-dims",     "qboson-relations", "multiplicity-consistency"};
  return names;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

int degree_of(const BlockKey& key) {
  int d = 0;
  for (const auto& [i, n] : key) d += n;
  return d;
}

std::string ms_str(const Multisegment& m) { return m.empty() ? "0" : m.to_string(); }

// --- crystal operators by mode -------------------------------------------

std::optional<Multisegment> cry_e(Kind k, int i, const Multisegment& m) {
  return k == Kind::TypeA ? etilde(i, m) : theta_E(i, m);
}
Multisegment cry_f(Kind k, int i, const Multisegment& m) { return k == Kind::TypeA ? ftilde(i, m) : theta_F(i, m); }
int cry_eps(Kind k, int i, const Multisegment& m) { return k == Kind::TypeA ? epsilon(i, m) : theta_eps(i, m); }

std::vector<Multisegment> all_nodes(Kind k, const Window& w, int d) {
  return k == Kind::TypeA ? enumerate_multisegments(w, d) : enumerate_theta(w, d);
}

std::pair<WordVector, WordVector> mod_pair(Kind k, int i, const WordVector& v) {
  if (k == Kind::Theta) return theta_mod_ops(i, v);
  return {mod_etilde(i, v), mod_ftilde(i, v)};
}

// --- operator matrices ---------------------------------------------------

struct OpCache {
  std::shared_mutex mu;
  std::map<std::tuple<int, int, int, BlockKey>, QMatrix> values;
};

OpCache& op_cache() {
  static OpCache c;
  return c;
}

// Matrix between two blocks; an absent block is a zero space.
struct Map {
  std::optional<BlockKey> target;
  QMatrix m;
};

Map op_map(const BlockModel& model, int i, Side side, const BlockKey& source) {
  auto target = model.shift(source, i, side == Side::E ? -1 : 1);
  if (!target) return {std::nullopt, QMatrix(0, model.basis(source).size())};
  return {target, operator_matrix(model, i, side, source)};
}

QMatrix t_matrix(const BlockModel& model, int i, const BlockKey& key) {
  const auto& basis = model.basis(key);
  QMatrix out(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto col = coords_in(model, key, T_op(i, model.vector(basis[c])));
    for (std::size_t r = 0; r < basis.size(); ++r) out(r, c) = col[r];
  }
  return out;
}

// Composite b∘a applied to `source`, returning the final block and matrix.
Map then(const BlockModel& model, const Map& a, int i, Side side) {
  if (!a.target) return a;
  Map b = op_map(model, i, side, *a.target);
  if (!b.target) return {std::nullopt, QMatrix(0, a.m.cols())};
  return {b.target, b.m * a.m};
}

Map word_map(const BlockModel& model, const BlockKey& source, const std::vector<std::pair<int, Side>>& ops_right_to_left) {
  Map cur{source, QMatrix::identity(model.basis(source).size())};
  for (const auto& [i, s] : ops_right_to_left) cur = then(model, cur, i, s);
  return cur;
}

// Sum of maps; all defined targets must agree.
bool maps_vanish(const std::vector<std::pair<RatFunc, Map>>& terms, std::size_t cols) {
  std::optional<BlockKey> target;
  for (const auto& [c, m] : terms)
    if (m.target) target = m.target;
  if (!target) return true;
  QMatrix sum;
  bool init = false;
  for (const auto& [c, m] : terms) {
    if (!m.target) continue;
    if (*m.target != *target) throw std::logic_error("maps land in different blocks");
    if (!init) {
      sum = c * m.m;
      init = true;
    } else {
      sum = sum + c * m.m;
    }
  }
  (void)cols;
  return sum.is_zero();
}

std::string block_tag(const BlockModel& model, const BlockKey& key) {
  return to_string(model.kind()) + " block " + key_to_string(key);
}

// Keys of the configured blocks, by degree.
std::vector<BlockKey> keys_upto(const BlockModel& model, int max_degree) {
  std::vector<BlockKey> keys;
  if (max_degree < 0) return keys;
  for (const auto& [k, b] : model.blocks(max_degree)) keys.push_back(k);
  std::stable_sort(keys.begin(), keys.end(),
                   [](const BlockKey& a, const BlockKey& b) { return degree_of(a) < degree_of(b); });
  return keys;
}

template <class Fn>
SuiteReport per_block(const std::string& name, const VerifyConfig& cfg, const std::vector<BlockKey>& keys, Fn&& fn) {
  std::vector<SuiteReport> parts(keys.size());
  parallel_for(keys.size(), cfg.parallel, [&](std::size_t k) {
    try {
      fn(keys[k], parts[k]);
    } catch (const std::exception& e) {
      parts[k].fail(key_to_string(keys[k]) + ": " + e.what());
    }
  });
  SuiteReport r;
  r.suite = name;
  for (const auto& p : parts) r.merge(p);
  return r;
}

// --- suites --------------------------------------------------------------

SuiteReport crystal_axioms(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "crystal-axioms";
  const Kind k = cfg.mode;
  for (const auto& m : all_nodes(k, cfg.window, cfg.max_degree))
    for (int i : cfg.window.indices()) {
      const std::string at = "i=" + std::to_string(i) + ", m=" + ms_str(m);
      const Multisegment f = cry_f(k, i, m);
      const auto ef = cry_e(k, i, f);
      r.count("E~ F~ = id");
      if (!ef || !(*ef == m)) r.fail("E~F~(m) != m at " + at);
      const auto e = cry_e(k, i, m);
      r.count("F~ E~ = id where E~ is defined");
      if (e && !(cry_f(k, i, *e) == m)) r.fail("F~E~(m) != m at " + at);
      int n = 0;
      std::optional<Multisegment> cur = m;
      while ((cur = cry_e(k, i, *cur))) ++n;
      r.count("eps = nilpotency degree of E~");
      if (n != cry_eps(k, i, m)) r.fail("eps=" + std::to_string(cry_eps(k, i, m)) + " but E~ nilpotent in " +
                                        std::to_string(n) + " steps at " + at);
      r.count("F~ adds one letter i");
      Content want = m.content();
      if (k == Kind::TypeA) {
        ++want[i];
        if (f.content() != want) r.fail("weight of F~ wrong at " + at);
      } else {
        SymContent s = sym_content(m);
        ++s[std::abs(i)];
        if (sym_content(f) != s) r.fail("weight of F~ wrong at " + at);
        r.count("F~ stays theta-restricted");
        if (!is_theta_restricted(f)) r.fail("F~ leaves the theta-restricted set at " + at);
      }
    }
  return r;
}

SuiteReport oracle_cross_check(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "oracle-cross-check";
  for (const auto& m : all_nodes(cfg.mode, cfg.window, cfg.max_degree))
    for (int i : cfg.window.indices()) {
      if (cfg.mode == Kind::Theta && i > 0) continue;
      const CrystalTriple a = cfg.mode == Kind::TypeA ? formula_ops(i, m) : theta_formula_ops(-i, m);
      const CrystalTriple b = cfg.mode == Kind::TypeA ? signature_ops(i, m) : theta_signature_ops(-i, m);
      r.count("closed formulas = signature rule");
      if (!(a == b)) r.fail("formula and signature disagree at i=" + std::to_string(i) + ", m=" + ms_str(m));
    }
  return r;
}

SuiteReport serre(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "serre";
  const Window& w = cfg.window;
  auto word = [&](std::initializer_list<int> l) { return WordVector::word(w, Word(l)); };
  for (int i : w.indices())
    for (int j : w.indices()) {
      if (i == j) continue;
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (root_pairing(i, j) == -1) {
        r.count("Serre element vanishes");
        const WordVector s = word({i, i, j}) - RatFunc(qint(2)) * word({i, j, i}) + word({j, i, i});
        if (!is_zero_in_uq(s)) r.fail("Serre element nonzero at " + at);
        r.count("adjacent commutator does not vanish");
        if (is_zero_in_uq(word({i, j}) - word({j, i}))) r.fail("adjacent commutator zero at " + at);
      } else {
        r.count("distant commutator vanishes");
        if (!is_zero_in_uq(word({i, j}) - word({j, i}))) r.fail("commutator nonzero at " + at);
      }
    }
  return r;
}

SuiteReport gram(const VerifyConfig& cfg) {
  auto model = make_model(cfg.mode, cfg.window);
  return per_block("gram", cfg, keys_upto(*model, cfg.max_degree), [&](const BlockKey& key, SuiteReport& r) {
    r.count("Gram matrix nonsingular");
    const QMatrix& g = model->gram(key);
    if (rank(g) != g.rows()) r.fail("singular Gram matrix in " + block_tag(*model, key));
    r.count("Gram matrix symmetric");
    if (!(g.transpose() == g)) r.fail("asymmetric Gram matrix in " + block_tag(*model, key));
  });
}

// coordinates congruent to the indicator of `want` modulo q A_0
std::optional<std::string> congruent(const BlockModel& model, const BlockKey& key, const std::vector<RatFunc>& c,
                                     const std::optional<Multisegment>& want) {
  const auto& basis = model.basis(key);
  for (std::size_t n = 0; n < basis.size(); ++n) {
    if (!c[n].in_A0()) return "coordinate " + c[n].to_string() + " at " + ms_str(basis[n]) + " not in A0";
    const int expect = want && basis[n] == *want ? 1 : 0;
    if (*c[n].eval(0) != expect)
      return "coordinate " + c[n].to_string() + " at " + ms_str(basis[n]) + " should be " + std::to_string(expect) +
             " mod q";
  }
  if (want && std::find(basis.begin(), basis.end(), *want) == basis.end())
    return "expected crystal image " + ms_str(*want) + " missing from the block";
  return std::nullopt;
}

SuiteReport pbw_crystal_compat(const VerifyConfig& cfg) {
  auto model = make_model(cfg.mode, cfg.window);
  const Kind kind = cfg.mode;
  return per_block("pbw-crystal-compat", cfg, keys_upto(*model, cfg.max_degree),
                   [&](const BlockKey& key, SuiteReport& r) {
                     for (const auto& m : model->basis(key))
                       for (int i : cfg.window.indices()) {
                         const std::string at = ", i=" + std::to_string(i) + ", m=" + ms_str(m);
                         const WordVector p = model->vector(m);
                         const auto [ev, fv] = mod_pair(kind, i, p);
                         r.count("F~ P(m) = P(F~ m) mod qL");
                         if (auto err = congruent(*model, *model->shift(key, i, 1),
                                                  coords_in(*model, *model->shift(key, i, 1), fv), cry_f(kind, i, m)))
                           r.fail(*err + at);
                         const int eps = cry_eps(kind, i, m);
                         // E~^n P(m) for n = 1 .. eps + 1
                         WordVector cur = p;
                         std::optional<Multisegment> cm = m;
                         BlockKey ck = key;
                         for (int n = 1; n <= eps + 1; ++n) {
                           auto nk = model->shift(ck, i, -1);
                           cur = n == 1 ? ev : mod_pair(kind, i, cur).first;
                           if (!nk) {
                             r.count("E~^n P(m) in qL iff n > eps");
                             if (!cur.is_zero() || n <= eps) r.fail("E~ leaves the weight lattice" + at);
                             break;
                           }
                           ck = *nk;
                           cm = cm ? cry_e(kind, i, *cm) : std::nullopt;
                           const auto c = coords_in(*model, ck, cur);
                           r.count("E~^n P(m) in qL iff n > eps");
                           const bool in_qL = !congruent(*model, ck, c, std::nullopt);
                           if (in_qL != (n > eps))
                             r.fail("E~^" + std::to_string(n) + " P(m) " + (in_qL ? "in" : "not in") +
                                    " qL with eps=" + std::to_string(eps) + at);
                           if (n <= eps) {
                             r.count("E~^n P(m) = P(E~^n m) mod qL for n <= eps");
                             if (auto err = congruent(*model, ck, c, cm)) r.fail("E~^" + std::to_string(n) + ": " + *err + at);
                           }
                         }
                       }
                   });
}

SuiteReport bar_triangular(const VerifyConfig& cfg) {
  auto model = make_model(cfg.mode, cfg.window);
  return per_block("bar-triangular", cfg, keys_upto(*model, cfg.max_degree),
                   [&](const BlockKey& key, SuiteReport& r) {
                     r.count("bar matrix unitriangular over A");
                     QMatrix b;
                     try {
                       b = bar_matrix(*model, key).entries;
                     } catch (const std::runtime_error& e) {
                       r.fail(e.what());
                       return;
                     }
                     r.count("bar is an involution");
                     if (!(b * b.bar() == QMatrix::identity(b.rows())))
                       r.fail("B bar(B) != 1 in " + block_tag(*model, key));
                   });
}

SuiteReport global_basis(const VerifyConfig& cfg) {
  auto model = make_model(cfg.mode, cfg.window);
  return per_block("global-basis", cfg, keys_upto(*model, cfg.max_degree), [&](const BlockKey& key, SuiteReport& r) {
    const std::string tag = block_tag(*model, key);
    const QMatrix b = bar_matrix(*model, key).entries;
    const QMatrix c = global_lower(*model, key).entries;
    const std::size_t n = c.rows();
    r.count("G^low bar-invariant");
    if (!(b * c.bar() == c)) r.fail("G^low not bar-invariant in " + tag);
    r.count("G^low unitriangular, off-diagonal in qQ[q]");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const RatFunc& x = c(i, j);
        const bool ok = i == j ? x.is_one() : (i < j ? x.is_zero() : x.in_qZq());
        if (!ok) r.fail("C entry " + x.to_string() + " at (" + std::to_string(i) + "," + std::to_string(j) + ") in " + tag);
      }
    r.count("other elimination order gives the same G^low");
    if (!(global_lower_by_g(*model, key).entries == c)) r.fail("recursions disagree in " + tag);
    r.count("Gram(G^low) coords(G^up) = 1");
    const QMatrix u = global_upper(*model, key).entries;
    if (!(c.transpose() * model->gram(key) * u == QMatrix::identity(n))) r.fail("duality fails in " + tag);
    r.count("balanced split of random A-vectors");
    if (auto err = check_balanced(*model, key, 1000u + static_cast<unsigned>(degree_of(key)), 3)) r.fail(*err);
  });
}

SuiteReport theta_dims(const VerifyConfig& cfg) {
  auto model = make_model(Kind::Theta, cfg.window);
  return per_block("theta-dims", cfg, keys_upto(*model, cfg.max_degree), [&](const BlockKey& key, SuiteReport& r) {
    const IdealReduction red = ideal_reduction(key);
    const std::size_t want = theta_multisegments_of(key).size();
    r.count("quotient dimension = number of theta-restricted multisegments");
    if (red.quotient_dim() != want)
      r.fail("block " + key_to_string(key) + ": quotient dimension " + std::to_string(red.quotient_dim()) + ", expected " +
             std::to_string(want));
    r.count("P_theta vectors span the quotient");
    if (!red.ptheta_spans) r.fail("P_theta vectors do not span block " + key_to_string(key));
    r.count("theta Gram matrix nonsingular");
    if (rank(model->gram(key)) != want) r.fail("singular theta Gram matrix in block " + key_to_string(key));
  });
}

void qboson_block(const BlockModel& model, const BlockKey& key, int max_degree, SuiteReport& r) {
  const Window& w = model.window();
  const std::size_t dim = model.basis(key).size();
  const int d = degree_of(key);
  const bool theta = model.kind() == Kind::Theta;
  const std::string tag = block_tag(model, key);
  auto fail = [&](const std::string& rel, int i, int j) {
    r.fail(rel + " fails for i=" + std::to_string(i) + ", j=" + std::to_string(j) + " on " + tag);
  };
  const QMatrix id = QMatrix::identity(dim);
  std::map<int, QMatrix> t;
  if (theta)
    for (int i : w.indices()) t[i] = t_matrix(model, i, key);
  for (int i : w.indices()) {
    if (theta) {
      r.count("T_theta(i) = T_i");
      if (!(t[-i] == t[i])) fail("T_-i = T_i", i, -i);
    }
    for (int j : w.indices()) {
      const int aij = root_pairing(i, j);
      if (theta) {
        r.count("T_i T_j = T_j T_i");
        if (!(t[i] * t[j] == t[j] * t[i])) fail("T_i T_j = T_j T_i", i, j);
        const int s = aij + root_pairing(-i, j);
        // T_i E_j = q^s E_j T_i and T_i F_j = q^-s F_j T_i
        for (Side side : {Side::E, Side::F}) {
          if (side == Side::F && d + 1 > max_degree) continue;
          const Map m = op_map(model, j, side, key);
          if (!m.target) continue;
          r.count("T_i conjugation of E_j, F_j");
          const QMatrix lhs = t_matrix(model, i, *m.target) * m.m;
          const QMatrix rhs = RatFunc::q_pow(side == Side::E ? s : -s) * (m.m * t[i]);
          if (!(lhs == rhs)) fail(side == Side::E ? "T E T^-1 = q^s E" : "T F T^-1 = q^-s F", i, j);
        }
      }
      // E_i F_j = q^-(a_i,a_j) F_j E_i + d_ij + d_-i,j T_i
      if (d + 1 <= max_degree) {
        r.count(theta ? "E_i F_j = q^-(ai,aj) F_j E_i + d_ij + d_(-i)j T_i" : "e'_i f_j = q^-(ai,aj) f_j e'_i + d_ij");
        const Map ef = word_map(model, key, {{j, Side::F}, {i, Side::E}});
        const Map fe = word_map(model, key, {{i, Side::E}, {j, Side::F}});
        std::vector<std::pair<RatFunc, Map>> terms{{RatFunc(1), ef}, {-RatFunc::q_pow(-aij), fe}};
        if (i == j) terms.push_back({RatFunc(-1), Map{key, id}});
        if (theta && j == -i) terms.push_back({RatFunc(-1), Map{key, t[i]}});
        if (!maps_vanish(terms, dim)) fail("commutation relation", i, j);
      }
      // Serre relations for the raising and lowering operators
      if (i == j) continue;
      for (Side side : {Side::E, Side::F}) {
        const int reach = side == Side::F ? d + (aij == -1 ? 3 : 2) : d;
        if (reach > max_degree) continue;
        const std::string nm = side == Side::E ? (theta ? "Serre relations for E" : "Serre relations for e'")
                                               : (theta ? "Serre relations for F" : "Serre relations for f");
        r.count(nm);
        std::vector<std::pair<RatFunc, Map>> terms;
        if (aij == -1) {
          terms.push_back({RatFunc(1), word_map(model, key, {{j, side}, {i, side}, {i, side}})});
          terms.push_back({-RatFunc(qint(2)), word_map(model, key, {{i, side}, {j, side}, {i, side}})});
          terms.push_back({RatFunc(1), word_map(model, key, {{i, side}, {i, side}, {j, side}})});
        } else {
          terms.push_back({RatFunc(1), word_map(model, key, {{j, side}, {i, side}})});
          terms.push_back({RatFunc(-1), word_map(model, key, {{i, side}, {j, side}})});
        }
        if (!maps_vanish(terms, dim)) fail(nm, i, j);
      }
    }
  }
}

SuiteReport qboson_relations(const VerifyConfig& cfg) {
  auto model = make_model(cfg.mode, cfg.window);
  return per_block("qboson-relations", cfg, keys_upto(*model, cfg.max_degree),
                   [&](const BlockKey& key, SuiteReport& r) { qboson_block(*model, key, cfg.max_degree, r); });
}

SuiteReport multiplicity_consistency(const VerifyConfig& cfg) {
  auto model = make_model(cfg.mode, cfg.window);
  return per_block("multiplicity-consistency", cfg, keys_upto(*model, cfg.max_degree),
                   [&](const BlockKey& key, SuiteReport& r) {
                     for (int i : cfg.window.indices())
                       for (Side side : {Side::E, Side::F}) {
                         if (side == Side::F && degree_of(key) + 1 > cfg.max_degree) continue;
                         const auto t = multiplicity_polys(*model, i, key, side);
                         if (!t) continue;
                         const std::string at = block_tag(*model, key) + ", i=" + std::to_string(i) +
                                                (side == Side::E ? ", side E" : ", side F");
                         r.count("direct = adjoint");
                         if (!(t->direct == t->adjoint)) r.fail("routes disagree at " + at);
                         for (std::size_t a = 0; a < t->direct.rows(); ++a)
                           for (std::size_t b = 0; b < t->direct.cols(); ++b) {
                             r.count("value at q=1 is an integer");
                             const auto v = t->direct(a, b).eval_at_one();
                             if (!v || v->get_den() != 1) {
                               r.fail("non-integral value at q=1 for (" + ms_str(t->rows[a]) + ", " + ms_str(t->cols[b]) +
                                      ") at " + at);
                             } else if (*v < 0) {
                               r.warnings.push_back("negative value " + v->get_str() + " at q=1 for (" +
                                                    ms_str(t->rows[a]) + ", " + ms_str(t->cols[b]) + ") at " + at);
                             }
                           }
                       }
                   });
}

}  // namespace

QMatrix operator_matrix(const BlockModel& model, int i, Side side, const BlockKey& source) {
  auto target = model.shift(source, i, side == Side::E ? -1 : 1);
  if (!target) throw std::invalid_argument("operator leaves the weight lattice");
  OpCache& cache = op_cache();
  const auto k = std::make_tuple(static_cast<int>(model.kind()), i, static_cast<int>(side), source);
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.values.find(k);
    if (it != cache.values.end()) return it->second;
  }
  const auto& basis = model.basis(source);
  const std::size_t rows = model.basis(*target).size();
  QMatrix out(rows, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const WordVector v = model.vector(basis[c]);
    const auto col = coords_in(model, *target, side == Side::E ? model.raise(i, v) : model.lower(i, v));
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = col[r];
  }
  std::unique_lock lock(cache.mu);
  return cache.values.emplace(k, std::move(out)).first->second;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (cfg.max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  if (cfg.mode == Kind::Theta && !cfg.window.symmetric())
    throw std::invalid_argument("theta mode needs a symmetric window");
  if (name == "crystal-axioms") return crystal_axioms(cfg);
  if (name == "oracle-cross-check") return oracle_cross_check(cfg);
  if (name == "serre") return serre(cfg);
  if (name == "gram") return gram(cfg);
  if (name == "pbw-crystal-compat") return pbw_crystal_compat(cfg);
  if (name == "bar-triangular") return bar_triangular(cfg);
  if (name == "global-basis") return global_basis(cfg);
  if (name == "theta-dims") {
    if (!cfg.window.symmetric()) throw std::invalid_argument("theta-dims needs a symmetric window");
    return theta_dims(cfg);
  }
  if (name == "qboson-relations") return qboson_relations(cfg);
  if (name == "multiplicity-consistency") return multiplicity_consistency(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

// --- crystal graphs ------------------------------------------------------

CrystalGraph crystal_graph(Kind kind, const Window& window, int max_degree, const std::vector<int>& indices) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  if (kind == Kind::Theta && !window.symmetric()) throw std::invalid_argument("theta mode needs a symmetric window");
  std::vector<int> idx = indices.empty() ? window.indices() : indices;
  for (int i : idx)
    if (!window.contains(i)) throw std::out_of_range("index " + std::to_string(i) + " outside window " + window.to_string());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  std::set<Multisegment> seen{Multisegment{}};
  std::vector<Multisegment> frontier{Multisegment{}};
  for (int d = 0; d < max_degree; ++d) {
    std::vector<Multisegment> next;
    for (const auto& m : frontier)
      for (int i : idx) {
        Multisegment t = cry_f(kind, i, m);
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  CrystalGraph g;
  g.kind = kind;
  g.window = window;
  g.nodes.assign(seen.begin(), seen.end());
  std::sort(g.nodes.begin(), g.nodes.end(), [](const Multisegment& a, const Multisegment& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return cmp_cry_lex(a, b) > 0;
  });
  for (const auto& m : g.nodes) {
    if (m.degree() >= max_degree) continue;
    for (int i : idx) g.edges.push_back({m, cry_f(kind, i, m), i});
  }
  return g;
}

std::string node_label(const CrystalGraph& g, const Multisegment& m) {
  if (g.kind == Kind::Theta && g.window == Window(-1, 1))
    if (auto ab = ab_encoding(m)) return "{" + std::to_string(ab->first) + "," + std::to_string(ab->second) + "}";
  return ms_str(m);
}

std::string to_dot(const CrystalGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::map<Multisegment, std::size_t> id;
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    id[g.nodes[k]] = k;
    os << "  n" << k << " [label=" << quote(node_label(g, g.nodes[k])) << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << id.at(e.source) << " -> n" << id.at(e.target) << " [label=" << quote(std::to_string(e.index))
       << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace symcrystal
