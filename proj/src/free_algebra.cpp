#include "symcrystal/free_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symcrystal {

Content content(const Word& w) {
  Content c;
  for (int i : w) ++c[i];
  return c;
}

namespace {

int pairing_with(int i, const Content& c) {
  int s = 0;
  for (const auto& [j, n] : c) s += root_pairing(i, j) * n;
  return s;
}

Window span_window(const Content& c) {
  if (c.empty()) return Window{};
  return Window(c.begin()->first, c.rbegin()->first);
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "·";
    s += "f[" + std::to_string(w[k]) + "]";
  }
  return s;
}

bool needs_paren(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k + 2 < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (depth == 0 && s[k] == ' ' && (s[k + 1] == '+' || s[k + 1] == '-')) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// WordVector

WordVector WordVector::one(Window window) { return word(window, {}); }

WordVector WordVector::letter(Window window, int i) { return word(window, {i}); }

WordVector WordVector::word(Window window, Word w, const RatFunc& coeff) {
  WordVector v(window);
  v.add(w, coeff);
  return v;
}

RatFunc WordVector::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

void WordVector::add(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  for (int i : w)
    if (!window_.contains(i))
      throw std::out_of_range("letter f[" + std::to_string(i) + "] outside window " + window_.to_string());
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Content WordVector::content() const {
  if (terms_.empty()) return {};
  const Content c = symcrystal::content(terms_.begin()->first);
  for (const auto& [w, x] : terms_)
    if (symcrystal::content(w) != c) throw std::invalid_argument("WordVector: not homogeneous");
  return c;
}

bool WordVector::homogeneous() const {
  if (terms_.empty()) return true;
  const Content c = symcrystal::content(terms_.begin()->first);
  for (const auto& [w, x] : terms_)
    if (symcrystal::content(w) != c) return false;
  return true;
}

int WordVector::degree() const {
  int d = 0;
  for (const auto& [w, x] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

WordVector& WordVector::operator+=(const WordVector& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordVector& WordVector::operator-=(const WordVector& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordVector& WordVector::operator*=(const RatFunc& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string WordVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string t;
    if (c.is_one()) {
      t = word_str(w);
    } else if ((-c).is_one()) {
      t = "-" + word_str(w);
    } else {
      std::string s = c.to_string();
      if (needs_paren(s)) s = "(" + s + ")";
      t = w.empty() ? s : s + "·" + word_str(w);
    }
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view s, Window w) : s_(s), window_(w) {}

  WordVector run() {
    WordVector out(window_);
    std::size_t start = 0;
    int depth = 0;
    char prev = 0;
    for (std::size_t k = 0; k <= s_.size(); ++k) {
      const char ch = k < s_.size() ? s_[k] : '\0';
      const bool split = k == s_.size() ||
                         (depth == 0 && (ch == '+' || ch == '-') && prev != 0 && prev != '^' && prev != '*' &&
                          prev != '/' && prev != '(' && prev != '\xB7');
      if (split) {
        term(start, k, out);
        start = k;
      }
      if (ch == '(' || ch == '[') ++depth;
      if (ch == ')' || ch == ']') --depth;
      if (depth < 0) fail("unbalanced bracket", k);
      if (ch != '\0' && !std::isspace(static_cast<unsigned char>(ch))) prev = ch;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError("word expression parse error at offset " + std::to_string(at) + ": " + msg, at);
  }

  void term(std::size_t b, std::size_t e, WordVector& out) {
    while (b < e && std::isspace(static_cast<unsigned char>(s_[b]))) ++b;
    if (b == e) fail("empty term", b);
    RatFunc coeff(1);
    if (s_[b] == '+' || s_[b] == '-') {
      if (s_[b] == '-') coeff = RatFunc(-1);
      ++b;
    }
    Word w;
    std::size_t p = b;
    int depth = 0;
    for (std::size_t k = b; k <= e; ++k) {
      const bool dot = k + 1 < e && static_cast<unsigned char>(s_[k]) == 0xC2 &&
                       static_cast<unsigned char>(s_[k + 1]) == 0xB7;
      if (k < e && (s_[k] == '(' || s_[k] == '[')) ++depth;
      if (k < e && (s_[k] == ')' || s_[k] == ']')) --depth;
      if (k == e || (depth == 0 && (dot || s_[k] == '*'))) {
        factor(p, k, coeff, w);
        p = dot ? k + 2 : k + 1;
        if (dot) ++k;
      }
    }
    out.add(w, coeff);
  }

  void factor(std::size_t b, std::size_t e, RatFunc& coeff, Word& w) {
    while (b < e && std::isspace(static_cast<unsigned char>(s_[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s_[e - 1]))) --e;
    if (b == e) fail("empty factor", b);
    if (s_[b] != 'f') {
      try {
        coeff *= RatFunc::parse(s_.substr(b, e - b));
      } catch (const ParseError& err) {
        fail(err.what(), b + err.offset());
      }
      return;
    }
    std::size_t k = b;
    while (k < e) {
      if (s_[k] != 'f' || k + 1 >= e || s_[k + 1] != '[') fail("expected f[index]", k);
      const std::size_t close = s_.find(']', k);
      if (close == std::string_view::npos || close >= e) fail("missing ']'", k);
      const std::string num(s_.substr(k + 2, close - k - 2));
      std::size_t used = 0;
      int idx = 0;
      try {
        idx = std::stoi(num, &used);
      } catch (const std::exception&) {
        fail("bad letter index", k + 2);
      }
      if (used != num.size()) fail("bad letter index", k + 2);
      if (!window_.contains(idx)) fail("letter f[" + num + "] outside window " + window_.to_string(), k);
      w.push_back(idx);
      k = close + 1;
      while (k < e && std::isspace(static_cast<unsigned char>(s_[k]))) ++k;
    }
  }

  std::string_view s_;
  Window window_;
};

}  // namespace

WordVector WordVector::parse(std::string_view text, Window window) { return WordParser(text, window).run(); }

// ---------------------------------------------------------------------------
// Products and derivations

WordVector mul(const WordVector& x, const WordVector& y) {
  if (!(x.window() == y.window())) throw std::invalid_argument("mul: window mismatch");
  WordVector out(x.window());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      out.add(w, ca * cb);
    }
  return out;
}

WordVector left_mul(int i, const WordVector& x) {
  WordVector out(x.window());
  for (const auto& [w, c] : x.terms()) {
    Word v;
    v.reserve(w.size() + 1);
    v.push_back(i);
    v.insert(v.end(), w.begin(), w.end());
    out.add(v, c);
  }
  return out;
}

WordVector divided_left_mul(int i, int n, const WordVector& x) {
  if (n < 0) throw std::invalid_argument("divided_left_mul: negative power");
  WordVector out(x.window());
  const RatFunc scale = RatFunc(LaurentPoly(1), qfact(n));
  for (const auto& [w, c] : x.terms()) {
    Word v(static_cast<std::size_t>(n), i);
    v.insert(v.end(), w.begin(), w.end());
    out.add(v, c * scale);
  }
  return out;
}

WordVector ad_t(int i, const WordVector& x) {
  WordVector out(x.window());
  for (const auto& [w, c] : x.terms()) out.add(w, c * RatFunc::q_pow(-pairing_with(i, content(w))));
  return out;
}

WordVector eprime(int i, const WordVector& x) {
  WordVector out(x.window());
  for (const auto& [w, c] : x.terms()) {
    int left = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == i) {
        Word v = w;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(p));
        out.add(v, c * RatFunc::q_pow(-left));
      }
      left += root_pairing(i, w[p]);
    }
  }
  return out;
}

WordVector estar(int i, const WordVector& x) {
  WordVector out(x.window());
  for (const auto& [w, c] : x.terms()) {
    int right = 0;
    for (std::size_t p = w.size(); p-- > 0;) {
      if (w[p] == i) {
        Word v = w;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(p));
        out.add(v, c * RatFunc::q_pow(-right));
      }
      right += root_pairing(i, w[p]);
    }
  }
  return out;
}

WordVector bar_vec(const WordVector& x) {
  WordVector out(x.window());
  for (const auto& [w, c] : x.terms()) out.add(w, c.bar());
  return out;
}

// ---------------------------------------------------------------------------
// The form

namespace {

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

// (f_i a, b) = (a, e'_i b)
LaurentPoly word_form_rec(const Word& u, const Word& v) {
  if (u.empty()) return LaurentPoly(1);
  FormCache& cache = form_cache();
  const std::string key = pair_key(u, v);
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }
  const int i = u.front();
  const Word rest(u.begin() + 1, u.end());
  LaurentPoly acc;
  int left = 0;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p] == i) {
      Word w = v;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
      acc += word_form_rec(rest, w).shifted(-left);
    }
    left += root_pairing(i, v[p]);
  }
  std::unique_lock lock(cache.mu);
  cache.values.emplace(key, acc);
  return acc;
}

}  // namespace

LaurentPoly word_form(const Word& u, const Word& v) {
  if (u.size() != v.size() || content(u) != content(v)) return {};
  return word_form_rec(u, v);
}

RatFunc form(const WordVector& x, const WordVector& y) {
  RatFunc acc;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      const LaurentPoly f = word_form(u, v);
      if (!f.is_zero()) acc += cu * cv * RatFunc(f);
    }
  return acc;
}

bool is_zero_in_uq(const WordVector& x) {
  if (x.is_zero()) return true;
  const Content c = x.content();
  for (const auto& w : words_of_content(c)) {
    RatFunc acc;
    for (const auto& [u, cu] : x.terms()) {
      const LaurentPoly f = word_form_rec(u, w);
      if (!f.is_zero()) acc += cu * RatFunc(f);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<Word> words_of_content(const Content& c) {
  Word w;
  for (const auto& [i, n] : c)
    for (int k = 0; k < n; ++k) w.push_back(i);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------------------
// PBW elements

WordVector pbw_segment(const Window& window, int i, int j) {
  const Segment s(i, j);
  if (!window.contains(s)) throw std::out_of_range("segment " + s.to_string() + " outside window " + window.to_string());
  if (i == j) return WordVector::letter(window, i);
  const WordVector inner = pbw_segment(window, i, j - 2);
  const WordVector fj = WordVector::letter(window, j);
  return mul(inner, fj) - RatFunc::q() * mul(fj, inner);
}

namespace {

// Product of the segment powers without the divided-power scaling, and the
// scaling denominator.
std::pair<WordVector, LaurentPoly> pbw_unscaled(const Window& window, const Multisegment& m) {
  std::vector<std::pair<Segment, int>> segs(m.entries().begin(), m.entries().end());
  std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) { return cmp_pbw(a.first, b.first) > 0; });
  WordVector acc = WordVector::one(window);
  LaurentPoly scale(1);
  for (const auto& [s, n] : segs) {
    if (!window.contains(s)) throw std::out_of_range("segment " + s.to_string() + " outside window " + window.to_string());
    const WordVector seg = pbw_segment(window, s.i, s.j);
    for (int k = 0; k < n; ++k) acc = mul(acc, seg);
    scale *= qfact(n);
  }
  return {acc, scale};
}

struct BlockCache {
  std::shared_mutex mu;
  std::map<Content, std::unique_ptr<PbwBlock>> blocks;
};

BlockCache& block_cache() {
  static BlockCache cache;
  return cache;
}

std::unique_ptr<PbwBlock> build_block(const Content& c) {
  auto b = std::make_unique<PbwBlock>();
  b->content = c;
  b->basis = multisegments_of_content(c);
  b->words = words_of_content(c);
  for (std::size_t k = 0; k < b->words.size(); ++k) b->word_index[b->words[k]] = k;
  const Window window = span_window(c);
  const std::size_t nb = b->basis.size();
  const std::size_t nw = b->words.size();

  std::vector<LaurentPoly> scale(nb);
  std::vector<std::vector<std::pair<std::size_t, LaurentPoly>>> cols(nb);
  for (std::size_t m = 0; m < nb; ++m) {
    auto [vec, s] = pbw_unscaled(window, b->basis[m]);
    scale[m] = s;
    for (const auto& [w, x] : vec.terms()) cols[m].emplace_back(b->word_index.at(w), x.as_laurent());
  }
  // R = P'^T G
  std::vector<std::vector<LaurentPoly>> r(nb, std::vector<LaurentPoly>(nw));
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t w = 0; w < nw; ++w) {
      LaurentPoly acc;
      for (const auto& [u, x] : cols[m]) {
        const LaurentPoly f = word_form_rec(b->words[u], b->words[w]);
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
  if (!sol) throw std::runtime_error("pbw_block: singular Gram matrix");
  b->coord_map = std::move(*sol);
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t w = 0; w < nw; ++w)
      if (!b->coord_map(m, w).is_zero()) b->coord_map(m, w) *= RatFunc(scale[m]);
  b->gram = QMatrix(nb, nb);
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t n = 0; n < nb; ++n) b->gram(m, n) = g0(m, n) / RatFunc(scale[m] * scale[n]);
  return b;
}

}  // namespace

WordVector pbw_element(const Window& window, const Multisegment& m) {
  auto [vec, scale] = pbw_unscaled(window, m);
  if (!scale.is_constant() || scale.trailing() != 1) vec *= RatFunc(LaurentPoly(1), scale);
  return vec;
}

const PbwBlock& pbw_block(const Content& c) {
  BlockCache& cache = block_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.blocks.find(c);
    if (it != cache.blocks.end()) return *it->second;
  }
  auto built = build_block(c);
  std::unique_lock lock(cache.mu);
  auto [it, fresh] = cache.blocks.emplace(c, std::move(built));
  return *it->second;
}

std::vector<RatFunc> pbw_coord_vector(const WordVector& x) {
  const PbwBlock& b = pbw_block(x.content());
  std::vector<RatFunc> out(b.basis.size());
  for (const auto& [w, c] : x.terms()) {
    const std::size_t k = b.word_index.at(w);
    for (std::size_t m = 0; m < out.size(); ++m)
      if (!b.coord_map(m, k).is_zero()) out[m] += b.coord_map(m, k) * c;
  }
  return out;
}

std::map<Multisegment, RatFunc> pbw_coords(const WordVector& x) {
  std::map<Multisegment, RatFunc> out;
  if (x.is_zero()) return out;
  const PbwBlock& b = pbw_block(x.content());
  const auto v = pbw_coord_vector(x);
  for (std::size_t m = 0; m < v.size(); ++m)
    if (!v[m].is_zero()) out.emplace(b.basis[m], v[m]);
  return out;
}

// ---------------------------------------------------------------------------
// Modified root operators

std::vector<WordVector> qboson_pieces(int i, const WordVector& x, int top,
                                      const std::function<WordVector(const WordVector&)>& raise) {
  std::vector<WordVector> pieces(static_cast<std::size_t>(top) + 1, WordVector(x.window()));
  WordVector rest = x;
  for (int n = top; n >= 0; --n) {
    WordVector u = rest;
    for (int k = 0; k < n; ++k) u = raise(u);
    u *= RatFunc::q_pow(n * (n - 1) / 2);
    rest -= divided_left_mul(i, n, u);
    pieces[static_cast<std::size_t>(n)] = std::move(u);
  }
  return pieces;
}

namespace {

int letter_count(int i, const WordVector& x) {
  int top = 0;
  for (const auto& [w, c] : x.terms())
    top = std::max(top, static_cast<int>(std::count(w.begin(), w.end(), i)));
  return top;
}

}  // namespace

WordVector mod_etilde(int i, const WordVector& x) {
  const auto u = qboson_pieces(i, x, letter_count(i, x), [i](const WordVector& v) { return eprime(i, v); });
  WordVector out(x.window());
  for (std::size_t n = 1; n < u.size(); ++n) out += divided_left_mul(i, static_cast<int>(n) - 1, u[n]);
  return out;
}

WordVector mod_ftilde(int i, const WordVector& x) {
  const auto u = qboson_pieces(i, x, letter_count(i, x), [i](const WordVector& v) { return eprime(i, v); });
  WordVector out(x.window());
  for (std::size_t n = 0; n < u.size(); ++n) out += divided_left_mul(i, static_cast<int>(n) + 1, u[n]);
  return out;
}

}  // namespace symcrystal
