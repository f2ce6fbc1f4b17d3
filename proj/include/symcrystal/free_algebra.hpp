// U_q^-(gl) on a finite odd window, modelled by word vectors in the free
// algebra on the letters f_i.  Equality in U_q^- is decided by the bilinear
// form, whose radical is the Serre ideal.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symcrystal/linalg.hpp"
#include "symcrystal/multiseg.hpp"
#include "symcrystal/qcoeff.hpp"

namespace symcrystal {

/// f_{w[0]} f_{w[1]} ... f_{w[n-1]}
using Word = std::vector<int>;

Content content(const Word& w);

class WordVector {
 public:
  WordVector() = default;
  explicit WordVector(Window window) : window_(window) {}

  static WordVector one(Window window);
  static WordVector letter(Window window, int i);
  static WordVector word(Window window, Word w, const RatFunc& coeff = RatFunc(1));

  const Window& window() const { return window_; }
  const std::map<Word, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(const Word& w) const;

  /// Adds c * w; throws std::out_of_range for a letter outside the window.
  void add(const Word& w, const RatFunc& c);

  /// Content of the words when all share one content; throws otherwise.
  Content content() const;
  bool homogeneous() const;
  int degree() const;

  WordVector& operator+=(const WordVector& o);
  WordVector& operator-=(const WordVector& o);
  WordVector& operator*=(const RatFunc& s);
  friend WordVector operator+(WordVector a, const WordVector& b) { return a += b; }
  friend WordVector operator-(WordVector a, const WordVector& b) { return a -= b; }
  friend WordVector operator*(const RatFunc& s, WordVector a) { return a *= s; }
  /// Structural equality in the free algebra (not modulo Serre).
  friend bool operator==(const WordVector&, const WordVector&) = default;

  /// e.g. "f[1]·f[3] - q·f[3]·f[1]"; the empty word prints as "1".
  std::string to_string() const;
  static WordVector parse(std::string_view text, Window window);

 private:
  Window window_;
  std::map<Word, RatFunc> terms_;
};

/// Concatenation product; throws std::invalid_argument on window mismatch.
WordVector mul(const WordVector& x, const WordVector& y);
/// f_i * x
WordVector left_mul(int i, const WordVector& x);
/// f_i^{(n)} * x
WordVector divided_left_mul(int i, int n, const WordVector& x);

/// Scales a word of content beta by q^{-(alpha_i, beta)}.
WordVector ad_t(int i, const WordVector& x);
WordVector eprime(int i, const WordVector& x);
WordVector estar(int i, const WordVector& x);
WordVector bar_vec(const WordVector& x);

/// The form on two words (zero unless the contents agree).
LaurentPoly word_form(const Word& u, const Word& v);
RatFunc form(const WordVector& x, const WordVector& y);
/// x lies in the radical of the form.  x must be homogeneous.
bool is_zero_in_uq(const WordVector& x);

/// All distinct words of a content, lexicographically increasing.
std::vector<Word> words_of_content(const Content& c);

WordVector pbw_segment(const Window& window, int i, int j);
WordVector pbw_element(const Window& window, const Multisegment& m);

/// The basis {P(m)} of one weight space and the linear map taking word
/// coordinates to P-coordinates.
struct PbwBlock {
  Content content;
  std::vector<Multisegment> basis;  // decreasing crystal order
  std::vector<Word> words;
  std::map<Word, std::size_t> word_index;
  QMatrix gram;       // (P(m), P(n))
  QMatrix coord_map;  // basis x words
};

/// Cached per content; safe to call concurrently.
const PbwBlock& pbw_block(const Content& c);

/// P-coordinates of homogeneous x, as a column aligned with pbw_block().basis.
std::vector<RatFunc> pbw_coord_vector(const WordVector& x);
/// Nonzero P-coordinates of homogeneous x.
std::map<Multisegment, RatFunc> pbw_coords(const WordVector& x);

/// Pieces u_n (n = 0..N) of x = sum_n F^{(n)} u_n with E u_n = 0, for a
/// raising operator E and lowering letter index i satisfying the q-boson
/// relation E F = q^{-2} F E + 1.  `top` bounds the largest n.
std::vector<WordVector> qboson_pieces(int i, const WordVector& x, int top,
                                      const std::function<WordVector(const WordVector&)>& raise);

WordVector mod_etilde(int i, const WordVector& x);
WordVector mod_ftilde(int i, const WordVector& x);

}  // namespace symcrystal
