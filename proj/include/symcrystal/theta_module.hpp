// V_theta(0) = U_q^- / sum_k U_q^-(f_k - f_{-k}) for theta(i) = -i.  Vectors are
// word-vector representatives of classes; phi is the class of the empty word.
#pragma once

#include <optional>
#include <utility>

#include "symcrystal/free_algebra.hpp"
#include "symcrystal/theta_multiseg.hpp"

namespace symcrystal {

/// Symmetrized content of a homogeneous representative; throws otherwise.
SymContent sym_content(const WordVector& v);

WordVector F_op(int i, const WordVector& v);
/// e'_i(rep) + Ad(t_i)(e*_{-i}(rep)).
WordVector E_op(int i, const WordVector& v);
/// Same operator, obtained by moving E_i rightwards through each word with
/// E_i F_j = q^{-(a_i,a_j)} F_j E_i + delta_{ij} + delta_{-i,j} T_i.
WordVector E_op_commuting(int i, const WordVector& v);
/// Scales a word of content beta by q^{-(a_i + a_{-i}, beta)}.
WordVector T_op(int i, const WordVector& v);
WordVector bar_theta(const WordVector& v);

/// Representative of P_theta(m) phi.
WordVector ptheta_vector(const Window& window, const Multisegment& m);

/// Form on the classes of two words.
LaurentPoly theta_word_form(const Word& u, const Word& v);
RatFunc theta_form(const WordVector& u, const WordVector& v);

/// The basis {P_theta(m) phi} of one block of V_theta(0).
struct ThetaBlock {
  SymContent key;
  std::vector<Multisegment> basis;  // decreasing crystal order
  std::vector<Word> words;          // every word of this symmetrized content
  std::map<Word, std::size_t> word_index;
  QMatrix gram;       // (P_theta(m) phi, P_theta(n) phi)
  QMatrix coord_map;  // basis x words
};

const ThetaBlock& theta_block(const SymContent& key);

std::vector<RatFunc> theta_coord_vector(const WordVector& v);
std::map<Multisegment, RatFunc> theta_coords(const WordVector& v);

/// The ideal route: reduce PBW coordinates over every genuine content of the
/// block modulo the span of P(m')(f_k - f_{-k}).
struct IdealReduction {
  std::size_t ambient_dim = 0;  // sum of U_q^- weight-space dimensions
  std::size_t ideal_rank = 0;
  std::size_t quotient_dim() const { return ambient_dim - ideal_rank; }
  bool ptheta_spans = false;  // P_theta images together with the ideal span everything
};
IdealReduction ideal_reduction(const SymContent& key);
/// Coordinates via the ideal route; nullopt when the solve is inconsistent.
std::optional<std::vector<RatFunc>> theta_coords_by_ideal(const WordVector& v);

/// (E~_i v, F~_i v) from the decomposition v = sum F_i^{(n)} v_n, E_i v_n = 0.
std::pair<WordVector, WordVector> theta_mod_ops(int i, const WordVector& v);

}  // namespace symcrystal
