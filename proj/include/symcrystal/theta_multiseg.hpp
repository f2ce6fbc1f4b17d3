// theta-restricted multisegments (every segment <i,j> has -j <= i <= j) and
// the symmetric-crystal operators F~_k, E~_k, eps_k for theta(i) = -i.
//
// For a negative index -k the operators follow the closed A_l^{(-k)} formulas;
// theta_signature_ops implements the independent +/- signature rule.  For a
// positive index the operators are the type-A ones.
#pragma once

#include <optional>

#include "symcrystal/multiseg.hpp"

namespace symcrystal {

/// Multiset of |i| over the letters of a multisegment or word.
using SymContent = std::map<int, int>;

bool is_theta_restricted(const Segment& s);
bool is_theta_restricted(const Multisegment& m);
/// Throws std::invalid_argument naming the first offending segment.
void validate_theta(const Multisegment& m);

SymContent symmetrize(const Content& c);
inline SymContent sym_content(const Multisegment& m) { return symmetrize(m.content()); }

/// eps_{-k}(m) for k > 0 from the closed formulas.
int theta_epsilon(int k, const Multisegment& m);
/// F~_{-k}(m), k > 0.
Multisegment theta_Ftilde(int k, const Multisegment& m);
/// E~_{-k}(m), k > 0; nullopt stands for 0.
std::optional<Multisegment> theta_Etilde(int k, const Multisegment& m);

/// (eps, E~, F~) at index -k from the signature rule.
CrystalTriple theta_signature_ops(int k, const Multisegment& m);
/// (eps, E~, F~) at index -k from the closed formulas.
CrystalTriple theta_formula_ops(int k, const Multisegment& m);
/// Index +k (k > 0): the type-A operators.
CrystalTriple theta_ops_positive(int k, const Multisegment& m);

/// Dispatch on the sign of `index` (formula route for negative indices).
CrystalTriple theta_ops(int index, const Multisegment& m);
int theta_eps(int index, const Multisegment& m);
Multisegment theta_F(int index, const Multisegment& m);
std::optional<Multisegment> theta_E(int index, const Multisegment& m);

/// theta-restricted multisegments inside a symmetric window with degree <=
/// max_degree, keyed by symmetrized content; each block in decreasing
/// crystal order.
std::map<SymContent, std::vector<Multisegment>> theta_blocks(const Window& window, int max_degree);
std::vector<Multisegment> enumerate_theta(const Window& window, int max_degree);

/// Genuine contents c with symmetrize(c) == s.
std::vector<Content> contents_of(const SymContent& s);
/// theta-restricted multisegments of symmetrized content s, in decreasing
/// crystal order (cmp_cry_lex across genuine contents).
std::vector<Multisegment> theta_multisegments_of(const SymContent& s);

/// {a,b} for a<-1,1> + b<1>; nullopt if m has any other segment.
std::optional<std::pair<int, int>> ab_encoding(const Multisegment& m);

}  // namespace symcrystal
