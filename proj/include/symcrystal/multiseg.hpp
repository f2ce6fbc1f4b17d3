// Segments, multisegments, the PBW and crystal orderings, and the type-A
// crystal structure on multisegments.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace symcrystal {

/// Pairing (alpha_i, alpha_j) on odd indices: 2, -1 for neighbours, else 0.
constexpr int root_pairing(int i, int j) {
  if (i == j) return 2;
  const int d = i > j ? i - j : j - i;
  return d == 2 ? -1 : 0;
}

constexpr bool is_odd(int i) { return (i % 2) != 0; }

/// Interval <i, j> of odd integers, i <= j.
struct Segment {
  int i = 1;
  int j = 1;

  Segment() = default;
  Segment(int first, int last);

  int length() const { return (j - i) / 2 + 1; }
  friend auto operator<=>(const Segment&, const Segment&) = default;
  std::string to_string() const;
};

/// Index -> number of occurrences (the weight of a multisegment or a word).
using Content = std::map<int, int>;

/// Total order <=_PBW:  j1 > j2, or j1 == j2 and i1 >= i2.
std::strong_ordering cmp_pbw(const Segment& a, const Segment& b);
/// Total order <=_cry:  j1 > j2, or j1 == j2 and i1 <= i2.
std::strong_ordering cmp_cry(const Segment& a, const Segment& b);

class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::initializer_list<std::pair<Segment, int>> entries);

  bool empty() const { return m_.empty(); }
  int mult(const Segment& s) const;
  int mult(int i, int j) const;
  void add(const Segment& s, int count = 1);
  /// Removes `count` copies; throws std::invalid_argument if absent.
  void remove(const Segment& s, int count = 1);

  const std::map<Segment, int>& entries() const { return m_; }
  Content content() const;
  int degree() const;
  int max_end() const;  // largest j, or -infinity sentinel when empty

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend bool operator<(const Multisegment& a, const Multisegment& b) { return a.m_ < b.m_; }

  /// e.g. "<-1,1> + 2<1>" ; the empty multisegment prints as "0".
  std::string to_string() const;

 private:
  std::map<Segment, int> m_;
};

/// Lexicographic crystal comparison of multiplicities, scanning segments in
/// decreasing crystal order.  Defined for any pair.
std::strong_ordering cmp_cry_lex(const Multisegment& a, const Multisegment& b);
/// Crystal ordering within a fixed content; throws std::invalid_argument
/// when contents differ.
std::strong_ordering cmp_cry_multiseg(const Multisegment& a, const Multisegment& b);

/// Contiguous odd index interval [lo, hi].
struct Window {
  int lo = -1;
  int hi = 1;

  Window() = default;
  Window(int first, int last);
  /// From an explicit list; the list must be a contiguous run of odd integers.
  static Window from_list(const std::vector<int>& indices);

  bool contains(int i) const { return is_odd(i) && i >= lo && i <= hi; }
  bool contains(const Segment& s) const { return contains(s.i) && contains(s.j); }
  bool symmetric() const { return lo == -hi; }
  std::vector<int> indices() const;
  friend bool operator==(const Window&, const Window&) = default;
  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Type-A crystal (closed formulas).

int epsilon(int i, const Multisegment& m);
std::optional<Multisegment> etilde(int i, const Multisegment& m);
Multisegment ftilde(int i, const Multisegment& m);

struct CrystalTriple {
  int epsilon = 0;
  std::optional<Multisegment> e;
  Multisegment f;
  friend bool operator==(const CrystalTriple&, const CrystalTriple&) = default;
};

/// Same triple computed by the +/- signature rule.
CrystalTriple signature_ops(int i, const Multisegment& m);
CrystalTriple formula_ops(int i, const Multisegment& m);

/// All multisegments with segments inside `window` and degree <= max_degree,
/// grouped by content (contents in increasing order), and within a content in
/// decreasing crystal order.
std::vector<Multisegment> enumerate_multisegments(const Window& window, int max_degree);

/// Same set keyed by content.
std::map<Content, std::vector<Multisegment>> multisegment_blocks(const Window& window, int max_degree);

/// All multisegments of the given content, in decreasing crystal order.
std::vector<Multisegment> multisegments_of_content(const Content& content);

}  // namespace symcrystal
