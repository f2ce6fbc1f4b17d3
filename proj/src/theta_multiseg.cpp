#include "symcrystal/theta_multiseg.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace symcrystal {

bool is_theta_restricted(const Segment& s) { return -s.j <= s.i && s.i <= s.j; }

bool is_theta_restricted(const Multisegment& m) {
  for (const auto& [s, n] : m.entries())
    if (!is_theta_restricted(s)) return false;
  return true;
}

void validate_theta(const Multisegment& m) {
  for (const auto& [s, n] : m.entries())
    if (!is_theta_restricted(s))
      throw std::invalid_argument("segment " + s.to_string() + " is not theta-restricted (need -j <= i <= j)");
}

SymContent symmetrize(const Content& c) {
  SymContent s;
  for (const auto& [i, n] : c) s[i < 0 ? -i : i] += n;
  return s;
}

namespace {

void check_k(int k) {
  if (k <= 0 || !is_odd(k)) throw std::invalid_argument("theta operators: k must be a positive odd integer");
}

// Positions of the selection ordering  ... > k+2 > k > -k+2 > ... > k-2,
// listed from largest to smallest.
std::vector<int> positions(int k, const Multisegment& m) {
  std::vector<int> pos;
  const int top = std::max(k, m.max_end()) + 2;
  for (int l = top; l > k; l -= 2) pos.push_back(l);
  pos.push_back(k);
  for (int j = -k + 2; j <= k - 2; j += 2) pos.push_back(j);
  return pos;
}

int a_theta(int k, int l, const Multisegment& m) {
  if (l > k) {
    int s = 0;
    for (const auto& [seg, n] : m.entries()) {
      if (seg.i == -k && seg.j >= l) s += n;
      if (seg.i == -k + 2 && seg.j >= l + 2) s -= n;
    }
    return s;
  }
  int base = 0;
  for (const auto& [seg, n] : m.entries()) {
    if (seg.j <= k) continue;
    if (seg.i == -k) base += n;
    if (seg.i == -k + 2) base -= n;
  }
  base += 2 * m.mult(-k, k);
  if (l == k) return base + (m.mult(-k + 2, k) % 2 == 1 ? 1 : 0);
  const int j = l;
  int s = base - 2 * m.mult(-k + 2, k - 2);
  for (int i = -k + 4; i <= j + 2; i += 2) s += m.mult(i, k);
  for (int i = -k + 4; i <= j; i += 2) s -= m.mult(i, k - 2);
  return s;
}

struct Selection {
  int eps = 0;
  int n_f = 0;
  int n_e = 0;
};

Selection select(int k, const Multisegment& m) {
  const auto pos = positions(k, m);
  int best = INT_MIN;
  for (int p : pos) best = std::max(best, a_theta(k, p, m));
  Selection s;
  s.eps = std::max(0, best);
  bool found = false;
  for (int p : pos) {
    if (a_theta(k, p, m) != best) continue;
    if (!found) s.n_e = p;
    s.n_f = p;
    found = true;
  }
  return s;
}

}  // namespace

int theta_epsilon(int k, const Multisegment& m) {
  check_k(k);
  return select(k, m).eps;
}

Multisegment theta_Ftilde(int k, const Multisegment& m) {
  check_k(k);
  const Selection s = select(k, m);
  const int n = s.n_f;
  Multisegment out = m;
  if (n > k) {
    out.remove(Segment{-k + 2, n});
    out.add(Segment{-k, n});
  } else if (n == k && m.mult(-k + 2, k) % 2 == 1) {
    out.remove(Segment{-k + 2, k});
    out.add(Segment{-k, k});
  } else if (n == k) {
    if (k != 1) out.remove(Segment{-k + 2, k - 2});
    out.add(Segment{-k + 2, k});
  } else {
    if (n != k - 2) out.remove(Segment{n + 2, k - 2});
    out.add(Segment{n + 2, k});
  }
  return out;
}

std::optional<Multisegment> theta_Etilde(int k, const Multisegment& m) {
  check_k(k);
  const Selection s = select(k, m);
  if (s.eps == 0) return std::nullopt;
  const int n = s.n_e;
  Multisegment out = m;
  if (n > k) {
    out.remove(Segment{-k, n});
    out.add(Segment{-k + 2, n});
  } else if (n == k && m.mult(-k + 2, k) % 2 == 0) {
    out.remove(Segment{-k, k});
    out.add(Segment{-k + 2, k});
  } else if (n == k) {
    out.remove(Segment{-k + 2, k});
    if (k != 1) out.add(Segment{-k + 2, k - 2});
  } else {
    out.remove(Segment{n + 2, k});
    if (n != k - 2) out.add(Segment{n + 2, k - 2});
  }
  return out;
}

CrystalTriple theta_formula_ops(int k, const Multisegment& m) {
  return {theta_epsilon(k, m), theta_Etilde(k, m), theta_Ftilde(k, m)};
}

CrystalTriple theta_signature_ops(int k, const Multisegment& m) {
  check_k(k);
  enum class Kind { MinusK, MinusK2Long, OddMiddle, EndK, EndK2 };
  struct Sign {
    bool minus;
    Kind kind;
    Segment seg;
  };
  std::vector<Sign> seq;
  auto push = [&seq](bool minus, Kind kind, const Segment& s, int copies) {
    for (int c = 0; c < copies; ++c) seq.push_back({minus, kind, s});
  };
  const int top = std::max(k, m.max_end());
  for (int j = top; j > k; j -= 2) {
    push(true, Kind::MinusK, Segment{-k, j}, m.mult(-k, j));
    push(false, Kind::MinusK2Long, Segment{-k + 2, j}, m.mult(-k + 2, j));
  }
  for (int c = 0; c < m.mult(-k, k); ++c) {
    push(true, Kind::MinusK, Segment{-k, k}, 1);
    push(true, Kind::MinusK, Segment{-k, k}, 1);
  }
  if (m.mult(-k + 2, k) % 2 == 1) {
    push(true, Kind::OddMiddle, Segment{-k + 2, k}, 1);
    push(false, Kind::OddMiddle, Segment{-k + 2, k}, 1);
  }
  if (k > 1) {
    for (int c = 0; c < m.mult(-k + 2, k - 2); ++c) {
      push(false, Kind::EndK2, Segment{-k + 2, k - 2}, 1);
      push(false, Kind::EndK2, Segment{-k + 2, k - 2}, 1);
    }
    for (int i = -k + 4; i <= k - 2; i += 2) {
      push(true, Kind::EndK, Segment{i, k}, m.mult(i, k));
      push(false, Kind::EndK2, Segment{i, k - 2}, m.mult(i, k - 2));
    }
    push(true, Kind::EndK, Segment{k, k}, m.mult(k, k));
  }

  std::vector<Sign> reduced;
  for (const auto& sg : seq) {
    if (sg.minus && !reduced.empty() && !reduced.back().minus) {
      reduced.pop_back();
    } else {
      reduced.push_back(sg);
    }
  }
  CrystalTriple t;
  const Sign* rightmost_minus = nullptr;
  const Sign* leftmost_plus = nullptr;
  for (const auto& sg : reduced) {
    if (sg.minus) {
      ++t.epsilon;
      rightmost_minus = &sg;
    } else if (leftmost_plus == nullptr) {
      leftmost_plus = &sg;
    }
  }

  t.f = m;
  if (leftmost_plus == nullptr) {
    t.f.add(Segment{k, k});
  } else {
    const Segment& s = leftmost_plus->seg;
    switch (leftmost_plus->kind) {
      case Kind::MinusK2Long:
        t.f.remove(s);
        t.f.add(Segment{-k, s.j});
        break;
      case Kind::EndK2:
        t.f.remove(s);
        t.f.add(Segment{s.i, k});
        break;
      case Kind::OddMiddle:
        t.f.remove(s);
        t.f.add(Segment{-k, k});
        break;
      default:
        throw std::logic_error("theta_signature_ops: '+' attached to a '-' segment");
    }
  }

  if (rightmost_minus != nullptr) {
    Multisegment e = m;
    const Segment& s = rightmost_minus->seg;
    switch (rightmost_minus->kind) {
      case Kind::MinusK:
        e.remove(s);
        e.add(Segment{-k + 2, s.j});
        break;
      case Kind::EndK:
        e.remove(s);
        if (s.i <= k - 2) e.add(Segment{s.i, k - 2});
        break;
      case Kind::OddMiddle:
        e.remove(s);
        if (k != 1) e.add(Segment{-k + 2, k - 2});
        break;
      default:
        throw std::logic_error("theta_signature_ops: '-' attached to a '+' segment");
    }
    t.e = std::move(e);
  }
  return t;
}

CrystalTriple theta_ops_positive(int k, const Multisegment& m) {
  check_k(k);
  return formula_ops(k, m);
}

CrystalTriple theta_ops(int index, const Multisegment& m) {
  if (index > 0) return theta_ops_positive(index, m);
  return theta_formula_ops(-index, m);
}

int theta_eps(int index, const Multisegment& m) {
  return index > 0 ? epsilon(index, m) : theta_epsilon(-index, m);
}

Multisegment theta_F(int index, const Multisegment& m) {
  return index > 0 ? ftilde(index, m) : theta_Ftilde(-index, m);
}

std::optional<Multisegment> theta_E(int index, const Multisegment& m) {
  return index > 0 ? etilde(index, m) : theta_Etilde(-index, m);
}

std::map<SymContent, std::vector<Multisegment>> theta_blocks(const Window& window, int max_degree) {
  if (!window.symmetric()) throw std::invalid_argument("theta_blocks: window must be symmetric under i -> -i");
  std::map<SymContent, std::vector<Multisegment>> blocks;
  for (const auto& [c, v] : multisegment_blocks(window, max_degree)) {
    const SymContent s = symmetrize(c);
    for (const auto& m : v)
      if (is_theta_restricted(m)) blocks[s].push_back(m);
  }
  for (auto& [c, v] : blocks)
    std::sort(v.begin(), v.end(), [](const Multisegment& a, const Multisegment& b) { return cmp_cry_lex(a, b) > 0; });
  return blocks;
}

std::vector<Multisegment> enumerate_theta(const Window& window, int max_degree) {
  std::vector<Multisegment> out;
  for (auto& [c, v] : theta_blocks(window, max_degree))
    for (auto& m : v) out.push_back(m);
  return out;
}

std::vector<Content> contents_of(const SymContent& s) {
  std::vector<Content> out{Content{}};
  for (const auto& [k, n] : s) {
    if (k <= 0 || !is_odd(k) || n < 0) throw std::invalid_argument("contents_of: bad symmetrized content");
    std::vector<Content> next;
    for (const auto& c : out)
      for (int a = 0; a <= n; ++a) {
        Content d = c;
        if (a > 0) d[-k] = a;
        if (n - a > 0) d[k] = n - a;
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multisegment> theta_multisegments_of(const SymContent& s) {
  std::vector<Multisegment> out;
  for (const auto& c : contents_of(s))
    for (auto& m : multisegments_of_content(c))
      if (is_theta_restricted(m)) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [](const Multisegment& a, const Multisegment& b) { return cmp_cry_lex(a, b) > 0; });
  return out;
}

std::optional<std::pair<int, int>> ab_encoding(const Multisegment& m) {
  int a = 0;
  int b = 0;
  for (const auto& [s, n] : m.entries()) {
    if (s.i == -1 && s.j == 1) {
      a = n;
    } else if (s.i == 1 && s.j == 1) {
      b = n;
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(a, b);
}

}  // namespace symcrystal
