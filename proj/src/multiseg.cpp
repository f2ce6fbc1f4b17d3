#include "symcrystal/multiseg.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace symcrystal {

Segment::Segment(int first, int last) : i(first), j(last) {
  if (!is_odd(first) || !is_odd(last) || first > last)
    throw std::invalid_argument("Segment <" + std::to_string(first) + "," + std::to_string(last) +
                                ">: endpoints must be odd with i <= j");
}

std::string Segment::to_string() const {
  if (i == j) return "<" + std::to_string(i) + ">";
  return "<" + std::to_string(i) + "," + std::to_string(j) + ">";
}

std::strong_ordering cmp_pbw(const Segment& a, const Segment& b) {
  if (a.j != b.j) return a.j <=> b.j;
  return a.i <=> b.i;
}

std::strong_ordering cmp_cry(const Segment& a, const Segment& b) {
  if (a.j != b.j) return a.j <=> b.j;
  return b.i <=> a.i;
}

Multisegment::Multisegment(std::initializer_list<std::pair<Segment, int>> entries) {
  for (const auto& [s, c] : entries) add(s, c);
}

int Multisegment::mult(const Segment& s) const {
  auto it = m_.find(s);
  return it == m_.end() ? 0 : it->second;
}

int Multisegment::mult(int i, int j) const {
  if (i > j) return 0;
  auto it = m_.find(Segment{i, j});
  return it == m_.end() ? 0 : it->second;
}

void Multisegment::add(const Segment& s, int count) {
  if (count < 0) throw std::invalid_argument("Multisegment::add: negative count");
  if (count == 0) return;
  m_[s] += count;
}

void Multisegment::remove(const Segment& s, int count) {
  auto it = m_.find(s);
  if (it == m_.end() || it->second < count)
    throw std::invalid_argument("Multisegment::remove: " + s.to_string() + " not present");
  it->second -= count;
  if (it->second == 0) m_.erase(it);
}

Content Multisegment::content() const {
  Content c;
  for (const auto& [s, n] : m_)
    for (int k = s.i; k <= s.j; k += 2) c[k] += n;
  return c;
}

int Multisegment::degree() const {
  int d = 0;
  for (const auto& [s, n] : m_) d += s.length() * n;
  return d;
}

int Multisegment::max_end() const {
  int r = INT_MIN;
  for (const auto& [s, n] : m_) r = std::max(r, s.j);
  return r;
}

std::string Multisegment::to_string() const {
  if (m_.empty()) return "0";
  std::vector<Segment> segs;
  for (const auto& [s, n] : m_) segs.push_back(s);
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return cmp_cry(a, b) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto& s : segs) {
    if (!first) os << " + ";
    first = false;
    const int n = mult(s);
    if (n != 1) os << n;
    os << s.to_string();
  }
  return os.str();
}

std::strong_ordering cmp_cry_lex(const Multisegment& a, const Multisegment& b) {
  std::vector<Segment> segs;
  for (const auto& [s, n] : a.entries()) segs.push_back(s);
  for (const auto& [s, n] : b.entries()) segs.push_back(s);
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return cmp_cry(x, y) > 0; });
  segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
  for (const auto& s : segs) {
    const int x = a.mult(s);
    const int y = b.mult(s);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_cry_multiseg(const Multisegment& a, const Multisegment& b) {
  if (a.content() != b.content())
    throw std::invalid_argument("cmp_cry_multiseg: multisegments " + a.to_string() + " and " +
                                b.to_string() + " have different contents");
  return cmp_cry_lex(a, b);
}

Window::Window(int first, int last) : lo(first), hi(last) {
  if (!is_odd(first) || !is_odd(last) || first > last)
    throw std::invalid_argument("Window: bounds must be odd with lo <= hi");
}

Window Window::from_list(const std::vector<int>& indices) {
  if (indices.empty()) throw std::invalid_argument("Window: empty index list");
  std::vector<int> v = indices;
  std::sort(v.begin(), v.end());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!is_odd(v[k])) throw std::invalid_argument("Window: index " + std::to_string(v[k]) + " is not odd");
    if (k > 0 && v[k] != v[k - 1] + 2)
      throw std::invalid_argument("Window: indices must form a contiguous run of odd integers");
  }
  return Window(v.front(), v.back());
}

std::vector<int> Window::indices() const {
  std::vector<int> v;
  for (int k = lo; k <= hi; k += 2) v.push_back(k);
  return v;
}

std::string Window::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k : indices()) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Closed formulas.

namespace {

// A_k^{(i)}(m) for k >= i.
int a_value(int i, int k, const Multisegment& m) {
  int sum = 0;
  for (const auto& [s, n] : m.entries()) {
    if (s.i == i && s.j >= k) sum += n;
    if (s.i == i + 2 && s.j >= k + 2) sum -= n;
  }
  return sum;
}

struct ArgMax {
  int value = 0;
  int smallest = 0;
  int largest = 0;
};

ArgMax scan(int i, const Multisegment& m) {
  const int top = std::max(i, m.max_end()) + 2;
  ArgMax r{INT_MIN, 0, 0};
  for (int k = i; k <= top; k += 2) {
    const int a = a_value(i, k, m);
    if (a > r.value) {
      r = {a, k, k};
    } else if (a == r.value) {
      r.largest = k;
    }
  }
  return r;
}

}  // namespace

int epsilon(int i, const Multisegment& m) { return std::max(0, scan(i, m).value); }

std::optional<Multisegment> etilde(int i, const Multisegment& m) {
  const ArgMax r = scan(i, m);
  if (r.value <= 0) return std::nullopt;
  const int ke = r.largest;
  Multisegment out = m;
  out.remove(Segment{i, ke});
  if (ke != i) out.add(Segment{i + 2, ke});
  return out;
}

Multisegment ftilde(int i, const Multisegment& m) {
  const ArgMax r = scan(i, m);
  const int kf = r.smallest;
  Multisegment out = m;
  if (kf != i) out.remove(Segment{i + 2, kf});
  out.add(Segment{i, kf});
  return out;
}

CrystalTriple formula_ops(int i, const Multisegment& m) { return {epsilon(i, m), etilde(i, m), ftilde(i, m)}; }

// ---------------------------------------------------------------------------
// Signature rule.

CrystalTriple signature_ops(int i, const Multisegment& m) {
  struct Sign {
    bool minus;
    Segment seg;
  };
  std::vector<Segment> segs;
  for (const auto& [s, n] : m.entries())
    if (s.i == i || s.i == i + 2) segs.push_back(s);
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return cmp_cry(a, b) > 0; });
  std::vector<Sign> reduced;
  for (const auto& s : segs) {
    const bool minus = s.i == i;
    for (int c = 0; c < m.mult(s); ++c) {
      if (minus && !reduced.empty() && !reduced.back().minus) {
        reduced.pop_back();
      } else {
        reduced.push_back({minus, s});
      }
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
  if (leftmost_plus != nullptr) {
    t.f.remove(leftmost_plus->seg);
    t.f.add(Segment{i, leftmost_plus->seg.j});
  } else {
    t.f.add(Segment{i, i});
  }
  if (rightmost_minus != nullptr) {
    Multisegment e = m;
    e.remove(rightmost_minus->seg);
    if (rightmost_minus->seg.j != i) e.add(Segment{i + 2, rightmost_minus->seg.j});
    t.e = std::move(e);
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_rec(const std::vector<Segment>& segs, std::size_t idx, int budget, Multisegment& cur,
                   std::vector<Multisegment>& out) {
  if (idx == segs.size()) {
    out.push_back(cur);
    return;
  }
  const Segment& s = segs[idx];
  const int len = s.length();
  enumerate_rec(segs, idx + 1, budget, cur, out);
  for (int c = 1; c * len <= budget; ++c) {
    cur.add(s);
    enumerate_rec(segs, idx + 1, budget - c * len, cur, out);
  }
  for (int c = 1; c * len <= budget; ++c) cur.remove(s);
}

}  // namespace

std::map<Content, std::vector<Multisegment>> multisegment_blocks(const Window& window, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("enumerate_multisegments: negative degree");
  std::vector<Segment> segs;
  for (int i = window.lo; i <= window.hi; i += 2)
    for (int j = i; j <= window.hi; j += 2) segs.emplace_back(i, j);
  std::vector<Multisegment> all;
  Multisegment cur;
  enumerate_rec(segs, 0, max_degree, cur, all);
  std::map<Content, std::vector<Multisegment>> blocks;
  for (auto& m : all) blocks[m.content()].push_back(std::move(m));
  for (auto& [c, v] : blocks)
    std::sort(v.begin(), v.end(), [](const Multisegment& a, const Multisegment& b) { return cmp_cry_lex(a, b) > 0; });
  return blocks;
}

std::vector<Multisegment> enumerate_multisegments(const Window& window, int max_degree) {
  std::vector<Multisegment> out;
  for (auto& [c, v] : multisegment_blocks(window, max_degree))
    for (auto& m : v) out.push_back(m);
  return out;
}

namespace {

// Every occurrence of the smallest remaining index starts a segment.
void content_rec(Content c, Multisegment& cur, std::vector<Multisegment>& out) {
  while (!c.empty() && c.begin()->second == 0) c.erase(c.begin());
  if (c.empty()) {
    out.push_back(cur);
    return;
  }
  const int i0 = c.begin()->first;
  int reach = i0;
  while (c.count(reach + 2) && c.at(reach + 2) > 0) reach += 2;
  // distribute the c[i0] starts over the ends i0, i0+2, ..., reach
  std::function<void(int, int, Content&)> pick = [&](int j, int left, Content& rest) {
    if (left == 0) {
      content_rec(rest, cur, out);
      return;
    }
    if (j > reach) return;
    int avail = left;
    for (int x = i0; x <= j; x += 2) avail = std::min(avail, rest[x]);
    for (int n = avail; n >= 0; --n) {
      for (int x = i0; x <= j; x += 2) rest[x] -= n;
      if (n > 0) cur.add(Segment{i0, j}, n);
      pick(j + 2, left - n, rest);
      if (n > 0) cur.remove(Segment{i0, j}, n);
      for (int x = i0; x <= j; x += 2) rest[x] += n;
    }
  };
  pick(i0, c.begin()->second, c);
}

}  // namespace

std::vector<Multisegment> multisegments_of_content(const Content& content) {
  Content c;
  for (const auto& [i, n] : content) {
    if (n < 0 || !is_odd(i)) throw std::invalid_argument("multisegments_of_content: bad content");
    if (n > 0) c[i] = n;
  }
  std::vector<Multisegment> out;
  Multisegment cur;
  content_rec(c, cur, out);
  std::sort(out.begin(), out.end(), [](const Multisegment& a, const Multisegment& b) { return cmp_cry_lex(a, b) > 0; });
  return out;
}

}  // namespace symcrystal
