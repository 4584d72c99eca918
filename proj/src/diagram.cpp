#include "unikh/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "unikh/errors.hpp"

namespace unikh {

LinkDiagram::LinkDiagram(std::vector<std::array<int, 4>> crossings, int free_loops) {
  cross_.reserve(crossings.size());
  for (const auto& c : crossings) cross_.push_back(Crossing{c, 1, 0});
  free_loops_ = free_loops;
  orient_and_count();
}

int LinkDiagram::arc_index(int label) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), label);
  if (it == arcs_.end() || *it != label)
    fail(Err::InvalidArc, "no arc labelled " + std::to_string(label));
  return static_cast<int>(it - arcs_.begin());
}

void LinkDiagram::set_basepoint(int arc_label) {
  arc_index(arc_label);  // validates
  basepoint_ = arc_label;
}

std::optional<int> LinkDiagram::default_basepoint() const {
  if (arcs_.empty()) return std::nullopt;
  return arcs_.front();
}

std::string LinkDiagram::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& c : cross_) {
    if (!first) out << ' ';
    out << "X(" << c.end[0] << ',' << c.end[1] << ',' << c.end[2] << ',' << c.end[3] << ')';
    first = false;
  }
  for (int i = 0; i < free_loops_; ++i) {
    if (!first) out << ' ';
    out << 'U';
    first = false;
  }
  return out.str();
}

namespace {

// Is the occurrence (crossing, slot) the head of its arc (the end the arc
// runs into)?  Slot 0 is the incoming under-strand, slot 2 the outgoing one;
// slots 1/3 depend on the crossing's over_in choice.
bool occurrence_is_head(const Crossing& c, int slot) {
  switch (slot) {
    case 0: return true;
    case 2: return false;
    case 1: return c.over_in == 1;
    default: return c.over_in == 3;
  }
}

}  // namespace

void LinkDiagram::orient_and_count() {
  const int n = static_cast<int>(cross_.size());

  // Occurrence check: every label exactly twice.
  std::map<int, std::vector<std::pair<int, int>>> occ;  // label -> (crossing, slot)
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) occ[cross_[i].end[s]].push_back({i, s});
  for (const auto& [label, places] : occ)
    if (places.size() != 2)
      fail(Err::InvalidIncidence, "arc " + std::to_string(label) + " occurs " +
                                      std::to_string(places.size()) + " times");

  // Solve for over_in: boolean x_i = [over_in == 1] per crossing.  Each arc
  // needs exactly one head among its two occurrences.
  std::vector<int> value(n, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, same_value?)
  std::vector<std::pair<int, int>> forced;               // (crossing, value)

  for (const auto& [label, places] : occ) {
    auto [c1, s1] = places[0];
    auto [c2, s2] = places[1];
    // head-ness of occurrence as a function of x: kind 0 -> constant 0,
    // kind 1 -> constant 1, kind 2 -> x, kind 3 -> !x.
    auto kind = [](int s) { return s == 0 ? 1 : s == 2 ? 0 : s == 1 ? 2 : 3; };
    int k1 = kind(s1), k2 = kind(s2);
    if (k1 > k2) {
      std::swap(k1, k2);
      std::swap(c1, c2);
    }
    if (k1 <= 1 && k2 <= 1) {  // both constant: need one head, one tail
      if (k1 + k2 != 1)
        fail(Err::OrientationInconsistent, "arc " + std::to_string(label));
    } else if (k1 <= 1) {  // constant + variable: forces x
      // need k2-expr == !k1: x == !k1 (kind 2) or !x == !k1 (kind 3)
      int want = (k2 == 2) ? !k1 : k1;
      forced.push_back({c2, want});
    } else if (c1 == c2) {
      // both over-slots of one crossing: x != !x holds for any x (slots 1 and
      // 3 always have opposite head-ness); nothing to record
      if (k1 == k2)
        fail(Err::OrientationInconsistent, "arc " + std::to_string(label));
    } else {
      // two variables: heads must differ
      // kinds (2,2): x1 != x2; (2,3): x1 == x2; (3,3): x1 != x2
      int same = (k1 != k2);
      adj[c1].push_back({c2, same});
      adj[c2].push_back({c1, same});
    }
  }

  std::vector<int> queue;
  auto assign = [&](int c, int v) {
    if (value[c] == -1) {
      value[c] = v;
      queue.push_back(c);
    } else if (value[c] != v) {
      fail(Err::OrientationInconsistent, "crossing " + std::to_string(c + 1));
    }
  };
  for (auto [c, v] : forced) assign(c, v);
  for (int start = 0; start <= n; ++start) {
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      for (auto [o, same] : adj[c]) assign(o, same ? value[c] : !value[c]);
    }
    // components with no forced crossing (all-over strands): orient the
    // lowest-index crossing over_in = 1, deterministically
    if (start < n && value[start] == -1) assign(start, 1);
  }

  n_plus_ = n_minus_ = 0;
  for (int i = 0; i < n; ++i) {
    cross_[i].over_in = value[i] ? 1 : 3;
    cross_[i].sign = value[i] ? +1 : -1;
    (cross_[i].sign > 0 ? n_plus_ : n_minus_)++;
  }

  // Components: follow each arc through the crossing at its head.
  arcs_.clear();
  arcs_.reserve(occ.size());
  for (const auto& [label, places] : occ) arcs_.push_back(label);  // sorted (map)
  std::map<int, int> next;                                         // arc -> next arc
  for (const auto& [label, places] : occ)
    for (auto [c, s] : places)
      if (occurrence_is_head(cross_[c], s)) next[label] = cross_[c].end[(s + 2) % 4];
  components_ = free_loops_;
  std::map<int, bool> seen;
  for (int a : arcs_) {
    if (seen[a]) continue;
    ++components_;
    for (int b = a; !seen[b]; b = next.at(b)) seen[b] = true;
  }

  if (basepoint_ && !std::binary_search(arcs_.begin(), arcs_.end(), *basepoint_))
    basepoint_.reset();
}

LinkDiagram parse_pd(const std::string& text) {
  std::vector<std::array<int, 4>> crossings;
  int loops = 0;
  size_t i = 0;
  const size_t len = text.size();
  auto skip_filler = [&] {
    while (i < len) {
      char ch = text[i];
      if (ch == '#') {
        while (i < len && text[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';') {
        ++i;
      } else {
        break;
      }
    }
  };
  auto parse_int = [&]() -> int {
    skip_filler();
    size_t start = i;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(Err::MalformedSyntax, "expected arc label at offset " + std::to_string(i));
    long v = std::stol(text.substr(start, i - start));
    if (v <= 0 || v > 1 << 30) fail(Err::MalformedSyntax, "arc label out of range");
    return static_cast<int>(v);
  };
  while (true) {
    skip_filler();
    if (i >= len) break;
    char ch = text[i];
    if (ch == 'U' || ch == 'u') {
      ++i;
      ++loops;
      continue;
    }
    if (ch != 'X' && ch != 'x')
      fail(Err::MalformedSyntax, std::string("unexpected character '") + ch + "' at offset " +
                                     std::to_string(i));
    ++i;
    skip_filler();
    if (i >= len || (text[i] != '(' && text[i] != '['))
      fail(Err::MalformedSyntax, "expected '(' after X");
    char open = text[i++];
    std::array<int, 4> e{};
    for (int k = 0; k < 4; ++k) e[k] = parse_int();
    skip_filler();
    char close = open == '(' ? ')' : ']';
    if (i >= len || text[i] != close) fail(Err::MalformedSyntax, "unterminated crossing");
    ++i;
    crossings.push_back(e);
  }
  return LinkDiagram(std::move(crossings), loops);
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> crossings;
  crossings.reserve(d.cross_.size());
  for (const auto& c : d.cross_) {
    // switch the crossing: the old over-strand becomes the incoming under;
    // the planar (counterclockwise) order is unchanged, so rotate the tuple
    int r = c.over_in;
    crossings.push_back({c.end[r % 4], c.end[(r + 1) % 4], c.end[(r + 2) % 4], c.end[(r + 3) % 4]});
  }
  LinkDiagram m(std::move(crossings), d.free_loops_);
  if (d.basepoint_) m.set_basepoint(*d.basepoint_);
  return m;
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  int shift = a.arcs_.empty() ? 0 : a.arcs_.back();
  std::vector<std::array<int, 4>> crossings;
  crossings.reserve(a.cross_.size() + b.cross_.size());
  for (const auto& c : a.cross_) crossings.push_back(c.end);
  for (const auto& c : b.cross_)
    crossings.push_back({c.end[0] + shift, c.end[1] + shift, c.end[2] + shift, c.end[3] + shift});
  LinkDiagram u(std::move(crossings), a.free_loops_ + b.free_loops_);
  if (a.basepoint_)
    u.set_basepoint(*a.basepoint_);
  else if (b.basepoint_)
    u.set_basepoint(*b.basepoint_ + shift);
  return u;
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b, int arc_a, int arc_b) {
  // Summing with a crossingless unknot changes nothing.
  if (b.n() == 0 && b.free_loops_ == 1) return a;
  if (a.n() == 0 && a.free_loops_ == 1) return b;
  a.arc_index(arc_a);
  b.arc_index(arc_b);

  int shift = a.arcs_.empty() ? 0 : a.arcs_.back();
  int arc_b2 = arc_b + shift;
  std::vector<std::array<int, 4>> crossings;
  crossings.reserve(a.cross_.size() + b.cross_.size());
  for (const auto& c : a.cross_) crossings.push_back(c.end);
  for (const auto& c : b.cross_)
    crossings.push_back({c.end[0] + shift, c.end[1] + shift, c.end[2] + shift, c.end[3] + shift});

  // Cut both arcs and cross-join them head-to-tail: the head slot of arc_a
  // now receives the strand coming from arc_b's tail and vice versa.
  auto relabel_head = [&](const LinkDiagram& d, int base, int label, int new_label) {
    for (int i = 0; i < d.n(); ++i)
      for (int s = 0; s < 4; ++s)
        if (d.cross_[i].end[s] == label && occurrence_is_head(d.cross_[i], s)) {
          crossings[base + i][s] = new_label;
          return;
        }
    fail(Err::InvalidArc, "arc has no head occurrence");  // unreachable
  };
  relabel_head(a, 0, arc_a, arc_b2);
  relabel_head(b, a.n(), arc_b, arc_a);

  LinkDiagram s(std::move(crossings), a.free_loops_ + b.free_loops_);
  if (a.basepoint_) s.set_basepoint(*a.basepoint_);
  return s;
}

}  // namespace unikh
