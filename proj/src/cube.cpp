#include "unikh/cube.hpp"

#include <algorithm>
#include <sstream>

#include "unikh/errors.hpp"

namespace unikh {

namespace {

// Union-find over arc indices for one state; fills `out` with circle indices
// (loops first, then by smallest arc label) and returns the circle count.
int resolve_into(const LinkDiagram& d, State s, const int end_idx[][4], int loops,
                 std::vector<int>& rep, uint8_t* out) {
  const int m = static_cast<int>(d.arcs().size());
  rep.resize(m);
  for (int i = 0; i < m; ++i) rep[i] = i;
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  auto join = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) rep[std::max(x, y)] = std::min(x, y);  // keep smallest arc as root
  };
  const int n = d.n();
  for (int j = 0; j < n; ++j) {
    const int* e = end_idx[j];
    if (s >> j & 1) {
      join(e[0], e[1]);
      join(e[2], e[3]);
    } else {
      join(e[0], e[3]);
      join(e[1], e[2]);
    }
  }
  int count = loops;
  for (int i = 0; i < m; ++i) {
    if (find(i) == i)
      out[i] = static_cast<uint8_t>(count++);
    else
      out[i] = out[rep[i]];  // root has smaller index, already numbered
  }
  return count;
}

}  // namespace

CircleSet resolve(const LinkDiagram& d, State s) {
  if (d.n() > ResolutionCube::kHardLimit)
    fail(Err::SizeLimitExceeded, "diagram too large to resolve");
  if (d.n() < 32 && (s >> d.n()) != 0)
    fail(Err::StateLengthMismatch, "state has more bits than crossings");
  int end_idx[ResolutionCube::kHardLimit][4];
  for (int j = 0; j < d.n(); ++j)
    for (int k = 0; k < 4; ++k) end_idx[j][k] = d.arc_index(d.crossings()[j].end[k]);
  CircleSet c;
  c.loops = d.free_loops();
  c.circle_of_arc.resize(d.arcs().size());
  std::vector<int> rep;
  c.count = resolve_into(d, s, end_idx, c.loops, rep, c.circle_of_arc.data());
  return c;
}

ResolutionCube::ResolutionCube(const LinkDiagram& d, int limit)
    : diagram_(&d),
      n_(d.n()),
      arc_count_(static_cast<int>(d.arcs().size())),
      loops_(d.free_loops()) {
  if (n_ > limit || n_ > kHardLimit)
    fail(Err::SizeLimitExceeded, std::to_string(n_) + " crossings exceeds the limit of " +
                                     std::to_string(std::min(limit, kHardLimit)));
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < 4; ++k) end_idx_[j][k] = d.arc_index(d.crossings()[j].end[k]);

  const uint64_t states = num_states();
  circ_.resize(states * arc_count_);
  count_.resize(states);
  std::vector<int> rep;
  for (uint64_t s = 0; s < states; ++s)
    count_[s] = static_cast<uint8_t>(resolve_into(d, static_cast<State>(s), end_idx_, loops_, rep,
                                                  circ_.data() + s * arc_count_));
}

ResolutionCube::Edge ResolutionCube::edge(State s, int j) const {
  Edge e;
  e.from = s;
  e.to = s | (State{1} << j);
  e.crossing = j;
  const int* idx = end_idx_[j];
  e.merge = count_[e.to] < count_[s];
  if (e.merge) {
    // 0-smoothing joins {end0,end3} and {end1,end2}; their circles fuse.
    e.a = static_cast<uint8_t>(circle_at(s, idx[0]));
    e.b = static_cast<uint8_t>(circle_at(s, idx[1]));
    e.z = static_cast<uint8_t>(circle_at(e.to, idx[0]));
  } else {
    e.z = static_cast<uint8_t>(circle_at(s, idx[0]));
    // 1-smoothing: arrow from the {end0,end1} circle to the {end2,end3} one.
    e.a = static_cast<uint8_t>(circle_at(e.to, idx[0]));
    e.b = static_cast<uint8_t>(circle_at(e.to, idx[2]));
  }
  return e;
}

std::vector<ResolutionCube::Edge> ResolutionCube::all_edges() const {
  std::vector<Edge> out;
  out.reserve(num_states() / 2 * n_);
  for (uint64_t s = 0; s < num_states(); ++s)
    for (int j = 0; j < n_; ++j)
      if (!(s >> j & 1)) out.push_back(edge(static_cast<State>(s), j));
  return out;
}

std::string ResolutionCube::dump() const {
  std::ostringstream out;
  out << "cube n=" << n_ << " arcs=" << arc_count_ << " loops=" << loops_ << "\n";
  for (uint64_t s = 0; s < num_states(); ++s) {
    out << "state ";
    for (int j = 0; j < n_; ++j) out << (s >> j & 1);
    out << " circles=" << int(count_[s]) << " [";
    for (int a = 0; a < arc_count_; ++a)
      out << (a ? " " : "") << int(circ_[s * arc_count_ + a]);
    out << "]\n";
  }
  for (const auto& e : all_edges()) {
    out << "edge " << e.from << " +" << e.crossing << (e.merge ? " merge " : " split ");
    if (e.merge)
      out << int(e.a) << "," << int(e.b) << "->" << int(e.z);
    else
      out << int(e.z) << "->" << int(e.a) << "," << int(e.b);
    out << "\n";
  }
  return out.str();
}

ResolutionCube build_cube(const LinkDiagram& d, int limit) { return ResolutionCube(d, limit); }

}  // namespace unikh
