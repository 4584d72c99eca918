#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "unikh/diagram.hpp"

namespace unikh {

// A state assigns one smoothing to each crossing; bit j is crossing j's
// smoothing.  Crossings are numbered in diagram order.
using State = uint32_t;

// Circles of a single resolution.  Circle indices are deterministic: free
// loops come first (in diagram order), then the circles formed from arcs,
// ordered by their smallest arc label.
struct CircleSet {
  int count = 0;
  int loops = 0;                       // leading circles that are free loops
  std::vector<uint8_t> circle_of_arc;  // indexed like LinkDiagram::arcs()
};

CircleSet resolve(const LinkDiagram& d, State s);

// The full cube of resolutions: every state's circles, plus merge/split data
// for every edge.  Memory is O(2^n * arcs); the constructor refuses diagrams
// above `limit` crossings.
class ResolutionCube {
 public:
  static constexpr int kHardLimit = 20;

  explicit ResolutionCube(const LinkDiagram& d, int limit = 16);

  const LinkDiagram& diagram() const { return *diagram_; }
  int n() const { return n_; }
  int arc_count() const { return arc_count_; }
  int loops() const { return loops_; }
  uint64_t num_states() const { return uint64_t{1} << n_; }

  int circles(State s) const { return count_[s]; }
  int circle_at(State s, int arc_idx) const {
    return circ_[static_cast<size_t>(s) * arc_count_ + arc_idx];
  }

  struct Edge {
    State from, to;
    int crossing;
    bool merge;
    // merge: circles a, b of `from` join into z of `to`.
    // split: circle z of `from` splits into a and b of `to`; the split's
    // arrow points from a (through the 1-smoothing join {end0,end1}) to b
    // (through {end2,end3}).
    uint8_t a, b, z;
  };
  // The edge raising crossing j, for a state with bit j clear.
  Edge edge(State s, int j) const;

  // All n * 2^(n-1) edges, ordered by (from, crossing).
  std::vector<Edge> all_edges() const;

  // Structured text listing of states and edges (test fixtures, debugging).
  std::string dump() const;

 private:
  const LinkDiagram* diagram_;
  int n_ = 0, arc_count_ = 0, loops_ = 0;
  std::vector<uint8_t> circ_;   // [state * arc_count + arc] -> circle index
  std::vector<uint8_t> count_;  // circles per state
  int end_idx_[ResolutionCube::kHardLimit][4];  // arc indices of each crossing's slots
};

ResolutionCube build_cube(const LinkDiagram& d, int limit = 16);

}  // namespace unikh
