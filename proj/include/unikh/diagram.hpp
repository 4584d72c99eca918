#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unikh {

// Planar diagram conventions used throughout the engine (see README for the
// full grammar):
//
//   X(a,b,c,d)  four arc labels listed counterclockwise around the crossing,
//               starting at the incoming under-strand; the under-strand runs
//               a -> c.  The over-strand runs b -> d or d -> b; which one is
//               decided by propagating orientations around each component.
//
//   sign        +1 when the over-strand runs b -> d, -1 when it runs d -> b.
//               With this rule the closure of a positive braid word is a
//               positive diagram.
//
//   smoothing   the 0-smoothing joins {a,d} and {b,c}; the 1-smoothing joins
//               {a,b} and {c,d}.
//
//   U           a crossing-free unknot component ("free loop").
struct Crossing {
  std::array<int, 4> end;  // arc labels, counterclockwise from incoming under
  int over_in = 1;         // 1 or 3: slot where the over-strand enters
  int sign = 0;            // +1 / -1, see above
};

class LinkDiagram {
 public:
  LinkDiagram() = default;
  // Builds a diagram from raw crossings plus a number of free loops, running
  // the incidence check and orientation propagation.
  LinkDiagram(std::vector<std::array<int, 4>> crossings, int free_loops);

  int n() const { return static_cast<int>(cross_.size()); }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return n_minus_; }
  int writhe() const { return n_plus_ - n_minus_; }
  int components() const { return components_; }
  int free_loops() const { return free_loops_; }

  const std::vector<Crossing>& crossings() const { return cross_; }
  // Sorted list of arc labels (free loops carry no labels).
  const std::vector<int>& arcs() const { return arcs_; }
  int arc_index(int label) const;  // position in arcs(), InvalidArc if absent

  // Basepoint for the reduced theory.  Arc labels only; a diagram whose only
  // component is a free loop implicitly uses that loop when reduced homology
  // is requested.
  void set_basepoint(int arc_label);
  std::optional<int> basepoint() const { return basepoint_; }
  // Lowest arc label, or nullopt for a crossingless diagram.
  std::optional<int> default_basepoint() const;

  // Canonical single-line text form; parse_pd(to_text()) reproduces the
  // diagram (used for hashing and cache keys).
  std::string to_text() const;

 private:
  std::vector<Crossing> cross_;
  std::vector<int> arcs_;
  int free_loops_ = 0;
  int n_plus_ = 0, n_minus_ = 0;
  int components_ = 0;
  std::optional<int> basepoint_;

  void orient_and_count();
  friend LinkDiagram mirror(const LinkDiagram&);
  friend LinkDiagram disjoint_union(const LinkDiagram&, const LinkDiagram&);
  friend LinkDiagram connected_sum(const LinkDiagram&, const LinkDiagram&, int, int);
};

// Parses the PD text format: whitespace/comma separated X(a,b,c,d), X[a,b,c,d]
// or U tokens, '#' comments to end of line.  An empty text is the empty link.
LinkDiagram parse_pd(const std::string& text);

// Mirror image: every crossing switched, planar projection kept.
LinkDiagram mirror(const LinkDiagram& d);

// Disjoint union; the labels of `b` are shifted above those of `a`.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

// Connected sum splicing arc `arc_a` of `a` to arc `arc_b` of `b`,
// respecting orientations.  Summing with a crossingless unknot returns the
// other diagram unchanged.
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b,
                          int arc_a, int arc_b);

}  // namespace unikh
