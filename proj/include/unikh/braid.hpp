#pragma once
#include <vector>

#include "unikh/diagram.hpp"

namespace unikh {

// Closure of a braid word on `strands` strands.  Letter +k is the positive
// Artin generator sigma_k (strand k passes over strand k+1, 1-based), -k its
// inverse.  Strands are oriented downward, so positive letters produce
// positive crossings.
LinkDiagram braid_closure(const std::vector<int>& word, int strands);

// The (p,q) torus link as the closure of (sigma_1 ... sigma_{p-1})^q; a knot
// when gcd(p,q) = 1.  torus_knot(2,3) is the right-handed trefoil,
// torus_knot(3,4) the knot 8_19 and torus_knot(3,5) the knot 10_124.
LinkDiagram torus_knot(int p, int q);

}  // namespace unikh
