#include "unikh/braid.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

#include "unikh/errors.hpp"

namespace unikh {

LinkDiagram braid_closure(const std::vector<int>& word, int strands) {
  if (strands < 1) fail(Err::MalformedSyntax, "braid needs at least one strand");
  for (int g : word)
    if (g == 0 || std::abs(g) >= strands)
      fail(Err::MalformedSyntax, "braid letter out of range");

  // Temporary arc ids; all strands run downward.
  std::vector<int> cur(strands);
  std::iota(cur.begin(), cur.end(), 0);
  int fresh = strands;
  std::vector<std::array<int, 4>> raw;
  raw.reserve(word.size());
  for (int g : word) {
    int p = std::abs(g) - 1;
    int tl = cur[p], tr = cur[p + 1], bl = fresh++, br = fresh++;
    if (g > 0)
      raw.push_back({tr, tl, bl, br});  // left strand over: under runs tr -> bl
    else
      raw.push_back({tl, bl, br, tr});  // right strand over: under runs tl -> br
    cur[p] = bl;
    cur[p + 1] = br;
  }

  // Close up: identify the bottom arc of each strand with its top arc.
  std::vector<int> rep(fresh);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (int j = 0; j < strands; ++j) rep[find(cur[j])] = find(j);

  // Strands not involved in any crossing close into free loops.
  std::vector<bool> used(fresh, false);
  for (const auto& t : raw)
    for (int e : t) used[find(e)] = true;
  int loops = 0;
  for (int j = 0; j < strands; ++j)
    if (find(j) == j && !used[j]) ++loops;

  // Compact labels in order of first appearance.
  std::map<int, int> name;
  for (auto& t : raw)
    for (int& e : t) {
      int r = find(e);
      auto [it, fresh_label] = name.try_emplace(r, static_cast<int>(name.size()) + 1);
      e = it->second;
      (void)fresh_label;
    }
  return LinkDiagram(std::move(raw), loops);
}

LinkDiagram torus_knot(int p, int q) {
  if (p < 1 || q < 1) fail(Err::MalformedSyntax, "torus parameters must be positive");
  std::vector<int> word;
  word.reserve(static_cast<size_t>(q) * (p - 1));
  for (int rep = 0; rep < q; ++rep)
    for (int k = 1; k < p; ++k) word.push_back(k);
  return braid_closure(word, p);
}

}  // namespace unikh
