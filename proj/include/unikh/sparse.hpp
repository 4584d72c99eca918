#pragma once
#include <cstdint>
#include <vector>

namespace unikh {

// Sparse integer matrix, column major: col[j] lists (row, value) with rows
// strictly increasing.  Dimensions are carried alongside where needed.
using IntCol = std::vector<std::pair<int32_t, int64_t>>;
using IntCols = std::vector<IntCol>;

// Dense bit matrix over F2, column major.
struct GF2Mat {
  int rows = 0;
  std::vector<std::vector<uint64_t>> col;

  explicit GF2Mat(int r = 0, int c = 0) { resize(r, c); }
  void resize(int r, int c) {
    rows = r;
    col.assign(c, std::vector<uint64_t>((r + 63) / 64, 0));
  }
  int cols() const { return static_cast<int>(col.size()); }
  bool get(int r, int c) const { return col[c][r >> 6] >> (r & 63) & 1; }
  void flip(int r, int c) { col[c][r >> 6] ^= uint64_t{1} << (r & 63); }
  void set(int r, int c, bool v) {
    if (get(r, c) != v) flip(r, c);
  }
};

}  // namespace unikh
