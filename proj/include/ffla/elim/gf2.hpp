#ifndef FFLA_ELIM_GF2_HPP
#define FFLA_ELIM_GF2_HPP

#include <vector>

#include "ffla/tiny/gf2.hpp"

namespace ffla {

struct Gf2Echelon {
  /// Row-echelon form, unit leading entries, zero rows last.
  PackedGF2Matrix E;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Column-by-column elimination with word-level row additions. The pivot
/// of each column is the first nonzero among the remaining rows, as in PLE,
/// so pivot_cols is the column rank profile.
inline Gf2Echelon gf2_row_echelon(PackedGF2Matrix a, bool reduced = false) {
  Gf2Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && !a.get(piv, c)) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    for (std::size_t i = reduced ? 0 : r + 1; i < a.rows(); ++i)
      if (i != r && a.get(i, c)) a.add_row(i, r);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.E = std::move(a);
  return out;
}

inline std::size_t gf2_rank(const PackedGF2Matrix& a) { return gf2_row_echelon(a).rank; }

}  // namespace ffla

#endif  // FFLA_ELIM_GF2_HPP
