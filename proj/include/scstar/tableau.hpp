#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scstar/boolop.hpp"
#include "scstar/transformation.hpp"

namespace scstar {

// Tableaux are subsets of the grid [[m]] x [[n]], packed row-major into a
// 64-bit mask: cell (i,j) sits at bit i*n + j. All tableau operations take
// the mask together with the ambient (m,n).
using TableauBits = uint64_t;

inline int cell_bit(int i, int j, int n) { return i * n + j; }
inline bool has_cell(TableauBits t, int i, int j, int n) {
    return (t >> cell_bit(i, j, n)) & 1u;
}
inline TableauBits cell_mask(int i, int j, int n) {
    return TableauBits{1} << cell_bit(i, j, n);
}
TableauBits grid_mask(int m, int n);
int cell_count(TableauBits t);
std::vector<std::pair<int, int>> cells_of(TableauBits t, int m, int n);

// Thin value type for the external surface (JSON, text art).
struct Tableau {
    int m = 0;
    int n = 0;
    TableauBits bits = 0;
    bool operator==(const Tableau&) const = default;
};

// F = (F1 x [[n]]) op ([[m]] x F2): cell (i,j) is final iff
// op([i in F1], [j in F2]). F1, F2 are bitmasks over rows and columns.
struct FinalZone {
    int m = 0;
    int n = 0;
    uint64_t f1 = 0;
    uint64_t f2 = 0;
    BoolOp op;
    TableauBits cells = 0;
};

FinalZone final_zone(int m, int n, uint64_t f1, uint64_t f2, const BoolOp& op);

// Valid: the tableau avoids the final zone or holds the origin cell.
bool is_valid(TableauBits t, const FinalZone& F);

// Finality of the tableau itself; the empty state of the star construction is
// final as a state but reports false here.
bool tableau_final(TableauBits t, const FinalZone& F);

// Plain image under the pair action: {(f(i), g(j)) : (i,j) in T}.
TableauBits dhat_step(TableauBits t, int m, int n, const Transformation& f,
                      const Transformation& g);

// Star-construction transition: image (the empty tableau maps through
// (f(0),g(0))), re-adding the origin whenever the image meets the final zone.
TableauBits delta_step(TableauBits t, int m, int n, const Transformation& f,
                       const Transformation& g, const FinalZone& F);

// Connected components of the crosses under shared row / shared column
// adjacency. Undefined (argument_error) on the empty tableau.
int delta_classes(TableauBits t, int m, int n);

enum class TableauOrdering { Less, Greater, Equal, Incomparable };

// Strict partial order on tableaux: fewer crosses, then fewer non-final
// crosses, then origin cross present vs absent; ties are incomparable.
TableauOrdering tableau_order(TableauBits t1, TableauBits t2, const FinalZone& F);

} // namespace scstar
