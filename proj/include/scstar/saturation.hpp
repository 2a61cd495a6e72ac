#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "scstar/boolop.hpp"
#include "scstar/tableau.hpp"

namespace scstar {

// 2x2 saturation of a single window pattern (bits over a 2x2 grid).
// Kind A never merges; kind X completes any pattern of more than two
// crosses to the full window; kind O completes any pattern containing a
// diagonal pair.
TableauBits sat2x2(TableauBits pattern, OpKind kind);

// Avoidance form of the same rules over every 2x2 window of the grid.
bool is_locally_saturated(TableauBits t, int m, int n, OpKind kind);

// Least fixpoint of the one-window step T -> T u lift(sat2x2(window of T)).
// Confluent, so window order is a performance detail.
TableauBits local_saturate(TableauBits t, int m, int n, OpKind kind);

// Rows pairwise equal or disjoint (equivalently columns); characterizes
// kind-X local saturation.
bool rows_coherent(TableauBits t, int m, int n);

struct CellWindow {
    int i0, i1, j0, j1; // i0 < i1, j0 < j1
};

// 2x2 pattern read off the window.
TableauBits reduce(TableauBits t, int m, int n, CellWindow I);
// The simple tableau supported on the window with the given pattern.
TableauBits induce(TableauBits pattern, CellWindow I, int m, int n);

// Maps f_I, g_I carrying the window's restricted final zone onto the
// canonical 2x2 zone F_R = ({1} x [[2]]) op ([[2]] x {1}): (i_a, j_b) is
// final iff (f_I(a), g_I(b)) lands in F_R. The finality correspondence is
// asserted after construction.
struct ReducedMaps {
    std::array<int, 2> fI;
    std::array<int, 2> gI;
};

ReducedMaps window_maps(CellWindow I, const FinalZone& F, OpKind kind);

// Line surgery on locally saturated tableaux: every line whose profile
// equals line a's or line b's receives the union profile.
TableauBits merge_lines(TableauBits t, int m, int n, bool rows, int a, int b);
// Empty one line.
TableauBits supp_line(TableauBits t, int m, int n, bool rows, int a);

// Saturated representative of T's Nerode class, computed from the companion
// automaton: the union of the class (a join lattice).
TableauBits saturate_oracle(TableauBits t, int m, int n, uint64_t f1, uint64_t f2,
                            const BoolOp& op);
// Same, for every tableau at once: result[t] = saturation of t.
std::vector<TableauBits> saturate_all(int m, int n, uint64_t f1, uint64_t f2,
                                      const BoolOp& op);

// Canonical xor-type zone with parameters (p,q):
// ( [[m-p]] x [[q]] ) u ( {m-p..m-1} x {q..n-1} ).
TableauBits canonical_F_xor(int m, int n, int p, int q);

// Kind-X locally saturated tableaux avoiding the canonical zone.
std::vector<TableauBits> enumerate_lst(int m, int n, int p, int q);

// Injection from the (p,q) family into the (1,1) family and its inverse on
// the image; psi(phi(T)) = T.
TableauBits phi(TableauBits t, int m, int n, int p, int q);
TableauBits psi(TableauBits t2, int m, int n, int p, int q);

} // namespace scstar
