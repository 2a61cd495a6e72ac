#include "scstar/saturation.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "scstar/dfa.hpp"
#include "scstar/errors.hpp"
#include "scstar/tableau_automata.hpp"

namespace scstar {

namespace {

constexpr TableauBits kFull2x2 = 0xF; // 2x2 pattern bits: (a,b) at a*2+b

inline TableauBits row_mask(int n, int i) {
    return ((TableauBits{1} << n) - 1) << (i * n);
}

inline TableauBits col_mask(int m, int n, int j) {
    TableauBits mask = 0;
    for (int i = 0; i < m; ++i) mask |= cell_mask(i, j, n);
    return mask;
}

inline TableauBits row_profile(TableauBits t, int n, int i) {
    return (t >> (i * n)) & ((TableauBits{1} << n) - 1);
}

inline TableauBits rect_mask(int n, int i0, int i1, int j0, int j1) {
    // Cells {i0..i1-1} x {j0..j1-1}.
    TableauBits cols = (((TableauBits{1} << (j1 - j0)) - 1) << j0);
    TableauBits mask = 0;
    for (int i = i0; i < i1; ++i) mask |= cols << (i * n);
    return mask;
}

} // namespace

TableauBits sat2x2(TableauBits pattern, OpKind kind) {
    switch (kind) {
        case OpKind::A:
            return pattern;
        case OpKind::X:
            return std::popcount(pattern & kFull2x2) > 2 ? kFull2x2 : pattern;
        case OpKind::O:
            if (((pattern & 0x1) && (pattern & 0x8)) ||
                ((pattern & 0x2) && (pattern & 0x4)))
                return kFull2x2;
            return pattern;
        default:
            throw argument_error("sat2x2: degenerate kind has no saturation rule");
    }
}

TableauBits reduce(TableauBits t, int m, int n, CellWindow I) {
    (void)m;
    TableauBits r = 0;
    if (has_cell(t, I.i0, I.j0, n)) r |= 0x1;
    if (has_cell(t, I.i0, I.j1, n)) r |= 0x2;
    if (has_cell(t, I.i1, I.j0, n)) r |= 0x4;
    if (has_cell(t, I.i1, I.j1, n)) r |= 0x8;
    return r;
}

TableauBits induce(TableauBits pattern, CellWindow I, int m, int n) {
    (void)m;
    if (I.i0 >= I.i1 || I.j0 >= I.j1)
        throw argument_error("induce: window must be strictly increasing");
    TableauBits t = 0;
    if (pattern & 0x1) t |= cell_mask(I.i0, I.j0, n);
    if (pattern & 0x2) t |= cell_mask(I.i0, I.j1, n);
    if (pattern & 0x4) t |= cell_mask(I.i1, I.j0, n);
    if (pattern & 0x8) t |= cell_mask(I.i1, I.j1, n);
    return t;
}

bool is_locally_saturated(TableauBits t, int m, int n, OpKind kind) {
    if (kind == OpKind::A) return true;
    if (kind == OpKind::Degenerate)
        throw argument_error("is_locally_saturated: degenerate kind");
    for (int i0 = 0; i0 < m; ++i0)
        for (int i1 = i0 + 1; i1 < m; ++i1)
            for (int j0 = 0; j0 < n; ++j0)
                for (int j1 = j0 + 1; j1 < n; ++j1) {
                    TableauBits r = reduce(t, m, n, {i0, i1, j0, j1});
                    if (sat2x2(r, kind) != r) return false;
                }
    return true;
}

TableauBits local_saturate(TableauBits t, int m, int n, OpKind kind) {
    if (kind == OpKind::A) return t;
    if (kind == OpKind::Degenerate)
        throw argument_error("local_saturate: degenerate kind");
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i0 = 0; i0 < m; ++i0)
            for (int i1 = i0 + 1; i1 < m; ++i1)
                for (int j0 = 0; j0 < n; ++j0)
                    for (int j1 = j0 + 1; j1 < n; ++j1) {
                        CellWindow I{i0, i1, j0, j1};
                        TableauBits r = reduce(t, m, n, I);
                        TableauBits s = sat2x2(r, kind);
                        if (s != r) {
                            t |= induce(s, I, m, n);
                            changed = true;
                        }
                    }
    }
    return t;
}

bool rows_coherent(TableauBits t, int m, int n) {
    for (int i0 = 0; i0 < m; ++i0)
        for (int i1 = i0 + 1; i1 < m; ++i1) {
            TableauBits a = row_profile(t, n, i0);
            TableauBits b = row_profile(t, n, i1);
            if (a != b && (a & b)) return false;
        }
    // Column version follows, but check it too: equal-or-disjoint rows.
    for (int j0 = 0; j0 < n; ++j0)
        for (int j1 = j0 + 1; j1 < n; ++j1) {
            TableauBits a = 0, b = 0;
            for (int i = 0; i < m; ++i) {
                if (has_cell(t, i, j0, n)) a |= TableauBits{1} << i;
                if (has_cell(t, i, j1, n)) b |= TableauBits{1} << i;
            }
            if (a != b && (a & b)) return false;
        }
    return true;
}

ReducedMaps window_maps(CellWindow I, const FinalZone& F, OpKind kind) {
    if (kind == OpKind::Degenerate)
        throw argument_error("window_maps: degenerate kind");
    const int n = F.n;
    TableauBits fi = reduce(F.cells, F.m, n, I);
    const TableauBits rowpat[2] = {0x3, 0xC}; // full row a of the 2x2 pattern
    const TableauBits colpat[2] = {0x5, 0xA}; // full column b

    ReducedMaps out{{0, 0}, {0, 0}};
    if (fi == 0) {
        // case (a): F misses the window entirely
        out = {{0, 0}, {0, 0}};
    } else if (fi == kFull2x2) {
        // case (e): the window lies inside F
        out = (kind == OpKind::X) ? ReducedMaps{{1, 1}, {0, 0}}
                                  : ReducedMaps{{1, 1}, {1, 1}};
    } else if (fi == rowpat[0] || fi == rowpat[1]) {
        // case (b): one full row
        int a = (fi == rowpat[1]) ? 1 : 0;
        out.fI = {a == 0, a == 1};
        out.gI = (kind == OpKind::A) ? std::array<int, 2>{1, 1}
                                     : std::array<int, 2>{0, 0};
    } else if (fi == colpat[0] || fi == colpat[1]) {
        // case (c): one full column
        int b = (fi == colpat[1]) ? 1 : 0;
        out.gI = {b == 0, b == 1};
        out.fI = (kind == OpKind::A) ? std::array<int, 2>{1, 1}
                                     : std::array<int, 2>{0, 0};
    } else {
        // case (d): the row-column combination shape; recover (a,b) by search
        bool found = false;
        for (int a = 0; a < 2 && !found; ++a)
            for (int b = 0; b < 2 && !found; ++b) {
                TableauBits shape = 0;
                for (int al = 0; al < 2; ++al)
                    for (int be = 0; be < 2; ++be)
                        if (F.op.apply(al == a, be == b))
                            shape |= TableauBits{1} << (al * 2 + be);
                if (shape == fi) {
                    out.fI = {a == 0, a == 1};
                    out.gI = {b == 0, b == 1};
                    found = true;
                }
            }
        if (!found)
            throw argument_error("window_maps: window zone matches no case shape");
    }

    // The defining finality correspondence, against the canonical 2x2 zone
    // F_R = ({1} x [[2]]) op ([[2]] x {1}).
    for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) {
            bool in_fi = (fi >> (al * 2 + be)) & 1;
            bool in_fr = F.op.apply(out.fI[(size_t)al] == 1, out.gI[(size_t)be] == 1);
            if (in_fi != in_fr)
                throw argument_error("window_maps: finality correspondence failed");
        }
    return out;
}

TableauBits merge_lines(TableauBits t, int m, int n, bool rows, int a, int b) {
    if (rows) {
        if (a < 0 || a >= m || b < 0 || b >= m)
            throw argument_error("merge_lines: row index out of range");
        TableauBits pa = row_profile(t, n, a);
        TableauBits pb = row_profile(t, n, b);
        TableauBits u = pa | pb;
        for (int i = 0; i < m; ++i) {
            TableauBits p = row_profile(t, n, i);
            // Besides the two merged rows, only rows carrying a nonempty
            // matching profile are updated: an empty row is disjoint from
            // every other row, so leaving it empty keeps the tableau locally
            // saturated, while filling it would destroy information that the
            // inverse map has no way to recover.
            if (i == a || i == b || (p != 0 && (p == pa || p == pb)))
                t |= u << (i * n);
        }
        return t;
    }
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw argument_error("merge_lines: column index out of range");
    TableauBits pa = 0, pb = 0;
    for (int i = 0; i < m; ++i) {
        if (has_cell(t, i, a, n)) pa |= TableauBits{1} << i;
        if (has_cell(t, i, b, n)) pb |= TableauBits{1} << i;
    }
    TableauBits u = pa | pb;
    for (int j = 0; j < n; ++j) {
        TableauBits p = 0;
        for (int i = 0; i < m; ++i)
            if (has_cell(t, i, j, n)) p |= TableauBits{1} << i;
        // Same rule as for rows: empty non-merged columns stay empty.
        if (j == a || j == b || (p != 0 && (p == pa || p == pb)))
            for (int i = 0; i < m; ++i)
                if ((u >> i) & 1) t |= cell_mask(i, j, n);
    }
    return t;
}

TableauBits supp_line(TableauBits t, int m, int n, bool rows, int a) {
    if (rows) {
        if (a < 0 || a >= m) throw argument_error("supp_line: row index out of range");
        return t & ~row_mask(n, a);
    }
    if (a < 0 || a >= n) throw argument_error("supp_line: column index out of range");
    return t & ~col_mask(m, n, a);
}

std::vector<TableauBits> saturate_all(int m, int n, uint64_t f1, uint64_t f2,
                                      const BoolOp& op) {
    Dfa mhat = build_Mhat(m, n, f1, f2, op);
    std::vector<int> block = nerode_partition(mhat);
    int nblocks = 0;
    for (int b : block) nblocks = std::max(nblocks, b + 1);
    std::vector<TableauBits> join((size_t)nblocks, 0);
    for (int t = 0; t < mhat.state_count; ++t)
        join[(size_t)block[(size_t)t]] |= (TableauBits)t;
    std::vector<TableauBits> out((size_t)mhat.state_count);
    for (int t = 0; t < mhat.state_count; ++t)
        out[(size_t)t] = join[(size_t)block[(size_t)t]];
    return out;
}

TableauBits saturate_oracle(TableauBits t, int m, int n, uint64_t f1, uint64_t f2,
                            const BoolOp& op) {
    return saturate_all(m, n, f1, f2, op)[(size_t)t];
}

TableauBits canonical_F_xor(int m, int n, int p, int q) {
    if (p < 1 || p > m - 1 || q < 1 || q > n - 1)
        throw argument_error("canonical_F_xor: parameters out of range");
    return rect_mask(n, 0, m - p, 0, q) | rect_mask(n, m - p, m, q, n);
}

std::vector<TableauBits> enumerate_lst(int m, int n, int p, int q) {
    if (m * n > 20)
        throw capacity_error("enumerate_lst: enumeration limited to 20 cells");
    TableauBits F = canonical_F_xor(m, n, p, q);
    std::vector<TableauBits> out;
    TableauBits top = TableauBits{1} << (m * n);
    for (TableauBits t = 0; t < top; ++t)
        if (!(t & F) && is_locally_saturated(t, m, n, OpKind::X)) out.push_back(t);
    return out;
}

namespace {

// Corner zone used by the injection into the (1,1) family.
inline TableauBits corner_zone(int m, int n, int p, int q) {
    return rect_mask(n, 0, m - p, q, n);
}

// Lexicographically smallest cell of the mask, as (row, col).
inline std::pair<int, int> first_cell(TableauBits mask, int n) {
    int bit = std::countr_zero(mask);
    return {bit / n, bit % n};
}

// In the two degenerate cases the corner zone of the input is entirely
// crossed or entirely empty, so the input carries information only in the
// bottom-left block (rows m-p..m-1, columns 0..q-1).  That block is encoded
// into a tableau avoiding the (1,1) final zone by relocating its first
// column into column q and its last row into row 0.
inline TableauBits relocate_block(TableauBits t, int m, int n, int p, int q) {
    TableauBits out = 0;
    for (int r = m - p; r < m - 1; ++r) {
        TableauBits pr = row_profile(t, n, r);
        TableauBits s = pr & ~TableauBits{1};
        if (pr & 1) s |= TableauBits{1} << q;
        out |= s << (r * n);
    }
    out |= row_profile(t, n, m - 1) & ~TableauBits{1}; // last row goes to row 0
    return out;
}

// Inverse of relocate_block for rows m-p..m-2 only (the relocated last row is
// handled by the callers, which know whether the corner cross is present).
inline TableauBits restore_block_rows(TableauBits t2, int m, int n, int p, int q) {
    TableauBits out = 0;
    for (int r = m - p; r < m - 1; ++r) {
        TableauBits s = row_profile(t2, n, r);
        TableauBits pr = s & ~(TableauBits{1} << q);
        if ((s >> q) & 1) pr |= 1;
        out |= pr << (r * n);
    }
    return out;
}

} // namespace

TableauBits phi(TableauBits t, int m, int n, int p, int q) {
    TableauBits F = canonical_F_xor(m, n, p, q);
    if ((t & F) || !is_locally_saturated(t, m, n, OpKind::X))
        throw argument_error("phi: input outside the (p,q) family");
    const TableauBits G = corner_zone(m, n, p, q);
    const TableauBits corner = cell_mask(m - 1, 0, n);
    const TableauBits border = row_mask(n, m - 1) | col_mask(m, n, 0);

    // Case 1: the last row and first column carry no cross besides the corner.
    if (!(t & border & ~corner)) return t;

    if (!(t & corner)) {
        TableauBits holes = G & ~t;
        if (holes) {
            // 2(a)i: pick the first missing cell of the corner zone
            auto [i, j] = first_cell(holes, n);
            TableauBits r = merge_lines(t, m, n, false, 0, j);
            r = supp_line(r, m, n, false, 0);
            r = merge_lines(r, m, n, true, i, m - 1);
            return supp_line(r, m, n, true, m - 1);
        }
        // 2(a)ii: the corner zone is entirely crossed, so only the
        // bottom-left block remains to encode; the added corner cross marks
        // the case in the image.
        return relocate_block(t & ~G, m, n, p, q) | corner;
    }

    TableauBits hits = G & t;
    if (hits) {
        // 2(b)i: pick the first crossed cell of the corner zone
        auto [i, j] = first_cell(hits, n);
        TableauBits r = merge_lines(t, m, n, false, 0, j);
        r = supp_line(r, m, n, false, 0);
        r = merge_lines(r, m, n, true, i, m - 1);
        return supp_line(r, m, n, true, m - 1) | corner;
    }
    // 2(b)ii: the corner zone is untouched, so again only the bottom-left
    // block matters.  The image is marked by filling the corner zone; to keep
    // the image locally saturated, every block row equal to the last row is
    // widened to the common profile P of the filled rows, and the inverse
    // recognises those rows by that exact profile.  (A relocated block row
    // can never equal P on its own: P contains all of columns q..n-1 while a
    // relocated row reaches no further than column q.)
    TableauBits tb = t & ~corner;
    TableauBits w = row_profile(tb, n, m - 1); // last row minus the corner
    TableauBits last_profile = w | TableauBits{1};
    TableauBits P = w | (((TableauBits{1} << (n - q)) - 1) << q);
    TableauBits out = 0;
    for (int i = 0; i < m - p; ++i) out |= P << (i * n);
    for (int r = m - p; r < m - 1; ++r) {
        TableauBits pr = row_profile(tb, n, r);
        TableauBits s;
        if (pr == last_profile) {
            s = P;
        } else {
            s = pr & ~TableauBits{1};
            if (pr & 1) s |= TableauBits{1} << q;
        }
        out |= s << (r * n);
    }
    return out;
}

TableauBits psi(TableauBits t2, int m, int n, int p, int q) {
    TableauBits F11 = canonical_F_xor(m, n, 1, 1);
    if ((t2 & F11) || !is_locally_saturated(t2, m, n, OpKind::X))
        throw argument_error("psi: input outside the (1,1) family");
    const TableauBits F = canonical_F_xor(m, n, p, q);
    const TableauBits G = corner_zone(m, n, p, q);
    const TableauBits corner = cell_mask(m - 1, 0, n);

    if (!(t2 & F)) return t2; // case 1 images are fixed points

    if (!(t2 & corner)) {
        if ((t2 & G) == G) {
            // inverse of 2(b)ii: row 0 carries P; its part left of column q
            // is the relocated last row, and block rows equal to P stand for
            // copies of the last row.
            TableauBits P = row_profile(t2, n, 0);
            TableauBits w = P & ((TableauBits{1} << q) - 1);
            TableauBits last_profile = w | TableauBits{1};
            TableauBits out = corner | (w << ((m - 1) * n));
            for (int r = m - p; r < m - 1; ++r) {
                TableauBits s = row_profile(t2, n, r);
                if (s == P) {
                    out |= last_profile << (r * n);
                } else {
                    TableauBits pr = s & ~(TableauBits{1} << q);
                    if ((s >> q) & 1) pr |= 1;
                    out |= pr << (r * n);
                }
            }
            return out;
        }
        // inverse of 2(a)i
        auto [i, j] = first_cell(G & ~t2, n);
        TableauBits r = merge_lines(t2, m, n, true, i, m - 1);
        r = merge_lines(r, m, n, false, 0, j);
        return r & ~F;
    }

    if (!(t2 & G)) {
        // inverse of 2(a)ii: undo the block relocation and refill the corner
        // zone; row 0 of the image is the relocated last row.
        TableauBits w = row_profile(t2, n, 0);
        return G | (w << ((m - 1) * n)) | restore_block_rows(t2, m, n, p, q);
    }
    // inverse of 2(b)i
    auto [i, j] = first_cell(G & t2, n);
    TableauBits r = merge_lines(t2, m, n, true, i, m - 1);
    r = merge_lines(r, m, n, false, 0, j);
    return r & ~F;
}

} // namespace scstar
