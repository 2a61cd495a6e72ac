#include "scstar/tableau.hpp"

#include <bit>
#include <tuple>

#include "scstar/errors.hpp"

namespace scstar {

TableauBits grid_mask(int m, int n) {
    if (m < 1 || n < 1 || m * n > 64)
        throw argument_error("grid_mask: grid must be nonempty with at most 64 cells");
    int bits = m * n;
    return bits == 64 ? ~TableauBits{0} : (TableauBits{1} << bits) - 1;
}

int cell_count(TableauBits t) { return std::popcount(t); }

std::vector<std::pair<int, int>> cells_of(TableauBits t, int m, int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (has_cell(t, i, j, n)) out.emplace_back(i, j);
    return out;
}

FinalZone final_zone(int m, int n, uint64_t f1, uint64_t f2, const BoolOp& op) {
    if (m < 1 || n < 1 || m * n > 64)
        throw argument_error("final_zone: grid out of range");
    if (f1 >> m || f2 >> n)
        throw argument_error("final_zone: final set out of range");
    FinalZone F{m, n, f1, f2, op, 0};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (op.apply((f1 >> i) & 1, (f2 >> j) & 1)) F.cells |= cell_mask(i, j, n);
    return F;
}

bool is_valid(TableauBits t, const FinalZone& F) {
    return (t & F.cells) == 0 || (t & 1u);
}

bool tableau_final(TableauBits t, const FinalZone& F) { return (t & F.cells) != 0; }

TableauBits dhat_step(TableauBits t, int m, int n, const Transformation& f,
                      const Transformation& g) {
    if (f.n != m || g.n != n)
        throw argument_error("dhat_step: transformation sizes do not match the grid");
    TableauBits out = 0;
    while (t) {
        int bit = std::countr_zero(t);
        t &= t - 1;
        out |= cell_mask(f.images[bit / n], g.images[bit % n], n);
    }
    return out;
}

TableauBits delta_step(TableauBits t, int m, int n, const Transformation& f,
                       const Transformation& g, const FinalZone& F) {
    TableauBits u = t ? dhat_step(t, m, n, f, g)
                      : cell_mask(f.images[0], g.images[0], n);
    if (u & F.cells) u |= 1u;
    return u;
}

int delta_classes(TableauBits t, int m, int n) {
    if (!t) throw argument_error("delta_classes: undefined on the empty tableau");
    // Union-find over the occupied rows and columns: a cross links its row to
    // its column, so components of crosses = components of the line graph.
    std::vector<int> parent(m + n);
    for (int i = 0; i < m + n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    TableauBits rest = t;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        parent[find(bit / n)] = find(m + bit % n);
    }
    // Count distinct components among occupied rows.
    std::vector<char> seen(m + n, 0);
    int classes = 0;
    for (int i = 0; i < m; ++i) {
        bool occupied = false;
        for (int j = 0; j < n && !occupied; ++j) occupied = has_cell(t, i, j, n);
        if (!occupied) continue;
        int root = find(i);
        if (!seen[root]) {
            seen[root] = 1;
            ++classes;
        }
    }
    return classes;
}

TableauOrdering tableau_order(TableauBits t1, TableauBits t2, const FinalZone& F) {
    if (t1 == t2) return TableauOrdering::Equal;
    auto key = [&](TableauBits t) {
        int crosses = cell_count(t);
        int nonfinal = cell_count(t & ~F.cells);
        int no_origin = (t & 1u) ? 0 : 1;
        return std::tuple{crosses, nonfinal, no_origin};
    };
    auto k1 = key(t1), k2 = key(t2);
    if (k1 < k2) return TableauOrdering::Less;
    if (k2 < k1) return TableauOrdering::Greater;
    return TableauOrdering::Incomparable;
}

} // namespace scstar
