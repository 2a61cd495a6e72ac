#include "scstar/counting.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "scstar/dfa.hpp"
#include "scstar/errors.hpp"
#include "scstar/saturation.hpp"
#include "scstar/tableau.hpp"
#include "scstar/tableau_automata.hpp"

namespace scstar {

namespace {

Big bigpow(long long base, int exp) {
    Big r = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

// Pascal triangle up to row N inclusive.
std::vector<std::vector<Big>> binom_table(int N) {
    std::vector<std::vector<Big>> c((size_t)N + 1);
    for (int i = 0; i <= N; ++i) {
        c[(size_t)i].assign((size_t)i + 1, 0);
        c[(size_t)i][0] = 1;
        for (int j = 1; j <= i; ++j)
            c[(size_t)i][(size_t)j] =
                c[(size_t)i - 1][(size_t)j - 1] +
                (j < i ? c[(size_t)i - 1][(size_t)j] : Big(0));
    }
    return c;
}

// Stirling numbers of the second kind up to S2(N,N).
std::vector<std::vector<Big>> stirling2_table(int N) {
    std::vector<std::vector<Big>> s((size_t)N + 1,
                                    std::vector<Big>((size_t)N + 1, 0));
    s[0][0] = 1;
    for (int t = 1; t <= N; ++t)
        for (int k = 1; k <= t; ++k)
            s[(size_t)t][(size_t)k] = s[(size_t)t - 1][(size_t)k - 1] +
                                      Big(k) * s[(size_t)t - 1][(size_t)k];
    return s;
}

// Number of families of k pairwise disjoint nonempty subsets of [[nn]]
// (unordered): choose the support, then partition it into k blocks.
Big family_count(int nn, int k, const std::vector<std::vector<Big>>& C,
                 const std::vector<std::vector<Big>>& S2) {
    Big total = 0;
    for (int t = k; t <= nn; ++t)
        total += C[(size_t)nn][(size_t)t] * S2[(size_t)t][(size_t)k];
    return total;
}

// Maps from mm rows onto k mandatory values plus one optional spare value,
// shifted by `shift` extra spare values; inclusion-exclusion over the
// mandatory values that are missed.
Big onto_with_spares(int mm, int k, int spares,
                     const std::vector<std::vector<Big>>& C) {
    Big total = 0;
    for (int i = 0; i <= k; ++i) {
        Big term = C[(size_t)k][(size_t)i] * bigpow(k - i + spares, mm);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

uint64_t full_mask(int n) { return (n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1); }

} // namespace

Big alpha(int m, int n, bool require_origin) {
    if (m < 0 || n < 0) throw argument_error("alpha: negative dimension");
    if (m == 0 || n == 0) return require_origin ? Big(0) : Big(1);
    auto C = binom_table(std::max(m, n));
    auto S2 = stirling2_table(n);

    if (!require_origin) {
        // Rows carry pairwise disjoint column profiles: pick the family of
        // distinct nonempty profiles, then assign rows onto it (the empty
        // profile is the one spare value).
        Big total = 0;
        for (int k = 0; k <= n; ++k)
            total += family_count(n, k, C, S2) * onto_with_spares(m, k, 1, C);
        return total;
    }
    // A cross at (0,0) pins row 0's profile: it is nonempty and contains
    // column 0. Sum over its size b; the remaining columns form an
    // independent family, and the remaining rows may also reuse row 0's
    // profile (a second spare value alongside the empty profile).
    Big total = 0;
    for (int b = 1; b <= n; ++b) {
        Big pick = C[(size_t)n - 1][(size_t)b - 1];
        Big inner = 0;
        for (int k = 0; k <= n - b; ++k)
            inner += family_count(n - b, k, C, S2) * onto_with_spares(m - 1, k, 2, C);
        total += pick * inner;
    }
    return total;
}

unsigned long long alpha_enum(int m, int n, bool require_origin) {
    if (m < 0 || n < 0) throw argument_error("alpha_enum: negative dimension");
    if (m == 0 || n == 0) return require_origin ? 0ull : 1ull;
    if (m * n > 24) throw capacity_error("alpha_enum: enumeration limited to 24 cells");
    unsigned long long count = 0;
    TableauBits top = TableauBits{1} << (m * n);
    for (TableauBits t = 0; t < top; ++t) {
        if (require_origin && !(t & 1)) continue;
        if (is_locally_saturated(t, m, n, OpKind::X)) ++count;
    }
    return count;
}

CountReport count_sv_enum(int m, int n, uint64_t f1, uint64_t f2, const BoolOp& op) {
    OpClass cls = classify_op(op);
    if (cls.kind == OpKind::Degenerate)
        throw argument_error("count_sv_enum: degenerate operation");
    if (m * n > 24) throw capacity_error("count_sv_enum: enumeration limited to 24 cells");
    FinalZone F = final_zone(m, n, f1, f2, op);

    CountReport report;
    report.zone_in_origin = (F.cells & 1) != 0;
    TableauBits axes = 0;
    for (int j = 0; j < n; ++j) axes |= cell_mask(0, j, n);
    for (int i = 0; i < m; ++i) axes |= cell_mask(i, 0, n);
    report.zone_degenerate_axes = (F.cells & ~axes) == 0;

    TableauBits top = TableauBits{1} << (m * n);
    for (TableauBits t = 0; t < top; ++t)
        if (is_valid(t, F) && is_locally_saturated(t, m, n, cls.kind)) ++report.slv;
    report.sv = report.slv - (report.zone_in_origin ? 1 : 0);
    return report;
}

Big count_sv_formula(int m, int n, int k1, int k2, OpKind kind, bool zero_in_f,
                     bool zero_in_fp) {
    if (k1 < 1 || k1 > m - 1 || k2 < 1 || k2 > n - 1)
        throw argument_error("count_sv_formula: final-set sizes must be proper");
    switch (kind) {
        case OpKind::A:
            return zero_in_f ? pow2(m * n - 1) + pow2(m * n - k1 * k2) - 1
                             : pow2(m * n - 1) + pow2(m * n - k1 * k2 - 1);
        case OpKind::O:
            return zero_in_f ? pow2(m + n - 2) + pow2(m + n - k1 - k2) -
                                   pow2(m - k1) - pow2(n - k2) + 1
                             : pow2(m + n - 2) + 3 * pow2(m + n - k1 - k2 - 2) -
                                   pow2(m - k1) - pow2(n - k2) + 2;
        case OpKind::X: {
            Big ap = alpha(m, n, true);
            if (zero_in_f) return ap + alpha(k1, k2, false) * alpha(m - k1, n - k2, false) - 1;
            if (zero_in_fp)
                return ap + (alpha(k1, k2, false) - alpha(k1, k2, true)) *
                                alpha(m - k1, n - k2, false);
            return ap + alpha(k1, k2, false) *
                            (alpha(m - k1, n - k2, false) - alpha(m - k1, n - k2, true));
        }
        default:
            throw argument_error("count_sv_formula: degenerate operation");
    }
}

Big count_sv_formula_for(int m, int n, uint64_t f1, uint64_t f2, const BoolOp& op) {
    OpClass cls = classify_op(op);
    if (cls.kind == OpKind::Degenerate)
        throw argument_error("count_sv_formula_for: degenerate operation");
    uint64_t e1 = cls.complement_first ? (~f1 & full_mask(m)) : f1;
    uint64_t e2 = cls.complement_second ? (~f2 & full_mask(n)) : f2;
    int k1 = std::popcount(e1);
    int k2 = std::popcount(e2);
    FinalZone F = final_zone(m, n, f1, f2, op);
    bool zero_in_f = (F.cells & 1) != 0;
    bool zero_in_fp = (e1 & 1) && (e2 & 1);
    return count_sv_formula(m, n, k1, k2, cls.kind, zero_in_f, zero_in_fp);
}

Big state_complexity(const ScQuery& q) {
    if (q.m < 1 || q.n < 1) throw argument_error("state_complexity: dimensions must be positive");
    OpClass cls = classify_op(q.op);
    if (cls.kind == OpKind::Degenerate)
        throw argument_error("state_complexity: degenerate operation");
    if (q.m == 1 && q.n == 1) return 1;
    if (q.m == 1) return 3 * pow2(q.n - 2);
    if (q.n == 1) return 3 * pow2(q.m - 2);
    switch (cls.kind) {
        case OpKind::A:
            return 3 * pow2(q.m * q.n - 2);
        case OpKind::O:
            return pow2(q.m + q.n - 1) - pow2(q.m - 1) - pow2(q.n - 1) + 1;
        default:
            return alpha(q.m, q.n, true) + 2 * alpha(q.m - 1, q.n - 1, false) - 1;
    }
}

std::pair<uint64_t, uint64_t> witness_final_sets(const ScQuery& q) {
    if (q.m < 1 || q.n < 1) throw argument_error("witness_final_sets: dimensions must be positive");
    OpClass cls = classify_op(q.op);
    if (cls.kind == OpKind::Degenerate)
        throw argument_error("witness_final_sets: degenerate operation");
    uint64_t w1, w2;
    if (q.m == 1) {
        // One-state first argument: {0} forces it to the full language for
        // the intersection base, empty otherwise.
        w1 = (cls.kind == OpKind::A) ? 0x1 : 0x0;
        w2 = (q.n == 1) ? 0x1 : 0x2;
    } else if (q.n == 1) {
        w1 = 0x2;
        w2 = (cls.kind == OpKind::A) ? 0x1 : 0x0;
    } else {
        w1 = 0x2;
        w2 = (cls.kind == OpKind::A) ? 0x2 : 0x1;
    }
    if (cls.complement_first) w1 = ~w1 & full_mask(q.m);
    if (cls.complement_second) w2 = ~w2 & full_mask(q.n);
    return {w1, w2};
}

BruteResult brute_sc(const ScQuery& q, std::vector<uint64_t> f1_candidates,
                     std::vector<uint64_t> f2_candidates, long long max_states) {
    if (q.m * q.n > 12)
        throw capacity_error("brute_sc: exhaustive search limited to 12 cells");
    OpClass cls = classify_op(q.op);
    if (cls.kind == OpKind::Degenerate)
        throw argument_error("brute_sc: degenerate operation");

    const uint64_t top1 = full_mask(q.m);
    const uint64_t top2 = full_mask(q.n);
    if (f1_candidates.empty() && f2_candidates.empty()) {
        long long pairs = (long long)(top1 - 1) * (long long)(top2 - 1);
        if (pairs <= 256) {
            for (uint64_t f = 1; f < top1; ++f) f1_candidates.push_back(f);
            for (uint64_t f = 1; f < top2; ++f) f2_candidates.push_back(f);
        } else {
            auto [w1, w2] = witness_final_sets(q);
            f1_candidates.push_back(w1);
            f2_candidates.push_back(w2);
            std::mt19937_64 rng(12345);
            std::uniform_int_distribution<uint64_t> d1(1, top1 - 1), d2(1, top2 - 1);
            for (int i = 0; i < 8; ++i) {
                f1_candidates.push_back(d1(rng));
                f2_candidates.push_back(d2(rng));
            }
        }
    }
    if (f1_candidates.empty() || f2_candidates.empty())
        throw argument_error("brute_sc: empty candidate list");
    std::sort(f1_candidates.begin(), f1_candidates.end());
    std::sort(f2_candidates.begin(), f2_candidates.end());
    f1_candidates.erase(std::unique(f1_candidates.begin(), f1_candidates.end()),
                        f1_candidates.end());
    f2_candidates.erase(std::unique(f2_candidates.begin(), f2_candidates.end()),
                        f2_candidates.end());

    BruteResult best;
    best.value = -1;
    for (uint64_t f1 : f1_candidates)
        for (uint64_t f2 : f2_candidates) {
            BuiltM built = build_M(q.m, q.n, f1, f2, q.op, max_states);
            long long sc = minimize(built.dfa).state_count;
            if (sc > best.value) best = {sc, f1, f2};
        }
    return best;
}

std::vector<std::vector<Big>> sc_table(OpKind kind, int max_m, int max_n) {
    BoolOp op;
    switch (kind) {
        case OpKind::A: op = op_and; break;
        case OpKind::O: op = op_or; break;
        case OpKind::X: op = op_xor; break;
        default: throw argument_error("sc_table: degenerate operation");
    }
    if (max_m < 2 || max_n < 2)
        throw argument_error("sc_table: table starts at m = n = 2");
    std::vector<std::vector<Big>> out;
    for (int m = 2; m <= max_m; ++m) {
        std::vector<Big> row;
        for (int n = 2; n <= max_n; ++n)
            row.push_back(state_complexity({op, m, n}));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace scstar
