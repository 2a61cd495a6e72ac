#pragma once

#include <cstdint>
#include <vector>

#include "scstar/dfa.hpp"
#include "scstar/tableau.hpp"

namespace scstar {

// Letters of the tableau automata are pairs (f,g), f over rows and g over
// columns, with index f_index * n^n + g_index.
long long pair_letter_count(int m, int n);

// The star-of-Boolean-combination automaton on monster inputs: BFS from the
// empty tableau over all letter pairs using delta_step. Finals are the empty
// tableau and every tableau meeting the final zone.
struct BuiltM {
    Dfa dfa;
    std::vector<TableauBits> tableaux; // state index -> tableau
    FinalZone zone;
};

BuiltM build_M(int m, int n, uint64_t f1, uint64_t f2, const BoolOp& op,
               long long max_states = 1'000'000);

// Companion automaton with all 2^(m*n) tableaux as states (state index =
// bit pattern), the same finals, and the plain image action dhat_step.
Dfa build_Mhat(int m, int n, uint64_t f1, uint64_t f2, const BoolOp& op);

} // namespace scstar
