#include "scstar/tableau_automata.hpp"

#include <memory>
#include <unordered_map>

#include "scstar/errors.hpp"

namespace scstar {

long long pair_letter_count(int m, int n) {
    long long cm = transformation_count(m);
    long long cn = transformation_count(n);
    if (cm > (long long)4e18 / cn)
        throw capacity_error("pair_letter_count: alphabet exceeds 64-bit range");
    return cm * cn;
}

BuiltM build_M(int m, int n, uint64_t f1, uint64_t f2, const BoolOp& op,
               long long max_states) {
    FinalZone F = final_zone(m, n, f1, f2, op);
    auto fs = all_transformations(m);
    auto gs = all_transformations(n);
    const long long L = (long long)fs.size() * (long long)gs.size();

    std::unordered_map<TableauBits, int> index;
    std::vector<TableauBits> states;
    std::vector<int> table;
    index.emplace(0, 0);
    states.push_back(0);
    for (size_t head = 0; head < states.size(); ++head) {
        TableauBits t = states[head];
        for (const auto& f : fs)
            for (const auto& g : gs) {
                TableauBits u = delta_step(t, m, n, f, g, F);
                auto [it, fresh] = index.try_emplace(u, (int)states.size());
                if (fresh) {
                    if ((long long)states.size() >= max_states)
                        throw capacity_error("build_M: reachable state bound exceeded");
                    states.push_back(u);
                }
                table.push_back(it->second);
            }
    }
    std::vector<char> finals(states.size());
    for (size_t i = 0; i < states.size(); ++i)
        finals[i] = (states[i] == 0 || tableau_final(states[i], F)) ? 1 : 0;

    BuiltM out;
    out.dfa = table_dfa(L, 0, std::move(finals), std::move(table));
    out.tableaux = std::move(states);
    out.zone = F;
    return out;
}

Dfa build_Mhat(int m, int n, uint64_t f1, uint64_t f2, const BoolOp& op) {
    if (m * n > 16)
        throw capacity_error("build_Mhat: explicit construction limited to 16 cells");
    FinalZone F = final_zone(m, n, f1, f2, op);
    auto fs = std::make_shared<std::vector<Transformation>>(all_transformations(m));
    auto gs = std::make_shared<std::vector<Transformation>>(all_transformations(n));
    const long long gcount = (long long)gs->size();
    const long long L = (long long)fs->size() * gcount;
    const int S = 1 << (m * n);

    Dfa d;
    d.letter_count = L;
    d.state_count = S;
    d.initial = 0;
    d.finals.resize((size_t)S);
    for (int t = 0; t < S; ++t)
        d.finals[(size_t)t] = (t == 0 || tableau_final((TableauBits)t, F)) ? 1 : 0;

    // Materialize the transition table when it stays small; the letter count
    // grows like m^m * n^n so Nerode refinement revisits every entry often.
    if ((long long)S * L <= 20'000'000) {
        std::vector<int> table((size_t)S * (size_t)L);
        for (int t = 0; t < S; ++t) {
            size_t base = (size_t)t * (size_t)L;
            size_t a = 0;
            for (const auto& f : *fs)
                for (const auto& g : *gs)
                    table[base + a++] = (int)dhat_step((TableauBits)t, m, n, f, g);
        }
        return table_dfa(L, 0, std::move(d.finals), std::move(table));
    }

    d.step = [fs, gs, gcount, m, n](int t, long long a) {
        const Transformation& f = (*fs)[(size_t)(a / gcount)];
        const Transformation& g = (*gs)[(size_t)(a % gcount)];
        return (int)dhat_step((TableauBits)t, m, n, f, g);
    };
    return d;
}

} // namespace scstar
