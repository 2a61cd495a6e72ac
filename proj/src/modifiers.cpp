#include "scstar/modifiers.hpp"

#include <bit>
#include <memory>
#include <random>
#include <sstream>
#include <unordered_map>

#include "scstar/errors.hpp"

namespace scstar {

Dfa star_modifier(const Dfa& a) {
    if (a.state_count > 20)
        throw capacity_error("star_modifier: subset construction over more than 20 states");
    const int Q = a.state_count;
    uint64_t fmask = 0;
    for (int q = 0; q < Q; ++q)
        if (a.is_final(q)) fmask |= uint64_t{1} << q;

    Dfa d;
    d.letter_count = a.letter_count;
    d.state_count = 1 << Q;
    d.initial = 0; // the empty set
    d.finals.resize((size_t)d.state_count);
    for (int e = 0; e < d.state_count; ++e)
        d.finals[(size_t)e] = (e == 0 || ((uint64_t)e & fmask)) ? 1 : 0;

    auto inner = a.step;
    int q0 = a.initial;
    d.step = [inner, fmask, q0](int e, long long x) {
        uint64_t img = 0;
        if (e == 0) {
            img = uint64_t{1} << inner(q0, x);
        } else {
            uint64_t rest = (uint64_t)e;
            while (rest) {
                int q = std::countr_zero(rest);
                rest &= rest - 1;
                img |= uint64_t{1} << inner(q, x);
            }
        }
        if (img & fmask) img |= uint64_t{1} << q0;
        return (int)img;
    };
    return d;
}

Dfa bool_modifier(const BoolOp& op, const Dfa& a, const Dfa& b) {
    if (a.letter_count != b.letter_count)
        throw argument_error("bool_modifier: letter counts differ");
    Dfa d;
    d.letter_count = a.letter_count;
    d.state_count = a.state_count * b.state_count;
    d.initial = a.initial * b.state_count + b.initial;
    d.finals.resize((size_t)d.state_count);
    for (int q1 = 0; q1 < a.state_count; ++q1)
        for (int q2 = 0; q2 < b.state_count; ++q2)
            d.finals[(size_t)(q1 * b.state_count + q2)] =
                op.apply(a.is_final(q1), b.is_final(q2)) ? 1 : 0;
    auto sa = a.step;
    auto sb = b.step;
    int n2 = b.state_count;
    d.step = [sa, sb, n2](int q, long long x) {
        return sa(q / n2, x) * n2 + sb(q % n2, x);
    };
    return d;
}

SubsetAutomaton stbool_direct(const BoolOp& op, const Dfa& a, const Dfa& b,
                              bool accessible_only, long long max_states) {
    if (a.letter_count != b.letter_count)
        throw argument_error("stbool_direct: letter counts differ");
    const int cells = a.state_count * b.state_count;
    Dfa product = bool_modifier(op, a, b);
    uint64_t fmask = 0;
    for (int c = 0; c < cells; ++c)
        if (product.is_final(c)) fmask |= uint64_t{1} << c;
    int init_cell = product.initial;
    auto pstep = product.step;
    const long long L = a.letter_count;

    auto step_set = [pstep, fmask, init_cell](uint64_t e, long long x) {
        uint64_t img = 0;
        if (e == 0) {
            img = uint64_t{1} << pstep(init_cell, x);
        } else {
            uint64_t rest = e;
            while (rest) {
                int c = std::countr_zero(rest);
                rest &= rest - 1;
                img |= uint64_t{1} << pstep(c, x);
            }
        }
        if (img & fmask) img |= uint64_t{1} << init_cell;
        return img;
    };

    SubsetAutomaton out;
    if (!accessible_only) {
        if (cells > 20)
            throw capacity_error("stbool_direct: full construction over more than 20 cells");
        Dfa d;
        d.letter_count = L;
        d.state_count = 1 << cells;
        d.initial = 0;
        d.finals.resize((size_t)d.state_count);
        for (int e = 0; e < d.state_count; ++e)
            d.finals[(size_t)e] = (e == 0 || ((uint64_t)e & fmask)) ? 1 : 0;
        d.step = [step_set](int e, long long x) { return (int)step_set((uint64_t)e, x); };
        out.dfa = std::move(d);
        return out;
    }

    // BFS from the empty set; states renumbered by discovery order.
    std::unordered_map<uint64_t, int> index;
    std::vector<uint64_t> subsets;
    std::vector<int> table;
    index.emplace(0, 0);
    subsets.push_back(0);
    for (size_t head = 0; head < subsets.size(); ++head) {
        uint64_t e = subsets[head];
        for (long long x = 0; x < L; ++x) {
            uint64_t t = step_set(e, x);
            auto [it, fresh] = index.try_emplace(t, (int)subsets.size());
            if (fresh) {
                if ((long long)subsets.size() >= max_states)
                    throw capacity_error("stbool_direct: reachable state bound exceeded");
                subsets.push_back(t);
            }
            table.push_back(it->second);
        }
    }
    std::vector<char> finals(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i)
        finals[i] = (subsets[i] == 0 || (subsets[i] & fmask)) ? 1 : 0;
    out.dfa = table_dfa(L, 0, std::move(finals), std::move(table));
    out.subsets = std::move(subsets);
    return out;
}

namespace {

Dfa random_dfa(std::mt19937_64& rng, int max_states, int letters) {
    std::uniform_int_distribution<int> st(1, max_states);
    int n = st(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<char> finals(n);
    std::vector<int> table((size_t)n * letters);
    for (int q = 0; q < n; ++q) {
        finals[(size_t)q] = (char)coin(rng);
        for (int a = 0; a < letters; ++a) table[(size_t)(q * letters + a)] = pick(rng);
    }
    return table_dfa(letters, pick(rng), std::move(finals), std::move(table));
}

bool same_language_bounded(const Dfa& a, const Dfa& b, int word_bound, Word& witness) {
    // Breadth-first over words; product states bound the frontier anyway.
    struct Node {
        int qa, qb;
        Word w;
    };
    std::vector<Node> frontier{{a.initial, b.initial, {}}};
    if (a.is_final(a.initial) != b.is_final(b.initial)) {
        witness.clear();
        return false;
    }
    std::vector<char> seen((size_t)a.state_count * b.state_count, 0);
    seen[(size_t)(a.initial * b.state_count + b.initial)] = 1;
    for (int len = 0; len < word_bound && !frontier.empty(); ++len) {
        std::vector<Node> next;
        for (const auto& node : frontier)
            for (long long x = 0; x < a.letter_count; ++x) {
                int qa = a.step(node.qa, x);
                int qb = b.step(node.qb, x);
                Word w = node.w;
                w.push_back(x);
                if (a.is_final(qa) != b.is_final(qb)) {
                    witness = w;
                    return false;
                }
                size_t key = (size_t)(qa * b.state_count + qb);
                if (!seen[key]) {
                    seen[key] = 1;
                    next.push_back({qa, qb, std::move(w)});
                }
            }
        frontier = std::move(next);
    }
    return true;
}

} // namespace

UniformCheck check_one_uniform(
    const std::function<Dfa(const std::vector<Dfa>&)>& build, int arity,
    int trials, int word_bound, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::uniform_int_distribution<int> alpha(2, 3);
        int gamma = alpha(rng); // target alphabet size
        int sigma = alpha(rng); // source alphabet size
        std::vector<Dfa> inputs;
        for (int i = 0; i < arity; ++i) inputs.push_back(random_dfa(rng, 3, gamma));
        std::uniform_int_distribution<int> pick(0, gamma - 1);
        std::vector<long long> morphism(sigma);
        for (int a = 0; a < sigma; ++a) morphism[(size_t)a] = pick(rng);

        std::vector<Dfa> preimages;
        for (const Dfa& in : inputs) preimages.push_back(preimage_dfa(in, morphism));
        Dfa built_then_pre = preimage_dfa(build(inputs), morphism);
        Dfa pre_then_built = build(preimages);

        Word witness;
        if (!same_language_bounded(built_then_pre, pre_then_built, word_bound, witness)) {
            UniformCheck result;
            result.ok = false;
            result.failing_trial = trial;
            std::ostringstream msg;
            msg << "trial " << trial << ": disagreement on word";
            for (long long x : witness) msg << ' ' << x;
            result.detail = msg.str();
            return result;
        }
    }
    return {};
}

} // namespace scstar
