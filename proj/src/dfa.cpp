#include "scstar/dfa.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>

#include "scstar/errors.hpp"

namespace scstar {

namespace {

// FNV-1a over a span of ints, used to bucket refinement signatures.
struct IntSpanHash {
    const std::vector<int>* data;
    size_t width;
    size_t operator()(size_t row) const {
        uint64_t h = 1469598103934665603ull;
        const int* p = data->data() + row * width;
        for (size_t i = 0; i < width; ++i) {
            h ^= (uint64_t)(uint32_t)p[i];
            h *= 1099511628211ull;
        }
        return (size_t)h;
    }
};

struct IntSpanEq {
    const std::vector<int>* data;
    size_t width;
    bool operator()(size_t a, size_t b) const {
        const int* pa = data->data() + a * width;
        const int* pb = data->data() + b * width;
        for (size_t i = 0; i < width; ++i)
            if (pa[i] != pb[i]) return false;
        return true;
    }
};

} // namespace

Dfa table_dfa(long long letter_count, int initial, std::vector<char> finals,
              std::vector<int> flat_table) {
    Dfa d;
    d.letter_count = letter_count;
    d.state_count = (int)finals.size();
    d.initial = initial;
    d.finals = std::move(finals);
    if ((long long)flat_table.size() != (long long)d.state_count * letter_count)
        throw argument_error("table_dfa: table size does not match states x letters");
    auto table = std::make_shared<std::vector<int>>(std::move(flat_table));
    d.step = [table, letter_count](int q, long long a) {
        return (*table)[(size_t)((long long)q * letter_count + a)];
    };
    return d;
}

AccessibleResult accessible(const Dfa& d) {
    const long long L = d.letter_count;
    std::vector<int> old_to_new(d.state_count, -1);
    std::vector<int> order;
    std::vector<int> table;
    std::vector<char> finals;

    old_to_new[d.initial] = 0;
    order.push_back(d.initial);
    for (size_t head = 0; head < order.size(); ++head) {
        int q = order[head];
        if ((long long)table.size() + L > 400'000'000)
            throw capacity_error("accessible: transition table too large");
        for (long long a = 0; a < L; ++a) {
            int r = d.step(q, a);
            if (old_to_new[r] < 0) {
                old_to_new[r] = (int)order.size();
                order.push_back(r);
            }
            table.push_back(old_to_new[r]);
        }
        finals.push_back(d.finals[(size_t)q]);
    }

    AccessibleResult out;
    out.dfa = table_dfa(L, 0, std::move(finals), std::move(table));
    out.old_to_new = std::move(old_to_new);
    return out;
}

std::vector<int> nerode_partition(const Dfa& d) {
    const int S = d.state_count;
    const long long L = d.letter_count;
    std::vector<int> block(S);
    {
        // Finality split; block ids by first appearance.
        int next = 0, fid = -1, nid = -1;
        for (int q = 0; q < S; ++q) {
            int& id = d.is_final(q) ? fid : nid;
            if (id < 0) id = next++;
            block[q] = id;
        }
    }

    const size_t width = (size_t)L + 1;
    std::vector<int> sig(width * (size_t)S);
    int count = 0;
    for (int q = 0; q < S; ++q) count = std::max(count, block[q] + 1);

    for (;;) {
        for (int q = 0; q < S; ++q) {
            int* row = sig.data() + (size_t)q * width;
            row[0] = block[q];
            for (long long a = 0; a < L; ++a) row[1 + a] = block[d.step(q, a)];
        }
        IntSpanHash h{&sig, width};
        IntSpanEq eq{&sig, width};
        std::unordered_map<size_t, int, IntSpanHash, IntSpanEq> ids(16, h, eq);
        std::vector<int> next_block(S);
        for (int q = 0; q < S; ++q) {
            auto [it, inserted] = ids.try_emplace((size_t)q, (int)ids.size());
            next_block[q] = it->second;
        }
        int next_count = (int)ids.size();
        block.swap(next_block);
        if (next_count == count) break;
        count = next_count;
    }
    return block;
}

Dfa minimize(const Dfa& d) {
    AccessibleResult acc = accessible(d);
    const Dfa& a = acc.dfa;
    std::vector<int> block = nerode_partition(a);
    int blocks = 0;
    for (int q = 0; q < a.state_count; ++q) blocks = std::max(blocks, block[q] + 1);

    const long long L = a.letter_count;
    std::vector<int> rep(blocks, -1);
    for (int q = 0; q < a.state_count; ++q)
        if (rep[block[q]] < 0) rep[block[q]] = q;

    // Canonical renumbering: BFS over blocks from the initial block.
    std::vector<int> canon(blocks, -1);
    std::vector<int> order;
    canon[block[a.initial]] = 0;
    order.push_back(block[a.initial]);
    std::vector<int> table;
    std::vector<char> finals;
    for (size_t head = 0; head < order.size(); ++head) {
        int b = order[head];
        int q = rep[b];
        for (long long x = 0; x < L; ++x) {
            int tb = block[a.step(q, x)];
            if (canon[tb] < 0) {
                canon[tb] = (int)order.size();
                order.push_back(tb);
            }
            table.push_back(canon[tb]);
        }
        finals.push_back(a.finals[(size_t)q]);
    }
    return table_dfa(L, 0, std::move(finals), std::move(table));
}

bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.letter_count != b.letter_count)
        throw argument_error("equivalent: letter counts differ");
    Dfa ma = minimize(a);
    Dfa mb = minimize(b);
    if (ma.state_count != mb.state_count) return false;
    for (int q = 0; q < ma.state_count; ++q) {
        if (ma.is_final(q) != mb.is_final(q)) return false;
        for (long long x = 0; x < ma.letter_count; ++x)
            if (ma.step(q, x) != mb.step(q, x)) return false;
    }
    return true;
}

bool accepts(const Dfa& d, const Word& w) {
    int q = d.initial;
    for (long long a : w) {
        if (a < 0 || a >= d.letter_count)
            throw argument_error("accepts: letter out of range");
        q = d.step(q, a);
    }
    return d.is_final(q);
}

Dfa preimage_dfa(const Dfa& target, const std::vector<long long>& morphism) {
    for (long long img : morphism)
        if (img < 0 || img >= target.letter_count)
            throw argument_error("preimage_dfa: morphism image out of range");
    Dfa d;
    d.letter_count = (long long)morphism.size();
    d.state_count = target.state_count;
    d.initial = target.initial;
    d.finals = target.finals;
    auto inner = target.step;
    auto phi = std::make_shared<std::vector<long long>>(morphism);
    d.step = [inner, phi](int q, long long a) { return inner(q, (*phi)[(size_t)a]); };
    return d;
}

} // namespace scstar
