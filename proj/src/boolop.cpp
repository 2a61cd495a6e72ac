#include "scstar/boolop.hpp"

#include <utility>

namespace scstar {

namespace {

const std::pair<std::string_view, const char*> kNames[] = {
    {"and", "0001"},    {"or", "0111"},     {"xor", "0110"},
    {"nand", "1110"},   {"nor", "1000"},    {"xnor", "1001"},
    {"andnot", "0010"}, {"notand", "0100"}, {"ornot", "1011"},
    {"notor", "1101"},
};

std::optional<BoolOp> from_bits(std::string_view bits) {
    if (bits.size() != 4) return std::nullopt;
    BoolOp op;
    for (int i = 0; i < 4; ++i) {
        if (bits[i] != '0' && bits[i] != '1') return std::nullopt;
        op.truth[i] = bits[i] == '1';
    }
    return op;
}

} // namespace

OpClass classify_op(const BoolOp& op) {
    const auto& t = op.truth;
    bool ignores_first = t[0] == t[2] && t[1] == t[3];
    bool ignores_second = t[0] == t[1] && t[2] == t[3];
    if (ignores_first || ignores_second) return {OpKind::Degenerate, false, false};

    int ones = (int)t[0] + t[1] + t[2] + t[3];
    OpKind kind = ones == 1 ? OpKind::A : ones == 3 ? OpKind::O : OpKind::X;

    for (int c1 = 0; c1 <= 1; ++c1)
        for (int c2 = 0; c2 <= 1; ++c2) {
            BoolOp base;
            for (int a = 0; a <= 1; ++a)
                for (int b = 0; b <= 1; ++b)
                    base.truth[a * 2 + b] = op.apply(a ^ c1, b ^ c2);
            if (base == op_and || base == op_xor || base == op_or)
                return {kind, c1 != 0, c2 != 0};
        }
    return {OpKind::Degenerate, false, false}; // unreachable for non-degenerate tables
}

std::optional<BoolOp> parse_op(std::string_view spec) {
    for (const auto& [name, bits] : kNames)
        if (spec == name) return from_bits(bits);
    return from_bits(spec);
}

std::string op_name(const BoolOp& op) {
    std::string bits(4, '0');
    for (int i = 0; i < 4; ++i) bits[i] = op.truth[i] ? '1' : '0';
    for (const auto& [name, nbits] : kNames)
        if (bits == nbits) return std::string(name);
    return bits;
}

} // namespace scstar
