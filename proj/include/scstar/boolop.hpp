#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace scstar {

// One of the 16 binary Boolean functions, as a truth table over
// (a,b) in order (0,0),(0,1),(1,0),(1,1).
struct BoolOp {
    std::array<bool, 4> truth{};

    bool apply(bool a, bool b) const { return truth[(a ? 2 : 0) + (b ? 1 : 0)]; }
    bool operator==(const BoolOp&) const = default;
};

enum class OpKind { A, X, O, Degenerate };

// A: exactly one 1 in the truth table. X: the two 1s on a diagonal.
// O: exactly three 1s. Degenerate: the function ignores an argument
// (which covers the constants).
struct OpClass {
    OpKind kind = OpKind::Degenerate;
    bool complement_first = false;
    bool complement_second = false;
};

// The complement flags (c1,c2) satisfy a op b = base(a xor c1, b xor c2) with
// base one of and/xor/or; for kind X both valid flag pairs exist and the
// lexicographically smallest is returned.
OpClass classify_op(const BoolOp& op);

inline constexpr BoolOp op_and{{false, false, false, true}};
inline constexpr BoolOp op_or{{false, true, true, true}};
inline constexpr BoolOp op_xor{{false, true, true, false}};

// Accepts the ten non-degenerate names (and, or, xor, nand, nor, xnor,
// andnot, notand, ornot, notor) and raw 4-character 0/1 truth tables in
// (v00,v01,v10,v11) order.
std::optional<BoolOp> parse_op(std::string_view spec);

// Canonical name when the table has one, else the 4-character bit string.
std::string op_name(const BoolOp& op);

} // namespace scstar
