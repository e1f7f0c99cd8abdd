#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace opmult {

inline constexpr std::string_view tool_version = "0.1.0";

/// Indexing and sign conventions that change the meaning of archived output.
inline constexpr std::string_view convention_ledger =
    "slots: 0-based insertion x o_j y, 0 <= j < arity(x)\n"
    "codegeneracy: s^i x = x o_i e, 0-based (1-based label s^{i+1})\n"
    "coface: d^0 x = mu o_1 x; d^i x = x o_{i-1} mu; d^{n+1} x = mu o_0 x\n"
    "perm insertion: position-based block substitution\n"
    "bruhat: packet = lexicographic (d+1)-subsets; consistency = prefix or suffix\n"
    "molecule insertion: boundary gaps merge; nucleus positions cumulative\n"
    "big-bruhat: bruhat part inserted at letter slot start(nucleus j+1) - 1\n"
    "circle: sum_i (-1)^{(n+1) i} x o_i y\n"
    "bracket: x o y - (-1)^{(m-1)(n-1)} y o x; Lie degree on V[1] = arity - 1\n"
    "brace: sign exponent sum_p (|y_p| - 1)(i_p + offset)\n"
    "differential: d = sum_i (-1)^i d^i; s = sum_i (-1)^i s^i\n"
    "normalization: quotient by span of d^i images, 1 <= i <= n\n";

/// FNV-1a 64 of the ledger, as 16 hex digits.
inline std::string convention_hash()
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : convention_ledger) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace opmult
