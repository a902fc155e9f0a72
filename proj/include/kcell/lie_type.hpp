/**
 * Simple Lie types (family letter + rank) with parsing and validation.
 */
#ifndef KCELL_LIE_TYPE_HPP
#define KCELL_LIE_TYPE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace kcell {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/** A Dynkin type such as A2, B3 or G2. */
struct LieType {
    Family family;
    int rank;

    bool operator==(const LieType&) const = default;
};

/** True iff (family, rank) names an actual Dynkin diagram. */
inline bool is_valid(LieType t) {
    switch (t.family) {
        case Family::A: return t.rank >= 1;
        case Family::B: return t.rank >= 2;
        case Family::C: return t.rank >= 2;
        case Family::D: return t.rank >= 3;
        case Family::E: return t.rank >= 6 && t.rank <= 8;
        case Family::F: return t.rank == 4;
        case Family::G: return t.rank == 2;
    }
    return false;
}

inline std::string to_string(LieType t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

/**
 * Parse a type string like "A2", "g2" or "B3" (case-insensitive).
 * Throws ParseError on malformed input or an invalid (family, rank) pair.
 */
inline LieType parse_lie_type(std::string_view s) {
    if (s.size() < 2)
        throw ParseError("Lie type must be a family letter followed by a rank, e.g. \"A2\"");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G')
        throw ParseError("unknown Lie family '" + std::string(1, s[0]) + "'");
    int rank = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ParseError("malformed rank in Lie type \"" + std::string(s) + "\"");
        rank = rank * 10 + (s[k] - '0');
        if (rank > 1000)
            throw ParseError("rank out of range in Lie type \"" + std::string(s) + "\"");
    }
    const LieType t{static_cast<Family>(f), rank};
    if (!is_valid(t))
        throw ParseError("invalid Lie type \"" + std::string(s) + "\"");
    return t;
}

} // namespace kcell

#endif // KCELL_LIE_TYPE_HPP
