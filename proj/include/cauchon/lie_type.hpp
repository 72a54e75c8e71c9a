#pragma once

#include <string>
#include <string_view>

#include "cauchon/errors.hpp"

namespace cauchon {

enum class Family { A, B, C, D, E, F, G };

// A simple Lie type X_n.  Rank ranges follow the usual non-redundant
// conventions: A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E_6..E_8,
// F_4, G_2.
struct LieType {
    Family family;
    int rank;

    bool operator==(const LieType&) const = default;
};

inline char family_letter(Family f) {
    return "ABCDEFG"[static_cast<int>(f)];
}

inline void validate_type(LieType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: if (n >= 1) return; break;
        case Family::B: if (n >= 2) return; break;
        case Family::C: if (n >= 3) return; break;
        case Family::D: if (n >= 4) return; break;
        case Family::E: if (n >= 6 && n <= 8) return; break;
        case Family::F: if (n == 4) return; break;
        case Family::G: if (n == 2) return; break;
    }
    throw RankError(std::string("invalid rank ") + std::to_string(n) +
                    " for family " + family_letter(t.family));
}

inline std::string to_string(LieType t) {
    return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

// Parses "A5", "E8", "g2" (case-insensitive letter).  Throws RankError on
// malformed input or out-of-range rank.
inline LieType parse_type(std::string_view s) {
    if (s.size() < 2) throw RankError("cannot parse type '" + std::string(s) + "'");
    char c = s[0];
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    if (c < 'A' || c > 'G') throw RankError("unknown family '" + std::string(s) + "'");
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw RankError("cannot parse type '" + std::string(s) + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000) throw RankError("rank too large in '" + std::string(s) + "'");
    }
    LieType t{static_cast<Family>(c - 'A'), rank};
    validate_type(t);
    return t;
}

} // namespace cauchon
