#pragma once

#include <utility>
#include <vector>

#include "cauchon/lusztig.hpp"

namespace cauchon {

// Isomorphism type of the rank-2 subsystem cut out by a plane.
enum class SliceType { A1A1, A2, B2, G2 };

struct Rank2Slice {
    SliceType stype;
    std::vector<Root> members; // positive roots in the plane, canonical order
};

// All positive roots in the linear span of a and b, classified by count:
// 2 -> A1+A1, 3 -> A2, 4 -> B2, 6 -> G2.  Throws DomainError if a, b are
// not linearly independent roots.
Rank2Slice rank2_slice(const RootSystem& sys, const Root& a, const Root& b);

// Structural class of an admissible plane, following the case split used
// to read implications off it:
//   T11 - A2 containing the exceptional root (from an s_D pair)
//   T12 - B2 containing the exceptional root, with a long earlier simple
//   T21 - A2 avoiding the exceptional root (beta, beta+alpha_i, alpha_i)
//   T23 - B2 with a short earlier simple (beta, beta+alpha_i, beta+2alpha_i)
//   T24 - A1+A1 (beta orthogonal to an earlier simple root)
//   G2Full - the whole G2 system (only in ambient G2)
enum class PlaneType { T11, T12, T21, T23, T24, G2Full };

const char* plane_type_name(PlaneType t);

struct AdmissiblePlane {
    PlaneType ptype;
    int column = 0;               // column of the non-simple members
    std::vector<int> members;     // 1-based order positions, ascending
    // Roles (order positions; -1 when the role is absent):
    int beta_ex_pos = -1;         // exceptional root, if a member
    int alpha_pos = -1;           // the earlier simple root, for Cond2 planes
    // Generator pairs (positions) that produced this plane.
    std::vector<std::pair<int, int>> generators;
};

// Enumerates the admissible planes of the order, deduplicated by member
// set.  A plane arises from
//   Cond1: beta in an exceptional column with partner beta' = s_D(beta)
//          and |h'(beta') - h'(beta)| = 1, or
//   Cond2: beta in column j paired with a simple root at an earlier
//          position i < j.
std::vector<AdmissiblePlane> enumerate_admissible_planes(const LusztigOrder& order);

} // namespace cauchon
