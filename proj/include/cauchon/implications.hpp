#pragma once

#include <string>
#include <vector>

#include "cauchon/planes.hpp"

namespace cauchon {

// A diagram constraint between order positions.  Arrow: membership of src
// forces membership of dst.  Choice: membership of src forces membership
// of at least one of alts.  In every case src sits later in the order
// (lower Lusztig height) than the forced positions, and all positions lie
// in one column.
struct Implication {
    enum class Kind { Arrow, Choice };
    Kind kind = Kind::Arrow;
    int src = 0;
    std::vector<int> alts; // one element for an Arrow, sorted otherwise
    int column = 0;

    int dst() const { return alts.front(); }
    bool operator==(const Implication&) const = default;
};

struct ImplicationGraph {
    // per_column[j-1] holds the implications of column j, sorted.
    std::vector<std::vector<Implication>> per_column;

    std::vector<Implication> all() const;
    size_t size() const;
};

// Reads the implications off one admissible plane.  T24 planes yield
// choices only when the plane pairs the exceptional root with an earlier
// simple root alpha and beta_ex + alpha splits as beta_1 + beta_2 with
// distinct beta_1, beta_2 in the box just above beta_ex; otherwise a T24
// plane yields nothing.
std::vector<Implication> implications_from_plane(const LusztigOrder& order,
                                                 const AdmissiblePlane& plane);

// All implications of the order: the union over admissible planes,
// deduplicated and sorted per column.
ImplicationGraph derive_all(const LusztigOrder& order);

// True when every implication's positions lie in a single column and
// point from later to earlier order positions.
bool check_column_local(const LusztigOrder& order, const ImplicationGraph& g);

// Graphviz rendering: one subgraph per column, solid edges for arrows,
// dashed edges to each alternative of a choice.
std::string to_dot(const LusztigOrder& order, const ImplicationGraph& g);

} // namespace cauchon
