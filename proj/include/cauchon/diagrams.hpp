#pragma once

#include <map>
#include <vector>

#include "cauchon/implications.hpp"

namespace cauchon {

// A diagram is the sorted list of selected order positions (1-based).
using Diagram = std::vector<int>;

// Maximum column size accepted by the subset-scan enumerator; overridable
// through the CAUCHON_MAX_COLUMN_SCAN environment variable.
int max_column_scan();

// Does the position set satisfy every implication of the graph?
bool is_cauchon(const LusztigOrder& order, const ImplicationGraph& g,
                const Diagram& d);

// All admissible position subsets of column j, by exhaustive subset scan.
// Throws SizeError when the column exceeds max_column_scan().
std::vector<Diagram> enumerate_column(const LusztigOrder& order,
                                      const ImplicationGraph& g, int j);

// Number of admissible subsets of column j, computed by a dynamic program
// over the boxes of the column.  The state tracks the previous two boxes,
// which suffices because implications never reach further back.
BigInt count_column(const LusztigOrder& order, const ImplicationGraph& g, int j);

// Admissible subsets of column j bucketed by their largest position in
// the order (key 0 = empty subset).
std::map<int, BigInt> per_start_counts(const LusztigOrder& order,
                                       const ImplicationGraph& g, int j);

// Total number of diagrams; the product of the per-column counts, since
// implications are column-local.
BigInt count_all(const LusztigOrder& order, const ImplicationGraph& g);

// All diagrams, as sorted position lists; throws SizeError when the total
// exceeds the limit or a column exceeds the scan bound.
std::vector<Diagram> enumerate_all(const LusztigOrder& order,
                                   const ImplicationGraph& g,
                                   uint64_t limit = 10000000);

// The word formed by the associated simple reflections of the diagram's
// positions, in ascending order.
Word weyl_word_of_diagram(const LusztigOrder& order, const Diagram& d);

struct BijectionReport {
    uint64_t diagram_count = 0;
    bool all_reduced = false;
    bool all_distinct = false;
    bool count_matches_weyl_order = false;

    bool ok() const { return all_reduced && all_distinct && count_matches_weyl_order; }
};

// Checks that the diagram -> Weyl element map is a bijection onto W: every
// word is reduced, images are pairwise distinct, and the number of
// diagrams equals |W|.
BijectionReport verify_bijection(const LusztigOrder& order,
                                 const ImplicationGraph& g,
                                 uint64_t limit = 10000000);

} // namespace cauchon
