#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cauchon/root_system.hpp"
#include "cauchon/weyl.hpp"

namespace cauchon {

// Exact rational for Lusztig heights (denominators are 1 or 2 in
// practice, but the arithmetic is general).
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    static Rational of(int64_t n, int64_t d);
    friend bool operator==(const Rational&, const Rational&) = default;
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator>(const Rational& o) const { return o < *this; }
    Rational operator-(const Rational& o) const {
        return of(num * o.den - o.num * den, den * o.den);
    }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// A numbering of the simple roots: perm[p-1] is the Bourbaki label sitting
// at position p.  Columns are taken with respect to positions.
struct GoodNumbering {
    std::vector<int> perm;

    int label_at(int pos) const { return perm[pos - 1]; }
    int position_of(int label) const {
        for (int p = 1; p <= static_cast<int>(perm.size()); ++p)
            if (perm[p - 1] == label) return p;
        return -1;
    }
};

GoodNumbering default_good_numbering(LieType type);

// Column of a root: the largest position whose label carries a nonzero
// coefficient.  k is that coefficient.
int column_of(const Root& r, const GoodNumbering& num);
int k_of(const Root& r, const GoodNumbering& num);

enum class ColumnKind { Ordinary, Exceptional };

struct ColumnData {
    int index = 0; // 1-based column number
    ColumnKind kind = ColumnKind::Ordinary;
    Root beta_ex;                        // size 0 when ordinary
    std::vector<Root> roots;             // descending Lusztig height
    std::vector<Rational> lheights;      // parallel to roots
    std::vector<std::vector<int>> boxes; // indices into roots, per box
};

// Checks that every column is ordinary or exceptional under the numbering.
bool is_good_numbering(const RootSystem& sys, const GoodNumbering& num);

// Column/box decomposition of the positive roots; throws NumberingError
// unless the numbering is good.  Within a box the root order is the
// canonical lexicographic one.
std::vector<ColumnData> columns(const RootSystem& sys, const GoodNumbering& num);

// The partner of beta under the reflection across the line spanned by the
// exceptional root of its column: s_D(beta) = beta_ex - beta.  Throws
// DomainError if the column is ordinary or beta is beta_ex or not in the
// column.
Root s_d_partner(const RootSystem& sys, const ColumnData& col, const Root& beta);

struct OrderEntry {
    Root root;
    int column = 0;      // 1-based
    int box = 0;         // 1-based within the column
    int height = 0;
    Rational lheight;
    int assoc_simple = 0; // the word letter producing this root
};

// A Lusztig order: an enumeration of the positive roots coming from a
// reduced word of the longest element, grouped by ascending column with
// Lusztig heights descending inside each column.
struct LusztigOrder {
    RootSystem sys;
    GoodNumbering numbering;
    Word word;
    std::vector<OrderEntry> entries; // entry k-1 has position k

    size_t size() const { return entries.size(); }
    int position_of(const Root& r) const; // 1-based; -1 if absent
    const OrderEntry& at(int pos) const { return entries[pos - 1]; }
    const ColumnData& column(int j) const { return columns_[j - 1]; }
    const std::vector<ColumnData>& all_columns() const { return columns_; }
    // Positions (1-based, ascending) of the roots in column j.
    std::vector<int> column_positions(int j) const;

    std::vector<ColumnData> columns_; // boxes ordered as in the entries
};

// Builds the order determined by a reduced word of the longest element:
// beta_k = s_{i1}...s_{i_{k-1}}(alpha_{ik}).  Throws WordError when the
// word is not a reduced word for w0, NumberingError when the numbering is
// not good, and OrderError when the resulting enumeration is not a
// Lusztig order.
LusztigOrder word_to_order(const RootSystem& sys, const GoodNumbering& num,
                           const Word& word);

// The reduced word recovered greedily from an enumeration of the positive
// roots: letter k is the label of w_{k-1}^{-1}(beta_k), which must be
// simple.
Word order_to_word(const RootSystem& sys, const std::vector<Root>& roots);

// Convexity: whenever beta_i + beta_j is a positive root it occurs
// between positions i and j.
bool is_convex(const RootSystem& sys, const std::vector<Root>& roots);

// The reduced word of w0 used throughout for this type (per-family
// closed form; E-types extend each other).
Word canonical_word(LieType type);

LusztigOrder canonical_order(LieType type);

// Rebuilds the order after permuting roots inside boxes only; perms[c][b]
// is a permutation of the box's local indices.  Any such reordering is
// again a Lusztig order.
LusztigOrder reorder_within_boxes(const LusztigOrder& order,
                                  const std::vector<std::vector<std::vector<int>>>& perms);

} // namespace cauchon
