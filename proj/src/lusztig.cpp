#include "cauchon/lusztig.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cauchon/errors.hpp"

namespace cauchon {

Rational Rational::of(int64_t n, int64_t d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return Rational{n / g, d / g};
}

GoodNumbering default_good_numbering(LieType type) {
    validate_type(type);
    const int n = type.rank;
    GoodNumbering num;
    num.perm.resize(n);
    std::iota(num.perm.begin(), num.perm.end(), 1);
    if (type.family == Family::F) {
        num.perm = {4, 3, 2, 1};
    } else if (type.family == Family::E) {
        num.perm = {2, 5, 4, 3, 1, 6};
        for (int p = 7; p <= n; ++p) num.perm.push_back(p);
    }
    return num;
}

int column_of(const Root& r, const GoodNumbering& num) {
    int col = 0;
    for (int p = 1; p <= static_cast<int>(num.perm.size()); ++p)
        if (r(num.perm[p - 1] - 1) != 0) col = p;
    return col;
}

int k_of(const Root& r, const GoodNumbering& num) {
    return r(num.perm[column_of(r, num) - 1] - 1);
}

namespace {

// Groups the positive roots into columns and checks the ordinary /
// exceptional dichotomy.  Returns false instead of throwing when
// `probe` is set.
bool build_columns(const RootSystem& sys, const GoodNumbering& num, bool probe,
                   std::vector<ColumnData>* out) {
    const int n = sys.rank();
    if (static_cast<int>(num.perm.size()) != n) {
        if (probe) return false;
        throw NumberingError("numbering has wrong size");
    }
    {
        std::vector<int> sorted = num.perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[i] != i + 1) {
                if (probe) return false;
                throw NumberingError("numbering is not a permutation of 1..rank");
            }
    }

    std::vector<ColumnData> cols(n);
    for (int j = 1; j <= n; ++j) cols[j - 1].index = j;
    for (const Root& r : sys.positive_roots()) {
        int j = column_of(r, num);
        int k = k_of(r, num);
        ColumnData& c = cols[j - 1];
        if (k == 2) {
            if (c.beta_ex.size() != 0) {
                if (probe) return false;
                throw NumberingError("column " + std::to_string(j) +
                                     " has two k=2 roots");
            }
            c.beta_ex = r;
        } else if (k != 1) {
            if (probe) return false;
            throw NumberingError("column " + std::to_string(j) +
                                 " has a root with k=" + std::to_string(k));
        }
        c.roots.push_back(r);
    }
    for (ColumnData& c : cols) {
        c.kind = c.beta_ex.size() != 0 ? ColumnKind::Exceptional : ColumnKind::Ordinary;
        c.lheights.resize(c.roots.size());
        std::vector<size_t> idx(c.roots.size());
        std::iota(idx.begin(), idx.end(), 0u);
        auto lh = [&](const Root& r) { return Rational::of(r.sum(), k_of(r, num)); };
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            Rational la = lh(c.roots[a]), lb = lh(c.roots[b]);
            if (!(la == lb)) return lb < la;
            return root_lex_less(c.roots[a], c.roots[b]);
        });
        std::vector<Root> sorted;
        for (size_t i : idx) sorted.push_back(c.roots[i]);
        c.roots = std::move(sorted);
        for (size_t i = 0; i < c.roots.size(); ++i) c.lheights[i] = lh(c.roots[i]);
        for (size_t i = 0; i < c.roots.size(); ++i) {
            if (i == 0 || !(c.lheights[i] == c.lheights[i - 1]))
                c.boxes.emplace_back();
            c.boxes.back().push_back(static_cast<int>(i));
        }
    }
    if (out) *out = std::move(cols);
    return true;
}

} // namespace

bool is_good_numbering(const RootSystem& sys, const GoodNumbering& num) {
    return build_columns(sys, num, /*probe=*/true, nullptr);
}

std::vector<ColumnData> columns(const RootSystem& sys, const GoodNumbering& num) {
    std::vector<ColumnData> cols;
    build_columns(sys, num, /*probe=*/false, &cols);
    return cols;
}

Root s_d_partner(const RootSystem& sys, const ColumnData& col, const Root& beta) {
    if (col.kind != ColumnKind::Exceptional)
        throw DomainError("s_d_partner in an ordinary column");
    if (beta == col.beta_ex)
        throw DomainError("s_d_partner of the exceptional root");
    bool member = false;
    for (const Root& r : col.roots)
        if (r == beta) { member = true; break; }
    if (!member) throw DomainError("s_d_partner: root not in the column");
    Root partner = col.beta_ex - beta;
    // This is the reflection across the line spanned by beta_ex:
    // 2(beta, beta_ex) = (beta_ex, beta_ex) for every non-exceptional
    // root of the column.
    if (2 * sys.inner_product(beta, col.beta_ex) !=
        sys.inner_product(col.beta_ex, col.beta_ex))
        throw DomainError("s_d_partner: column structure violated");
    return partner;
}

int LusztigOrder::position_of(const Root& r) const {
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i].root == r) return static_cast<int>(i) + 1;
    return -1;
}

std::vector<int> LusztigOrder::column_positions(int j) const {
    std::vector<int> out;
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i].column == j) out.push_back(static_cast<int>(i) + 1);
    return out;
}

LusztigOrder word_to_order(const RootSystem& sys, const GoodNumbering& num,
                           const Word& word) {
    const size_t nroots = sys.positive_roots().size();
    if (word.size() != nroots)
        throw WordError("word length " + std::to_string(word.size()) +
                        " does not match the number of positive roots " +
                        std::to_string(nroots));
    std::vector<ColumnData> cols = columns(sys, num);

    LusztigOrder order{sys, num, {}, {}, {}};
    order.word = word;

    // beta_k = s_{i1} ... s_{i_{k-1}} (alpha_{ik}).
    WeylElement prefix = weyl_identity(sys);
    std::unordered_map<Root, int, RootHash, RootEq> seen;
    for (size_t k = 0; k < word.size(); ++k) {
        int letter = word[k];
        if (letter < 1 || letter > sys.rank())
            throw WordError("word letter out of range");
        Root beta = apply(prefix, sys.simple_root(letter));
        if (!sys.is_positive_root(beta))
            throw WordError("word is not reduced (negative root at position " +
                            std::to_string(k + 1) + ")");
        if (!seen.emplace(beta, static_cast<int>(k)).second)
            throw WordError("word is not reduced (repeated root)");
        OrderEntry e;
        e.root = beta;
        e.column = column_of(beta, num);
        e.height = beta.sum();
        e.lheight = Rational::of(e.height, k_of(beta, num));
        e.assoc_simple = letter;
        order.entries.push_back(std::move(e));
        prefix = prefix * simple_reflection(sys, letter);
    }

    // Lusztig-order shape: column indices ascend, Lusztig heights descend
    // within a column.
    for (size_t k = 1; k < order.entries.size(); ++k) {
        const OrderEntry& prev = order.entries[k - 1];
        const OrderEntry& cur = order.entries[k];
        if (cur.column < prev.column)
            throw OrderError("columns are not ascending at position " +
                             std::to_string(k + 1));
        if (cur.column == prev.column && cur.lheight > prev.lheight)
            throw OrderError("Lusztig heights increase inside column " +
                             std::to_string(cur.column));
    }

    // Box numbers follow the actual entry order; re-thread the column
    // views so that their root lists agree with it.
    int boxno = 0;
    for (size_t k = 0; k < order.entries.size(); ++k) {
        OrderEntry& e = order.entries[k];
        if (k == 0 || e.column != order.entries[k - 1].column)
            boxno = 1;
        else if (!(e.lheight == order.entries[k - 1].lheight))
            ++boxno;
        e.box = boxno;
    }
    for (ColumnData& c : cols) {
        c.roots.clear();
        c.lheights.clear();
        c.boxes.clear();
    }
    for (const OrderEntry& e : order.entries) {
        ColumnData& c = cols[e.column - 1];
        if (static_cast<int>(c.boxes.size()) < e.box) c.boxes.emplace_back();
        c.boxes.back().push_back(static_cast<int>(c.roots.size()));
        c.roots.push_back(e.root);
        c.lheights.push_back(e.lheight);
    }
    order.columns_ = std::move(cols);
    return order;
}

Word order_to_word(const RootSystem& sys, const std::vector<Root>& roots) {
    Word word;
    WeylElement inv = weyl_identity(sys); // inverse of the prefix product
    for (size_t k = 0; k < roots.size(); ++k) {
        Root alpha = apply(inv, roots[k]);
        int letter = 0;
        for (int i = 1; i <= sys.rank(); ++i)
            if (alpha == sys.simple_root(i)) { letter = i; break; }
        if (letter == 0)
            throw WordError("sequence does not come from a reduced word "
                            "(non-simple pullback at position " +
                            std::to_string(k + 1) + ")");
        word.push_back(letter);
        inv = simple_reflection(sys, letter) * inv;
    }
    return word;
}

bool is_convex(const RootSystem& sys, const std::vector<Root>& roots) {
    std::unordered_map<Root, int, RootHash, RootEq> pos;
    for (size_t i = 0; i < roots.size(); ++i) pos.emplace(roots[i], static_cast<int>(i));
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            Root sum = roots[i] + roots[j];
            auto it = pos.find(sum);
            if (it == pos.end()) {
                if (sys.is_positive_root(sum)) return false;
                continue;
            }
            size_t k = static_cast<size_t>(it->second);
            if (!(i < k && k < j)) return false;
        }
    return true;
}

Word canonical_word(LieType type) {
    validate_type(type);
    const int n = type.rank;
    Word w;
    switch (type.family) {
        case Family::A:
            for (int j = 1; j <= n; ++j)
                for (int i = j; i >= 1; --i) w.push_back(i);
            break;
        case Family::B:
        case Family::C:
            w.push_back(1);
            for (int j = 2; j <= n; ++j) {
                for (int i = j; i >= 1; --i) w.push_back(i);
                for (int i = 2; i <= j; ++i) w.push_back(i);
            }
            break;
        case Family::D:
            w = {1, 2};
            for (int j = 3; j <= n; ++j) {
                for (int i = j; i >= 3; --i) w.push_back(i);
                w.push_back(1);
                w.push_back(2);
                for (int i = 3; i <= j; ++i) w.push_back(i);
            }
            break;
        case Family::G:
            w = {1, 2, 1, 2, 1, 2};
            break;
        case Family::F:
            w = {4, 3, 4, 2, 3, 4, 2, 3, 2, 1, 2, 3, 4, 2, 3, 1, 2, 1, 3, 4, 2, 3, 2, 1};
            break;
        case Family::E: {
            // The E6 word starts with the D5 word relabeled along
            // 1->2, 2->5, 3->4, 4->3, 5->1; E7 and E8 extend by one
            // column each.
            Word d5 = canonical_word(LieType{Family::D, 5});
            const int relabel[6] = {0, 2, 5, 4, 3, 1};
            for (int letter : d5) w.push_back(relabel[letter]);
            const Word col6 = {6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 2, 5, 4, 3, 1};
            w.insert(w.end(), col6.begin(), col6.end());
            if (n >= 7) {
                const Word col7 = {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 2, 5,
                                   7, 4, 6, 3, 5, 1, 4, 2, 3, 4, 5, 6, 7};
                w.insert(w.end(), col7.begin(), col7.end());
            }
            if (n == 8) {
                const Word col8 = {8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 2, 5,
                                   7, 4, 6, 8, 3, 5, 7, 1, 4, 6, 3, 2, 5, 4, 5,
                                   2, 3, 6, 1, 4, 7, 3, 5, 8, 4, 6, 2, 5, 7, 4,
                                   6, 3, 5, 1, 4, 2, 3, 4, 5, 6, 7, 8};
                w.insert(w.end(), col8.begin(), col8.end());
            }
            break;
        }
    }
    return w;
}

LusztigOrder canonical_order(LieType type) {
    RootSystem sys(type);
    return word_to_order(sys, default_good_numbering(type), canonical_word(type));
}

LusztigOrder reorder_within_boxes(
    const LusztigOrder& order,
    const std::vector<std::vector<std::vector<int>>>& perms) {
    std::vector<Root> roots;
    for (const ColumnData& c : order.columns_) {
        size_t ci = static_cast<size_t>(c.index) - 1;
        for (size_t b = 0; b < c.boxes.size(); ++b) {
            std::vector<int> local = c.boxes[b];
            if (ci < perms.size() && b < perms[ci].size() && !perms[ci][b].empty()) {
                const std::vector<int>& p = perms[ci][b];
                if (p.size() != local.size())
                    throw OrderError("box permutation has wrong size");
                std::vector<int> shuffled(local.size());
                for (size_t t = 0; t < p.size(); ++t) shuffled[t] = local[p[t]];
                local = shuffled;
            }
            for (int idx : local) roots.push_back(c.roots[idx]);
        }
    }
    Word w = order_to_word(order.sys, roots);
    return word_to_order(order.sys, order.numbering, w);
}

} // namespace cauchon
