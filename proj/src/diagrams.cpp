#include "cauchon/diagrams.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "cauchon/errors.hpp"

namespace cauchon {

int max_column_scan() {
    if (const char* env = std::getenv("CAUCHON_MAX_COLUMN_SCAN")) {
        int v = std::atoi(env);
        if (v > 0 && v <= 30) return v;
    }
    return 24;
}

bool is_cauchon(const LusztigOrder& order, const ImplicationGraph& g,
                const Diagram& d) {
    std::vector<char> in(order.size() + 1, 0);
    for (int p : d) {
        if (p < 1 || p > static_cast<int>(order.size()))
            throw DomainError("diagram position out of range");
        in[p] = 1;
    }
    for (const auto& col : g.per_column)
        for (const Implication& im : col) {
            if (!in[im.src]) continue;
            bool satisfied = false;
            for (int a : im.alts)
                if (in[a]) { satisfied = true; break; }
            if (im.kind == Implication::Kind::Arrow) {
                if (!satisfied) return false;
            } else if (!satisfied) {
                return false;
            }
        }
    return true;
}

namespace {

// A column's constraint system over local indices 0..m-1 (ascending order
// positions).
struct LocalColumn {
    std::vector<int> positions; // global, ascending
    struct Imp {
        bool choice = false;
        int src = 0;          // local index
        uint64_t mask = 0;    // local-index bits of the forced side
    };
    std::vector<Imp> imps;
};

LocalColumn localize(const LusztigOrder& order, const ImplicationGraph& g, int j) {
    LocalColumn lc;
    lc.positions = order.column_positions(j);
    std::map<int, int> local;
    for (size_t i = 0; i < lc.positions.size(); ++i)
        local[lc.positions[i]] = static_cast<int>(i);
    for (const Implication& im : g.per_column[j - 1]) {
        LocalColumn::Imp li;
        li.choice = im.kind == Implication::Kind::Choice;
        li.src = local.at(im.src);
        for (int a : im.alts) li.mask |= 1ull << local.at(a);
        lc.imps.push_back(li);
    }
    return lc;
}

// Box layout of a column as local-index spans, in entry order.
std::vector<std::pair<int, int>> box_spans(const LusztigOrder& order, int j) {
    std::vector<std::pair<int, int>> spans; // [begin, end) local indices
    const std::vector<int>& pos = order.column_positions(j);
    for (size_t i = 0; i < pos.size(); ++i) {
        int b = order.at(pos[i]).box;
        if (static_cast<int>(spans.size()) < b) spans.emplace_back(static_cast<int>(i), 0);
        spans[b - 1].second = static_cast<int>(i) + 1;
    }
    return spans;
}

// Counts admissible subsets by sweeping the boxes with a window of the
// previous two box masks.  When `cap` is set, the sweep stops after the
// box containing local index cap, that index is forced in, and later
// indices of its box are forced out (counting subsets whose maximum is
// exactly cap).
BigInt dp_count(const LusztigOrder& order, const ImplicationGraph& g, int j,
                int cap = -1) {
    LocalColumn lc = localize(order, g, j);
    std::vector<std::pair<int, int>> spans = box_spans(order, j);
    if (lc.positions.empty()) return 1;

    // Per box: the implications whose source lies in it, with the forced
    // mask shifted relative to the box at the given back distance.
    struct BoxImp {
        bool choice;
        uint64_t srcbit;   // within this box
        int back;          // 1 or 2 boxes earlier
        uint64_t mask;     // within that box
    };
    std::vector<std::vector<BoxImp>> by_box(spans.size());
    auto box_of_local = [&](int t) {
        for (size_t b = 0; b < spans.size(); ++b)
            if (t >= spans[b].first && t < spans[b].second) return static_cast<int>(b);
        throw DomainError("local index outside its column");
    };
    for (const LocalColumn::Imp& li : lc.imps) {
        int sb = box_of_local(li.src);
        uint64_t m = li.mask;
        int tb = -1;
        for (int t = 0; t < static_cast<int>(lc.positions.size()); ++t)
            if (m & (1ull << t)) {
                int b = box_of_local(t);
                if (tb == -1) tb = b;
                else if (tb != b) throw DomainError("implication spans several target boxes");
            }
        int back = sb - tb;
        if (back < 1 || back > 2)
            throw DomainError("implication reaches beyond the two-box window");
        BoxImp bi;
        bi.choice = li.choice;
        bi.srcbit = 1ull << (li.src - spans[sb].first);
        bi.back = back;
        bi.mask = m >> spans[tb].first;
        by_box[sb].push_back(bi);
    }

    int last_box = static_cast<int>(spans.size()) - 1;
    uint64_t cap_allowed = ~0ull;
    if (cap >= 0) {
        last_box = box_of_local(cap);
        int local_in_box = cap - spans[last_box].first;
        cap_allowed = (1ull << (local_in_box + 1)) - 1; // later bits forced out
    }

    // State: (mask two boxes back, mask one box back) -> count.
    std::map<std::pair<uint64_t, uint64_t>, BigInt> state;
    state[{0, 0}] = 1;
    for (int b = 0; b <= last_box; ++b) {
        int width = spans[b].second - spans[b].first;
        uint64_t top = 1ull << width;
        std::map<std::pair<uint64_t, uint64_t>, BigInt> next;
        for (const auto& [key, cnt] : state) {
            auto [prev2, prev1] = key;
            for (uint64_t m = 0; m < top; ++m) {
                if (b == last_box && cap >= 0) {
                    uint64_t need = 1ull << (cap - spans[b].first);
                    if ((m & need) == 0 || (m & ~cap_allowed) != 0) continue;
                }
                bool ok = true;
                for (const BoxImp& bi : by_box[b]) {
                    if ((m & bi.srcbit) == 0) continue;
                    uint64_t against = bi.back == 1 ? prev1 : prev2;
                    if ((against & bi.mask) == 0) { ok = false; break; }
                    if (!bi.choice && (against & bi.mask) != bi.mask) { ok = false; break; }
                }
                if (ok) next[{prev1, m}] += cnt;
            }
        }
        state = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [key, cnt] : state) total += cnt;
    return total;
}

} // namespace

std::vector<Diagram> enumerate_column(const LusztigOrder& order,
                                      const ImplicationGraph& g, int j) {
    LocalColumn lc = localize(order, g, j);
    const int m = static_cast<int>(lc.positions.size());
    if (m > max_column_scan())
        throw SizeError("column " + std::to_string(j) + " has " + std::to_string(m) +
                        " roots, above the subset-scan bound " +
                        std::to_string(max_column_scan()));
    std::vector<Diagram> out;
    for (uint64_t s = 0; s < (1ull << m); ++s) {
        bool ok = true;
        for (const LocalColumn::Imp& li : lc.imps) {
            if ((s & (1ull << li.src)) == 0) continue;
            uint64_t hit = s & li.mask;
            if (li.choice ? hit == 0 : hit != li.mask) { ok = false; break; }
        }
        if (!ok) continue;
        Diagram d;
        for (int t = 0; t < m; ++t)
            if (s & (1ull << t)) d.push_back(lc.positions[t]);
        out.push_back(std::move(d));
    }
    return out;
}

BigInt count_column(const LusztigOrder& order, const ImplicationGraph& g, int j) {
    return dp_count(order, g, j);
}

std::map<int, BigInt> per_start_counts(const LusztigOrder& order,
                                       const ImplicationGraph& g, int j) {
    std::map<int, BigInt> out;
    out[0] = 1; // the empty subset
    const std::vector<int>& pos = order.column_positions(j);
    for (int t = 0; t < static_cast<int>(pos.size()); ++t)
        out[pos[t]] = dp_count(order, g, j, t);
    return out;
}

BigInt count_all(const LusztigOrder& order, const ImplicationGraph& g) {
    BigInt total = 1;
    for (int j = 1; j <= order.sys.rank(); ++j) total *= count_column(order, g, j);
    return total;
}

std::vector<Diagram> enumerate_all(const LusztigOrder& order,
                                   const ImplicationGraph& g, uint64_t limit) {
    BigInt total = count_all(order, g);
    if (total > limit)
        throw SizeError("diagram count " + total.str() + " exceeds the limit " +
                        std::to_string(limit));
    std::vector<Diagram> acc{{}};
    for (int j = 1; j <= order.sys.rank(); ++j) {
        std::vector<Diagram> per_col = enumerate_column(order, g, j);
        std::vector<Diagram> next;
        next.reserve(acc.size() * per_col.size());
        for (const Diagram& base : acc)
            for (const Diagram& add : per_col) {
                Diagram d = base;
                d.insert(d.end(), add.begin(), add.end());
                next.push_back(std::move(d));
            }
        acc = std::move(next);
    }
    for (Diagram& d : acc) std::sort(d.begin(), d.end());
    return acc;
}

Word weyl_word_of_diagram(const LusztigOrder& order, const Diagram& d) {
    Diagram sorted = d;
    std::sort(sorted.begin(), sorted.end());
    Word w;
    for (int p : sorted) w.push_back(order.at(p).assoc_simple);
    return w;
}

BijectionReport verify_bijection(const LusztigOrder& order,
                                 const ImplicationGraph& g, uint64_t limit) {
    BijectionReport rep;
    std::vector<Diagram> all = enumerate_all(order, g, limit);
    rep.diagram_count = all.size();
    rep.all_reduced = true;
    std::unordered_set<WeylElement, WeylHash, WeylEq> images;
    for (const Diagram& d : all) {
        Word w = weyl_word_of_diagram(order, d);
        WeylElement elt = word_product(order.sys, w);
        if (length(order.sys, elt) != static_cast<int>(w.size())) rep.all_reduced = false;
        images.insert(elt);
    }
    rep.all_distinct = images.size() == all.size();
    rep.count_matches_weyl_order = BigInt(all.size()) == weyl_order(order.sys.type());
    return rep;
}

} // namespace cauchon
