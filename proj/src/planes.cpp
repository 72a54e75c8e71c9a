#include "cauchon/planes.hpp"

#include <algorithm>
#include <map>

#include "cauchon/errors.hpp"

namespace cauchon {

namespace {

// Is r in the rational span of a and b?  Solved with a 2x2 Cramer system
// over the coordinate rows, then verified on the full vectors.
bool in_span(const Root& r, const Root& a, const Root& b) {
    const int n = static_cast<int>(a.size());
    int ri = -1, rj = -1;
    int64_t det = 0;
    for (int i = 0; i < n && det == 0; ++i)
        for (int j = i + 1; j < n && det == 0; ++j) {
            det = static_cast<int64_t>(a(i)) * b(j) - static_cast<int64_t>(a(j)) * b(i);
            if (det != 0) { ri = i; rj = j; }
        }
    if (det == 0) throw DomainError("rank2_slice: generators are collinear");
    // x = (r_i b_j - r_j b_i)/det, y = (a_i r_j - a_j r_i)/det.
    int64_t xn = static_cast<int64_t>(r(ri)) * b(rj) - static_cast<int64_t>(r(rj)) * b(ri);
    int64_t yn = static_cast<int64_t>(a(ri)) * r(rj) - static_cast<int64_t>(a(rj)) * r(ri);
    for (int t = 0; t < n; ++t)
        if (xn * a(t) + yn * b(t) != det * r(t)) return false;
    return true;
}

} // namespace

Rank2Slice rank2_slice(const RootSystem& sys, const Root& a, const Root& b) {
    if (!sys.is_root(a) || !sys.is_root(b))
        throw DomainError("rank2_slice: generators must be roots");
    Rank2Slice s;
    for (const Root& r : sys.positive_roots())
        if (in_span(r, a, b)) s.members.push_back(r);
    switch (s.members.size()) {
        case 2: s.stype = SliceType::A1A1; break;
        case 3: s.stype = SliceType::A2; break;
        case 4: s.stype = SliceType::B2; break;
        case 6: s.stype = SliceType::G2; break;
        default:
            throw DomainError("rank2_slice: unexpected member count " +
                              std::to_string(s.members.size()));
    }
    return s;
}

const char* plane_type_name(PlaneType t) {
    switch (t) {
        case PlaneType::T11: return "T11";
        case PlaneType::T12: return "T12";
        case PlaneType::T21: return "T21";
        case PlaneType::T23: return "T23";
        case PlaneType::T24: return "T24";
        case PlaneType::G2Full: return "G2Full";
    }
    return "?";
}

std::vector<AdmissiblePlane> enumerate_admissible_planes(const LusztigOrder& order) {
    const RootSystem& sys = order.sys;
    const GoodNumbering& num = order.numbering;

    std::map<std::vector<int>, AdmissiblePlane> dedup;

    auto add_plane = [&](const Root& g1, const Root& g2) {
        Rank2Slice slice = rank2_slice(sys, g1, g2);
        std::vector<int> members;
        for (const Root& r : slice.members) members.push_back(order.position_of(r));
        std::sort(members.begin(), members.end());

        auto [it, inserted] = dedup.try_emplace(members);
        AdmissiblePlane& p = it->second;
        if (inserted) {
            p.members = members;
            int col = 0;
            for (const Root& r : slice.members) col = std::max(col, column_of(r, num));
            p.column = col;
            const ColumnData& cd = order.column(col);
            for (const Root& r : slice.members) {
                if (cd.kind == ColumnKind::Exceptional && r == cd.beta_ex)
                    p.beta_ex_pos = order.position_of(r);
                if (column_of(r, num) < col && r.sum() == 1)
                    p.alpha_pos = order.position_of(r);
            }
            bool has_ex = p.beta_ex_pos != -1;
            switch (slice.stype) {
                case SliceType::A1A1: p.ptype = PlaneType::T24; break;
                case SliceType::A2: p.ptype = has_ex ? PlaneType::T11 : PlaneType::T21; break;
                case SliceType::B2: p.ptype = has_ex ? PlaneType::T12 : PlaneType::T23; break;
                case SliceType::G2: p.ptype = PlaneType::G2Full; break;
            }
        }
        std::pair<int, int> gen{order.position_of(g1), order.position_of(g2)};
        if (gen.first > gen.second) std::swap(gen.first, gen.second);
        if (std::find(p.generators.begin(), p.generators.end(), gen) == p.generators.end())
            p.generators.push_back(gen);
    };

    // Cond1: s_D pairs at Lusztig-height distance exactly 1 inside an
    // exceptional column.
    for (const ColumnData& c : order.all_columns()) {
        if (c.kind != ColumnKind::Exceptional) continue;
        for (size_t i = 0; i < c.roots.size(); ++i) {
            const Root& beta = c.roots[i];
            if (beta == c.beta_ex) continue;
            Root partner = s_d_partner(order.sys, c, beta);
            int ppos = order.position_of(partner);
            if (ppos == -1) continue;
            Rational diff = c.lheights[i] - order.at(ppos).lheight;
            if (diff.den == 1 && (diff.num == 1 || diff.num == -1))
                add_plane(beta, partner);
        }
    }

    // Cond2: any root of column j paired with the simple root at an
    // earlier position i < j.
    for (const OrderEntry& e : order.entries) {
        for (int i = 1; i < e.column; ++i)
            add_plane(e.root, sys.simple_root(num.label_at(i)));
    }

    std::vector<AdmissiblePlane> out;
    for (auto& [key, plane] : dedup) {
        std::sort(plane.generators.begin(), plane.generators.end());
        out.push_back(std::move(plane));
    }
    std::sort(out.begin(), out.end(), [](const AdmissiblePlane& a, const AdmissiblePlane& b) {
        if (a.column != b.column) return a.column < b.column;
        return a.members < b.members;
    });
    return out;
}

} // namespace cauchon
