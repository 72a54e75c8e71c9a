#include "cauchon/implications.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cauchon/errors.hpp"

namespace cauchon {

std::vector<Implication> ImplicationGraph::all() const {
    std::vector<Implication> out;
    for (const auto& col : per_column) out.insert(out.end(), col.begin(), col.end());
    return out;
}

size_t ImplicationGraph::size() const {
    size_t n = 0;
    for (const auto& col : per_column) n += col.size();
    return n;
}

namespace {

Implication arrow(int col, int src, int dst) {
    Implication im;
    im.kind = Implication::Kind::Arrow;
    im.src = src;
    im.alts = {dst};
    im.column = col;
    return im;
}

struct PlaneRoots {
    std::vector<Root> members;   // all members, ascending position
    std::vector<int> positions;
    Root alpha;                  // earlier simple root, size 0 if none
    int alpha_pos = -1;
};

PlaneRoots resolve(const LusztigOrder& order, const AdmissiblePlane& plane) {
    PlaneRoots pr;
    for (int pos : plane.members) {
        pr.members.push_back(order.at(pos).root);
        pr.positions.push_back(pos);
    }
    if (plane.alpha_pos != -1) {
        pr.alpha = order.at(plane.alpha_pos).root;
        pr.alpha_pos = plane.alpha_pos;
    }
    return pr;
}

// Non-alpha members sorted by ascending height.
std::vector<Root> betas_by_height(const PlaneRoots& pr) {
    std::vector<Root> betas;
    for (const Root& r : pr.members)
        if (pr.alpha.size() == 0 || r != pr.alpha) betas.push_back(r);
    std::sort(betas.begin(), betas.end(),
              [](const Root& a, const Root& b) { return a.sum() < b.sum(); });
    return betas;
}

} // namespace

std::vector<Implication> implications_from_plane(const LusztigOrder& order,
                                                 const AdmissiblePlane& plane) {
    PlaneRoots pr = resolve(order, plane);
    const int col = plane.column;
    auto pos = [&](const Root& r) {
        int p = order.position_of(r);
        if (p == -1) throw DomainError("plane member outside the order");
        return p;
    };
    std::vector<Implication> out;

    switch (plane.ptype) {
        case PlaneType::T21: {
            // {alpha, beta1, beta2 = beta1 + alpha}: beta1 => beta2.
            std::vector<Root> b = betas_by_height(pr);
            if (b.size() != 2 || b[0] + pr.alpha != b[1])
                throw DomainError("malformed T21 plane");
            out.push_back(arrow(col, pos(b[0]), pos(b[1])));
            break;
        }
        case PlaneType::T23: {
            // {alpha, beta1, beta1+alpha, beta1+2alpha}: a two-step chain.
            std::vector<Root> b = betas_by_height(pr);
            if (b.size() != 3 || b[0] + pr.alpha != b[1] || b[1] + pr.alpha != b[2])
                throw DomainError("malformed T23 plane");
            out.push_back(arrow(col, pos(b[0]), pos(b[1])));
            out.push_back(arrow(col, pos(b[1]), pos(b[2])));
            break;
        }
        case PlaneType::T11: {
            // {beta, beta_ex = beta + beta', beta'}: beta => beta_ex, where
            // beta is the shorter of the s_D pair.
            Root ex = order.at(plane.beta_ex_pos).root;
            std::vector<Root> b;
            for (const Root& r : pr.members)
                if (r != ex) b.push_back(r);
            if (b.size() != 2 || b[0] + b[1] != ex)
                throw DomainError("malformed T11 plane");
            const Root& low = b[0].sum() < b[1].sum() ? b[0] : b[1];
            out.push_back(arrow(col, pos(low), plane.beta_ex_pos));
            break;
        }
        case PlaneType::T12: {
            // {alpha, beta, beta' = alpha + beta, beta_ex = alpha + 2 beta}:
            // beta => beta', beta => beta_ex, beta_ex => beta'.
            Root ex = order.at(plane.beta_ex_pos).root;
            Root beta = (ex - pr.alpha) / 2;
            Root betap = pr.alpha + beta;
            if (2 * beta + pr.alpha != ex || order.position_of(beta) == -1 ||
                order.position_of(betap) == -1)
                throw DomainError("malformed T12 plane");
            out.push_back(arrow(col, pos(beta), pos(betap)));
            out.push_back(arrow(col, pos(beta), plane.beta_ex_pos));
            out.push_back(arrow(col, plane.beta_ex_pos, pos(betap)));
            break;
        }
        case PlaneType::T24: {
            // Only the pairing of beta_ex with an orthogonal earlier simple
            // root produces constraints, and only through decompositions
            // beta_ex + alpha = beta1 + beta2 inside the box just above
            // beta_ex.
            if (plane.beta_ex_pos == -1) break;
            Root ex = order.at(plane.beta_ex_pos).root;
            Root target = ex + pr.alpha;
            const ColumnData& cd = order.column(col);
            int exbox = order.at(plane.beta_ex_pos).box;
            if (exbox < 2) break;
            const std::vector<int>& box = cd.boxes[exbox - 2];
            for (size_t i = 0; i < box.size(); ++i)
                for (size_t j = i + 1; j < box.size(); ++j) {
                    const Root& b1 = cd.roots[box[i]];
                    const Root& b2 = cd.roots[box[j]];
                    if (b1 + b2 != target) continue;
                    Implication im;
                    im.kind = Implication::Kind::Choice;
                    im.src = plane.beta_ex_pos;
                    im.alts = {pos(b1), pos(b2)};
                    std::sort(im.alts.begin(), im.alts.end());
                    im.column = col;
                    out.push_back(im);
                }
            break;
        }
        case PlaneType::G2Full: {
            // The full G2 fan in its second column, read off the fixed
            // coefficient vectors.
            auto r = [&](int c1, int c2) {
                Root v(2);
                v << c1, c2;
                return pos(v);
            };
            int p2 = r(3, 1), p3 = r(2, 1), p4 = r(3, 2), p5 = r(1, 1), p6 = r(0, 1);
            out.push_back(arrow(col, p6, p5));
            out.push_back(arrow(col, p5, p4));
            out.push_back(arrow(col, p5, p3));
            out.push_back(arrow(col, p4, p3));
            out.push_back(arrow(col, p3, p2));
            break;
        }
    }
    return out;
}

ImplicationGraph derive_all(const LusztigOrder& order) {
    ImplicationGraph g;
    g.per_column.resize(order.sys.rank());
    std::set<std::tuple<int, int, std::vector<int>>> seen; // (kind, src, alts)
    for (const AdmissiblePlane& plane : enumerate_admissible_planes(order)) {
        for (Implication& im : implications_from_plane(order, plane)) {
            if (seen.emplace(static_cast<int>(im.kind), im.src, im.alts).second)
                g.per_column[im.column - 1].push_back(std::move(im));
        }
    }
    for (auto& col : g.per_column)
        std::sort(col.begin(), col.end(), [](const Implication& a, const Implication& b) {
            if (a.src != b.src) return a.src < b.src;
            if (a.kind != b.kind) return a.kind < b.kind;
            return a.alts < b.alts;
        });
    return g;
}

bool check_column_local(const LusztigOrder& order, const ImplicationGraph& g) {
    for (size_t c = 0; c < g.per_column.size(); ++c)
        for (const Implication& im : g.per_column[c]) {
            if (im.column != static_cast<int>(c) + 1) return false;
            if (order.at(im.src).column != im.column) return false;
            for (int a : im.alts) {
                if (order.at(a).column != im.column) return false;
                if (a >= im.src) return false; // must point to earlier positions
            }
        }
    return true;
}

std::string to_dot(const LusztigOrder& order, const ImplicationGraph& g) {
    std::ostringstream os;
    os << "digraph implications {\n";
    os << "  rankdir=LR;\n";
    std::set<int> used;
    for (const Implication& im : g.all()) {
        used.insert(im.src);
        for (int a : im.alts) used.insert(a);
    }
    for (size_t c = 0; c < g.per_column.size(); ++c) {
        if (g.per_column[c].empty()) continue;
        os << "  subgraph cluster_col" << c + 1 << " {\n";
        os << "    label=\"column " << c + 1 << "\";\n";
        for (int p : used)
            if (order.at(p).column == static_cast<int>(c) + 1)
                os << "    n" << p << " [label=\"" << p << "\"];\n";
        for (const Implication& im : g.per_column[c]) {
            if (im.kind == Implication::Kind::Arrow) {
                os << "    n" << im.src << " -> n" << im.dst() << ";\n";
            } else {
                for (int a : im.alts)
                    os << "    n" << im.src << " -> n" << a << " [style=dashed];\n";
            }
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace cauchon
