#include "cauchon/cartan.hpp"

#include <utility>
#include <vector>

namespace cauchon {

namespace {

// Single bonds for the given diagram, as 1-based label pairs.
std::vector<std::pair<int, int>> diagram_edges(LieType t) {
    std::vector<std::pair<int, int>> edges;
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::F:
        case Family::G:
            for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::D:
            edges.emplace_back(1, 3);
            edges.emplace_back(2, 3);
            for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::E:
            edges.emplace_back(1, 3);
            edges.emplace_back(2, 4);
            edges.emplace_back(3, 4);
            for (int i = 4; i < n; ++i) edges.emplace_back(i, i + 1);
            break;
    }
    return edges;
}

// Squared lengths (alpha_i, alpha_i) / 2, i.e. the symmetrizers d_i.
Eigen::VectorXi symmetrizers(LieType t) {
    const int n = t.rank;
    Eigen::VectorXi d = Eigen::VectorXi::Ones(n);
    switch (t.family) {
        case Family::B: // alpha_1 short
            for (int i = 1; i < n; ++i) d(i) = 2;
            break;
        case Family::C: // alpha_1 long
            d(0) = 2;
            break;
        case Family::F: // alpha_1, alpha_2 long
            d(0) = d(1) = 2;
            break;
        case Family::G: // alpha_2 long
            d(1) = 3;
            break;
        default:
            break;
    }
    return d;
}

} // namespace

CartanData build_cartan(LieType type) {
    validate_type(type);
    const int n = type.rank;
    CartanData c;
    c.type = type;
    c.d = symmetrizers(type);

    // Symmetrized pairing first: 2 d_i on the diagonal, and for a bond
    // (alpha_i, alpha_j) = -max(d_i, d_j).
    c.ip = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) c.ip(i, i) = 2 * c.d(i);
    for (auto [i, j] : diagram_edges(type)) {
        int v = -std::max(c.d(i - 1), c.d(j - 1));
        c.ip(i - 1, j - 1) = v;
        c.ip(j - 1, i - 1) = v;
    }

    // a(i,j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i) = ip(i,j) / d(i).
    c.a = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c.a(i, j) = c.ip(i, j) / c.d(i);
    return c;
}

} // namespace cauchon
