#pragma once

#include <Eigen/Dense>

#include "cauchon/lie_type.hpp"

namespace cauchon {

// Cartan matrix a, symmetrizers d, and the symmetrized pairing
// ip(i,j) = d(i) * a(i,j) = (alpha_i, alpha_j), normalized so that short
// roots have squared length 2.
//
// Diagram conventions (Bourbaki labels, arrows point at the short root):
//   B_n: a1 <= a2 - a3 - ... - an      (alpha_1 short)
//   C_n: a1 => a2 - a3 - ... - an      (alpha_1 long)
//   D_n: a1, a2 both attached to a3 - a4 - ... - an
//   E_n: a1 - a3 - a4 - a5 - ... - an, with a2 attached to a4
//   F_4: a1 - a2 => a3 - a4            (alpha_1, alpha_2 long)
//   G_2: a1 <<= a2                     (alpha_1 short, |a2|^2 = 3|a1|^2)
struct CartanData {
    LieType type;
    Eigen::MatrixXi a;
    Eigen::VectorXi d;
    Eigen::MatrixXi ip;

    int rank() const { return static_cast<int>(a.rows()); }
};

CartanData build_cartan(LieType type);

} // namespace cauchon
