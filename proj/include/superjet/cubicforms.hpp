#ifndef SUPERJET_CUBICFORMS_HPP
#define SUPERJET_CUBICFORMS_HPP

#include "superjet/jets.hpp"
#include "superjet/linalg.hpp"
#include "superjet/report.hpp"
#include "superjet/superpoly.hpp"

#include <array>
#include <map>
#include <memory>
#include <vector>

namespace superjet {
namespace cubicforms {

/// The supersymmetric cubic c(T^3) = t1 t2^2 + 2 t2 t3 t4 and its dual
/// c*(T^3) = t1 t2^2 + t2 t3 t4 with first and second derived tensors
/// c_a = (1/3) d_a c and c_{ab} = (1/2) d_a c_b.
struct CubicTensors {
    SuperPoly C;
    std::array<SuperPoly, 4> C1;
    std::array<std::array<SuperPoly, 4>, 4> C2;
};

/// Build the tensors on the variables ids[0..3] (two even, two odd) of vt.
CubicTensors primal_cubic(const VarTablePtr& vt, const std::array<int, 4>& ids);
CubicTensors dual_cubic(const VarTablePtr& vt, const std::array<int, 4>& ids);

/// c_b(T^2) c_a(T^2) (c*)^{ab}(T*) = 4/27 c(T^3) t^c t*_c, exactly.
Report verify_cubic_identity();

/// Representation of osp(2|2) on C^{2|2} with the constrained constants
/// (c2,c3,c4) = (2c1, -1/(3c1), 1/(3c1)); eight 4x4 matrices in the order
/// h10, e10, f10, h01, e01, f01, e11, f11.
std::array<ScalarMat, 8> osp22_action(const Scalar& c1);
Report verify_osp22(const Scalar& c1);

/// Kernels of the invariance equations on the even cubic slices of S^3 W*
/// and S^3 W; both must be one-dimensional with the tabulated generators.
Report invariant_cubics_kernel();

/// Result of the osculation pipeline: the parametric 5x5 supersymmetric
/// matrix, the nine generated equations, and the solved form over the free
/// coordinates {u22, u34, u23, u24}.
struct OsculationOutput {
    std::shared_ptr<JetContext> ctx;  // order-2, x parities (e,e,e,o,o)
    VarTablePtr params;               // lambda1, lambda2, theta1, theta2
    std::vector<SuperPoly> supervariety_row;            // 10 left coordinates
    std::array<std::array<SuperPoly, 5>, 5> jet_matrix; // entries in params
    std::vector<std::pair<int, SuperPoly>> equations;   // (lhs id, rhs in jet coords)
    std::map<int, SuperPoly> solved;                    // rhs over free coords
    std::vector<int> free_ids;
};

OsculationOutput supervariety_and_osculation();
Report verify_osculation();

} // namespace cubicforms
} // namespace superjet

#endif
