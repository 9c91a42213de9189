#ifndef LAURICELLA_INTERSECTION_HPP
#define LAURICELLA_INTERSECTION_HPP

#include "lauricella/matrix.hpp"
#include "lauricella/params.hpp"
#include "lauricella/report.hpp"
#include "lauricella/subset.hpp"

namespace lauricella {

// Intersection numbers between the twisted cycles Delta_I, the chambers
// D_I and their duals, as closed-form rational functions of the
// exponential parameters. Every function throws GenericityError (with the
// predicate label) when a denominator it needs vanishes at `p`.

/// Diagonal entry H_{I,I} = I_h(Delta_I, Delta_I^v):
///   (-1)^|I| prod_{j not in I} g_j (a - g_I)(b - g_I)
///   / (prod_k (g_k - 1) (a - g_full)(b - 1))
Scalar h_entry(const ParamPoint& p, SubsetIndex subset);

/// Diagonal intersection matrix H in basis order.
RepMatrix h_matrix(const ParamPoint& p);

/// I_h(Delta_I, D_{I'}^v) in simplified closed form. The column I' = full
/// is H_{I,I}; I' = {} gives (-1)^|I| prod 1/(1-g_k).
Scalar ih_delta_D(const ParamPoint& p, SubsetIndex row, SubsetIndex col);

/// The same number from the unsimplified double sum over K_I, K_J
/// (independent oracle for ih_delta_D). Requires col != full.
Scalar ih_delta_D_raw(const ParamPoint& p, SubsetIndex row, SubsetIndex col);

/// Self-intersection I_h(D_{1..m}, D_{1..m}^v)
///   = (a b + (-1)^m g_full) / ((b - 1)(a - g_full)).
Scalar d_self_intersection(const ParamPoint& p);

/// Lambda0 = (I_h(Delta_I, D_{I'}^v))_{I,I'} in basis order.
RepMatrix lambda0_matrix(const ParamPoint& p);

/// I_h(sum_I x_I Delta_I, D_{1..m}^v) = sum_I x_I H_{I,I}.
Scalar pairing_with_D(const ParamPoint& p, const CycleVector& x);

/// Exact comparison of ih_delta_D against ih_delta_D_raw on every pair
/// (I, I' != full), vanishing of the Lambda0 column sums off I' = full, and
/// trace(H) = d_self_intersection(p).
Report intersection_check(const ParamPoint& p);

}  // namespace lauricella

#endif  // LAURICELLA_INTERSECTION_HPP
