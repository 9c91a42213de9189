#ifndef LAURICELLA_DETERMINANT_HPP
#define LAURICELLA_DETERMINANT_HPP

#include <vector>

#include "lauricella/matrix.hpp"
#include "lauricella/params.hpp"
#include "lauricella/report.hpp"

namespace lauricella {

/// Square matrix indexed (rows and columns) by all subsets except {1..m},
/// in basis order.
struct LambdaMatrix {
  int m = 0;
  std::vector<SubsetIndex> index;
  Matrix entries;
};

/// Lambda[I,{}] = (-1)^|I|,
/// Lambda[I,I'] = (-1)^{|I|+|I'|-1} (g_{I cap I'} - 1)(g_full - a g_{I^c cap I'}).
LambdaMatrix lambda_matrix(const ParamPoint& p);

/// One column sweep: for |I'| >= n+1 the new column I' is
///   old_I' + sum_{K in I', |K| = n} (-1)^{|I'|+n+1}
///            (g_full + (-1)^n a g_{I'-K}) / (g_full + (-1)^n a) old_K.
LambdaMatrix elimination_step(const LambdaMatrix& prev, int n, const ParamPoint& p);

/// Lambda^(0) = Lambda, ..., Lambda^(m-2).
std::vector<LambdaMatrix> elimination_sequence(const ParamPoint& p);

/// Checks at every step n: det preserved, Lambda^(n)[{},{}] = 1, the
/// closed form of the columns |I'| >= n+1, vanishing blocks (k <= n,
/// k' > k), diagonal blocks up to size n+1 and their diagonal values, and
/// lower-triangularity of the final matrix.
Report elimination_check(const ParamPoint& p);

/// Closed-form det Lambda0 for m >= 2 (odd and even m differ).
/// Throws std::invalid_argument for m < 2.
Scalar det_lambda0_closed(const ParamPoint& p);

/// Exact determinant by fraction-free elimination.
Scalar det_bruteforce(const Matrix& m);

/// (a b - g_1) / ((a - g_1)(b - 1)(1 - g_1)), the m = 1 value of det Lambda0.
Scalar det_lambda0_m1(const ParamPoint& p);

/// Verifies det Lambda0 = I_h(D, D^v) det Lambda' (leading minor),
/// det Lambda0 = prefactor * det Lambda, and the column-sum row
/// (0, ..., 0, I_h(D, D^v)).
Report det_decomposition_check(const ParamPoint& p);

}  // namespace lauricella

#endif  // LAURICELLA_DETERMINANT_HPP
