#ifndef LAURICELLA_SERIALIZE_HPP
#define LAURICELLA_SERIALIZE_HPP

#include <string>
#include <vector>

#include "lauricella/determinant.hpp"
#include "lauricella/matrix.hpp"
#include "lauricella/params.hpp"
#include "lauricella/series.hpp"

namespace lauricella {

/// A matrix with its row/column labels, ready for output.
struct LabeledMatrix {
  std::string name;
  std::string basis;
  int m = 0;
  std::vector<std::string> labels;
  Matrix entries;
};

LabeledMatrix labeled(std::string name, const RepMatrix& m);
LabeledMatrix labeled(std::string name, const LambdaMatrix& m);

/// {"name", "m", "basis", "order": [subset labels], "rows", "cols",
///  "entries": [[scalar strings, row-major]]}.
std::string matrix_json(const LabeledMatrix& m, int indent = 2);

/// Parses matrix_json output back into a matrix (entries only).
Matrix matrix_from_json(const std::string& text);

/// Array of matrix_json objects.
std::string matrices_json(const std::vector<LabeledMatrix>& ms, int indent = 2);

/// Scalar as a LaTeX expression: "\frac{1}{2} - \frac{3}{4} i".
std::string scalar_latex(const Scalar& s);

/// "M_0 = \begin{pmatrix} ... \end{pmatrix}" with rows separated by "\\".
std::string matrix_latex(const LabeledMatrix& m);

/// One line per row, cells "re+im*i" at `precision` bits; exact entries are
/// rounded first.
std::string matrix_csv(const LabeledMatrix& m, mpfr_prec_t precision);

/// [{"multi_index": [...], "coefficient": "..."}].
std::string series_json(const TruncatedSeries& s, int indent = 2);

/// {"alpha": ..., "beta": ..., "gamma": [...]}; throws ParseError.
ParamPoint parse_param_point_json(const std::string& text);

/// {"a": ..., "b": ..., "c": [...], "x": [...]}; "x" is optional and is
/// returned through `x` when present. Throws ParseError.
SeriesParams parse_series_params_json(const std::string& text, std::vector<Scalar>* x = nullptr);

std::string param_point_json(const ParamPoint& p, int indent = 2);

}  // namespace lauricella

#endif  // LAURICELLA_SERIALIZE_HPP
