#ifndef LAURICELLA_LAURICELLA_HPP
#define LAURICELLA_LAURICELLA_HPP

#include "lauricella/determinant.hpp"
#include "lauricella/errors.hpp"
#include "lauricella/intersection.hpp"
#include "lauricella/matrix.hpp"
#include "lauricella/monodromy.hpp"
#include "lauricella/params.hpp"
#include "lauricella/report.hpp"
#include "lauricella/scalar.hpp"
#include "lauricella/serialize.hpp"
#include "lauricella/series.hpp"
#include "lauricella/subset.hpp"

#endif  // LAURICELLA_LAURICELLA_HPP
