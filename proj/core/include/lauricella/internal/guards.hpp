#ifndef LAURICELLA_INTERNAL_GUARDS_HPP
#define LAURICELLA_INTERNAL_GUARDS_HPP

#include <string>

#include "lauricella/errors.hpp"
#include "lauricella/scalar.hpp"
#include "lauricella/subset.hpp"

namespace lauricella::internal {

inline std::string g1_label(int k) { return "G1[k=" + std::to_string(k) + "]"; }
inline std::string g2_label(int, SubsetIndex s) { return "G2[I=" + s.to_string() + "]"; }
inline std::string g3_label(int, SubsetIndex s) { return "G3[I=" + s.to_string() + "]"; }

/// 1/x, or GenericityError(predicate) when x vanishes.
inline Scalar checked_inverse(const Scalar& x, const std::string& predicate) {
  if (x.is_zero()) {
    throw GenericityError(predicate, "denominator vanishes (" + predicate + " violated)");
  }
  return x.inverse();
}

}  // namespace lauricella::internal

#endif  // LAURICELLA_INTERNAL_GUARDS_HPP
