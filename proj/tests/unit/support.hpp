#ifndef LAURICELLA_TESTS_SUPPORT_HPP
#define LAURICELLA_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "lauricella/lauricella.hpp"

namespace lauricella::testing {

inline Scalar q(const std::string& text) { return Scalar::parse(text); }

inline ParamPoint point(const std::string& alpha, const std::string& beta,
                        std::initializer_list<std::string> gamma) {
  std::vector<Scalar> g;
  for (const auto& s : gamma) g.push_back(q(s));
  return ParamPoint(q(alpha), q(beta), std::move(g));
}

inline Matrix matrix(std::initializer_list<std::initializer_list<std::string>> rows) {
  const std::size_t n = rows.size();
  const std::size_t k = rows.begin()->size();
  Matrix out(n, k);
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& v : row) out(r, c++) = q(v);
    ++r;
  }
  return out;
}

}  // namespace lauricella::testing

#endif  // LAURICELLA_TESTS_SUPPORT_HPP
