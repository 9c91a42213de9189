#ifndef LAURICELLA_ERRORS_HPP
#define LAURICELLA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lauricella {

/// Exact or approximate scalars of different kinds were combined.
class MixedArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed form was evaluated at a parameter point where one of its
/// denominators vanishes. `predicate()` names the violated genericity
/// condition (e.g. "G1", "G2[I={1,2}]").
class GenericityError : public std::domain_error {
 public:
  GenericityError(std::string predicate, const std::string& what)
      : std::domain_error(what), predicate_(std::move(predicate)) {}
  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gamma function evaluated at a pole; `argument()` names the offending
/// expression, e.g. "c_1-1".
class GammaPoleError : public std::domain_error {
 public:
  GammaPoleError(std::string argument, const std::string& what)
      : std::domain_error(what), argument_(std::move(argument)) {}
  const std::string& argument() const noexcept { return argument_; }

 private:
  std::string argument_;
};

/// A Pochhammer symbol (c_k)_{n} in a series denominator vanished.
class PochhammerError : public DivisionByZero {
 public:
  PochhammerError(int k, int n, const std::string& what)
      : DivisionByZero(what), k_(k), n_(n) {}
  int index() const noexcept { return k_; }
  int degree() const noexcept { return n_; }

 private:
  int k_;
  int n_;
};

/// Point outside the convergence domain of the series.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lauricella

#endif  // LAURICELLA_ERRORS_HPP
