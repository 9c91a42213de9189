#ifndef LAURICELLA_MONODROMY_HPP
#define LAURICELLA_MONODROMY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lauricella/matrix.hpp"
#include "lauricella/params.hpp"
#include "lauricella/report.hpp"

namespace lauricella {

/// rho_generator^exponent with generator in 0..m and exponent +-1.
struct WordToken {
  int generator = 0;
  int exponent = 1;
  friend bool operator==(const WordToken&, const WordToken&) = default;
};

/// Element of the free group on rho_0..rho_m, read left to right.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  /// Throws std::invalid_argument on a negative generator or an exponent
  /// other than +-1.
  explicit GeneratorWord(std::vector<WordToken> tokens);

  static GeneratorWord generator(int i, int exponent = 1);

  const std::vector<WordToken>& tokens() const { return tokens_; }
  std::size_t length() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  int max_generator() const;

  GeneratorWord inverse() const;
  GeneratorWord power(int n) const;
  friend GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b);
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

  /// "r1 r2 r0^-1"; the empty word is "e".
  std::string to_string() const;

 private:
  std::vector<WordToken> tokens_;
};

/// Circuit matrix of rho_k: diagonal, gamma_k^{-1} at I containing k, else 1.
RepMatrix m_k_matrix(const ParamPoint& p, int k);

/// Circuit matrix of rho_0: E - ((b-1)(a-g_full)/(ab)) N H with N all-ones.
RepMatrix m_0_matrix(const ParamPoint& p);

/// The reflection x -> x - ((b-1)(a-g_full)/(ab)) I_h(x, D^v) D.
CycleVector apply_m0(const ParamPoint& p, const CycleVector& x);

/// (-1)^{m-1} g_full / (a b): the eigenvalue of M_0 on D_{1..m}.
Scalar m0_special_eigenvalue(const ParamPoint& p);

/// P with P[N,I] = ab prod_{j not in I}(g_j-1)/g_j * g_N / ((a-g_N)(b-g_N))
/// for N a subset of I, else 0. Columns are the Delta' cycles in the Delta basis.
RepMatrix basis_change_matrix(const ParamPoint& p);

/// Coefficients c_I of sum_I c_I Delta'_I = D_{1..m}: column {} of N_0.
std::vector<Scalar> delta_prime_all_ones_coefficients(const ParamPoint& p);

/// Checks P * c = (1, ..., 1) exactly, c the coefficients above.
Report all_ones_expansion_check(const ParamPoint& p);

/// Closed-form M'_i in the Delta' basis (lower triangular for i = 0,
/// upper triangular for i >= 1).
RepMatrix m_prime_matrix(const ParamPoint& p, int i);

/// P^{-1} M_i P by exact solve.
RepMatrix m_prime_oracle(const ParamPoint& p, int i);

/// Representation matrix of a word with (w w')_* = w'_* o w_*, so
/// word_matrix(w w') = word_matrix(w') word_matrix(w).
RepMatrix word_matrix(const ParamPoint& p, const GeneratorWord& w);

enum class InfinityOrder { kDescending, kAscending };

std::string to_string(InfinityOrder order);

/// (rho_1 ... rho_m * prod_a eta(l_a))^{-1}, a over binary strings of
/// length m-1 in the given order, eta(l_a) = B rho_0 B^{-1} with
/// B = rho_1^{1-a_1} ... rho_{m-1}^{1-a_{m-1}}. Requires m >= 2.
GeneratorWord rho_infinity_word(int m, InfinityOrder order = InfinityOrder::kDescending);

RepMatrix m_infinity(const ParamPoint& p, InfinityOrder order = InfinityOrder::kDescending);

struct InfinityCheck {
  InfinityOrder order = InfinityOrder::kDescending;
  bool descending_passed = false;
  /// Set only when the descending reading fails and the ascending one is tried.
  bool ascending_tried = false;
  bool ascending_passed = false;
  std::size_t alpha_multiplicity = 0;
  std::size_t beta_multiplicity = 0;
  RepMatrix matrix;
};

/// Checks that M(rho_inf) has eigenvalues alpha and beta each of
/// multiplicity 2^{m-1}; falls back to the ascending word order if the
/// descending one fails, recording which reading passed.
InfinityCheck check_m_infinity(const ParamPoint& p);

/// 2^m - rank(M - lambda E).
std::size_t eigen_multiplicity(const RepMatrix& m, const Scalar& lambda);

struct VerifyOptions {
  /// Number of random kernel vectors of the pairing functional tested
  /// against M_0.
  int kernel_samples = 20;
  std::uint64_t seed = 0;
  bool include_infinity = true;
  bool include_prime = true;
};

/// Exact checks of the group relations, the eigenstructure of M_0 and
/// M(rho_inf), and agreement of M'_i with conjugation by P. Throws
/// GenericityError if p is not generic.
Report verify_relations(const ParamPoint& p, const VerifyOptions& options = {});

}  // namespace lauricella

#endif  // LAURICELLA_MONODROMY_HPP
