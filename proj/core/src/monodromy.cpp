#include "lauricella/monodromy.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "lauricella/errors.hpp"
#include "lauricella/intersection.hpp"
#include "lauricella/internal/guards.hpp"

namespace lauricella {

using internal::checked_inverse;

// ------------------------------------------------------------------ words

GeneratorWord::GeneratorWord(std::vector<WordToken> tokens) : tokens_(std::move(tokens)) {
  for (const auto& t : tokens_) {
    if (t.generator < 0) throw std::invalid_argument("generator index must be >= 0");
    if (t.exponent != 1 && t.exponent != -1) {
      throw std::invalid_argument("word exponents must be +1 or -1");
    }
  }
}

GeneratorWord GeneratorWord::generator(int i, int exponent) {
  return GeneratorWord({WordToken{i, exponent}});
}

int GeneratorWord::max_generator() const {
  int out = -1;
  for (const auto& t : tokens_) out = std::max(out, t.generator);
  return out;
}

GeneratorWord GeneratorWord::inverse() const {
  std::vector<WordToken> out(tokens_.rbegin(), tokens_.rend());
  for (auto& t : out) t.exponent = -t.exponent;
  return GeneratorWord(std::move(out));
}

GeneratorWord GeneratorWord::power(int n) const {
  if (n < 0) return inverse().power(-n);
  GeneratorWord out;
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b) {
  std::vector<WordToken> out = a.tokens_;
  out.insert(out.end(), b.tokens_.begin(), b.tokens_.end());
  return GeneratorWord(std::move(out));
}

std::string GeneratorWord::to_string() const {
  if (tokens_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) os << ' ';
    os << 'r' << tokens_[i].generator;
    if (tokens_[i].exponent < 0) os << "^-1";
  }
  return os.str();
}

// --------------------------------------------------------------- matrices

namespace {

void require_k(const ParamPoint& p, int k) {
  if (k < 1 || k > p.m) {
    throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." +
                            std::to_string(p.m));
  }
}

// (b-1)(a-g_full)/(ab)
Scalar reflection_coefficient(const ParamPoint& p) {
  return (p.beta - p.one()) * (p.alpha - p.gamma_product()) / (p.alpha * p.beta);
}

std::vector<Scalar> h_diagonal(const ParamPoint& p) {
  std::vector<Scalar> out;
  for (const SubsetIndex& s : basis(p.m)) out.push_back(h_entry(p, s));
  return out;
}

std::optional<Witness> witness_for(const std::string& name, const Matrix& a, const Matrix& b,
                                   int m) {
  const auto diff = first_difference(a, b);
  if (!diff) return std::nullopt;
  const BasisOrder& order = basis(m);
  Witness w{name, diff->first, diff->second, {}, {}};
  if (diff->first < order.size()) w.row_subset = order[diff->first].to_string();
  if (diff->second < order.size()) w.col_subset = order[diff->second].to_string();
  return w;
}

}  // namespace

RepMatrix m_k_matrix(const ParamPoint& p, int k) {
  require_k(p, k);
  const Scalar one = p.one();
  const Scalar inv = checked_inverse(p.gamma_at(k), internal::g1_label(k));
  std::vector<Scalar> diag;
  for (const SubsetIndex& s : basis(p.m)) diag.push_back(s.contains(k) ? inv : one);
  return RepMatrix{p.m, BasisTag::kDelta, Matrix::diagonal(diag)};
}

RepMatrix m_0_matrix(const ParamPoint& p) {
  const std::size_t n = basis(p.m).size();
  const Scalar c = reflection_coefficient(p);
  const std::vector<Scalar> h = h_diagonal(p);
  Matrix out = Matrix::identity(n, p.one());
  for (std::size_t col = 0; col < n; ++col) {
    const Scalar v = c * h[col];
    for (std::size_t row = 0; row < n; ++row) out(row, col) -= v;
  }
  return RepMatrix{p.m, BasisTag::kDelta, std::move(out)};
}

CycleVector apply_m0(const ParamPoint& p, const CycleVector& x) {
  const Scalar shift = reflection_coefficient(p) * pairing_with_D(p, x);
  CycleVector out = x;
  if (shift.is_zero()) return out;
  for (auto& v : out.coords) v -= shift;
  return out;
}

Scalar m0_special_eigenvalue(const ParamPoint& p) {
  const Scalar v = p.gamma_product() / (p.alpha * p.beta);
  return p.m % 2 == 1 ? v : -v;
}

RepMatrix basis_change_matrix(const ParamPoint& p) {
  const BasisOrder& order = basis(p.m);
  const std::size_t n = order.size();
  const Scalar one = p.one();
  Matrix out(n, n, p.constant(0));
  for (std::size_t col = 0; col < n; ++col) {
    const SubsetIndex i = order[col];
    Scalar col_factor = p.alpha * p.beta;
    for (int j = 1; j <= p.m; ++j) {
      if (!i.contains(j)) col_factor *= (p.gamma_at(j) - one) / p.gamma_at(j);
    }
    for (std::size_t row = 0; row <= col; ++row) {
      const SubsetIndex nset = order[row];
      if (!nset.is_subset_of(i)) continue;
      const Scalar gn = p.gamma_product(nset);
      out(row, col) = col_factor * gn *
                      checked_inverse(p.alpha - gn, internal::g2_label(p.m, nset)) *
                      checked_inverse(p.beta - gn, internal::g3_label(p.m, nset));
    }
  }
  return RepMatrix{p.m, BasisTag::kDelta, std::move(out)};
}

std::vector<Scalar> delta_prime_all_ones_coefficients(const ParamPoint& p) {
  const Scalar full = p.gamma_product();
  const Scalar ab = p.alpha * p.beta;
  std::vector<Scalar> out;
  for (const SubsetIndex& s : basis(p.m)) {
    if (s.is_full()) {
      out.push_back((p.alpha - full) * (p.beta - full) / (ab * full));
    } else {
      const Scalar tail = full / ab;
      out.push_back(p.gamma_product(s).inverse() + ((p.m - s.size()) % 2 == 0 ? tail : -tail));
    }
  }
  return out;
}

Report all_ones_expansion_check(const ParamPoint& p) {
  require_generic(p);
  Report r;
  r.title = "all-ones expansion m=" + std::to_string(p.m);
  const RepMatrix pm = basis_change_matrix(p);
  const std::vector<Scalar> c = delta_prime_all_ones_coefficients(p);
  const std::vector<Scalar> image = pm.entries * std::span<const Scalar>(c);
  std::optional<Witness> bad;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (!image[i].is_one()) {
      bad = Witness{"P * c", i, 0, basis(p.m)[i].to_string(), {}};
      break;
    }
  }
  r.record("P * c = D_{1..m}", !bad, {}, bad);
  return r;
}

RepMatrix m_prime_matrix(const ParamPoint& p, int i) {
  if (i < 0 || i > p.m) {
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 0.." +
                            std::to_string(p.m));
  }
  require_generic(p);
  const BasisOrder& order = basis(p.m);
  const std::size_t n = order.size();
  if (i == 0) {
    Matrix out = Matrix::identity(n, p.one());
    const std::vector<Scalar> n0 = delta_prime_all_ones_coefficients(p);
    for (std::size_t row = 0; row < n; ++row) out(row, 0) -= n0[row];
    return RepMatrix{p.m, BasisTag::kDeltaPrime, std::move(out)};
  }
  RepMatrix out = m_k_matrix(p, i);
  out.basis = BasisTag::kDeltaPrime;
  for (std::size_t col = 0; col < n; ++col) {
    const SubsetIndex s = order[col];
    if (s.contains(i)) out.entries(order.position(s.without(i)), col) += p.one();
  }
  return out;
}

RepMatrix m_prime_oracle(const ParamPoint& p, int i) {
  const RepMatrix pm = basis_change_matrix(p);
  const RepMatrix mi = i == 0 ? m_0_matrix(p) : m_k_matrix(p, i);
  Matrix conj;
  try {
    conj = solve(pm.entries, mi.entries * pm.entries);
  } catch (const DivisionByZero&) {
    throw DivisionByZero("basis change matrix P is singular at this point");
  }
  return RepMatrix{p.m, BasisTag::kDeltaPrime, std::move(conj)};
}

// ------------------------------------------------------- word evaluation

namespace {

// Left multiplication by generator matrices, using their structure: M_k is
// diagonal and M_0^{+-1} = E + s 1 h^T is a rank-one update.
class GeneratorAction {
 public:
  explicit GeneratorAction(const ParamPoint& p) : p_(p), order_(basis(p.m)) {
    h_ = h_diagonal(p);
    const Scalar c = reflection_coefficient(p);
    forward_ = -c;
    // Sherman-Morrison: 1 - c * trace(H) is the special eigenvalue.
    backward_ = c / m0_special_eigenvalue(p);
  }

  void apply(const WordToken& t, Matrix& r) const {
    const std::size_t n = order_.size();
    if (t.generator == 0) {
      const Scalar& s = t.exponent > 0 ? forward_ : backward_;
      for (std::size_t col = 0; col < n; ++col) {
        Scalar acc = p_.constant(0);
        for (std::size_t row = 0; row < n; ++row) {
          if (!r(row, col).is_zero()) acc += h_[row] * r(row, col);
        }
        if (acc.is_zero()) continue;
        acc *= s;
        for (std::size_t row = 0; row < n; ++row) r(row, col) += acc;
      }
      return;
    }
    const int k = t.generator;
    const Scalar g = t.exponent > 0 ? checked_inverse(p_.gamma_at(k), internal::g1_label(k))
                                    : p_.gamma_at(k);
    for (std::size_t row = 0; row < n; ++row) {
      if (!order_[row].contains(k)) continue;
      for (std::size_t col = 0; col < n; ++col) {
        if (!r(row, col).is_zero()) r(row, col) *= g;
      }
    }
  }

 private:
  const ParamPoint& p_;
  const BasisOrder& order_;
  std::vector<Scalar> h_;
  Scalar forward_;
  Scalar backward_;
};

}  // namespace

RepMatrix word_matrix(const ParamPoint& p, const GeneratorWord& w) {
  if (w.max_generator() > p.m) {
    throw std::out_of_range("word uses generator r" + std::to_string(w.max_generator()) +
                            " but m = " + std::to_string(p.m));
  }
  const std::size_t n = basis(p.m).size();
  Matrix r = Matrix::identity(n, p.one());
  if (w.empty()) return RepMatrix{p.m, BasisTag::kDelta, std::move(r)};
  GeneratorAction action(p);
  for (const WordToken& t : w.tokens()) action.apply(t, r);
  return RepMatrix{p.m, BasisTag::kDelta, std::move(r)};
}

std::string to_string(InfinityOrder order) {
  return order == InfinityOrder::kDescending ? "descending" : "ascending";
}

GeneratorWord rho_infinity_word(int m, InfinityOrder order) {
  if (m < 2) throw std::invalid_argument("the rho_infinity word is defined for m >= 2");
  std::vector<WordToken> tokens;
  for (int k = 1; k <= m; ++k) tokens.push_back({k, 1});
  const std::uint32_t count = 1u << (m - 1);
  for (std::uint32_t step = 0; step < count; ++step) {
    const std::uint32_t value = order == InfinityOrder::kDescending ? count - 1 - step : step;
    // a_1 is the most significant digit; b = 1 - a.
    std::vector<int> conj;
    for (int j = 1; j <= m - 1; ++j) {
      const bool a_j = (value >> (m - 1 - j)) & 1u;
      if (!a_j) conj.push_back(j);
    }
    for (int j : conj) tokens.push_back({j, 1});
    tokens.push_back({0, 1});
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) tokens.push_back({*it, -1});
  }
  return GeneratorWord(std::move(tokens)).inverse();
}

RepMatrix m_infinity(const ParamPoint& p, InfinityOrder order) {
  if (p.m < 2) throw std::invalid_argument("m_infinity requires m >= 2");
  return word_matrix(p, rho_infinity_word(p.m, order));
}

std::size_t eigen_multiplicity(const RepMatrix& m, const Scalar& lambda) {
  const std::size_t n = m.entries.rows();
  Matrix shifted = m.entries;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
  return n - rank(shifted);
}

InfinityCheck check_m_infinity(const ParamPoint& p) {
  InfinityCheck out;
  const std::size_t half = std::size_t{1} << (p.m - 1);
  auto run = [&](InfinityOrder order) {
    RepMatrix mat = m_infinity(p, order);
    out.alpha_multiplicity = eigen_multiplicity(mat, p.alpha);
    out.beta_multiplicity = eigen_multiplicity(mat, p.beta);
    out.order = order;
    out.matrix = std::move(mat);
    return out.alpha_multiplicity == half && out.beta_multiplicity == half;
  };
  out.descending_passed = run(InfinityOrder::kDescending);
  if (!out.descending_passed) {
    out.ascending_tried = true;
    out.ascending_passed = run(InfinityOrder::kAscending);
  }
  return out;
}

// ----------------------------------------------------------- verification

namespace {

Scalar small_rational(std::mt19937_64& rng, const ParamPoint& p) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  const long a = num(rng);
  const long b = den(rng);
  if (p.is_exact()) return Scalar::rational(a, b);
  return p.constant(a) / p.constant(b);
}

void check_group_relations(const ParamPoint& p, const std::vector<RepMatrix>& gens, Report& r) {
  if (p.m < 2) {
    r.not_applicable("commutation", "group relations are stated for m >= 2");
    r.not_applicable("braid", "group relations are stated for m >= 2");
    return;
  }
  for (int i = 1; i <= p.m; ++i) {
    for (int j = i + 1; j <= p.m; ++j) {
      const Matrix a = gens[i].entries * gens[j].entries;
      const Matrix b = gens[j].entries * gens[i].entries;
      const std::string name =
          "commutation M" + std::to_string(i) + " M" + std::to_string(j);
      r.record(name, a == b, {}, witness_for(name, a, b, p.m));
    }
  }
  for (int k = 1; k <= p.m; ++k) {
    const Matrix a0 = gens[0].entries * gens[k].entries;
    const Matrix b0 = gens[k].entries * gens[0].entries;
    const Matrix a = a0 * a0;
    const Matrix b = b0 * b0;
    const std::string name = "braid (M0 M" + std::to_string(k) + ")^2";
    r.record(name, a == b, {}, witness_for(name, a, b, p.m));
  }
}

void check_m0(const ParamPoint& p, const RepMatrix& m0, const VerifyOptions& opt, Report& r) {
  const std::size_t n = m0.entries.rows();
  const Scalar lambda = m0_special_eigenvalue(p);
  const std::size_t mult_special = eigen_multiplicity(m0, lambda);
  r.record("M0 special eigenvalue multiplicity", mult_special == 1,
           "eigenvalue " + lambda.to_string() + " has multiplicity " +
               std::to_string(mult_special));
  const std::size_t mult_one = eigen_multiplicity(m0, p.one());
  r.record("M0 eigenvalue 1 multiplicity", mult_one == n - 1,
           "multiplicity " + std::to_string(mult_one) + ", expected " + std::to_string(n - 1));

  const CycleVector ones = CycleVector::all_ones(p.m, p.one());
  const std::vector<Scalar> image = m0.entries * std::span<const Scalar>(ones.coords);
  bool eig_ok = true;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] != lambda) {
      eig_ok = false;
      bad = i;
      break;
    }
  }
  std::optional<Witness> w;
  if (!eig_ok) w = Witness{"M0 * D", bad, 0, basis(p.m)[bad].to_string(), {}};
  r.record("M0 all-ones eigenvector", eig_ok, {}, w);

  const std::vector<Scalar> h = h_diagonal(p);
  std::size_t pivot = 0;
  while (pivot < n && h[pivot].is_zero()) ++pivot;
  if (pivot == n) {
    r.fail("M0 fixes kernel of pairing", "pairing functional vanishes identically");
    return;
  }
  std::mt19937_64 rng(opt.seed);
  int failures = 0;
  for (int s = 0; s < opt.kernel_samples; ++s) {
    std::vector<Scalar> free;
    for (std::size_t i = 0; i < n; ++i) free.push_back(small_rational(rng, p));
    const CycleVector x(p.m, kernel_vector(h, free, pivot));
    const std::vector<Scalar> mx = m0.entries * std::span<const Scalar>(x.coords);
    const CycleVector ax = apply_m0(p, x);
    if (!pairing_with_D(p, x).is_zero() || mx != x.coords || ax.coords != x.coords) ++failures;
  }
  r.record("M0 fixes kernel of pairing", failures == 0,
           std::to_string(opt.kernel_samples - failures) + "/" +
               std::to_string(opt.kernel_samples) + " random kernel vectors fixed");
}

}  // namespace

Report verify_relations(const ParamPoint& p, const VerifyOptions& options) {
  require_generic(p);
  Report r;
  r.title = "relations m=" + std::to_string(p.m);

  std::vector<RepMatrix> gens;
  gens.push_back(m_0_matrix(p));
  for (int k = 1; k <= p.m; ++k) gens.push_back(m_k_matrix(p, k));

  check_group_relations(p, gens, r);
  check_m0(p, gens[0], options, r);

  const std::size_t half = std::size_t{1} << (p.m - 1);
  for (int k = 1; k <= p.m; ++k) {
    const Scalar inv = p.gamma_at(k).inverse();
    const std::size_t mult = eigen_multiplicity(gens[k], inv);
    r.record("M" + std::to_string(k) + " eigenvalue multiplicity", mult == half,
             "gamma_" + std::to_string(k) + "^-1 has multiplicity " + std::to_string(mult));
  }

  if (options.include_infinity) {
    if (p.m < 2) {
      r.not_applicable("M(rho_inf) eigenvalues", "the rho_inf word is defined for m >= 2");
    } else {
      const InfinityCheck inf = check_m_infinity(p);
      std::string detail = "order " + to_string(inf.order) + ": alpha multiplicity " +
                           std::to_string(inf.alpha_multiplicity) + ", beta multiplicity " +
                           std::to_string(inf.beta_multiplicity);
      if (inf.ascending_tried) {
        detail += inf.ascending_passed ? "; descending order failed, ascending passed"
                                       : "; both word orders failed";
      }
      r.record("M(rho_inf) eigenvalues", inf.descending_passed, detail);
    }
  }

  if (options.include_prime) {
    const RepMatrix pm = basis_change_matrix(p);
    bool tri = pm.entries.is_upper_triangular();
    for (std::size_t i = 0; tri && i < pm.entries.rows(); ++i) tri = !pm.entries(i, i).is_zero();
    r.record("P upper triangular and invertible", tri);
    for (int i = 0; i <= p.m; ++i) {
      const RepMatrix closed = m_prime_matrix(p, i);
      const RepMatrix oracle = m_prime_oracle(p, i);
      const std::string name = "M'" + std::to_string(i) + " = P^-1 M" + std::to_string(i) + " P";
      r.record(name, closed.entries == oracle.entries, {},
               witness_for(name, closed.entries, oracle.entries, p.m));
    }
  }
  return r;
}

}  // namespace lauricella
