#include "lauricella/determinant.hpp"

#include <stdexcept>

#include "lauricella/intersection.hpp"
#include "lauricella/internal/guards.hpp"

namespace lauricella {

using internal::checked_inverse;

namespace {

Scalar signed_by(int exponent, const Scalar& v) { return exponent % 2 == 0 ? v : -v; }

std::optional<Witness> entry_witness(const std::string& name, const LambdaMatrix& l,
                                     std::size_t r, std::size_t c) {
  return Witness{name, r, c, l.index[r].to_string(), l.index[c].to_string()};
}

}  // namespace

LambdaMatrix lambda_matrix(const ParamPoint& p) {
  const BasisOrder& order = basis(p.m);
  LambdaMatrix out;
  out.m = p.m;
  out.index.assign(order.begin(), order.end() - 1);
  const std::size_t n = out.index.size();
  const Scalar one = p.one();
  const Scalar full = p.gamma_product();
  out.entries = Matrix(n, n, p.constant(0));
  for (std::size_t r = 0; r < n; ++r) {
    const SubsetIndex i = out.index[r];
    out.entries(r, 0) = signed_by(i.size(), one);
    for (std::size_t c = 1; c < n; ++c) {
      const SubsetIndex ip = out.index[c];
      const Scalar v = (p.gamma_product(i & ip) - one) *
                       (full - p.alpha * p.gamma_product(i.complement() & ip));
      out.entries(r, c) = signed_by(i.size() + ip.size() - 1, v);
    }
  }
  return out;
}

LambdaMatrix elimination_step(const LambdaMatrix& prev, int n, const ParamPoint& p) {
  if (n < 1) throw std::invalid_argument("elimination_step: n must be >= 1");
  const BasisOrder& order = basis(p.m);
  const Scalar full = p.gamma_product();
  const Scalar sa = signed_by(n, p.alpha);
  const Scalar denom = checked_inverse(full + sa, n % 2 == 0 ? "G4" : "G2[I=" +
                                                                      SubsetIndex::full(p.m).to_string() +
                                                                      "]");
  LambdaMatrix out = prev;
  const std::size_t rows = prev.entries.rows();
  for (std::size_t c = 0; c < prev.index.size(); ++c) {
    const SubsetIndex ip = prev.index[c];
    if (ip.size() < n + 1) continue;
    for (const SubsetIndex& k : subsets_of(ip)) {
      if (k.size() != n) continue;
      const std::size_t kc = order.position(k);
      const Scalar coef =
          signed_by(ip.size() + n + 1, (full + sa * p.gamma_product(ip - k)) * denom);
      for (std::size_t r = 0; r < rows; ++r) {
        const Scalar& v = prev.entries(r, kc);
        if (!v.is_zero()) out.entries(r, c) += coef * v;
      }
    }
  }
  return out;
}

std::vector<LambdaMatrix> elimination_sequence(const ParamPoint& p) {
  std::vector<LambdaMatrix> seq;
  seq.push_back(lambda_matrix(p));
  for (int n = 1; n <= p.m - 2; ++n) seq.push_back(elimination_step(seq.back(), n, p));
  return seq;
}

Report elimination_check(const ParamPoint& p) {
  require_generic(p);
  Report r;
  r.title = "elimination m=" + std::to_string(p.m);
  const std::vector<LambdaMatrix> seq = elimination_sequence(p);
  const Scalar one = p.one();
  const Scalar full = p.gamma_product();
  const Scalar det0 = det_bruteforce(seq[0].entries);

  for (std::size_t step = 0; step < seq.size(); ++step) {
    const int n = static_cast<int>(step);
    const LambdaMatrix& l = seq[step];
    const std::string tag = "step " + std::to_string(n) + ": ";
    const std::size_t size = l.index.size();

    if (n >= 1) {
      const Scalar d = det_bruteforce(l.entries);
      r.record(tag + "determinant preserved", d == det0);
    }
    r.record(tag + "corner entry is 1", l.entries(0, 0).is_one());

    // Columns still being swept have an explicit closed form.
    std::optional<Witness> closed_bad;
    for (std::size_t c = 0; c < size && !closed_bad; ++c) {
      const SubsetIndex ip = l.index[c];
      if (ip.size() < n + 1 || ip.is_empty()) continue;
      for (std::size_t row = 0; row < size; ++row) {
        const SubsetIndex i = l.index[row];
        Scalar v = (p.gamma_product(i & ip) - one) *
                   (full - p.alpha * p.gamma_product(i.complement() & ip));
        for (const SubsetIndex& k : subsets_of(i & ip)) {
          if (k.is_empty() || k.size() > n) continue;
          Scalar f = one;
          for (int e : k.elements()) f *= p.gamma_at(e) - one;
          v -= f * (full + signed_by(k.size(), p.alpha * p.gamma_product(ip - k)));
        }
        if (l.entries(row, c) != signed_by(i.size() + ip.size() - 1, v)) {
          closed_bad = entry_witness("Lambda^(" + std::to_string(n) + ")", l, row, c);
          break;
        }
      }
    }
    r.record(tag + "swept column closed form", !closed_bad, {}, closed_bad);

    std::optional<Witness> block_bad;
    std::optional<Witness> diag_block_bad;
    std::optional<Witness> diag_value_bad;
    for (std::size_t row = 0; row < size; ++row) {
      const SubsetIndex i = l.index[row];
      for (std::size_t c = 0; c < size; ++c) {
        const SubsetIndex ip = l.index[c];
        const Scalar& v = l.entries(row, c);
        if (i.size() <= n && ip.size() > i.size() && !v.is_zero() && !block_bad) {
          block_bad = entry_witness("Lambda^(" + std::to_string(n) + ")", l, row, c);
        }
        if (i.size() >= 1 && i.size() <= n + 1 && ip.size() == i.size() && ip != i &&
            !v.is_zero() && !diag_block_bad) {
          diag_block_bad = entry_witness("Lambda^(" + std::to_string(n) + ")", l, row, c);
        }
      }
      if (i.size() >= 1 && i.size() <= n + 1) {
        Scalar expect = full + signed_by(i.size(), p.alpha);
        for (int e : i.elements()) expect *= p.gamma_at(e) - one;
        if (l.entries(row, row) != -expect && !diag_value_bad) {
          diag_value_bad = entry_witness("Lambda^(" + std::to_string(n) + ")", l, row, row);
        }
      }
    }
    if (n >= 1) r.record(tag + "upper blocks vanish", !block_bad, {}, block_bad);
    r.record(tag + "leading diagonal blocks are diagonal", !diag_block_bad, {}, diag_block_bad);
    r.record(tag + "diagonal values", !diag_value_bad, {}, diag_value_bad);
  }

  const LambdaMatrix& last = seq.back();
  const bool lower = last.entries.is_lower_triangular();
  r.record("final matrix lower triangular", lower);
  if (lower) {
    Scalar prod = one;
    for (std::size_t i = 0; i < last.entries.rows(); ++i) prod *= last.entries(i, i);
    r.record("final determinant equals diagonal product", prod == det0);
  }
  return r;
}

Scalar det_lambda0_closed(const ParamPoint& p) {
  if (p.m < 2) {
    throw std::invalid_argument("the closed-form determinant is stated for m >= 2");
  }
  const Scalar one = p.one();
  const Scalar full = p.gamma_product();
  const long half = 1L << (p.m - 1);
  const long whole = 1L << p.m;
  const std::string g2_full = internal::g2_label(p.m, SubsetIndex::full(p.m));
  const Scalar inv_1mb = checked_inverse(one - p.beta, internal::g3_label(p.m, SubsetIndex::empty(p.m)));
  const Scalar inv_fma = checked_inverse(full - p.alpha, g2_full);
  Scalar gamma_part = one;
  for (int k = 1; k <= p.m; ++k) {
    gamma_part *= checked_inverse(one - p.gamma_at(k), internal::g1_label(k)).pow(half);
  }
  if (p.m % 2 == 1) {
    return -(p.alpha * p.beta - full) * (full + p.alpha).pow(half - 1) * inv_1mb.pow(whole - 1) *
           inv_fma.pow(half) * gamma_part;
  }
  return (p.alpha * p.beta + full) * (full + p.alpha).pow(half - 2) * inv_1mb.pow(whole - 1) *
         inv_fma.pow(half - 1) * gamma_part;
}

Scalar det_bruteforce(const Matrix& m) { return determinant(m); }

Scalar det_lambda0_m1(const ParamPoint& p) {
  if (p.m != 1) throw std::invalid_argument("det_lambda0_m1 requires m = 1");
  const Scalar one = p.one();
  const Scalar& g = p.gamma_at(1);
  return (p.alpha * p.beta - g) *
         checked_inverse(p.alpha - g, internal::g2_label(1, SubsetIndex::full(1))) *
         checked_inverse(p.beta - one, internal::g3_label(1, SubsetIndex::empty(1))) *
         checked_inverse(one - g, internal::g1_label(1));
}

Report det_decomposition_check(const ParamPoint& p) {
  require_generic(p);
  Report r;
  r.title = "determinant decomposition m=" + std::to_string(p.m);
  const RepMatrix l0 = lambda0_matrix(p);
  const std::size_t n = l0.entries.rows();
  const Scalar one = p.one();
  const Scalar full = p.gamma_product();
  const Scalar d_self = d_self_intersection(p);

  // Column sums of Lambda0: zero except at I' = full, where it is I_h(D, D^v).
  std::optional<Witness> sum_bad;
  for (std::size_t c = 0; c < n && !sum_bad; ++c) {
    Scalar s = p.constant(0);
    for (std::size_t row = 0; row < n; ++row) s += l0.entries(row, c);
    const Scalar expect = c + 1 == n ? d_self : p.constant(0);
    if (s != expect) sum_bad = Witness{"Lambda0 column sums", n - 1, c, "sum", basis(p.m)[c].to_string()};
  }
  r.record("column sums are (0, ..., 0, I_h(D, D^v))", !sum_bad, {}, sum_bad);

  const Scalar det_l0 = det_bruteforce(l0.entries);
  Matrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) minor(i, j) = l0.entries(i, j);
  }
  const Scalar det_minor = n == 1 ? one : det_bruteforce(minor);
  r.record("det Lambda0 = I_h(D, D^v) * det(leading minor)", det_l0 == d_self * det_minor);

  const LambdaMatrix lam = lambda_matrix(p);
  const Scalar det_lam = det_bruteforce(lam.entries);
  const long size = static_cast<long>(n) - 1;
  Scalar prefactor = (p.alpha * p.beta + signed_by(p.m, full)) *
                     checked_inverse(one - p.beta, internal::g3_label(p.m, SubsetIndex::empty(p.m))).pow(size) *
                     checked_inverse(full - p.alpha, internal::g2_label(p.m, SubsetIndex::full(p.m))).pow(size);
  for (int k = 1; k <= p.m; ++k) {
    prefactor *= checked_inverse(one - p.gamma_at(k), internal::g1_label(k)).pow(size);
  }
  r.record("det Lambda0 = prefactor * det Lambda", det_l0 == prefactor * det_lam);

  if (p.m >= 2) {
    r.record("det Lambda0 matches closed form", det_l0 == det_lambda0_closed(p));
  } else {
    r.record("det Lambda0 matches m = 1 value", det_l0 == det_lambda0_m1(p));
  }
  r.record("det Lambda0 nonzero", !det_l0.is_zero());
  return r;
}

}  // namespace lauricella
