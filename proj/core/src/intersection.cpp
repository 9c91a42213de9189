#include "lauricella/intersection.hpp"

#include <stdexcept>

#include "lauricella/errors.hpp"
#include "lauricella/internal/guards.hpp"

namespace lauricella {

using internal::checked_inverse;

Scalar h_entry(const ParamPoint& p, SubsetIndex subset) {
  const Scalar one = p.one();
  const Scalar full = p.gamma_product();
  const Scalar g_in = p.gamma_product(subset);
  const Scalar g_out = p.gamma_product(subset.complement());

  Scalar den = checked_inverse(p.alpha - full, internal::g2_label(p.m, SubsetIndex::full(p.m)));
  den *= checked_inverse(p.beta - one, internal::g3_label(p.m, SubsetIndex::empty(p.m)));
  for (int k = 1; k <= p.m; ++k) {
    den *= checked_inverse(p.gamma_at(k) - one, internal::g1_label(k));
  }
  Scalar value = g_out * (p.alpha - g_in) * (p.beta - g_in) * den;
  return subset.size() % 2 == 0 ? value : -value;
}

RepMatrix h_matrix(const ParamPoint& p) {
  const BasisOrder& order = basis(p.m);
  std::vector<Scalar> diag;
  diag.reserve(order.size());
  for (const SubsetIndex& s : order) diag.push_back(h_entry(p, s));
  return RepMatrix{p.m, BasisTag::kDelta, Matrix::diagonal(diag)};
}

namespace {

// prod_k 1/(1 - g_k)
Scalar gamma_pole_factor(const ParamPoint& p, SubsetIndex over) {
  const Scalar one = p.one();
  Scalar out = one;
  for (int k = 1; k <= p.m; ++k) {
    if (over.contains(k)) out *= checked_inverse(one - p.gamma_at(k), internal::g1_label(k));
  }
  return out;
}

}  // namespace

Scalar ih_delta_D(const ParamPoint& p, SubsetIndex row, SubsetIndex col) {
  if (col.is_full()) return h_entry(p, row);
  const SubsetIndex all = SubsetIndex::full(p.m);
  const Scalar base = gamma_pole_factor(p, all);
  if (col.is_empty()) return row.size() % 2 == 0 ? base : -base;

  const Scalar one = p.one();
  const Scalar full = p.gamma_product();
  const SubsetIndex i0 = row & col;
  const SubsetIndex j0 = row.complement() & col;
  Scalar value = base * (p.gamma_product(i0) - one) *
                 checked_inverse(one - p.beta, internal::g3_label(p.m, SubsetIndex::empty(p.m))) *
                 (full - p.alpha * p.gamma_product(j0)) *
                 checked_inverse(full - p.alpha, internal::g2_label(p.m, all));
  // (-1)^{|I|+|I'|-1}
  return (row.size() + col.size()) % 2 == 1 ? value : -value;
}

Scalar ih_delta_D_raw(const ParamPoint& p, SubsetIndex row, SubsetIndex col) {
  if (col.is_full()) {
    throw std::invalid_argument("ih_delta_D_raw: the unsimplified sum excludes I' = {1..m}");
  }
  const SubsetIndex all = SubsetIndex::full(p.m);
  const Scalar one = p.one();
  const Scalar zero = p.constant(0);
  if (col.is_empty()) {
    const Scalar base = gamma_pole_factor(p, all);
    return row.size() % 2 == 0 ? base : -base;
  }

  const SubsetIndex j = row.complement();
  const SubsetIndex jp = col.complement();
  const SubsetIndex i0 = row & col;
  const SubsetIndex j0 = j & col;
  const SubsetIndex j1 = j & jp;
  // The cycles do not meet when I is disjoint from I'.
  if (i0.is_empty()) return zero;

  // Per-element weights 1/(g_i - 1) on I_0 and g_j/(1 - g_j) on J_0.
  auto weight_i = [&](SubsetIndex k) {
    Scalar w = one;
    for (int i = 1; i <= p.m; ++i) {
      if (k.contains(i)) w *= checked_inverse(p.gamma_at(i) - one, internal::g1_label(i));
    }
    return w;
  };
  auto weight_j = [&](SubsetIndex k) {
    Scalar w = one;
    for (int i = 1; i <= p.m; ++i) {
      if (k.contains(i)) {
        w *= p.gamma_at(i) * checked_inverse(one - p.gamma_at(i), internal::g1_label(i));
      }
    }
    return w;
  };

  // The leading 1 of the bracket is the (K_I, K_J) = ({}, {}) term of the
  // first sum, so that sum runs over the remaining pairs.
  Scalar first = zero;
  Scalar second = zero;
  for (const SubsetIndex& ki : subsets_of(i0)) {
    if (ki == i0) continue;
    const Scalar wi = weight_i(ki);
    for (const SubsetIndex& kj : subsets_of(j0)) {
      const Scalar t = wi * weight_j(kj);
      if (!(ki.is_empty() && kj.is_empty())) first += t;
      if (kj != j0) second += t;
    }
  }
  const Scalar full = p.gamma_product();
  Scalar bracket = one + first +
                   p.alpha * checked_inverse(full - p.alpha, internal::g2_label(p.m, all)) * second;

  Scalar prefactor = gamma_pole_factor(p, jp) *
                     checked_inverse(one - p.beta, internal::g3_label(p.m, SubsetIndex::empty(p.m)));
  // (-1)^{m - |J_1| - 1}
  if ((p.m - j1.size() - 1) % 2 != 0) prefactor = -prefactor;
  return prefactor * bracket;
}

Scalar d_self_intersection(const ParamPoint& p) {
  const Scalar one = p.one();
  const Scalar full = p.gamma_product();
  const Scalar signed_full = p.m % 2 == 0 ? full : -full;
  return (p.alpha * p.beta + signed_full) *
         checked_inverse(p.beta - one, internal::g3_label(p.m, SubsetIndex::empty(p.m))) *
         checked_inverse(p.alpha - full, internal::g2_label(p.m, SubsetIndex::full(p.m)));
}

RepMatrix lambda0_matrix(const ParamPoint& p) {
  const BasisOrder& order = basis(p.m);
  const std::size_t n = order.size();
  Matrix out(n, n, p.constant(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = ih_delta_D(p, order[r], order[c]);
  }
  return RepMatrix{p.m, BasisTag::kDelta, std::move(out)};
}

Scalar pairing_with_D(const ParamPoint& p, const CycleVector& x) {
  if (x.m != p.m) throw std::invalid_argument("pairing_with_D: dimension mismatch");
  const BasisOrder& order = basis(p.m);
  Scalar acc = p.constant(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (x.coords[i].is_zero()) continue;
    acc += x.coords[i] * h_entry(p, order[i]);
  }
  return acc;
}

Report intersection_check(const ParamPoint& p) {
  require_generic(p);
  Report r;
  r.title = "intersection m=" + std::to_string(p.m);
  const BasisOrder& order = basis(p.m);
  const std::size_t n = order.size();
  const RepMatrix l0 = lambda0_matrix(p);

  std::optional<Witness> raw_bad;
  for (std::size_t row = 0; row < n && !raw_bad; ++row) {
    for (std::size_t col = 0; col + 1 < n; ++col) {
      if (ih_delta_D_raw(p, order[row], order[col]) != l0.entries(row, col)) {
        raw_bad = Witness{"Lambda0", row, col, order[row].to_string(), order[col].to_string()};
        break;
      }
    }
  }
  r.record("closed form equals raw sum", !raw_bad, {}, raw_bad);

  std::optional<Witness> sum_bad;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    Scalar s = p.constant(0);
    for (std::size_t row = 0; row < n; ++row) s += l0.entries(row, col);
    if (!s.is_zero()) {
      sum_bad = Witness{"Lambda0 column sums", 0, col, {}, order[col].to_string()};
      break;
    }
  }
  r.record("column sums vanish off I' = full", !sum_bad, {}, sum_bad);

  Scalar trace = p.constant(0);
  for (const SubsetIndex& s : order) trace += h_entry(p, s);
  r.record("trace(H) = I_h(D, D^v)", trace == d_self_intersection(p));
  return r;
}

}  // namespace lauricella
