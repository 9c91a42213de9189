#include "lauricella/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lauricella/errors.hpp"

namespace lauricella {

// ------------------------------------------------------------ containers

namespace {

void compositions(int m, int remaining, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == m - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    compositions(m, remaining - v, pos + 1, cur, out);
  }
}

int total(const MultiIndex& n) {
  int s = 0;
  for (int v : n) s += v;
  return s;
}

int first_nonzero(const MultiIndex& n) {
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

TruncatedSeries empty_series(int m, int order, const Scalar& zero) {
  if (m < 1 || m > kMaxVariables) throw std::invalid_argument("series: m must be in 1..16");
  if (order < 0) throw std::invalid_argument("series: order must be >= 0");
  TruncatedSeries s;
  s.m = m;
  s.order = order;
  s.indices = multi_indices(m, order);
  s.coefficients.assign(s.indices.size(), zero);
  for (std::size_t i = 0; i < s.indices.size(); ++i) s.lookup.emplace(s.indices[i], i);
  return s;
}

SeriesParams to_float(const SeriesParams& sp, mpfr_prec_t prec) {
  std::vector<Scalar> c;
  for (const auto& v : sp.c) c.emplace_back(v.to_float(prec));
  return SeriesParams(Scalar(sp.a.to_float(prec)), Scalar(sp.b.to_float(prec)), std::move(c));
}

std::vector<Scalar> to_float(const std::vector<Scalar>& x, mpfr_prec_t prec) {
  std::vector<Scalar> out;
  for (const auto& v : x) out.emplace_back(v.to_float(prec));
  return out;
}

double magnitude(const Scalar& s) {
  if (s.is_exact()) {
    const auto& e = s.exact();
    return std::hypot(e.re.get_d(), e.im.get_d());
  }
  return s.approx().abs().to_double();
}

}  // namespace

std::vector<MultiIndex> multi_indices(int m, int order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(m), 0);
  for (int d = 0; d <= order; ++d) compositions(m, d, 0, cur, out);
  return out;
}

std::optional<std::size_t> TruncatedSeries::find(const MultiIndex& n) const {
  const auto it = lookup.find(n);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

const Scalar& TruncatedSeries::at(const MultiIndex& n) const {
  const auto pos = find(n);
  if (!pos) throw std::out_of_range("multi-index outside the truncation");
  return coefficients[*pos];
}

Scalar& TruncatedSeries::at(const MultiIndex& n) {
  const auto pos = find(n);
  if (!pos) throw std::out_of_range("multi-index outside the truncation");
  return coefficients[*pos];
}

// ----------------------------------------------------------- coefficients

TruncatedSeries fc_coefficients(const SeriesParams& sp, int order) {
  const Scalar zero = sp.a.constant_like(0);
  const Scalar one = sp.a.constant_like(1);
  TruncatedSeries s = empty_series(sp.m, order, zero);
  s.coefficients[0] = one;
  for (std::size_t i = 1; i < s.indices.size(); ++i) {
    const MultiIndex& n = s.indices[i];
    const int k = first_nonzero(n);
    MultiIndex prev = n;
    --prev[static_cast<std::size_t>(k)];
    const Scalar& base = s.coefficients[s.lookup.at(prev)];
    const int nk = n[static_cast<std::size_t>(k)];
    const Scalar ck_shift = sp.c[static_cast<std::size_t>(k)] + sp.a.constant_like(nk - 1);
    if (ck_shift.is_zero()) {
      throw PochhammerError(k + 1, nk,
                            "Pochhammer symbol (c_" + std::to_string(k + 1) + ")_" +
                                std::to_string(nk) + " vanishes: c_" + std::to_string(k + 1) +
                                " + " + std::to_string(nk - 1) + " = 0");
    }
    if (base.is_zero()) continue;
    const Scalar deg = sp.a.constant_like(total(n) - 1);
    s.coefficients[i] = base * (sp.a + deg) * (sp.b + deg) / (ck_shift * sp.a.constant_like(nk));
  }
  return s;
}

Scalar partial_sum(const TruncatedSeries& s, const std::vector<Scalar>& x) {
  if (static_cast<int>(x.size()) != s.m) throw std::invalid_argument("partial_sum: dimension mismatch");
  const Scalar zero = x.empty() ? Scalar() : x[0].constant_like(0);
  std::vector<Scalar> mono(s.indices.size(), zero);
  mono[0] = zero.constant_like(1);
  Scalar acc = s.coefficients[0].is_zero() ? zero : s.coefficients[0] * mono[0];
  for (std::size_t i = 1; i < s.indices.size(); ++i) {
    const MultiIndex& n = s.indices[i];
    const int k = first_nonzero(n);
    MultiIndex prev = n;
    --prev[static_cast<std::size_t>(k)];
    const Scalar& base = mono[s.lookup.at(prev)];
    if (base.is_zero() || x[static_cast<std::size_t>(k)].is_zero()) continue;
    mono[i] = base * x[static_cast<std::size_t>(k)];
    if (!s.coefficients[i].is_zero()) acc += s.coefficients[i] * mono[i];
  }
  return acc;
}

double domain_radius(const std::vector<Scalar>& x) {
  double r = 0.0;
  for (const auto& v : x) r += std::sqrt(magnitude(v));
  return r;
}

namespace {

SeriesValue evaluate(const SeriesParams& sp_float, const std::vector<Scalar>& x_float, int order) {
  const TruncatedSeries s = fc_coefficients(sp_float, order);
  const Scalar zero = sp_float.a.constant_like(0);
  std::vector<Scalar> mono(s.indices.size(), zero);
  mono[0] = zero.constant_like(1);
  std::vector<double> shell(static_cast<std::size_t>(order) + 1, 0.0);
  Scalar acc = s.coefficients[0];
  shell[0] = magnitude(acc);
  for (std::size_t i = 1; i < s.indices.size(); ++i) {
    const MultiIndex& n = s.indices[i];
    const int k = first_nonzero(n);
    MultiIndex prev = n;
    --prev[static_cast<std::size_t>(k)];
    const Scalar& base = mono[s.lookup.at(prev)];
    const Scalar& xk = x_float[static_cast<std::size_t>(k)];
    if (base.is_zero() || xk.is_zero()) continue;
    mono[i] = base * xk;
    if (s.coefficients[i].is_zero()) continue;
    const Scalar term = s.coefficients[i] * mono[i];
    acc += term;
    shell[static_cast<std::size_t>(total(n))] += magnitude(term);
  }
  SeriesValue out{acc, 0.0, order};
  if (order >= 1) {
    const double last = shell[static_cast<std::size_t>(order)];
    const double before = shell[static_cast<std::size_t>(order) - 1];
    if (last == 0.0) {
      out.tail_bound = 0.0;
    } else if (before == 0.0) {
      out.tail_bound = std::numeric_limits<double>::infinity();
    } else {
      const double r = last / before;
      out.tail_bound = r < 1.0 ? last * r / (1.0 - r) : std::numeric_limits<double>::infinity();
    }
  } else {
    out.tail_bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

void require_domain(const std::vector<Scalar>& x, int m) {
  if (static_cast<int>(x.size()) != m) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(m));
  }
  const double r = domain_radius(x);
  if (!(r < 1.0)) {
    throw DomainError("point outside the convergence domain: sum sqrt|x_k| = " + std::to_string(r) +
                      " >= 1");
  }
}

}  // namespace

SeriesValue fc_eval(const SeriesParams& sp, const std::vector<Scalar>& x, int order,
                    mpfr_prec_t precision) {
  require_domain(x, sp.m);
  return evaluate(to_float(sp, precision), to_float(x, precision), order);
}

SeriesParams shifted_params(const SeriesParams& sp, SubsetIndex subset) {
  const Scalar two = sp.a.constant_like(2);
  Scalar shift = sp.a.constant_like(subset.size());
  std::vector<Scalar> c = sp.c;
  for (int k = 1; k <= sp.m; ++k) {
    if (!subset.contains(k)) continue;
    shift -= sp.c_at(k);
    c[static_cast<std::size_t>(k - 1)] = two - sp.c_at(k);
  }
  return SeriesParams(sp.a + shift, sp.b + shift, std::move(c));
}

SeriesValue f_I_eval(const SeriesParams& sp, SubsetIndex subset, const std::vector<Scalar>& x,
                     int order, mpfr_prec_t precision) {
  require_domain(x, sp.m);
  const std::vector<Scalar> xf = to_float(x, precision);
  FloatComplex prefactor(MpReal(1L, precision), MpReal(0L, precision));
  for (int k = 1; k <= sp.m; ++k) {
    if (!subset.contains(k)) continue;
    const Scalar& xk = xf[static_cast<std::size_t>(k - 1)];
    if (xk.is_zero()) {
      throw DomainError("f_I needs x_" + std::to_string(k) + " != 0 for " + std::to_string(k) +
                        " in I");
    }
    const FloatComplex e = (sp.a.constant_like(1) - sp.c_at(k)).to_float(precision);
    prefactor = prefactor * pow(xk.approx(), e);
  }
  SeriesValue v = evaluate(to_float(shifted_params(sp, subset), precision), xf, order);
  const Scalar pf(prefactor);
  v.value = pf * v.value;
  v.tail_bound *= magnitude(pf);
  return v;
}

// -------------------------------------------------------------- residuals

std::vector<TruncatedSeries> ec_residual_of(const SeriesParams& sp, SubsetIndex subset,
                                            const TruncatedSeries& coeffs) {
  if (!sp.is_exact()) throw std::invalid_argument("ec_residual requires exact parameters");
  if (coeffs.m != sp.m) throw std::invalid_argument("ec_residual: dimension mismatch");
  const Scalar zero = sp.a.constant_like(0);
  const Scalar one = sp.a.constant_like(1);
  std::vector<Scalar> s(static_cast<std::size_t>(sp.m), zero);
  Scalar s_total = zero;
  for (int k = 1; k <= sp.m; ++k) {
    if (subset.contains(k)) {
      s[static_cast<std::size_t>(k - 1)] = one - sp.c_at(k);
      s_total += s[static_cast<std::size_t>(k - 1)];
    }
  }
  std::vector<TruncatedSeries> out;
  for (int k = 1; k <= sp.m; ++k) {
    const std::size_t kk = static_cast<std::size_t>(k - 1);
    TruncatedSeries r = empty_series(sp.m, coeffs.order, zero);
    for (std::size_t i = 0; i < coeffs.indices.size(); ++i) {
      const MultiIndex& n = coeffs.indices[i];
      const Scalar theta_k = sp.a.constant_like(n[kk]) + s[kk];
      Scalar v = theta_k * (theta_k + sp.c_at(k) - one) * coeffs.coefficients[i];
      if (n[kk] >= 1) {
        MultiIndex prev = n;
        --prev[kk];
        const Scalar theta = sp.a.constant_like(total(prev)) + s_total;
        v -= (theta + sp.a) * (theta + sp.b) * coeffs.at(prev);
      }
      r.coefficients[r.lookup.at(n)] = v;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TruncatedSeries> ec_residual(const SeriesParams& sp, SubsetIndex subset, int order) {
  if (!sp.is_exact()) throw std::invalid_argument("ec_residual requires exact parameters");
  return ec_residual_of(sp, subset, fc_coefficients(shifted_params(sp, subset), order));
}

int residual_clean_degree(const std::vector<TruncatedSeries>& residuals) {
  if (residuals.empty()) return -1;
  int first_bad = residuals.front().order + 1;
  for (const auto& r : residuals) {
    for (std::size_t i = 0; i < r.indices.size(); ++i) {
      if (!r.coefficients[i].is_zero()) {
        first_bad = std::min(first_bad, total(r.indices[i]));
        break;  // shells are stored in increasing degree
      }
    }
  }
  return first_bad - 1;
}

}  // namespace lauricella
