#include "lauricella/subset.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace lauricella {

SubsetIndex SubsetIndex::of(int m, std::initializer_list<int> elements) {
  return of(m, std::span<const int>(elements.begin(), elements.size()));
}

SubsetIndex SubsetIndex::of(int m, std::span<const int> elements) {
  std::uint32_t bits = 0;
  for (int k : elements) {
    if (k < 1 || k > m) throw std::out_of_range("subset element out of range");
    bits |= 1u << (k - 1);
  }
  return {bits, m};
}

std::vector<int> SubsetIndex::elements() const {
  std::vector<int> out;
  for (int k = 1; k <= m_; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::string SubsetIndex::to_string() const {
  std::string out = "[";
  bool first = true;
  for (int k : elements()) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "]";
}

std::vector<SubsetIndex> subsets_of(SubsetIndex s) {
  std::vector<SubsetIndex> out;
  out.reserve(std::size_t{1} << s.size());
  // Standard submask walk, emitted in increasing bit order.
  std::uint32_t sub = 0;
  do {
    out.emplace_back(sub, s.ambient());
    sub = (sub - s.bits()) & s.bits();
  } while (sub != 0);
  return out;
}

BasisOrder::BasisOrder(int m) : m_(m) {
  if (m < 1 || m > kMaxVariables) throw std::out_of_range("m must be in [1, 16]");
  const std::uint32_t count = 1u << m;
  order_.reserve(count);
  for (std::uint32_t b = 0; b < count; ++b) order_.emplace_back(b, m);
  std::sort(order_.begin(), order_.end(), [](const SubsetIndex& a, const SubsetIndex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // Lexicographic on sorted element lists: compare at the smallest
    // element where the two sets differ; the set containing it comes first.
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const std::uint32_t lowest = diff & (~diff + 1);
    return (a.bits() & lowest) != 0;
  });
  position_.assign(count, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i].bits()] = i;
}

std::vector<SubsetIndex> basis_order(int m) {
  const BasisOrder& order = basis(m);
  return {order.begin(), order.end()};
}

const BasisOrder& basis(int m) {
  if (m < 1 || m > kMaxVariables) throw std::out_of_range("m must be in [1, 16]");
  static std::array<std::unique_ptr<BasisOrder>, kMaxVariables + 1> cache;
  static std::array<std::once_flag, kMaxVariables + 1> flags;
  std::call_once(flags[m], [m] { cache[m] = std::make_unique<BasisOrder>(m); });
  return *cache[m];
}

bool SubsetSumReport::all_pass_or_skipped() const {
  for (auto s : {ratio_sum, reciprocal_sum, partition_of_unity, shifted_product}) {
    if (s == IdentityStatus::kFail) return false;
  }
  return true;
}

namespace {

IdentityStatus status_of(bool ok) { return ok ? IdentityStatus::kPass : IdentityStatus::kFail; }

}  // namespace

SubsetSumReport subset_sum_check(std::span<const Scalar> lambdas) {
  const int n = static_cast<int>(lambdas.size());
  if (n < 1 || n > kMaxVariables) throw std::out_of_range("n must be in [1, 16]");
  const Scalar one = lambdas.front().constant_like(1);
  const Scalar zero = lambdas.front().constant_like(0);

  const bool any_one = std::any_of(lambdas.begin(), lambdas.end(),
                                   [&](const Scalar& l) { return l == one; });

  SubsetSumReport report;
  const std::uint32_t count = 1u << n;

  if (!any_one) {
    std::vector<Scalar> ratio, recip;
    Scalar rhs_ratio = one, rhs_recip = one;
    for (const Scalar& l : lambdas) {
      ratio.push_back(l / (one - l));
      recip.push_back(one / (l - one));
      rhs_ratio *= one / (one - l);
      rhs_recip *= l / (l - one);
    }
    Scalar lhs_ratio = zero, lhs_recip = zero;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      Scalar t_ratio = one, t_recip = one;
      for (int l = 0; l < n; ++l) {
        if ((mask >> l) & 1u) {
          t_ratio *= ratio[l];
          t_recip *= recip[l];
        }
      }
      lhs_ratio += t_ratio;
      lhs_recip += t_recip;
    }
    report.ratio_sum = status_of(lhs_ratio == rhs_ratio);
    report.reciprocal_sum = status_of(lhs_recip == rhs_recip);
  }

  // No denominators in the last two identities.
  Scalar first = zero, second = zero, shifted = zero, product = one;
  for (const Scalar& l : lambdas) product *= l;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Scalar a = one, b = one, c = one;
    for (int l = 0; l < n; ++l) {
      const Scalar& lam = lambdas[l];
      if ((mask >> l) & 1u) {
        a *= one - lam;
        b *= lam - one;
        c *= lam - one;
      } else {
        a *= lam;
        b *= lam;
      }
    }
    first += a;
    second += (__builtin_popcount(mask) % 2 == 0) ? b : -b;
    shifted += c;
  }
  report.partition_of_unity = status_of(first == one && second == one);
  report.shifted_product = status_of(shifted == product);
  return report;
}

}  // namespace lauricella
