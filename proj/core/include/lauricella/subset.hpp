#ifndef LAURICELLA_SUBSET_HPP
#define LAURICELLA_SUBSET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lauricella/scalar.hpp"

namespace lauricella {

inline constexpr int kMaxVariables = 16;

/// Subset I of {1..m} stored as a bitmask; bit k-1 set iff k is in I.
class SubsetIndex {
 public:
  constexpr SubsetIndex() = default;
  constexpr SubsetIndex(std::uint32_t bits, int m) : bits_(bits), m_(m) {}

  static SubsetIndex empty(int m) { return {0, m}; }
  static SubsetIndex full(int m) { return {(m >= 32 ? 0xFFFFFFFFu : ((1u << m) - 1u)), m}; }
  /// Builds a subset from 1-based elements.
  static SubsetIndex of(int m, std::initializer_list<int> elements);
  static SubsetIndex of(int m, std::span<const int> elements);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int ambient() const { return m_; }
  int size() const { return __builtin_popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full(m_).bits_; }
  /// 1-based membership test.
  bool contains(int k) const { return (bits_ >> (k - 1)) & 1u; }
  bool is_subset_of(const SubsetIndex& other) const { return (bits_ & ~other.bits_) == 0; }

  SubsetIndex complement() const { return {full(m_).bits_ & ~bits_, m_}; }
  SubsetIndex with(int k) const { return {bits_ | (1u << (k - 1)), m_}; }
  SubsetIndex without(int k) const { return {bits_ & ~(1u << (k - 1)), m_}; }

  friend SubsetIndex operator&(SubsetIndex a, SubsetIndex b) { return {a.bits_ & b.bits_, a.m_}; }
  friend SubsetIndex operator|(SubsetIndex a, SubsetIndex b) { return {a.bits_ | b.bits_, a.m_}; }
  friend SubsetIndex operator-(SubsetIndex a, SubsetIndex b) { return {a.bits_ & ~b.bits_, a.m_}; }
  friend bool operator==(SubsetIndex a, SubsetIndex b) { return a.bits_ == b.bits_ && a.m_ == b.m_; }

  /// Sorted 1-based elements.
  std::vector<int> elements() const;
  /// "[1,3]"; the empty set is "[]".
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
  int m_ = 0;
};

/// Enumerates all subsets of `s` (including the empty set and `s` itself).
std::vector<SubsetIndex> subsets_of(SubsetIndex s);

/// Canonical ordering of the 2^m subsets: by cardinality, then
/// lexicographically on the sorted element lists. Also answers
/// subset -> position queries in O(1).
class BasisOrder {
 public:
  explicit BasisOrder(int m);

  int m() const { return m_; }
  std::size_t size() const { return order_.size(); }
  const SubsetIndex& operator[](std::size_t pos) const { return order_[pos]; }
  std::size_t position(SubsetIndex s) const { return position_[s.bits()]; }

  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

 private:
  int m_;
  std::vector<SubsetIndex> order_;
  std::vector<std::size_t> position_;
};

/// Throws std::out_of_range unless 1 <= m <= 16.
std::vector<SubsetIndex> basis_order(int m);

/// Cached BasisOrder for m (thread-safe, built on first use).
const BasisOrder& basis(int m);

enum class IdentityStatus { kPass, kFail, kSkipped };

struct SubsetSumReport {
  /// sum_N prod_{l in N} l/(1-l) = prod 1/(1-l)
  IdentityStatus ratio_sum = IdentityStatus::kSkipped;
  /// sum_N prod_{l in N} 1/(l-1) = prod l/(l-1)
  IdentityStatus reciprocal_sum = IdentityStatus::kSkipped;
  /// sum_N prod_N (1-l) prod_{not N} l = sum_N (-1)^|N| prod_N (l-1) prod_{not N} l = 1
  IdentityStatus partition_of_unity = IdentityStatus::kSkipped;
  /// sum_N prod_{l in N} (l-1) = prod l
  IdentityStatus shifted_product = IdentityStatus::kSkipped;

  bool all_pass_or_skipped() const;
};

/// Evaluates both sides of the four subset-sum identities by explicit
/// summation over all 2^n subsets. Identities whose denominators vanish
/// at `lambdas` are reported as skipped.
SubsetSumReport subset_sum_check(std::span<const Scalar> lambdas);

}  // namespace lauricella

#endif  // LAURICELLA_SUBSET_HPP
