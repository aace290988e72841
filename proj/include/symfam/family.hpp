#pragma once

#include "symfam/bigint.hpp"
#include "symfam/subset.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace symfam {

// Largest universe for which explicit families are supported. Membership
// is stored as one bit per subset of [n].
inline constexpr int kMaxExplicitUniverse = 24;

namespace detail {

// One bit per subset of [n].
class PowerSetBits {
 public:
  PowerSetBits() = default;
  explicit PowerSetBits(int n) : words_(((std::size_t{1} << n) + 63) / 64, 0) {}

  bool test(Mask m) const { return (words_[m >> 6] >> (m & 63)) & 1; }
  void set(Mask m) { words_[m >> 6] |= std::uint64_t{1} << (m & 63); }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const PowerSetBits&, const PowerSetBits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

// After the call, bit y is set iff some originally set x satisfies x ⊆ y.
void close_upwards(PowerSetBits& bits, int n);

}  // namespace detail

// An explicit family of subsets of [n], n <= 24. Members are deduplicated
// and kept in ascending bitmask order. Immutable after construction.
class SetFamily {
 public:
  explicit SetFamily(int n);

  // Duplicate masks are merged.
  static SetFamily from_masks(int n, std::vector<Mask> masks);
  static SetFamily from_subsets(int n, std::span<const Subset> subsets);
  static SetFamily power_set(int n);

  template <typename Predicate>
  static SetFamily from_predicate(int n, Predicate&& keep) {
    SetFamily family(n);
    const Mask end = Mask{1} << n;
    for (Mask m = 0; m < end; ++m)
      if (keep(m)) family.insert_sorted(m);
    return family;
  }

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Mask m) const { return m <= universe_mask(n_) && bits_.test(m); }
  bool contains(const Subset& s) const { return s.n() == n_ && contains(s.bits()); }

  const std::vector<Mask>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Subset subset(std::size_t index) const { return Subset(n_, members_.at(index)); }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  friend class FamilyBuilder;
  void insert_sorted(Mask m) {
    members_.push_back(m);
    bits_.set(m);
  }

  int n_;
  std::vector<Mask> members_;
  detail::PowerSetBits bits_;
};

// Accumulates masks in any order and produces a canonical SetFamily.
class FamilyBuilder {
 public:
  explicit FamilyBuilder(int n);

  void add(Mask m);
  bool contains(Mask m) const { return bits_.test(m); }
  SetFamily build() &&;

 private:
  int n_;
  detail::PowerSetBits bits_;
};

struct SizeProfile {
  int n = 0;
  std::vector<BigInt> counts;  // counts[j] = members of cardinality j

  BigInt total() const;
  // The profile of every subset of [n]: counts[j] = C(n, j). Any n >= 0.
  static SizeProfile binomial_row(int n);
};

// {y : x ⊆ y for some x in F}.
SetFamily upset_closure(const SetFamily& family);

// {x ∩ y : x, y in F}.
SetFamily intersection_family(const SetFamily& family);

// {[n] \ x : x in F}.
SetFamily complement_family(const SetFamily& family);

SizeProfile size_profile(const SetFamily& family);

// The ⊆-minimal members.
SetFamily minimal_elements(const SetFamily& family);

bool is_increasing(const SetFamily& family);

bool is_subfamily(const SetFamily& inner, const SetFamily& outer);

}  // namespace symfam
