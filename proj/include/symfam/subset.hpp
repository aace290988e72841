#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace symfam {

// Bit i-1 of a Mask stands for ground element i.
using Mask = std::uint64_t;

inline constexpr int kMaxSubsetUniverse = 64;

constexpr Mask universe_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

// A subset of [n] = {1, ..., n}, n <= 64.
class Subset {
 public:
  Subset(int n, Mask bits);

  static Subset empty(int n) { return Subset(n, 0); }
  static Subset full(int n) { return Subset(n, universe_mask(n)); }
  static Subset of(int n, std::initializer_list<int> elements);
  static Subset of(int n, const std::vector<int>& elements);

  int n() const { return n_; }
  Mask bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool contains(int element) const { return element >= 1 && element <= n_ && (bits_ >> (element - 1)) & 1; }
  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> elements() const;
  Subset complement() const { return Subset(n_, ~bits_ & universe_mask(n_)); }

  // "{1,3}" style, "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  int n_;
  Mask bits_;
};

}  // namespace symfam
