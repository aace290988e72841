#pragma once

#include "symfam/subset.hpp"

#include <array>
#include <string>
#include <vector>

namespace symfam {

// A permutation of [n], stored as 1-based images: images()[i] = σ(i + 1).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // 1 -> 2 -> ... -> n -> 1.
  static Permutation cycle(int n);
  static Permutation transposition(int n, int a, int b);
  // Disjoint cycles over 1-based elements; elements not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int element) const { return images_[static_cast<std::size_t>(element - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  Mask apply(Mask set) const;
  Subset apply(const Subset& set) const;

  Permutation inverse() const;
  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

// Applies a permutation to bitmask sets with one table lookup per byte.
class BitRelocator {
 public:
  explicit BitRelocator(const Permutation& sigma);

  Mask operator()(Mask set) const {
    Mask image = 0;
    for (std::size_t chunk = 0; chunk < tables_.size(); ++chunk, set >>= 8) image |= tables_[chunk][set & 0xFF];
    return image;
  }

 private:
  std::vector<std::array<Mask, 256>> tables_;
};

// A permutation group given by generators; the identity is implicit.
class PermGroup {
 public:
  PermGroup(std::vector<Permutation> generators, std::string label = {});

  static PermGroup cyclic(int n);
  static PermGroup dihedral(int n);
  static PermGroup symmetric(int n);

  int n() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::string& label() const { return label_; }

 private:
  int n_;
  std::vector<Permutation> generators_;
  std::string label_;
};

}  // namespace symfam
