#include "symfam/permutation.hpp"

#include "symfam/errors.hpp"

namespace symfam {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw DomainError("permutation must act on at least one point");
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 1 || image > n)
      throw DomainError("permutation image " + std::to_string(image) + " outside [1, " + std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(image - 1)])
      throw DomainError("permutation is not a bijection: " + std::to_string(image) + " repeated");
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) { return from_cycles(n, {{a, b}}); }

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 1) throw DomainError("permutation must act on at least one point");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cyc : cycles) {
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      const int from = cyc[t];
      if (from < 1 || from > n) throw DomainError("cycle element " + std::to_string(from) + " out of range");
      if (used[static_cast<std::size_t>(from - 1)]) throw DomainError("cycles are not disjoint");
      used[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = cyc[(t + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Mask Permutation::apply(Mask set) const {
  if (n() > kMaxSubsetUniverse) throw CapabilityError("bitmask action needs n <= 64");
  Mask image = 0;
  for (; set != 0; set &= set - 1) image |= Mask{1} << (images_[static_cast<std::size_t>(std::countr_zero(set))] - 1);
  return image;
}

Subset Permutation::apply(const Subset& set) const {
  if (set.n() != n()) throw UniverseMismatch(n(), set.n());
  return Subset(n(), apply(set.bits()));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw UniverseMismatch(a.n(), b.n());
  std::vector<int> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b.images_[i]);
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

BitRelocator::BitRelocator(const Permutation& sigma) {
  if (sigma.n() > kMaxSubsetUniverse) throw CapabilityError("bitmask action needs n <= 64");
  const int chunks = (sigma.n() + 7) / 8;
  tables_.resize(static_cast<std::size_t>(chunks));
  for (int chunk = 0; chunk < chunks; ++chunk) {
    for (unsigned byte = 0; byte < 256; ++byte) {
      Mask image = 0;
      for (int bit = 0; bit < 8; ++bit) {
        const int element = chunk * 8 + bit;
        if (((byte >> bit) & 1) && element < sigma.n()) image |= Mask{1} << (sigma(element + 1) - 1);
      }
      tables_[static_cast<std::size_t>(chunk)][byte] = image;
    }
  }
}

PermGroup::PermGroup(std::vector<Permutation> generators, std::string label)
    : generators_(std::move(generators)), label_(std::move(label)) {
  if (generators_.empty()) throw DomainError("a permutation group needs at least one generator");
  n_ = generators_.front().n();
  for (const auto& g : generators_)
    if (g.n() != n_) throw UniverseMismatch(n_, g.n());
}

PermGroup PermGroup::cyclic(int n) { return PermGroup({Permutation::cycle(n)}, "C" + std::to_string(n)); }

PermGroup PermGroup::dihedral(int n) {
  std::vector<int> reflection(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reflection[static_cast<std::size_t>(i)] = n - i;
  return PermGroup({Permutation::cycle(n), Permutation(std::move(reflection))}, "D" + std::to_string(n));
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<Permutation> gens{Permutation::cycle(n)};
  if (n >= 2) gens.push_back(Permutation::transposition(n, 1, 2));
  return PermGroup(std::move(gens), "S" + std::to_string(n));
}

}  // namespace symfam
