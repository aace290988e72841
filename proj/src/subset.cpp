#include "symfam/subset.hpp"

#include "symfam/errors.hpp"

namespace symfam {

Subset::Subset(int n, Mask bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxSubsetUniverse)
    throw CapabilityError("subset universe must satisfy 1 <= n <= 64, got " + std::to_string(n));
  if ((bits & ~universe_mask(n)) != 0) throw DomainError("subset has elements beyond n=" + std::to_string(n));
}

Subset Subset::of(int n, std::initializer_list<int> elements) {
  return of(n, std::vector<int>(elements));
}

Subset Subset::of(int n, const std::vector<int>& elements) {
  Mask bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw DomainError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    bits |= Mask{1} << (e - 1);
  }
  return Subset(n, bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace symfam
