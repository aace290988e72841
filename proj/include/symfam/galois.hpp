#pragma once

#include <cstdint>
#include <vector>

namespace symfam {

// Small finite fields GF(q): q prime (q <= 251) or q in {4, 8, 9}. The
// prime powers use fixed irreducible polynomials x^2+x+1, x^3+x+1 and x^2+1
// over the prime subfield. Elements are the integers 0..q-1, read as
// base-p coefficient vectors; 0 and 1 are the field's zero and one.
class GaloisField {
 public:
  explicit GaloisField(int q);

  static bool supports(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  // a != 0.
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

  int q_;
  int p_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

}  // namespace symfam
