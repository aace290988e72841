#include "symfam/galois.hpp"

#include "symfam/errors.hpp"

#include <string>

namespace symfam {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

struct Extension {
  int p;
  int degree;
  // Monic modulus, low coefficient first (leading 1 omitted).
  std::vector<int> modulus;
};

// x^2+x+1 / GF(2), x^3+x+1 / GF(2), x^2+1 / GF(3).
bool builtin_extension(int q, Extension& out) {
  switch (q) {
    case 4: out = {2, 2, {1, 1}}; return true;
    case 8: out = {2, 3, {1, 1, 0}}; return true;
    case 9: out = {3, 2, {1, 0}}; return true;
    default: return false;
  }
}

std::vector<int> digits(int value, const Extension& ext) {
  std::vector<int> out(static_cast<std::size_t>(ext.degree));
  for (auto& d : out) {
    d = value % ext.p;
    value /= ext.p;
  }
  return out;
}

int from_digits(const std::vector<int>& coeffs, int p) {
  int value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * p + *it;
  return value;
}

int poly_mul(int a, int b, const Extension& ext) {
  const auto da = digits(a, ext);
  const auto db = digits(b, ext);
  std::vector<int> product(static_cast<std::size_t>(2 * ext.degree - 1), 0);
  for (int i = 0; i < ext.degree; ++i)
    for (int j = 0; j < ext.degree; ++j)
      product[static_cast<std::size_t>(i + j)] =
          (product[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % ext.p;
  // x^degree = -(modulus lower terms).
  for (int top = 2 * ext.degree - 2; top >= ext.degree; --top) {
    const int c = product[static_cast<std::size_t>(top)];
    if (c == 0) continue;
    product[static_cast<std::size_t>(top)] = 0;
    for (int i = 0; i < ext.degree; ++i) {
      auto& slot = product[static_cast<std::size_t>(top - ext.degree + i)];
      slot = ((slot - c * ext.modulus[static_cast<std::size_t>(i)]) % ext.p + ext.p) % ext.p;
    }
  }
  product.resize(static_cast<std::size_t>(ext.degree));
  return from_digits(product, ext.p);
}

}  // namespace

bool GaloisField::supports(int q) {
  Extension ext;
  return (is_prime(q) && q <= 251) || builtin_extension(q, ext);
}

GaloisField::GaloisField(int q) : q_(q) {
  if (!supports(q)) throw DomainError("unsupported field order q=" + std::to_string(q));
  Extension ext{q, 1, {0}};
  builtin_extension(q, ext);
  p_ = ext.p;

  const auto size = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
  add_.resize(size);
  mul_.resize(size);
  neg_.resize(static_cast<std::size_t>(q));
  inv_.assign(static_cast<std::size_t>(q), 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, ext);
    std::vector<int> negated(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) negated[i] = (p_ - da[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = from_digits(negated, p_);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, ext);
      std::vector<int> sum(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[index(a, b)] = from_digits(sum, p_);
      mul_[index(a, b)] = ext.degree == 1 ? (a * b) % q : poly_mul(a, b, ext);
      if (mul_[index(a, b)] == 1) inv_[static_cast<std::size_t>(a)] = b;
    }
  }
}

}  // namespace symfam
