#include "symfam/bigint.hpp"

#include <cmath>

namespace symfam {

std::string to_decimal(const BigInt& value) { return value.str(); }

double log2_big(const BigInt& value) {
  if (value <= 0) return -INFINITY;
  const auto bits = static_cast<long>(boost::multiprecision::msb(value)) + 1;
  if (bits <= 64) return std::log2(static_cast<double>(value.convert_to<std::uint64_t>()));
  const BigInt top = value >> static_cast<unsigned>(bits - 64);
  return static_cast<double>(bits - 64) + std::log2(static_cast<double>(top.convert_to<std::uint64_t>()));
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Dyadic Dyadic::rescaled(unsigned exponent) const {
  return Dyadic(numerator_ << (exponent - exponent_), exponent);
}

double Dyadic::to_double() const {
  // Shift the numerator down to at most 64 significant bits before the
  // conversion so huge values do not overflow, then scale.
  if (numerator_ == 0) return 0.0;
  BigInt magnitude = numerator_ < 0 ? BigInt(-numerator_) : numerator_;
  const long bits = static_cast<long>(boost::multiprecision::msb(magnitude)) + 1;
  long shift = 0;
  if (bits > 64) {
    shift = bits - 64;
    // Round to nearest on the dropped bits via a sticky bit.
    const bool sticky = (magnitude & ((BigInt(1) << static_cast<unsigned>(shift)) - 1)) != 0;
    magnitude >>= static_cast<unsigned>(shift);
    if (sticky) magnitude |= 1;
  }
  double mantissa = static_cast<double>(magnitude.convert_to<std::uint64_t>());
  if (numerator_ < 0) mantissa = -mantissa;
  return std::ldexp(mantissa, static_cast<int>(shift) - static_cast<int>(exponent_));
}

Rational Dyadic::to_rational() const { return Rational(numerator_, denominator()); }

namespace {
unsigned common_exponent(const Dyadic& a, const Dyadic& b) {
  return a.exponent() > b.exponent() ? a.exponent() : b.exponent();
}
}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned e = common_exponent(a, b);
  return Dyadic(a.rescaled(e).numerator() + b.rescaled(e).numerator(), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  const unsigned e = common_exponent(a, b);
  return Dyadic(a.rescaled(e).numerator() - b.rescaled(e).numerator(), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.numerator() * b.numerator(), a.exponent() + b.exponent());
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  const unsigned e = common_exponent(a, b);
  return a.rescaled(e).numerator() == b.rescaled(e).numerator();
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned e = common_exponent(a, b);
  const BigInt lhs = a.rescaled(e).numerator();
  const BigInt rhs = b.rescaled(e).numerator();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double DyadicProbability::value() const {
  return std::ldexp(static_cast<double>(numerator), -static_cast<int>(bits));
}

std::optional<DyadicProbability> as_dyadic(double p, unsigned max_bits) {
  if (!(p >= 0.0 && p <= 1.0)) return std::nullopt;
  for (unsigned bits = 0; bits <= max_bits; ++bits) {
    const double scaled = std::ldexp(p, static_cast<int>(bits));
    if (scaled == std::floor(scaled)) return DyadicProbability{static_cast<std::uint64_t>(scaled), bits};
  }
  return std::nullopt;
}

}  // namespace symfam
