#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace symfam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigInt& value);

// log2 of a positive integer from its bit length and leading 64 bits.
// Accurate to well beyond 12 significant digits.
double log2_big(const BigInt& value);

inline BigInt pow2(unsigned exponent) { return BigInt(1) << exponent; }

BigInt binomial(unsigned n, unsigned k);

// Exact value numerator / 2^exponent. Kept unreduced; comparison and
// arithmetic align exponents first.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt numerator, unsigned exponent)
      : numerator_(std::move(numerator)), exponent_(exponent) {}

  static Dyadic from_integer(BigInt value) { return Dyadic(std::move(value), 0); }

  const BigInt& numerator() const { return numerator_; }
  unsigned exponent() const { return exponent_; }
  BigInt denominator() const { return pow2(exponent_); }

  // Same value with denominator 2^exponent; exponent must not be smaller
  // than the current one.
  Dyadic rescaled(unsigned exponent) const;

  double to_double() const;
  Rational to_rational() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt numerator_{0};
  unsigned exponent_ = 0;
};

// p = numerator / 2^bits with 0 <= numerator <= 2^bits, bits minimal.
struct DyadicProbability {
  std::uint64_t numerator = 0;
  unsigned bits = 0;

  double value() const;
  DyadicProbability complement() const { return {(std::uint64_t{1} << bits) - numerator, bits}; }
};

// Recognizes p as a/2^b with b <= max_bits (binary64 value taken at face
// value). Returns nullopt for non-dyadic p or p outside [0, 1].
std::optional<DyadicProbability> as_dyadic(double p, unsigned max_bits = 16);

}  // namespace symfam
