#pragma once

#include "symfam/bigint.hpp"
#include "symfam/family.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace symfam {

// μ_p of a family. `exact` is populated when p = a/2^b with b <= 16; it is
// stored over the denominator 2^(b n), and `value` is its correctly rounded
// binary64 image.
struct BiasedMeasureValue {
  double value = 0.0;
  std::optional<Dyadic> exact;

  std::optional<BigInt> exact_numerator() const;
  std::optional<BigInt> exact_denominator() const;
};

// Σ_j W_j p^j (1-p)^(n-j). Throws DomainError for p outside [0, 1].
BiasedMeasureValue biased_measure(const SizeProfile& profile, double p);
BiasedMeasureValue biased_measure(const SetFamily& family, double p);

// Exact μ_p for dyadic p, over the denominator 2^(bits n).
Dyadic exact_biased_measure(const SizeProfile& profile, DyadicProbability p);

// Binary64 evaluation only; used for curves and bisection.
double biased_measure_value(const SizeProfile& profile, double p);

using MeasureFunction = std::function<double(double)>;

inline constexpr double kThresholdTolerance = 1e-9;
inline constexpr int kThresholdMaxIterations = 200;
inline constexpr int kMonotonicitySamples = 32;
inline constexpr double kMonotonicitySlack = 1e-12;

// Smallest-error p with M(p) = epsilon for a non-decreasing M, by
// bisection. Throws UnreachableLevel when epsilon is outside [M(0), M(1)]
// and ContractViolation when sampling finds M decreasing.
double threshold_point(const MeasureFunction& measure, double epsilon);

struct ThresholdWindow {
  double epsilon = 0.0;
  double p_lo = 0.0;  // μ = ε
  double p_hi = 0.0;  // μ = 1 - ε
  double width = 0.0;
};

// epsilon must lie in (0, 1/2).
ThresholdWindow threshold_window(const MeasureFunction& measure, double epsilon);

// min{1, p + c0 ln(1/(2ε)) / ln n}.
double fk_q(double p, double epsilon, double c0, double n);

// n^(-1/(8 c0)).
double main_bound_delta(double n, double c0);

struct CurvePoint {
  double p = 0.0;
  double mu = 0.0;
};

// `points` equally spaced values of p in [0, 1], ascending; points >= 2.
std::vector<CurvePoint> measure_curve(const MeasureFunction& measure, int points, unsigned threads = 1);

// Header `p,mu`, 15 significant digits.
std::string curve_to_csv(const std::vector<CurvePoint>& curve);

struct CrossLemmaReport {
  int n = 0;
  double p = 0.0;
  bool applicable = false;     // A and B are cross-intersecting
  bool mechanism_ok = false;   // A ⊆ P_n \ complement(B)
  BiasedMeasureValue mu_a;     // μ_p(A)
  BiasedMeasureValue mu_b;     // μ_{1-p}(B)
  double sum = 0.0;
  std::optional<Dyadic> exact_sum;
  bool holds = false;          // μ_p(A) + μ_{1-p}(B) <= 1
};

// Non-dyadic p falls back to binary64 with a 1e-12 slack.
CrossLemmaReport verify_cross_lemma(const SetFamily& a, const SetFamily& b, double p);

struct LemmaIntReport {
  int n = 0;
  Dyadic delta;                       // μ_{1/2}(A)
  std::vector<std::uint64_t> counts;  // N_j of I(A)
  BigInt weighted_sum;                // Σ_j 3^(n-j) N_j
  BiasedMeasureValue mu_quarter;      // μ_{1/4}(I(A))
  bool pair_count_ok = false;         // weighted_sum >= |A|^2
  bool identity_ok = false;           // mu_quarter * 2^(2n) == weighted_sum
  bool holds = false;                 // mu_quarter >= delta^2
};

LemmaIntReport verify_intersection_lemma(const SetFamily& family);

struct ProofChainReport {
  int n = 0;
  std::size_t upset_size = 0;
  Dyadic delta;                         // μ_{1/2}(upset(A))
  bool cross_ok = false;                // upset(A) and I(upset(A)) cross-intersect
  BiasedMeasureValue mu_three_quarters; // μ_{3/4}(upset(A))
  bool bound_ok = false;                // μ_{3/4} <= 1 - δ^2
};

// Throws NotApplicable unless A is 3-wise intersecting.
ProofChainReport verify_proof_chain(const SetFamily& family);

}  // namespace symfam
