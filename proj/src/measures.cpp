#include "symfam/measures.hpp"

#include "symfam/detail/parallel.hpp"
#include "symfam/errors.hpp"
#include "symfam/properties.hpp"

#include <cmath>
#include <cstdio>

namespace symfam {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("bias p must lie in [0, 1], got " + std::to_string(p));
}

}  // namespace

std::optional<BigInt> BiasedMeasureValue::exact_numerator() const {
  if (!exact) return std::nullopt;
  return exact->numerator();
}

std::optional<BigInt> BiasedMeasureValue::exact_denominator() const {
  if (!exact) return std::nullopt;
  return exact->denominator();
}

Dyadic exact_biased_measure(const SizeProfile& profile, DyadicProbability p) {
  const int n = profile.n;
  const BigInt a = p.numerator;
  const BigInt c = BigInt(p.complement().numerator);
  std::vector<BigInt> a_pow(static_cast<std::size_t>(n) + 1, 1);
  std::vector<BigInt> c_pow(static_cast<std::size_t>(n) + 1, 1);
  for (int j = 1; j <= n; ++j) {
    a_pow[static_cast<std::size_t>(j)] = a_pow[static_cast<std::size_t>(j - 1)] * a;
    c_pow[static_cast<std::size_t>(j)] = c_pow[static_cast<std::size_t>(j - 1)] * c;
  }
  BigInt numerator = 0;
  for (int j = 0; j <= n; ++j) {
    const auto& w = profile.counts[static_cast<std::size_t>(j)];
    if (w != 0) numerator += w * a_pow[static_cast<std::size_t>(j)] * c_pow[static_cast<std::size_t>(n - j)];
  }
  return Dyadic(std::move(numerator), p.bits * static_cast<unsigned>(n));
}

double biased_measure_value(const SizeProfile& profile, double p) {
  require_probability(p);
  const int n = profile.n;
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    const auto& w = profile.counts[static_cast<std::size_t>(j)];
    if (w == 0) continue;
    sum += w.convert_to<double>() * std::pow(p, j) * std::pow(1.0 - p, n - j);
  }
  return sum;
}

BiasedMeasureValue biased_measure(const SizeProfile& profile, double p) {
  require_probability(p);
  if (static_cast<int>(profile.counts.size()) != profile.n + 1)
    throw DomainError("size profile must have n + 1 entries");
  BiasedMeasureValue result;
  if (const auto dyadic = as_dyadic(p)) {
    result.exact = exact_biased_measure(profile, *dyadic);
    result.value = result.exact->to_double();
  } else {
    result.value = biased_measure_value(profile, p);
  }
  return result;
}

BiasedMeasureValue biased_measure(const SetFamily& family, double p) {
  return biased_measure(size_profile(family), p);
}

double threshold_point(const MeasureFunction& measure, double epsilon) {
  double previous = measure(0.0);
  const double at_zero = previous;
  for (int i = 1; i < kMonotonicitySamples; ++i) {
    const double current = measure(static_cast<double>(i) / (kMonotonicitySamples - 1));
    if (current < previous - kMonotonicitySlack)
      throw ContractViolation("measure function decreases near p=" +
                              std::to_string(static_cast<double>(i) / (kMonotonicitySamples - 1)));
    previous = current;
  }
  const double at_one = previous;
  if (!(epsilon >= at_zero && epsilon <= at_one))
    throw UnreachableLevel("level " + std::to_string(epsilon) + " outside [M(0), M(1)] = [" +
                           std::to_string(at_zero) + ", " + std::to_string(at_one) + "]");

  double lo = 0.0;
  double hi = 1.0;
  for (int iteration = 0; iteration < kThresholdMaxIterations; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = measure(mid);
    if (value == epsilon) return mid;
    if (value < epsilon)
      lo = mid;
    else
      hi = mid;
  }
  const double mid = 0.5 * (lo + hi);
  if (hi - lo > kThresholdTolerance)
    throw ContractViolation("bisection did not converge within " + std::to_string(kThresholdMaxIterations) +
                            " iterations");
  return mid;
}

ThresholdWindow threshold_window(const MeasureFunction& measure, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw DomainError("threshold window needs epsilon in (0, 1/2)");
  ThresholdWindow window;
  window.epsilon = epsilon;
  window.p_lo = threshold_point(measure, epsilon);
  window.p_hi = threshold_point(measure, 1.0 - epsilon);
  window.width = window.p_hi - window.p_lo;
  return window;
}

double fk_q(double p, double epsilon, double c0, double n) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("fk_q needs 0 < p < 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("fk_q needs 0 < epsilon < 1");
  if (!(c0 > 0.0)) throw DomainError("fk_q needs c0 > 0");
  if (!(n >= 2.0)) throw DomainError("fk_q needs n >= 2");
  return std::min(1.0, p + c0 * std::log(1.0 / (2.0 * epsilon)) / std::log(n));
}

double main_bound_delta(double n, double c0) {
  if (!(n >= 2.0)) throw DomainError("main_bound_delta needs n >= 2");
  if (!(c0 > 0.0)) throw DomainError("main_bound_delta needs c0 > 0");
  return std::pow(n, -1.0 / (8.0 * c0));
}

std::vector<CurvePoint> measure_curve(const MeasureFunction& measure, int points, unsigned threads) {
  if (points < 2) throw DomainError("a measure curve needs at least 2 grid points");
  std::vector<CurvePoint> curve(static_cast<std::size_t>(points));
  detail::parallel_for(curve.size(), threads, [&](std::size_t i) {
    const double p = static_cast<double>(i) / static_cast<double>(points - 1);
    curve[i] = {p, measure(p)};
  });
  return curve;
}

std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "p,mu\n";
  char line[96];
  for (const auto& point : curve) {
    std::snprintf(line, sizeof line, "%.15g,%.15g\n", point.p, point.mu);
    out += line;
  }
  return out;
}

CrossLemmaReport verify_cross_lemma(const SetFamily& a, const SetFamily& b, double p) {
  if (a.n() != b.n()) throw UniverseMismatch(a.n(), b.n());
  require_probability(p);
  CrossLemmaReport report;
  report.n = a.n();
  report.p = p;
  report.applicable = cross_intersecting(a, b);
  const SetFamily complement_b = complement_family(b);
  report.mechanism_ok =
      std::none_of(a.begin(), a.end(), [&](Mask x) { return complement_b.contains(x); });

  const auto dyadic = as_dyadic(p);
  if (dyadic) {
    const auto profile_a = size_profile(a);
    const auto profile_b = size_profile(b);
    const Dyadic mu_a = exact_biased_measure(profile_a, *dyadic);
    const Dyadic mu_b = exact_biased_measure(profile_b, dyadic->complement());
    report.mu_a = {mu_a.to_double(), mu_a};
    report.mu_b = {mu_b.to_double(), mu_b};
    report.exact_sum = mu_a + mu_b;
    report.sum = report.exact_sum->to_double();
    report.holds = *report.exact_sum <= Dyadic::from_integer(1);
  } else {
    report.mu_a = biased_measure(a, p);
    report.mu_b = biased_measure(b, 1.0 - p);
    report.sum = report.mu_a.value + report.mu_b.value;
    report.holds = report.sum <= 1.0 + 1e-12;
  }
  return report;
}

LemmaIntReport verify_intersection_lemma(const SetFamily& family) {
  const int n = family.n();
  LemmaIntReport report;
  report.n = n;
  report.delta = Dyadic(BigInt(family.size()), static_cast<unsigned>(n));

  const SetFamily meets = intersection_family(family);
  const SizeProfile profile = size_profile(meets);
  BigInt three_pow = 1;
  std::vector<BigInt> powers_of_three(static_cast<std::size_t>(n) + 1);
  for (int e = 0; e <= n; ++e) {
    powers_of_three[static_cast<std::size_t>(e)] = three_pow;
    three_pow *= 3;
  }
  report.weighted_sum = 0;
  for (int j = 0; j <= n; ++j) {
    const auto& count = profile.counts[static_cast<std::size_t>(j)];
    report.counts.push_back(count.convert_to<std::uint64_t>());
    report.weighted_sum += powers_of_three[static_cast<std::size_t>(n - j)] * count;
  }

  report.mu_quarter = biased_measure(profile, 0.25);
  const BigInt size_squared = BigInt(family.size()) * family.size();
  report.pair_count_ok = report.weighted_sum >= size_squared;
  report.identity_ok = *report.mu_quarter.exact == Dyadic(report.weighted_sum, 2u * static_cast<unsigned>(n));
  report.holds = *report.mu_quarter.exact >= report.delta * report.delta;
  return report;
}

ProofChainReport verify_proof_chain(const SetFamily& family) {
  if (!r_wise_intersecting(family, 3))
    throw NotApplicable("proof-chain verification needs a 3-wise intersecting family");
  const SetFamily up = upset_closure(family);
  ProofChainReport report;
  report.n = family.n();
  report.upset_size = up.size();
  report.delta = Dyadic(BigInt(up.size()), static_cast<unsigned>(family.n()));
  report.cross_ok = cross_intersecting(up, intersection_family(up));
  report.mu_three_quarters = biased_measure(up, 0.75);
  report.bound_ok = *report.mu_three_quarters.exact <= Dyadic::from_integer(1) - report.delta * report.delta;
  return report;
}

}  // namespace symfam
