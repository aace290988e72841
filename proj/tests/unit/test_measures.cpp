#include "oracles.hpp"
#include "symfam/constructions.hpp"
#include "symfam/errors.hpp"
#include "symfam/measures.hpp"
#include "symfam/properties.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace symfam;

namespace {

SetFamily star(int n) {
  return SetFamily::from_predicate(n, [](Mask m) { return (m & 1) != 0; });
}

SetFamily above(int n, double fraction) {
  return SetFamily::from_predicate(n, [&](Mask m) { return popcount(m) > fraction * n; });
}

}  // namespace

TEST_CASE("dyadic recognition") {
  CHECK(as_dyadic(0.25)->numerator == 1);
  CHECK(as_dyadic(0.25)->bits == 2);
  CHECK(as_dyadic(1.0)->bits == 0);
  CHECK(as_dyadic(0.0)->numerator == 0);
  CHECK_FALSE(as_dyadic(0.1).has_value());
  CHECK_FALSE(as_dyadic(1.5).has_value());
  CHECK_FALSE(as_dyadic(std::ldexp(1.0, -17)).has_value());
}

TEST_CASE("measure of a star is p") {
  for (int n : {1, 4, 9})
    for (double p : {0.0, 0.1, 0.25, 0.5, 0.7, 1.0}) {
      const auto mu = biased_measure(star(n), p);
      CHECK(mu.value == doctest::Approx(p).epsilon(1e-12));
      if (mu.exact) CHECK(mu.exact->to_double() == p);
    }
}

TEST_CASE("power set has measure one") {
  for (int n = 1; n <= 12; ++n)
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      const auto mu = biased_measure(SetFamily::power_set(n), p);
      CHECK(std::abs(mu.value - 1.0) <= 1e-12);
      if (mu.exact) CHECK(*mu.exact == Dyadic::from_integer(1));
    }
}

TEST_CASE("half measure counts members") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 12; ++n) {
    const auto f = SetFamily::from_masks(n, oracle::random_family(n, 0.3, rng));
    const auto mu = biased_measure(f, 0.5);
    REQUIRE(mu.exact.has_value());
    CHECK(*mu.exact * Dyadic::from_integer(pow2(static_cast<unsigned>(n))) == Dyadic::from_integer(f.size()));
    CHECK(mu.exact_denominator() == pow2(static_cast<unsigned>(n)));
  }
  const auto block = biased_measure(block_family(3).to_explicit(), 0.5);
  CHECK(block.exact->to_rational() == Rational(37, 512));
}

TEST_CASE("exact quarter measures match an integer oracle") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 8;
    const auto members = oracle::random_family(n, 0.4, rng);
    const auto f = SetFamily::from_masks(n, members);
    for (int num : {1, 2, 3}) {
      const auto mu = biased_measure(f, num / 4.0);
      CHECK(mu.exact->to_rational() ==
            Rational(BigInt(oracle::quarter_weight(members, n, num)), pow2(2 * static_cast<unsigned>(n))));
    }
  }
}

TEST_CASE("measures of increasing families are monotone on a grid") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial;
    const auto f = upset_closure(SetFamily::from_masks(n, oracle::random_family(n, 0.01, rng)));
    const auto profile = size_profile(f);
    double previous = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double mu = biased_measure_value(profile, i / 100.0);
      CHECK(mu >= previous - 1e-15);
      previous = mu;
    }
  }
}

TEST_CASE("biased measure rejects p outside [0, 1]") {
  CHECK_THROWS_AS(biased_measure(star(3), -0.1), DomainError);
  CHECK_THROWS_AS(biased_measure(star(3), 1.5), DomainError);
}

TEST_CASE("threshold points") {
  const MeasureFunction identity = [](double p) { return p; };
  CHECK(threshold_point(identity, 0.3) == doctest::Approx(0.3).epsilon(1e-9));
  const auto majority = majority_family(5);
  const MeasureFunction m5 = [&](double p) { return majority.measure(p); };
  CHECK(threshold_point(m5, 0.5) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_THROWS_AS(threshold_point([](double p) { return 0.2 + 0.5 * p; }, 0.9), UnreachableLevel);
  CHECK_THROWS_AS(threshold_point([](double p) { return 1.0 - p; }, 0.5), ContractViolation);
}

TEST_CASE("threshold point of block(5) against an independent closed form") {
  // B(p)^k - (B(p) - p^k)^k evaluated with long double, per block.
  auto reference = [](long double p) {
    const int k = 5;
    long double b = 0;
    for (int j = 3; j <= k; ++j) b += std::tgamma(k + 1.0L) / (std::tgamma(j + 1.0L) * std::tgamma(k - j + 1.0L)) *
                                      std::pow(p, j) * std::pow(1 - p, k - j);
    return std::pow(b, k) - std::pow(b - std::pow(p, k), k);
  };
  const auto block = block_family(5);
  const double p = threshold_point([&](double x) { return block.measure(x); }, 0.1);
  CHECK(static_cast<double>(reference(p)) == doctest::Approx(0.1).epsilon(1e-8));
}

TEST_CASE("threshold windows") {
  const auto w = threshold_window([](double p) { return p; }, 0.1);
  CHECK(w.p_lo == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(w.p_hi == doctest::Approx(0.9).epsilon(1e-9));
  CHECK(w.width == doctest::Approx(0.8).epsilon(1e-9));
  const auto m3 = majority_family(3);
  const auto s = threshold_window([&](double p) { return m3.measure(p); }, 0.1);
  CHECK(s.p_lo + s.p_hi == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(threshold_window([](double p) { return p; }, 0.5), DomainError);
  const auto b5 = block_family(5), b15 = block_family(15);
  CHECK(threshold_window([&](double p) { return b15.measure(p); }, 0.1).width <
        threshold_window([&](double p) { return b5.measure(p); }, 0.1).width);
}

TEST_CASE("fk_q and main_bound_delta") {
  CHECK(fk_q(0.3, 0.5, 1.0, 10) == doctest::Approx(0.3));
  CHECK(fk_q(0.3, 0.1, 1e6, 10) == 1.0);
  CHECK(fk_q(0.5, 0.125, 1.0, 16) == doctest::Approx(1.0));
  CHECK(fk_q(0.25, 0.125, 0.5, 16) == doctest::Approx(0.5));
  CHECK(main_bound_delta(256, 1.0) == doctest::Approx(0.5));
  CHECK(main_bound_delta(std::pow(2.0, 16), 2.0) == doctest::Approx(0.5));
  CHECK(main_bound_delta(100, 1e9) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(fk_q(0.0, 0.1, 1.0, 10), DomainError);
  CHECK_THROWS_AS(main_bound_delta(1, 1.0), DomainError);
}

TEST_CASE("measure curves are ordered and thread independent") {
  const auto block = block_family(7);
  const MeasureFunction m = [&](double p) { return block.measure(p); };
  const auto one = measure_curve(m, 101, 1);
  const auto four = measure_curve(m, 101, 4);
  REQUIRE(one.size() == 101);
  CHECK(one.front().p == 0.0);
  CHECK(one.back().p == 1.0);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].mu == four[i].mu);
    if (i) CHECK(one[i].mu >= one[i - 1].mu);
  }
  const auto csv = curve_to_csv(measure_curve([](double p) { return p; }, 3));
  CHECK(csv == "p,mu\n0,0\n0.5,0.5\n1,1\n");
}

TEST_CASE("cross lemma examples") {
  for (double p : {0.0, 0.25, 0.3, 0.5, 1.0}) {
    const auto report = verify_cross_lemma(star(4), star(4), p);
    CHECK(report.applicable);
    CHECK(report.mechanism_ok);
    CHECK(report.holds);
    CHECK(report.sum == doctest::Approx(1.0));
  }
  const auto tight = verify_cross_lemma(star(4), star(4), 0.25);
  CHECK(*tight.exact_sum == Dyadic::from_integer(1));
  const auto vacuous = verify_cross_lemma(SetFamily(3), SetFamily::power_set(3), 0.25);
  CHECK(vacuous.applicable);
  CHECK(vacuous.holds);
  const auto disjoint = verify_cross_lemma(SetFamily::from_masks(2, {1}), SetFamily::from_masks(2, {2}), 0.5);
  CHECK_FALSE(disjoint.applicable);
  CHECK_THROWS_AS(verify_cross_lemma(star(2), star(3), 0.5), UniverseMismatch);
}

TEST_CASE("pair count: 3^(n-|z|) ordered pairs meet in z") {
  for (int n = 1; n <= 3; ++n) {
    const Mask end = Mask{1} << n;
    for (Mask z = 0; z < end; ++z) {
      int pairs = 0;
      for (Mask x = 0; x < end; ++x)
        for (Mask y = 0; y < end; ++y) pairs += (x & y) == z;
      int expected = 1;
      for (int i = 0; i < n - popcount(z); ++i) expected *= 3;
      CHECK(pairs == expected);
    }
  }
}

TEST_CASE("intersection lemma") {
  const auto top = verify_intersection_lemma(SetFamily::from_masks(5, {universe_mask(5)}));
  CHECK(top.holds);
  CHECK(top.identity_ok);
  CHECK(top.mu_quarter.exact->to_rational() == Rational(1, 1024));
  CHECK(top.delta * top.delta == *top.mu_quarter.exact);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 10;
    const auto members = oracle::random_family(n, 0.2, rng);
    const auto report = verify_intersection_lemma(SetFamily::from_masks(n, members));
    CHECK(report.holds);
    CHECK(report.identity_ok);
    CHECK(report.pair_count_ok);
    // Oracle: weighted sum equals 4^n * mu_{1/4}(I(A)) computed directly.
    std::vector<Mask> meets;
    for (Mask x : members)
      for (Mask y : members) meets.push_back(x & y);
    std::sort(meets.begin(), meets.end());
    meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
    CHECK(report.weighted_sum == oracle::quarter_weight(meets, n, 1));
  }
}

TEST_CASE("proof chain") {
  const auto third = verify_proof_chain(above(6, 2.0 / 3.0));
  CHECK(third.cross_ok);
  CHECK(third.bound_ok);
  const auto top = verify_proof_chain(SetFamily::from_masks(4, {universe_mask(4)}));
  CHECK(top.delta.to_rational() == Rational(1, 16));
  CHECK(top.mu_three_quarters.exact->to_rational() == Rational(81, 256));
  CHECK(top.bound_ok);
  const auto block = verify_proof_chain(block_family(3).to_explicit());
  CHECK(block.bound_ok);
  CHECK(block.delta.to_rational() == Rational(37, 512));
  CHECK_THROWS_AS(verify_proof_chain(above(4, 0.25)), NotApplicable);
}
