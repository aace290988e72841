#include "oracles.hpp"
#include "symfam/constructions.hpp"
#include "symfam/errors.hpp"
#include "symfam/galois.hpp"
#include "symfam/properties.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace symfam;

namespace {

std::uint64_t brute_count(const StructuredFamily& family) {
  std::uint64_t count = 0;
  for (Mask m = 0; m < (Mask{1} << family.n()); ++m) count += family.contains(m) ? 1 : 0;
  return count;
}

std::vector<StructuredFamily> small_constructions() {
  return {majority_family(1),   majority_family(3),    majority_family(7),  threshold_family(3, 3),
          threshold_family(4, 2), threshold_family(9, 3), threshold_family(10, 4), block_family(1),
          block_family(3),      tree_family(1, 5),     tree_family(3, 3),   projective_family(2, 2),
          projective_family(3, 2), projective_family(2, 3)};
}

}  // namespace

TEST_CASE("galois fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    const GaloisField f(q);
    for (int a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      for (int b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  CHECK_FALSE(GaloisField::supports(6));
  CHECK_FALSE(GaloisField::supports(16));
  CHECK_THROWS_AS(GaloisField(6), DomainError);
}

TEST_CASE("majority and threshold counts") {
  CHECK(majority_family(3).exact_count() == 4);
  CHECK(majority_family(3).to_explicit().members() == std::vector<Mask>{0b011, 0b101, 0b110, 0b111});
  CHECK(majority_family(1).exact_count() == 1);
  CHECK(majority_family(5).exact_count() == 16);
  CHECK(majority_family(41).exact_count() == pow2(40));
  CHECK(threshold_family(3, 3).exact_count() == 1);
  CHECK(threshold_family(4, 2).exact_count() == 5);
  CHECK(threshold_family(9, 3).exact_count() == 46);
  CHECK_THROWS_AS(majority_family(4), DomainError);
  CHECK_THROWS_AS(threshold_family(5, 1), DomainError);
}

TEST_CASE("block counts") {
  CHECK(block_family(1).exact_count() == 1);
  CHECK(block_family(3).exact_count() == 37);
  CHECK(block_family(3).exact_measure(Rational(1, 2)) == Rational(37, 512));
  for (int k : {1, 3, 5, 7, 9}) {
    const BigInt a = pow2(static_cast<unsigned>(k - 1));
    BigInt expected = 1, minus = 1;
    for (int i = 0; i < k; ++i) {
      expected *= a;
      minus *= a - 1;
    }
    CHECK(block_family(k).exact_count() == expected - minus);
    CHECK(block_count(k) == expected - minus);
  }
  CHECK_THROWS_AS(block_family(4), DomainError);
  CHECK_THROWS_AS(block_family(-1), DomainError);
}

TEST_CASE("tree counts") {
  for (int k : {1, 3, 5, 7}) CHECK(tree_family(k, 3).exact_count() == block_family(k).exact_count());
  CHECK(tree_family(1, 4).exact_count() == 1);
  CHECK(tree_family(3, 4).exact_count() == BigInt(37) * 37 * 37 - BigInt(36) * 36 * 36);
  CHECK(tree_count(3, 4) == tree_family(3, 4).exact_count());
  CHECK_THROWS_AS(tree_family(3, 2), DomainError);
  CHECK_THROWS_AS(tree_family(2, 3), DomainError);
}

TEST_CASE("explicit membership matches independent oracles") {
  for (Mask x = 0; x < 512; ++x) CHECK(block_family(3).contains(x) == oracle::block_member(x, 3));
  const auto tree = tree_family(3, 3);
  for (Mask x = 0; x < 512; ++x) CHECK(tree.contains(x) == oracle::tree_member(x, 3, 3));
  // Tree (3, 4) on 27 leaves: sampled membership against the direct rules.
  const auto deep = tree_family(3, 4);
  std::mt19937_64 rng(17);
  int members = 0;
  for (int i = 0; i < 200000; ++i) {
    const Mask x = rng() & universe_mask(27);
    const bool in = oracle::tree_member(x, 3, 4);
    members += in;
    CHECK(deep.contains(x) == in);
  }
  CHECK(members > 0);
  // Dense samples so that members are hit often.
  for (int i = 0; i < 20000; ++i) {
    const Mask x = (rng() | rng()) & universe_mask(27);
    CHECK(deep.contains(x) == oracle::tree_member(x, 3, 4));
  }
}

TEST_CASE("exact counts agree with enumeration") {
  for (const auto& family : small_constructions()) {
    CAPTURE(family.descriptor().to_string());
    CHECK(family.exact_count() == brute_count(family));
    CHECK(family.to_explicit().size() == family.exact_count());
    CHECK(family.exact_measure(Rational(1, 2)) * Rational(pow2(static_cast<unsigned>(family.n()))) ==
          Rational(family.exact_count()));
  }
}

TEST_CASE("constructions are r-wise intersecting for their order") {
  for (const auto& family : small_constructions()) {
    CAPTURE(family.descriptor().to_string());
    const auto explicit_family = family.to_explicit();
    CHECK(r_wise_intersecting(explicit_family, family.intersection_order()));
    if (family.n() <= 9) CHECK(oracle::r_wise(minimal_elements(explicit_family).members(), family.n(), family.intersection_order()));
  }
  CHECK(sampled_r_wise_check(tree_family(3, 4), 4, 1'000'000, 0));
  CHECK(sampled_r_wise_check(block_family(7), 3, 1'000'000, 1));
  CHECK_FALSE(sampled_r_wise_check(majority_family(31), 3, 100'000, 0));
}

TEST_CASE("witnesses certify symmetry") {
  for (const auto& family : small_constructions()) {
    CAPTURE(family.descriptor().to_string());
    CHECK(symmetry_witness(family, family.witness()));
    CHECK(is_transitive(family.witness()));
    const auto explicit_family = family.to_explicit();
    const auto up = upset_closure(explicit_family);
    for (const auto& g : family.witness().generators()) CHECK(preserves_family(g, up));
  }
  for (const auto& family : {block_family(7), tree_family(3, 4), majority_family(25)})
    CHECK(symmetry_witness(family, family.witness()));
  CHECK_FALSE(symmetry_witness(block_family(3), PermGroup({Permutation::transposition(9, 1, 2)})));
  CHECK_FALSE(symmetry_witness(block_family(3), PermGroup::cyclic(9)));
}

TEST_CASE("measures are monotone and consistent") {
  for (const auto& family : small_constructions()) {
    CAPTURE(family.descriptor().to_string());
    double previous = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double mu = family.measure(i / 100.0);
      CHECK(mu >= previous - 1e-15);
      previous = mu;
    }
    for (int num : {1, 3}) {
      const double exact = family.exact_measure(Rational(num, 4)).convert_to<double>();
      CHECK(family.measure(num / 4.0) == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("projective geometries") {
  struct Case {
    int q, r, points, plane;
  };
  for (auto c : {Case{2, 2, 7, 3}, Case{2, 3, 15, 7}, Case{3, 2, 13, 4}, Case{4, 2, 21, 5}, Case{5, 2, 31, 6},
                 Case{7, 2, 57, 8}}) {
    const auto g = projective_geometry(c.q, c.r);
    CHECK(g.n() == c.points);
    CHECK(static_cast<int>(g.hyperplanes.size()) == c.points);
    for (const auto& h : g.hyperplanes) CHECK(h.size() == c.plane);
  }
  for (auto [q, r] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const auto g = projective_geometry(q, r);
    const auto reference = oracle::projective(q, r);
    std::vector<Mask> planes;
    for (const auto& h : g.hyperplanes) planes.push_back(h.bits());
    std::sort(planes.begin(), planes.end());
    auto expected = reference.hyperplanes;
    std::sort(expected.begin(), expected.end());
    CHECK(planes == expected);
    CHECK(projective_family(q, r).exact_count() == oracle::count_containing_some(expected, g.n()));
  }
  CHECK_THROWS_AS(projective_geometry(6, 2), DomainError);
  CHECK_THROWS_AS(projective_geometry(8, 2), CapabilityError);
  CHECK_THROWS_AS(projective_family(2, 4), CapabilityError);
  CHECK_THROWS_AS(projective_family(4, 2), CapabilityError);
}

TEST_CASE("every r hyperplanes share a point") {
  for (auto [q, r] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 2}}) {
    const auto g = projective_geometry(q, r);
    std::vector<Mask> planes;
    for (const auto& h : g.hyperplanes) planes.push_back(h.bits());
    CHECK(oracle::r_wise(planes, g.n(), r));
  }
}

TEST_CASE("projective sandwich bound") {
  for (auto [q, r] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const auto family = projective_family(q, r, 4);
    const int n = family.n();
    const int h = projective_geometry(q, r).hyperplanes.front().size();
    const BigInt low = pow2(static_cast<unsigned>(n - h));
    CHECK(low <= family.exact_count());
    CHECK(family.exact_count() <= low * n);
    CHECK(family.exact_count() == projective_family(q, r, 1).exact_count());
  }
}

TEST_CASE("size reports") {
  const auto block = size_report(block_family(3));
  CHECK(block.descriptor == "block(k=3)");
  CHECK(block.deficiency == doctest::Approx(9 - std::log2(37.0)).epsilon(1e-12));
  CHECK(*block.predicted_deficiency == doctest::Approx(6.0));
  for (int k : {5, 7, 9, 11})
    CHECK(std::abs(size_report(block_family(k)).deficiency - (2 * k - 1 - std::log2(k))) < 0.5);
  CHECK(std::abs(size_report(block_family(11)).deficiency - (21 - std::log2(11.0))) < 0.1);
  const auto plane = size_report(projective_family(2, 2));
  CHECK(*plane.predicted_deficiency == doctest::Approx(std::sqrt(7.0)));
  CHECK_FALSE(size_report(majority_family(5)).predicted_deficiency.has_value());
  const auto huge = size_report(block_family(63));
  CHECK(huge.log2_count == doctest::Approx(boost::multiprecision::msb(huge.exact_count)).epsilon(0.01));
}

TEST_CASE("descriptor round trip") {
  for (const auto& family : small_constructions()) {
    const auto& d = family.descriptor();
    const auto parsed = parse_descriptor(d.to_string());
    CHECK(parsed.to_string() == d.to_string());
    CHECK(make_family(parsed).exact_count() == family.exact_count());
  }
  CHECK_THROWS_AS(parse_descriptor("block(q=3)"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("tree(k=3)"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("cube(n=3)"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("block k=3"), DomainError);
}
