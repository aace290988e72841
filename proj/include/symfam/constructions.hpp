#pragma once

#include "symfam/bigint.hpp"
#include "symfam/family.hpp"
#include "symfam/galois.hpp"
#include "symfam/permutation.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symfam {

enum class ConstructionKind { majority, threshold, block, tree, projective };

struct Descriptor {
  ConstructionKind kind = ConstructionKind::majority;
  int n = 0;  // majority, threshold
  int r = 0;  // threshold, tree, projective
  int k = 0;  // block, tree
  int q = 0;  // projective

  // "block(k=3)", "tree(k=3,r=4)", ...
  std::string to_string() const;
};

// Upper limit on the universe of implicit constructions; keeps exact
// counts at a few thousand bits.
inline constexpr int kMaxStructuredUniverse = 4096;

// Projective counts use inclusion-exclusion over all hyperplane subsets.
inline constexpr int kMaxInclusionExclusionHyperplanes = 20;

// Membership comparisons against every subset of [n] are used up to this n;
// above it, symmetry witnesses are checked on the defining set systems.
inline constexpr int kMaxExhaustiveWitnessUniverse = 20;

// A set system (list of sets of 1-based elements) whose preservation by a
// permutation implies preservation of the family.
using SetSystem = std::vector<std::vector<int>>;

namespace detail {
class StructuredImpl;
}

// An implicit family given by a construction: membership oracle, exact
// count, closed-form measure and a symmetry witness. Immutable; copies
// share state.
class StructuredFamily {
 public:
  explicit StructuredFamily(std::shared_ptr<const detail::StructuredImpl> impl);

  const Descriptor& descriptor() const;
  int n() const;
  // Largest r for which the construction is r-wise intersecting.
  int intersection_order() const;

  // Requires n <= 64.
  bool contains(Mask set) const;
  bool contains(const Subset& set) const;

  const BigInt& exact_count() const;
  double measure(double p) const;
  Rational exact_measure(const Rational& p) const;

  const PermGroup& witness() const;
  const std::vector<SetSystem>& invariant_set_systems() const;

  // n <= 24.
  SetFamily to_explicit() const;

 private:
  std::shared_ptr<const detail::StructuredImpl> impl_;
};

// {x : |x| > n/2}, n odd.
StructuredFamily majority_family(int n);

// {x : |x| > (r-1)n/r}.
StructuredFamily threshold_family(int n, int r);

// n = k^2, k odd: every block majority-covered and some block fully covered.
StructuredFamily block_family(int k);

// n = k^(r-1) leaves of the complete k-ary tree of depth r-1, numbered
// depth-first. Members hold more than half the leaf-children of every
// node at level r-2, and every node at a level <= r-3 has a child whose
// leaves are all in the set.
StructuredFamily tree_family(int k, int r);

struct ProjectiveGeometry {
  int q = 0;
  int r = 0;
  // Homogeneous coordinates (length r+1) with first nonzero entry 1, in
  // lexicographic order.
  std::vector<std::vector<int>> points;
  // Kernels of the normalized nonzero functionals, in the same order.
  std::vector<Subset> hyperplanes;

  int n() const { return static_cast<int>(points.size()); }
};

// r >= 2, q supported by GaloisField, and at most 64 points.
ProjectiveGeometry projective_geometry(int q, int r);

// A single transitive collineation: multiplication by a primitive element
// of GF(q^(r+1)) acting on the points.
Permutation singer_cycle(const ProjectiveGeometry& geometry);

// Subsets of P^r(F_q) containing a hyperplane; needs n <= 20 for the exact
// inclusion-exclusion count.
StructuredFamily projective_family(int q, int r, unsigned threads = 1);

// Exact count of the block construction from its closed formula.
BigInt block_count(int k);

// Tree recursion: A_{r-2} = 2^(k-1), A_l = A_{l+1}^k - (A_{l+1} - 1)^k.
BigInt tree_count(int k, int r);

struct SizeReport {
  std::string descriptor;
  int n = 0;
  BigInt exact_count;
  double log2_count = 0.0;
  double deficiency = 0.0;                   // n - log2(count)
  std::optional<double> predicted_deficiency;  // leading-order prediction
};

SizeReport size_report(const StructuredFamily& family);

// Inverse of Descriptor::to_string, e.g. "tree(k=3,r=4)". Throws
// DomainError on malformed text or missing parameters.
Descriptor parse_descriptor(const std::string& text);
StructuredFamily make_family(const Descriptor& descriptor, unsigned threads = 1);

// True iff every generator preserves the family and the group is
// transitive. Uses exhaustive membership comparison for n <= 20 and the
// invariant set systems otherwise.
bool symmetry_witness(const StructuredFamily& family, const PermGroup& group);

// Draws random minimal members (greedy shrinking of [n] in random order)
// and checks `samples` random r-tuples of them. n <= 64.
bool sampled_r_wise_check(const StructuredFamily& family, int r, std::uint64_t samples, std::uint64_t seed);

}  // namespace symfam
