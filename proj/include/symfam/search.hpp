#pragma once

#include "symfam/constructions.hpp"
#include "symfam/family.hpp"
#include "symfam/measures.hpp"
#include "symfam/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symfam {

struct Orbit {
  Mask representative = 0;    // smallest member
  std::vector<Mask> members;  // ascending
  std::size_t weight() const { return members.size(); }
};

// Orbits of a permutation group on the power set of [n], ordered by
// representative. orbit_index[m] is the orbit containing mask m.
struct OrbitDecomposition {
  PermGroup group;
  int n = 0;
  std::vector<Orbit> orbits;
  std::vector<std::uint32_t> orbit_index;
};

// n <= 24.
OrbitDecomposition orbit_decomposition(const PermGroup& group);

// Sorted orbit indices i_1 <= ... <= i_r.
using OrbitMultiset = std::vector<std::size_t>;

inline constexpr std::uint64_t kDefaultIntersectionBudget = 1'000'000'000;
inline constexpr int kMaxBadTupleUniverse = 16;

// Bad r-multisets of orbits: some choice x_t from orbit i_t has empty
// intersection. Only inclusion-minimal supports are listed, each with its
// lexicographically first bad multiset; a union of orbits indexed by S is
// r-wise intersecting iff S contains the support of no listed multiset.
// Output is sorted lexicographically. r in {2, 3, 4}, n <= 16. Throws
// CapabilityError once more than `budget` elementary intersections are
// needed.
std::vector<OrbitMultiset> bad_tuples(const OrbitDecomposition& decomposition, int r, unsigned threads = 1,
                                      std::uint64_t budget = kDefaultIntersectionBudget);

struct SearchResult {
  int r = 0;
  int n = 0;
  std::string group;
  std::vector<std::size_t> chosen;  // orbit indices, ascending
  std::uint64_t size = 0;
  std::vector<Mask> orbit_reps;
  std::optional<SetFamily> certificate;  // explicit family, n <= 20
  bool r_wise_ok = false;
  bool union_of_orbits_ok = false;
  bool transitive_ok = false;

  bool verified() const { return r_wise_ok && union_of_orbits_ok && transitive_ok; }
};

// Maximum-weight set of orbits containing no listed support, by
// branch-and-bound. Among optima the lexicographically smallest index set
// is returned, independent of `threads`. The certificate is checked
// before returning and the flags record the outcome. Throws
// CapabilityError once the branch-and-bound nodes times the candidate
// count pass `budget`.
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

SearchResult max_union(const OrbitDecomposition& decomposition, int r, const std::vector<OrbitMultiset>& bad,
                       unsigned threads = 1, std::uint64_t budget = kDefaultSearchBudget);

// Transitive groups per degree: cyclic, dihedral and symmetric built-ins
// plus user-supplied groups.
class GroupCatalog {
 public:
  GroupCatalog() = default;

  // Throws DomainError for an intransitive group.
  void add(PermGroup group);

  std::vector<PermGroup> groups_for(int n) const;

 private:
  std::vector<PermGroup> extra_;
};

struct FrSearchResult {
  SearchResult best;
  bool exact = false;
  std::vector<std::pair<std::string, std::uint64_t>> per_group;  // label, optimum
};

inline constexpr int kMaxSearchUniverse = 16;

// Best orbit-union family over the catalog's groups of degree n. `exact`
// is set for n = 1, prime n (every transitive group of prime degree holds
// an n-cycle) or when the caller asserts catalog completeness.
FrSearchResult f_r_search(int n, int r, const GroupCatalog& catalog, bool assert_complete = false,
                          unsigned threads = 1);

enum class Verdict { yes, no, unknown, sampled };

std::string to_string(Verdict verdict);

struct CertificationReport {
  int n = 0;
  int r = 0;
  BigInt size;
  Verdict r_wise = Verdict::unknown;
  Verdict symmetric = Verdict::unknown;
  std::string symmetry_method;  // "brute-force", "witness" or "none"
  double mu_half = 0.0;
  Dyadic mu_half_exact;
  std::optional<ProofChainReport> proof_chain;  // r >= 3, explicit, r-wise
  std::optional<std::uint64_t> seed;            // set when sampling was used
};

// Symmetry: brute force for n <= 8, otherwise the witness group when given
// (a failing witness leaves the verdict unknown).
CertificationReport certify_family(const SetFamily& family, int r, const std::optional<PermGroup>& witness,
                                   unsigned threads = 1);

// Falls back to the construction's own witness. For n > 20 the r-wise
// check samples 10^6 tuples with `seed`.
CertificationReport certify_family(const StructuredFamily& family, int r, const std::optional<PermGroup>& witness,
                                   std::uint64_t seed = 0, unsigned threads = 1);

}  // namespace symfam
