#pragma once

#include "symfam/family.hpp"
#include "symfam/permutation.hpp"

#include <vector>

namespace symfam {

// Brute-force automorphism enumeration is limited to n <= 8.
inline constexpr int kMaxBruteForceAutomorphismUniverse = 8;

// σ(F) = {σ(x) : x in F}.
SetFamily apply_to_family(const Permutation& sigma, const SetFamily& family);

// True iff x_1 ∩ ... ∩ x_r is nonempty for all x_1, ..., x_r in F
// (repetition allowed). Evaluated on the minimal members, which gives the
// same verdict because intersections only shrink when sets shrink.
bool r_wise_intersecting(const SetFamily& family, int r);

bool cross_intersecting(const SetFamily& a, const SetFamily& b);

// Sorted 1-based orbit of `element` under the group generated by G.
std::vector<int> orbit_of_point(const PermGroup& group, int element);

bool is_transitive(const PermGroup& group);

bool preserves_family(const Permutation& sigma, const SetFamily& family);

// Every σ in S_n with σ(F) = F, in lexicographic order of image vectors.
// n <= 8; the sweep is split across `threads` workers.
std::vector<Permutation> automorphism_group(const SetFamily& family, unsigned threads = 1);

// Decides whether Aut(F) is transitive by enumerating S_n (n <= 8).
bool automorphism_transitive(const SetFamily& family, unsigned threads = 1);

// True iff every generator of G preserves F and G is transitive, which
// certifies that F is symmetric.
bool symmetry_witness(const SetFamily& family, const PermGroup& group);

}  // namespace symfam
