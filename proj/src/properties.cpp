#include "symfam/properties.hpp"

#include "symfam/detail/parallel.hpp"
#include "symfam/errors.hpp"

#include <algorithm>
#include <deque>

namespace symfam {

namespace {

void require_same_universe(int a, int b) {
  if (a != b) throw UniverseMismatch(a, b);
}

}  // namespace

SetFamily apply_to_family(const Permutation& sigma, const SetFamily& family) {
  require_same_universe(sigma.n(), family.n());
  const BitRelocator relocate(sigma);
  std::vector<Mask> image;
  image.reserve(family.size());
  for (Mask m : family) image.push_back(relocate(m));
  return SetFamily::from_masks(family.n(), std::move(image));
}

bool r_wise_intersecting(const SetFamily& family, int r) {
  if (r < 2) throw DomainError("r-wise intersection needs r >= 2, got " + std::to_string(r));
  const SetFamily minimal = minimal_elements(family);
  const auto& sets = minimal.members();
  if (sets.empty()) return true;

  // Breadth-first over the intersections of at most r members. Each mask is
  // expanded once, at the smallest depth where it appears.
  detail::PowerSetBits seen(family.n());
  std::vector<Mask> frontier;
  for (Mask m : sets) {
    if (m == 0) return false;
    seen.set(m);
    frontier.push_back(m);
  }
  for (int depth = 1; depth < r && !frontier.empty(); ++depth) {
    std::vector<Mask> next;
    for (Mask partial : frontier) {
      for (Mask m : sets) {
        const Mask meet = partial & m;
        if (meet == 0) return false;
        if (!seen.test(meet)) {
          seen.set(meet);
          next.push_back(meet);
        }
      }
    }
    frontier = std::move(next);
  }
  return true;
}

bool cross_intersecting(const SetFamily& a, const SetFamily& b) {
  require_same_universe(a.n(), b.n());
  if (a.empty() || b.empty()) return true;
  // Some x in A misses y in B iff x ⊆ [n] \ y iff [n] \ y lies in upset(A).
  const SetFamily up = upset_closure(minimal_elements(a));
  const Mask full = universe_mask(a.n());
  return std::none_of(b.begin(), b.end(), [&](Mask y) { return up.contains(full & ~y); });
}

std::vector<int> orbit_of_point(const PermGroup& group, int element) {
  if (element < 1 || element > group.n())
    throw DomainError("element " + std::to_string(element) + " outside [1, " + std::to_string(group.n()) + "]");
  std::vector<bool> seen(static_cast<std::size_t>(group.n()), false);
  std::deque<int> queue{element};
  seen[static_cast<std::size_t>(element - 1)] = true;
  while (!queue.empty()) {
    const int current = queue.front();
    queue.pop_front();
    for (const auto& g : group.generators()) {
      const int image = g(current);
      if (!seen[static_cast<std::size_t>(image - 1)]) {
        seen[static_cast<std::size_t>(image - 1)] = true;
        queue.push_back(image);
      }
    }
  }
  std::vector<int> orbit;
  for (int i = 1; i <= group.n(); ++i)
    if (seen[static_cast<std::size_t>(i - 1)]) orbit.push_back(i);
  return orbit;
}

bool is_transitive(const PermGroup& group) {
  return static_cast<int>(orbit_of_point(group, 1).size()) == group.n();
}

bool preserves_family(const Permutation& sigma, const SetFamily& family) {
  require_same_universe(sigma.n(), family.n());
  const BitRelocator relocate(sigma);
  // σ is injective, so σ(F) ⊆ F already forces equality.
  return std::all_of(family.begin(), family.end(), [&](Mask m) { return family.contains(relocate(m)); });
}

std::vector<Permutation> automorphism_group(const SetFamily& family, unsigned threads) {
  const int n = family.n();
  if (n > kMaxBruteForceAutomorphismUniverse)
    throw CapabilityError("brute-force automorphism search supports n <= 8 (got n=" + std::to_string(n) +
                          "); certify symmetry with a witness group instead");
  // One chunk per value of σ(1); chunks are concatenated in order, which
  // reproduces the sequential lexicographic order.
  std::vector<std::vector<Permutation>> chunks(static_cast<std::size_t>(n));
  detail::parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t first) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (v != static_cast<int>(first) + 1) rest.push_back(v);
    do {
      std::vector<int> images{static_cast<int>(first) + 1};
      images.insert(images.end(), rest.begin(), rest.end());
      Permutation sigma(std::move(images));
      if (preserves_family(sigma, family)) chunks[first].push_back(std::move(sigma));
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  std::vector<Permutation> group;
  for (auto& chunk : chunks)
    for (auto& sigma : chunk) group.push_back(std::move(sigma));
  return group;
}

bool automorphism_transitive(const SetFamily& family, unsigned threads) {
  auto automorphisms = automorphism_group(family, threads);
  return is_transitive(PermGroup(std::move(automorphisms)));
}

bool symmetry_witness(const SetFamily& family, const PermGroup& group) {
  require_same_universe(group.n(), family.n());
  for (const auto& g : group.generators())
    if (!preserves_family(g, family)) return false;
  return is_transitive(group);
}

}  // namespace symfam
