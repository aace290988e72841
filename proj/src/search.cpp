#include "symfam/search.hpp"

#include "symfam/detail/parallel.hpp"
#include "symfam/errors.hpp"
#include "symfam/properties.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>

namespace symfam {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense bitset over candidate indices.
class IndexBits {
 public:
  IndexBits() = default;
  explicit IndexBits(std::size_t size) : words_((size + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void intersect(const IndexBits& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  }
  void subtract(const IndexBits& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  }
  // Lowest set index, or words * 64 when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return words_.size() << 6;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Evaluates whether an orbit multiset is bad. The first set is fixed to the
// representative of the first orbit: applying a group element to all r
// sets preserves emptiness of the intersection, so this loses nothing.
class BadTupleChecker {
 public:
  BadTupleChecker(const OrbitDecomposition& d, std::uint64_t budget) : d_(d), budget_(budget) {
    below_.resize(d.orbits.size());
  }

  // Must be called before orbit i appears in a query; not thread-safe.
  void prepare(std::size_t i) {
    if (!below_[i].words().empty()) return;
    detail::PowerSetBits bits(d_.n);
    for (Mask m : d_.orbits[i].members) bits.set(m);
    detail::close_upwards(bits, d_.n);
    below_[i] = std::move(bits);
  }

  bool is_bad(const OrbitMultiset& ms) const {
    return bad_from(ms, 1, d_.orbits[ms[0]].representative);
  }

  std::uint64_t spent() const { return spent_.load(std::memory_order_relaxed); }

 private:
  void charge(std::uint64_t amount) const {
    if (spent_.fetch_add(amount, std::memory_order_relaxed) + amount > budget_)
      throw CapabilityError("bad-tuple enumeration exceeded the budget of " + std::to_string(budget_) +
                            " elementary intersections");
  }

  bool bad_from(const OrbitMultiset& ms, std::size_t position, Mask partial) const {
    if (partial == 0) return true;
    const Orbit& orbit = d_.orbits[ms[position]];
    if (position + 1 == ms.size()) {
      charge(1);
      // Some z in the orbit avoids `partial` iff z ⊆ [n] \ partial.
      return below_[ms[position]].test(universe_mask(d_.n) & ~partial);
    }
    charge(orbit.members.size());
    for (Mask m : orbit.members)
      if (bad_from(ms, position + 1, partial & m)) return true;
    return false;
  }

  const OrbitDecomposition& d_;
  std::uint64_t budget_;
  std::vector<detail::PowerSetBits> below_;
  mutable std::atomic<std::uint64_t> spent_{0};
};

// Multisets of size r whose distinct elements are exactly `support`
// (ascending), in lexicographic order.
std::vector<OrbitMultiset> multisets_with_support(const std::vector<std::size_t>& support, int r) {
  std::vector<OrbitMultiset> out;
  const std::size_t s = support.size();
  // Multiplicities m_1..m_s >= 1 summing to r; lexicographic order of the
  // multiset corresponds to descending multiplicity vectors.
  std::vector<int> mult(s, 1);
  const int extra = r - static_cast<int>(s);
  if (extra < 0) return out;
  std::vector<std::vector<int>> all;
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == s) {
      mult[pos] = 1 + left;
      all.push_back(mult);
      return;
    }
    for (int take = left; take >= 0; --take) {
      mult[pos] = 1 + take;
      self(self, pos + 1, left - take);
    }
  };
  rec(rec, 0, extra);
  for (const auto& m : all) {
    OrbitMultiset ms;
    for (std::size_t i = 0; i < s; ++i)
      for (int c = 0; c < m[i]; ++c) ms.push_back(support[i]);
    out.push_back(std::move(ms));
  }
  return out;
}

}  // namespace

OrbitDecomposition orbit_decomposition(const PermGroup& group) {
  const int n = group.n();
  if (n > kMaxExplicitUniverse)
    throw CapabilityError("orbit decomposition supports n <= 24, got n=" + std::to_string(n));
  std::vector<BitRelocator> moves;
  for (const auto& g : group.generators()) moves.emplace_back(g);

  OrbitDecomposition d{group, n, {}, {}};
  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  const Mask end = Mask{1} << n;
  d.orbit_index.assign(static_cast<std::size_t>(end), kUnassigned);
  std::vector<Mask> queue;
  for (Mask start = 0; start < end; ++start) {
    if (d.orbit_index[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(d.orbits.size());
    queue.assign(1, start);
    d.orbit_index[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& move : moves) {
        const Mask image = move(queue[head]);
        if (d.orbit_index[image] == kUnassigned) {
          d.orbit_index[image] = id;
          queue.push_back(image);
        }
      }
    std::sort(queue.begin(), queue.end());
    d.orbits.push_back(Orbit{start, queue});
  }
  return d;
}

std::vector<OrbitMultiset> bad_tuples(const OrbitDecomposition& d, int r, unsigned threads, std::uint64_t budget) {
  if (r < 2 || r > 4) throw DomainError("bad_tuples supports r in {2, 3, 4}, got " + std::to_string(r));
  if (d.n > kMaxBadTupleUniverse)
    throw CapabilityError("bad_tuples supports n <= 16, got n=" + std::to_string(d.n));

  BadTupleChecker checker(d, budget);
  const std::size_t count = d.orbits.size();
  for (std::size_t i = 0; i < count; ++i) checker.prepare(i);

  std::vector<OrbitMultiset> out;

  // Supports of size 1.
  std::vector<char> self_bad(count, 0);
  detail::parallel_for(count, threads, [&](std::size_t i) {
    self_bad[i] = checker.is_bad(OrbitMultiset(static_cast<std::size_t>(r), i));
  });
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < count; ++i) {
    if (self_bad[i])
      out.push_back(OrbitMultiset(static_cast<std::size_t>(r), i));
    else
      candidates.push_back(i);
  }
  const std::size_t m = candidates.size();

  // Supports of size 2; good_pairs[a] holds candidate positions b > a with
  // {a, b} free of bad multisets.
  std::vector<IndexBits> good_pairs(m, IndexBits(m));
  std::vector<std::vector<OrbitMultiset>> found(m);
  detail::parallel_for(m, threads, [&](std::size_t a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      bool bad = false;
      for (const auto& ms : multisets_with_support({candidates[a], candidates[b]}, r))
        if (checker.is_bad(ms)) {
          found[a].push_back(ms);
          bad = true;
          break;
        }
      if (!bad) good_pairs[a].set(b);
    }
  });

  // Supports of size 3 and 4 whose proper subsets are all good.
  if (r >= 3) {
    std::vector<std::vector<std::vector<std::size_t>>> good_triples(m);
    detail::parallel_for(m, threads, [&](std::size_t a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (!good_pairs[a].test(b)) continue;
        for (std::size_t c = b + 1; c < m; ++c) {
          if (!good_pairs[a].test(c) || !good_pairs[b].test(c)) continue;
          bool bad = false;
          for (const auto& ms : multisets_with_support({candidates[a], candidates[b], candidates[c]}, r))
            if (checker.is_bad(ms)) {
              found[a].push_back(ms);
              bad = true;
              break;
            }
          if (!bad && r == 4) good_triples[a].push_back({a, b, c});
        }
      }
    });
    if (r == 4) {
      std::vector<std::vector<std::size_t>> triples;
      for (auto& list : good_triples)
        for (auto& t : list) triples.push_back(std::move(t));
      // A quadruple {a,b,c,e} qualifies when all four of its triples are good.
      std::sort(triples.begin(), triples.end());
      auto good_triple = [&](std::size_t x, std::size_t y, std::size_t z) {
        return std::binary_search(triples.begin(), triples.end(), std::vector<std::size_t>{x, y, z});
      };
      std::vector<std::vector<OrbitMultiset>> found_quads(m);
      detail::parallel_for(m, threads, [&](std::size_t a) {
        for (const auto& t : triples) {
          if (t[0] != a) continue;
          const std::size_t b = t[1], c = t[2];
          for (std::size_t e = c + 1; e < m; ++e) {
            if (!good_pairs[a].test(e) || !good_pairs[b].test(e) || !good_pairs[c].test(e)) continue;
            if (!good_triple(a, b, e) || !good_triple(a, c, e) || !good_triple(b, c, e)) continue;
            const OrbitMultiset ms{candidates[a], candidates[b], candidates[c], candidates[e]};
            if (checker.is_bad(ms)) found_quads[a].push_back(ms);
          }
        }
      });
      for (std::size_t a = 0; a < m; ++a)
        for (auto& ms : found_quads[a]) found[a].push_back(std::move(ms));
    }
  }

  for (auto& list : found)
    for (auto& ms : list) out.push_back(std::move(ms));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Maximum-weight selection of candidates avoiding pair conflicts and
// higher-arity constraints. Candidates are numbered by descending weight so
// the lowest set bit of any subset is one of its heaviest members.
class UnionSolver {
 public:
  // partner[v]: a candidate conflicting with v used to seed v's clique
  // (the complement orbit), or size() for none.
  UnionSolver(std::vector<std::uint64_t> weights, std::vector<IndexBits> conflicts,
              std::vector<std::vector<std::size_t>> constraints, std::vector<std::size_t> partner,
              std::uint64_t budget)
      : weights_(std::move(weights)),
        conflicts_(std::move(conflicts)),
        constraints_of_(weights_.size()),
        partner_(std::move(partner)),
        budget_(budget) {
    for (const auto& constraint : constraints)
      for (std::size_t v : constraint) {
        std::vector<std::size_t> others;
        for (std::size_t u : constraint)
          if (u != v) others.push_back(u);
        constraints_of_[v].push_back(std::move(others));
      }
  }

  std::size_t size() const { return weights_.size(); }

  IndexBits all() const {
    IndexBits bits(size());
    for (std::size_t v = 0; v < size(); ++v) bits.set(v);
    return bits;
  }

  // Greedy clique cover of `open` in the conflict graph; a feasible
  // selection takes at most one member per clique. Vertices left alone in
  // their clique are then packed into disjoint higher constraints, each of
  // which must miss one of its open members.
  std::uint64_t bound(const IndexBits& open, const std::vector<char>& selected) const {
    IndexBits rest = open;
    IndexBits single(size());
    std::uint64_t total = 0;
    for (std::size_t v = rest.first(); v < size(); v = rest.first()) {
      rest.reset(v);
      total += weights_[v];
      IndexBits clique = rest;
      clique.intersect(conflicts_[v]);
      bool alone = true;
      if (const std::size_t u = partner_[v]; u < size() && clique.test(u)) {
        rest.reset(u);
        clique.intersect(conflicts_[u]);
        alone = false;
      }
      for (std::size_t u = clique.first(); u < size(); u = clique.first()) {
        rest.reset(u);
        clique.intersect(conflicts_[u]);
        alone = false;
      }
      if (alone) single.set(v);
    }
    for (std::size_t v = single.first(); v < size(); v = single.first()) {
      single.reset(v);
      for (const auto& others : constraints_of_[v]) {
        bool usable = true;
        std::uint64_t lightest = weights_[v];
        for (std::size_t o : others) {
          if (selected[o]) continue;
          if (!single.test(o)) {
            usable = false;
            break;
          }
          lightest = std::min(lightest, weights_[o]);
        }
        if (!usable) continue;
        total -= lightest;
        for (std::size_t o : others) single.reset(o);
        break;
      }
    }
    return total;
  }

  bool can_add(std::size_t v, const std::vector<char>& selected) const {
    for (const auto& others : constraints_of_[v])
      if (std::all_of(others.begin(), others.end(), [&](std::size_t o) { return selected[o] != 0; })) return false;
    return true;
  }

  // Weight of the selection taking candidates greedily in `order`.
  std::uint64_t greedy(const std::vector<std::size_t>& order) const {
    IndexBits open = all();
    std::vector<char> selected(size(), 0);
    std::uint64_t weight = 0;
    for (std::size_t v : order) {
      if (!open.test(v)) continue;
      open.reset(v);
      select(v, open, selected);
      weight += weights_[v];
    }
    return weight;
  }

  // Optimal weight, given the weight of some feasible selection. Branches
  // on the heaviest open candidate; the first levels are fanned out over
  // threads sharing the incumbent.
  std::uint64_t optimum(std::uint64_t incumbent, unsigned threads) const {
    struct Task {
      IndexBits open;
      std::uint64_t weight;
      std::vector<char> selected;
    };
    std::vector<Task> tasks;
    const int depth = threads > 1 ? 6 : 0;
    auto expand = [&](auto&& self, IndexBits open, std::uint64_t weight, std::vector<char> selected, int level) -> void {
      const std::size_t v = open.first();
      if (level == depth || v >= size()) {
        tasks.push_back({std::move(open), weight, std::move(selected)});
        return;
      }
      open.reset(v);
      if (can_add(v, selected)) {
        IndexBits next = open;
        auto next_selected = selected;
        select(v, next, next_selected);
        self(self, std::move(next), weight + weights_[v], std::move(next_selected), level + 1);
      }
      self(self, std::move(open), weight, std::move(selected), level + 1);
    };
    expand(expand, all(), 0, std::vector<char>(size(), 0), 0);

    std::atomic<std::uint64_t> best{incumbent};
    detail::parallel_for(tasks.size(), threads, [&](std::size_t i) {
      auto& task = tasks[i];
      maximize(task.open, task.weight, task.selected, best);
    });
    return best.load();
  }

  // Lexicographically first selection, in the order given, of weight
  // `target`, which must be the optimum.
  std::vector<std::size_t> first_optimal(const std::vector<std::size_t>& order, std::uint64_t target) const {
    std::vector<char> selected(size(), 0);
    std::vector<std::size_t> chosen;
    if (!first_from(order, 0, all(), 0, target, selected, chosen))
      throw Error("internal error: optimum not reproducible in tie-break order");
    return chosen;
  }

 private:
  // Marks v selected and closes `open` under the constraints: conflicting
  // candidates and the last missing member of any higher constraint drop
  // out, so every open candidate stays addable.
  void select(std::size_t v, IndexBits& open, std::vector<char>& selected) const {
    selected[v] = 1;
    open.subtract(conflicts_[v]);
    for (const auto& others : constraints_of_[v]) {
      std::size_t missing = size();
      int unselected = 0;
      for (std::size_t o : others)
        if (!selected[o]) {
          missing = o;
          ++unselected;
        }
      if (unselected == 1) open.reset(missing);
    }
  }

  void visit() const {
    // Each node costs a bound over every candidate.
    if (spent_.fetch_add(size(), std::memory_order_relaxed) + size() > budget_)
      throw CapabilityError("orbit-union search exceeded the budget of " + std::to_string(budget_) +
                            " candidate visits");
  }

  void maximize(const IndexBits& open, std::uint64_t weight, std::vector<char>& selected,
                std::atomic<std::uint64_t>& best) const {
    visit();
    std::uint64_t seen = best.load(std::memory_order_relaxed);
    while (seen < weight && !best.compare_exchange_weak(seen, weight)) {
    }
    const std::size_t v = open.first();
    if (v >= size()) return;
    if (weight + bound(open, selected) <= best.load(std::memory_order_relaxed)) return;
    IndexBits rest = open;
    rest.reset(v);
    if (can_add(v, selected)) {
      IndexBits next = rest;
      select(v, next, selected);
      maximize(next, weight + weights_[v], selected, best);
      selected[v] = 0;
    }
    maximize(rest, weight, selected, best);
  }

  // Include-first DFS along `order`: the first selection reaching the
  // target is the lexicographically smallest one.
  bool first_from(const std::vector<std::size_t>& order, std::size_t pos, const IndexBits& open, std::uint64_t weight,
                  std::uint64_t target, std::vector<char>& selected, std::vector<std::size_t>& chosen) const {
    if (weight == target) return true;
    visit();
    if (weight + bound(open, selected) < target) return false;
    while (pos < order.size() && !open.test(order[pos])) ++pos;
    if (pos == order.size()) return false;
    const std::size_t v = order[pos];
    IndexBits rest = open;
    rest.reset(v);
    if (can_add(v, selected)) {
      IndexBits next = rest;
      select(v, next, selected);
      chosen.push_back(v);
      if (first_from(order, pos + 1, next, weight + weights_[v], target, selected, chosen)) return true;
      chosen.pop_back();
      selected[v] = 0;
    }
    return first_from(order, pos + 1, rest, weight, target, selected, chosen);
  }

  std::vector<std::uint64_t> weights_;
  std::vector<IndexBits> conflicts_;
  std::vector<std::vector<std::vector<std::size_t>>> constraints_of_;
  std::vector<std::size_t> partner_;
  std::uint64_t budget_;
  mutable std::atomic<std::uint64_t> spent_{0};
};

}  // namespace

SearchResult max_union(const OrbitDecomposition& d, int r, const std::vector<OrbitMultiset>& bad, unsigned threads,
                       std::uint64_t budget) {
  const std::size_t count = d.orbits.size();
  std::vector<std::vector<std::size_t>> supports;
  std::vector<char> forbidden(count, 0);
  for (const auto& ms : bad) {
    std::vector<std::size_t> support(ms.begin(), ms.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (auto i : support)
      if (i >= count) throw DomainError("bad multiset refers to orbit " + std::to_string(i) + " beyond the decomposition");
    if (support.size() == 1)
      forbidden[support[0]] = 1;
    else
      supports.push_back(std::move(support));
  }

  // Solver numbering: heaviest orbit first, ties by orbit index.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < count; ++i)
    if (!forbidden[i]) candidates.push_back(i);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return d.orbits[a].weight() > d.orbits[b].weight(); });
  const std::size_t m = candidates.size();
  std::vector<std::size_t> rank(count, m);
  for (std::size_t k = 0; k < m; ++k) rank[candidates[k]] = k;

  std::vector<std::uint64_t> weights(m);
  for (std::size_t k = 0; k < m; ++k) weights[k] = d.orbits[candidates[k]].weight();
  std::vector<IndexBits> conflicts(m, IndexBits(m));
  std::vector<std::vector<std::size_t>> constraints;
  for (const auto& support : supports) {
    if (std::any_of(support.begin(), support.end(), [&](std::size_t i) { return forbidden[i] != 0; })) continue;
    std::vector<std::size_t> local;
    for (auto i : support) local.push_back(rank[i]);
    if (local.size() == 2) {
      conflicts[local[0]].set(local[1]);
      conflicts[local[1]].set(local[0]);
    } else {
      constraints.push_back(std::move(local));
    }
  }
  std::vector<std::size_t> partner(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    const Mask complement = d.orbits[candidates[k]].representative ^ universe_mask(d.n);
    const std::size_t other = rank[d.orbit_index[complement]];
    if (other < m && conflicts[k].test(other)) partner[k] = other;
  }
  const UnionSolver solver(std::move(weights), std::move(conflicts), std::move(constraints), std::move(partner),
                           budget);

  // Incumbent: greedy by orbit weight, and by set size (threshold-like).
  std::vector<std::size_t> by_weight(m), by_size(m);
  std::iota(by_weight.begin(), by_weight.end(), std::size_t{0});
  by_size = by_weight;
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return popcount(d.orbits[candidates[a]].representative) > popcount(d.orbits[candidates[b]].representative);
  });
  const std::uint64_t incumbent = std::max(solver.greedy(by_weight), solver.greedy(by_size));
  const std::uint64_t optimum = solver.optimum(incumbent, threads);
  std::vector<std::size_t> index_order;
  for (std::size_t i = 0; i < count; ++i)
    if (rank[i] < m) index_order.push_back(rank[i]);
  const auto chosen = solver.first_optimal(index_order, optimum);

  struct Best {
    std::uint64_t weight = 0;
    std::vector<std::size_t> chosen;
  } best{optimum, {}};
  for (auto k : chosen) best.chosen.push_back(k);

  SearchResult result;
  result.r = r;
  result.n = d.n;
  result.group = d.group.label();
  for (auto k : best.chosen) result.chosen.push_back(candidates[k]);
  std::sort(result.chosen.begin(), result.chosen.end());
  result.size = best.weight;
  for (auto i : result.chosen) result.orbit_reps.push_back(d.orbits[i].representative);

  if (d.n <= kMaxInclusionExclusionHyperplanes) {
    FamilyBuilder builder(d.n);
    for (auto i : result.chosen)
      for (Mask member : d.orbits[i].members) builder.add(member);
    SetFamily family = std::move(builder).build();
    result.r_wise_ok = r_wise_intersecting(family, r);
    result.union_of_orbits_ok = family.size() == result.size;
    for (const auto& g : d.group.generators()) result.union_of_orbits_ok = result.union_of_orbits_ok && preserves_family(g, family);
    result.transitive_ok = symmetry_witness(family, d.group);
    result.certificate = std::move(family);
  }
  return result;
}

void GroupCatalog::add(PermGroup group) {
  if (!is_transitive(group))
    throw DomainError("catalog group '" + group.label() + "' is not transitive");
  extra_.push_back(std::move(group));
}

std::vector<PermGroup> GroupCatalog::groups_for(int n) const {
  std::vector<PermGroup> out;
  if (n >= 1) out.push_back(PermGroup::cyclic(n));
  if (n >= 4) out.push_back(PermGroup::dihedral(n));
  if (n >= 3) out.push_back(PermGroup::symmetric(n));
  for (const auto& g : extra_)
    if (g.n() == n) out.push_back(g);
  return out;
}

FrSearchResult f_r_search(int n, int r, const GroupCatalog& catalog, bool assert_complete, unsigned threads) {
  if (n < 1 || n > kMaxSearchUniverse)
    throw CapabilityError("f_r search supports 1 <= n <= 16, got n=" + std::to_string(n));
  if (r < 2 || r > 4) throw DomainError("f_r search supports r in {2, 3, 4}, got " + std::to_string(r));
  const auto groups = catalog.groups_for(n);
  if (groups.empty()) throw DomainError("group catalog has no groups of degree " + std::to_string(n));

  FrSearchResult out;
  bool have = false;
  for (const auto& group : groups) {
    const auto d = orbit_decomposition(group);
    auto result = max_union(d, r, bad_tuples(d, r, threads), threads);
    if (!result.verified()) throw Error("internal error: search certificate failed verification for " + group.label());
    out.per_group.emplace_back(group.label(), result.size);
    if (!have || result.size > out.best.size) {
      out.best = std::move(result);
      have = true;
    }
  }
  out.exact = n == 1 || is_prime(n) || assert_complete;
  return out;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
    case Verdict::sampled: return "sampled";
  }
  return "unknown";
}

namespace {

void attach_proof_chain(CertificationReport& report, const SetFamily& family) {
  if (report.r >= 3 && report.r_wise == Verdict::yes) report.proof_chain = verify_proof_chain(family);
}

}  // namespace

CertificationReport certify_family(const SetFamily& family, int r, const std::optional<PermGroup>& witness,
                                   unsigned threads) {
  CertificationReport report;
  report.n = family.n();
  report.r = r;
  report.size = family.size();
  report.r_wise = r_wise_intersecting(family, r) ? Verdict::yes : Verdict::no;
  if (family.n() <= kMaxBruteForceAutomorphismUniverse) {
    report.symmetric = automorphism_transitive(family, threads) ? Verdict::yes : Verdict::no;
    report.symmetry_method = "brute-force";
  } else if (witness) {
    report.symmetric = symmetry_witness(family, *witness) ? Verdict::yes : Verdict::unknown;
    report.symmetry_method = "witness";
  } else {
    report.symmetric = Verdict::unknown;
    report.symmetry_method = "none";
  }
  report.mu_half_exact = Dyadic(BigInt(family.size()), static_cast<unsigned>(family.n()));
  report.mu_half = report.mu_half_exact.to_double();
  attach_proof_chain(report, family);
  return report;
}

CertificationReport certify_family(const StructuredFamily& family, int r, const std::optional<PermGroup>& witness,
                                   std::uint64_t seed, unsigned threads) {
  const int n = family.n();
  if (n <= kMaxExhaustiveWitnessUniverse) {
    const SetFamily explicit_family = family.to_explicit();
    auto report = certify_family(explicit_family, r, witness ? witness : std::optional<PermGroup>(family.witness()), threads);
    if (n > kMaxBruteForceAutomorphismUniverse && report.symmetric == Verdict::unknown) {
      // The explicit witness check above is the exhaustive one; nothing
      // more to try.
    }
    return report;
  }
  CertificationReport report;
  report.n = n;
  report.r = r;
  report.size = family.exact_count();
  if (n <= kMaxSubsetUniverse) {
    constexpr std::uint64_t kSamples = 1'000'000;
    report.r_wise = sampled_r_wise_check(family, r, kSamples, seed) ? Verdict::sampled : Verdict::no;
    report.seed = seed;
  }
  const PermGroup& group = witness ? *witness : family.witness();
  report.symmetric = symmetry_witness(family, group) ? Verdict::yes : Verdict::unknown;
  report.symmetry_method = "witness";
  report.mu_half_exact = Dyadic(family.exact_count(), static_cast<unsigned>(n));
  report.mu_half = report.mu_half_exact.to_double();
  return report;
}

}  // namespace symfam
