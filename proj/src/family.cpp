#include "symfam/family.hpp"

#include "symfam/errors.hpp"

#include <algorithm>

namespace symfam {

namespace {

void check_explicit_universe(int n) {
  if (n < 1) throw DomainError("universe size must be positive, got " + std::to_string(n));
  if (n > kMaxExplicitUniverse)
    throw CapabilityError("explicit families support n <= 24, got n=" + std::to_string(n));
}

}  // namespace

void detail::close_upwards(detail::PowerSetBits& bits, int n) {
  static constexpr std::uint64_t kWithoutBit[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  auto words = bits.words();
  for (int i = 0; i < n && i < 6; ++i)
    for (auto& w : words) w |= (w & kWithoutBit[i]) << (1u << i);
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t w = 0; w < words.size(); ++w)
      if ((w & stride) == 0) words[w | stride] |= words[w];
  }
}

namespace {

std::vector<Mask> collect(const detail::PowerSetBits& bits) {
  std::vector<Mask> out;
  const auto words = bits.words();
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::uint64_t word = words[w]; word != 0; word &= word - 1)
      out.push_back((Mask{w} << 6) | static_cast<Mask>(std::countr_zero(word)));
  return out;
}

}  // namespace

SetFamily::SetFamily(int n) : n_(n) {
  check_explicit_universe(n);
  bits_ = detail::PowerSetBits(n);
}

SetFamily SetFamily::from_masks(int n, std::vector<Mask> masks) {
  FamilyBuilder builder(n);
  for (Mask m : masks) builder.add(m);
  return std::move(builder).build();
}

SetFamily SetFamily::from_subsets(int n, std::span<const Subset> subsets) {
  FamilyBuilder builder(n);
  for (const auto& s : subsets) {
    if (s.n() != n) throw UniverseMismatch(n, s.n());
    builder.add(s.bits());
  }
  return std::move(builder).build();
}

SetFamily SetFamily::power_set(int n) {
  return from_predicate(n, [](Mask) { return true; });
}

FamilyBuilder::FamilyBuilder(int n) : n_(n) {
  check_explicit_universe(n);
  bits_ = detail::PowerSetBits(n);
}

void FamilyBuilder::add(Mask m) {
  if ((m & ~universe_mask(n_)) != 0)
    throw DomainError("set has elements beyond n=" + std::to_string(n_));
  bits_.set(m);
}

SetFamily FamilyBuilder::build() && {
  SetFamily family(n_);
  family.members_ = collect(bits_);
  family.bits_ = std::move(bits_);
  return family;
}

BigInt SizeProfile::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

SizeProfile SizeProfile::binomial_row(int n) {
  SizeProfile profile{n, {}};
  profile.counts.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) profile.counts.push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)));
  return profile;
}

SetFamily upset_closure(const SetFamily& family) {
  detail::PowerSetBits bits(family.n());
  for (Mask m : family) bits.set(m);
  close_upwards(bits, family.n());
  return SetFamily::from_masks(family.n(), collect(bits));
}

SetFamily intersection_family(const SetFamily& family) {
  FamilyBuilder builder(family.n());
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) builder.add(members[i] & members[j]);
  return std::move(builder).build();
}

SetFamily complement_family(const SetFamily& family) {
  const Mask full = universe_mask(family.n());
  std::vector<Mask> out;
  out.reserve(family.size());
  for (Mask m : family) out.push_back(m ^ full);
  return SetFamily::from_masks(family.n(), std::move(out));
}

SizeProfile size_profile(const SetFamily& family) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(family.n()) + 1, 0);
  for (Mask m : family) ++counts[static_cast<std::size_t>(popcount(m))];
  SizeProfile profile{family.n(), {}};
  for (auto c : counts) profile.counts.emplace_back(c);
  return profile;
}

SetFamily minimal_elements(const SetFamily& family) {
  // below.test(y) iff some member is contained in y.
  detail::PowerSetBits below(family.n());
  for (Mask m : family) below.set(m);
  close_upwards(below, family.n());
  std::vector<Mask> out;
  for (Mask m : family) {
    bool minimal = true;
    for (Mask rest = m; rest != 0 && minimal; rest &= rest - 1)
      if (below.test(m & ~(rest & (~rest + 1)))) minimal = false;
    if (minimal) out.push_back(m);
  }
  return SetFamily::from_masks(family.n(), std::move(out));
}

bool is_increasing(const SetFamily& family) {
  const Mask full = universe_mask(family.n());
  for (Mask m : family)
    for (Mask missing = full & ~m; missing != 0; missing &= missing - 1)
      if (!family.contains(m | (missing & (~missing + 1)))) return false;
  return true;
}

bool is_subfamily(const SetFamily& inner, const SetFamily& outer) {
  if (inner.n() != outer.n()) throw UniverseMismatch(inner.n(), outer.n());
  return std::all_of(inner.begin(), inner.end(), [&](Mask m) { return outer.contains(m); });
}

}  // namespace symfam
