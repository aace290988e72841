#include "symfam/constructions.hpp"

#include "symfam/detail/parallel.hpp"
#include "symfam/errors.hpp"
#include "symfam/properties.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <type_traits>

namespace symfam {

namespace detail {

class StructuredImpl {
 public:
  StructuredImpl(Descriptor descriptor, int n, int order, PermGroup witness)
      : descriptor_(descriptor), n_(n), order_(order), witness_(std::move(witness)) {}
  virtual ~StructuredImpl() = default;

  virtual bool contains(Mask set) const = 0;
  virtual double measure(double p) const = 0;
  virtual Rational exact_measure(const Rational& p) const = 0;

  const Descriptor& descriptor() const { return descriptor_; }
  int n() const { return n_; }
  int order() const { return order_; }
  const BigInt& count() const { return count_; }
  const PermGroup& witness() const { return witness_; }
  const std::vector<SetSystem>& systems() const { return systems_; }

 protected:
  Descriptor descriptor_;
  int n_;
  int order_;
  BigInt count_;
  PermGroup witness_;
  std::vector<SetSystem> systems_;
};

}  // namespace detail

namespace {

template <typename T>
T ipow(T base, std::uint64_t exponent) {
  T result(1);
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

// a^k - b^k for 0 <= b <= a, as (a - b) Σ a^i b^(k-1-i) to avoid cancellation.
double difference_of_powers(double a, double b, int k) {
  double sum = 0.0;
  for (int i = 0; i < k; ++i) sum += std::pow(a, i) * std::pow(b, k - 1 - i);
  return (a - b) * sum;
}

// Σ_{j > cut} C(n, j) p^j (1-p)^(n-j) in log space; `cut` is a real bound.
double binomial_upper_tail(int n, double cut, double p) {
  if (p <= 0.0) return cut < 0.0 ? 1.0 : 0.0;
  if (p >= 1.0) return cut < n ? 1.0 : 0.0;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    if (!(j > cut)) continue;
    const double log_term = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) + j * log_p + (n - j) * log_q;
    sum += std::exp(log_term);
  }
  return std::min(sum, 1.0);
}

Rational exact_binomial_upper_tail(int n, const Rational& p, bool (*keep)(int, int, int), int param) {
  const Rational q = Rational(1) - p;
  Rational sum = 0;
  for (int j = 0; j <= n; ++j)
    if (keep(n, j, param))
      sum += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j))) * ipow(p, static_cast<std::uint64_t>(j)) *
             ipow(q, static_cast<std::uint64_t>(n - j));
  return sum;
}

bool keep_threshold(int n, int j, int r) { return static_cast<long long>(j) * r > static_cast<long long>(r - 1) * n; }

PermGroup full_symmetric_witness(int n) { return PermGroup::symmetric(n); }

// ---------------------------------------------------------------------------
// Threshold families (the majority family is threshold with r = 2, n odd).

class ThresholdImpl final : public detail::StructuredImpl {
 public:
  ThresholdImpl(Descriptor descriptor, int n, int r)
      : StructuredImpl(descriptor, n, r, full_symmetric_witness(n)), r_(r) {
    count_ = 0;
    for (int j = 0; j <= n; ++j)
      if (keep_threshold(n, j, r)) count_ += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j));
  }

  bool contains(Mask set) const override {
    return static_cast<long long>(popcount(set)) * r_ > static_cast<long long>(r_ - 1) * n_;
  }
  double measure(double p) const override {
    return binomial_upper_tail(n_, static_cast<double>(r_ - 1) * n_ / r_, p);
  }
  Rational exact_measure(const Rational& p) const override {
    return exact_binomial_upper_tail(n_, p, keep_threshold, r_);
  }

 private:
  int r_;
};

// ---------------------------------------------------------------------------
// k-ary tree of depth r-1; r = 3 is the block construction.

int checked_power(int base, int exponent) {
  long long value = 1;
  for (int i = 0; i < exponent; ++i) {
    value *= base;
    if (value > kMaxStructuredUniverse)
      throw CapabilityError("construction universe exceeds " + std::to_string(kMaxStructuredUniverse));
  }
  return static_cast<int>(value);
}

// Leaves are 0-based and depth-first, so the node at level l with index
// j covers leaves [j * k^(r-1-l), (j+1) * k^(r-1-l)).
std::vector<SetSystem> tree_levels(int k, int r) {
  const int n = checked_power(k, r - 1);
  std::vector<SetSystem> systems;
  for (int level = 1; level <= r - 2; ++level) {
    const int span = checked_power(k, r - 1 - level);
    SetSystem nodes;
    for (int start = 0; start < n; start += span) {
      std::vector<int> leaves(static_cast<std::size_t>(span));
      std::iota(leaves.begin(), leaves.end(), start + 1);
      nodes.push_back(std::move(leaves));
    }
    systems.push_back(std::move(nodes));
  }
  return systems;
}

// Rotation of the children of the first node at every level, plus a
// transposition of the first two leaves.
PermGroup tree_witness(int k, int r) {
  const int n = checked_power(k, r - 1);
  std::vector<Permutation> gens;
  for (int level = 0; level <= r - 2; ++level) {
    const int span = checked_power(k, r - 1 - level);
    const int child = span / k;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (int leaf = 0; leaf < span; ++leaf) images[static_cast<std::size_t>(leaf)] = (leaf + child) % span + 1;
    Permutation rotation(std::move(images));
    if (!rotation.is_identity()) gens.push_back(std::move(rotation));
  }
  if (n >= 2) gens.push_back(Permutation::transposition(n, 1, 2));
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return PermGroup(std::move(gens), k == 1 ? "trivial" : "tree-wreath");
}

template <typename T>
T as_number(const BigInt& value) {
  if constexpr (std::is_same_v<T, double>)
    return value.convert_to<double>();
  else
    return T(value);
}

template <typename T>
T majority_block_measure(int k, const T& p) {
  const T q = T(1) - p;
  T sum(0);
  for (int j = 0; j <= k; ++j)
    if (2 * j > k)
      sum += as_number<T>(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) *
             ipow(p, static_cast<std::uint64_t>(j)) * ipow(q, static_cast<std::uint64_t>(k - j));
  return sum;
}

class TreeImpl final : public detail::StructuredImpl {
 public:
  TreeImpl(Descriptor descriptor, int k, int r)
      : StructuredImpl(descriptor, checked_power(k, r - 1), r, tree_witness(k, r)), k_(k), r_(r) {
    count_ = tree_count(k, r);
    systems_ = tree_levels(k, r);
  }

  bool contains(Mask set) const override {
    if (n_ > kMaxSubsetUniverse) throw CapabilityError("membership oracle needs n <= 64");
    const Mask chunk_mask = universe_mask(k_);
    const int bottom = n_ / k_;
    std::vector<char> good(static_cast<std::size_t>(bottom));
    std::vector<char> full(static_cast<std::size_t>(bottom));
    for (int node = 0; node < bottom; ++node) {
      const int count = popcount((set >> (node * k_)) & chunk_mask);
      good[static_cast<std::size_t>(node)] = 2 * count > k_;
      full[static_cast<std::size_t>(node)] = count == k_;
    }
    for (int nodes = bottom; nodes > 1; nodes /= k_) {
      for (int parent = 0; parent < nodes / k_; ++parent) {
        bool all_good = true, any_full = false, all_full = true;
        for (int c = parent * k_; c < (parent + 1) * k_; ++c) {
          all_good = all_good && good[static_cast<std::size_t>(c)];
          any_full = any_full || full[static_cast<std::size_t>(c)];
          all_full = all_full && full[static_cast<std::size_t>(c)];
        }
        good[static_cast<std::size_t>(parent)] = all_good && any_full;
        full[static_cast<std::size_t>(parent)] = all_full;
      }
    }
    return good[0];
  }

  double measure(double p) const override {
    double m = majority_block_measure<double>(k_, p);
    for (int level = r_ - 3; level >= 0; --level) {
      const double full_child = std::pow(p, std::pow(static_cast<double>(k_), r_ - 2 - level));
      m = difference_of_powers(m, m - full_child, k_);
    }
    return m;
  }

  Rational exact_measure(const Rational& p) const override {
    Rational m = majority_block_measure<Rational>(k_, p);
    for (int level = r_ - 3; level >= 0; --level) {
      const Rational full_child = ipow(p, static_cast<std::uint64_t>(checked_power(k_, r_ - 2 - level)));
      m = ipow(m, static_cast<std::uint64_t>(k_)) - ipow(Rational(m - full_child), static_cast<std::uint64_t>(k_));
    }
    return m;
  }

 private:
  int k_;
  int r_;
};

// ---------------------------------------------------------------------------
// Projective construction.

class ProjectiveImpl final : public detail::StructuredImpl {
 public:
  ProjectiveImpl(Descriptor descriptor, const ProjectiveGeometry& geometry, unsigned threads)
      : StructuredImpl(descriptor, geometry.n(), geometry.r,
                       PermGroup({singer_cycle(geometry)}, "singer")) {
    for (const auto& h : geometry.hyperplanes) hyperplanes_.push_back(h.bits());
    SetSystem system;
    for (const auto& h : geometry.hyperplanes) system.push_back(h.elements());
    systems_.push_back(std::move(system));
    compute_union_histogram(threads);
    count_ = 0;
    for (int u = 0; u <= n_; ++u)
      count_ += BigInt(union_coefficients_[static_cast<std::size_t>(u)]) * pow2(static_cast<unsigned>(n_ - u));
  }

  bool contains(Mask set) const override {
    return std::any_of(hyperplanes_.begin(), hyperplanes_.end(), [&](Mask h) { return (set & h) == h; });
  }

  double measure(double p) const override {
    long double sum = 0.0L;
    for (int u = 0; u <= n_; ++u)
      sum += static_cast<long double>(union_coefficients_[static_cast<std::size_t>(u)]) * std::pow(static_cast<long double>(p), u);
    return static_cast<double>(sum);
  }

  Rational exact_measure(const Rational& p) const override {
    Rational sum = 0;
    for (int u = 0; u <= n_; ++u)
      sum += Rational(union_coefficients_[static_cast<std::size_t>(u)]) * ipow(p, static_cast<std::uint64_t>(u));
    return sum;
  }

 private:
  // union_coefficients_[u] = Σ (-1)^(|S|+1) over nonempty hyperplane sets S
  // whose union has u points. Split into prefix branches over the first few
  // hyperplanes; integer sums make the merge order irrelevant.
  void compute_union_histogram(unsigned threads) {
    const int h = static_cast<int>(hyperplanes_.size());
    const int prefix_bits = std::min(h, 4);
    const std::size_t branches = std::size_t{1} << prefix_bits;
    std::vector<std::vector<std::int64_t>> partial(branches, std::vector<std::int64_t>(static_cast<std::size_t>(n_) + 1, 0));
    detail::parallel_for(branches, threads, [&](std::size_t branch) {
      Mask prefix_union = 0;
      int chosen = 0;
      for (int i = 0; i < prefix_bits; ++i)
        if ((branch >> i) & 1) {
          prefix_union |= hyperplanes_[static_cast<std::size_t>(i)];
          ++chosen;
        }
      walk(prefix_bits, prefix_union, chosen, partial[branch]);
    });
    union_coefficients_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& hist : partial)
      for (std::size_t u = 0; u < hist.size(); ++u) union_coefficients_[u] += hist[u];
  }

  void walk(int next, Mask current, int chosen, std::vector<std::int64_t>& hist) const {
    if (next == static_cast<int>(hyperplanes_.size())) {
      if (chosen > 0) hist[static_cast<std::size_t>(popcount(current))] += (chosen % 2 == 1) ? 1 : -1;
      return;
    }
    walk(next + 1, current, chosen, hist);
    walk(next + 1, current | hyperplanes_[static_cast<std::size_t>(next)], chosen + 1, hist);
  }

  std::vector<Mask> hyperplanes_;
  std::vector<std::int64_t> union_coefficients_;
};

void require_odd_positive(int k, const char* what) {
  if (k < 1 || k % 2 == 0) throw DomainError(std::string(what) + " needs an odd positive k, got " + std::to_string(k));
}

// Vectors of GF(q)^d in lexicographic order, first coordinate most significant.
std::vector<int> decode(int code, int q, int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = code % q;
    code /= q;
  }
  return v;
}

bool is_normalized(const std::vector<int>& v) {
  for (int c : v)
    if (c != 0) return c == 1;
  return false;
}

std::vector<int> normalize(std::vector<int> v, const GaloisField& field) {
  for (int c : v) {
    if (c == 0) continue;
    const int scale = field.inv(c);
    for (auto& x : v) x = field.mul(x, scale);
    break;
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Descriptor::to_string() const {
  switch (kind) {
    case ConstructionKind::majority: return "majority(n=" + std::to_string(n) + ")";
    case ConstructionKind::threshold: return "threshold(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
    case ConstructionKind::block: return "block(k=" + std::to_string(k) + ")";
    case ConstructionKind::tree: return "tree(k=" + std::to_string(k) + ",r=" + std::to_string(r) + ")";
    case ConstructionKind::projective: return "projective(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")";
  }
  return "unknown";
}

Descriptor parse_descriptor(const std::string& text) {
  static const std::regex shape(R"(\s*([a-z]+)\s*\(([^)]*)\)\s*)");
  static const std::regex parameter(R"(\s*([a-z])\s*=\s*(-?[0-9]+)\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, shape)) throw DomainError("malformed construction '" + text + "'");
  const std::string name = match[1];
  const std::string arguments = match[2];
  static const std::map<std::string, std::pair<ConstructionKind, std::string>> kinds = {
      {"majority", {ConstructionKind::majority, "n"}},  {"threshold", {ConstructionKind::threshold, "nr"}},
      {"block", {ConstructionKind::block, "k"}},        {"tree", {ConstructionKind::tree, "kr"}},
      {"projective", {ConstructionKind::projective, "qr"}}};
  const auto kind = kinds.find(name);
  if (kind == kinds.end()) throw DomainError("unknown construction '" + name + "'");
  Descriptor d;
  d.kind = kind->second.first;
  std::string seen;
  std::size_t start = 0;
  while (start <= arguments.size()) {
    const auto comma = std::min(arguments.find(',', start), arguments.size());
    const std::string item = arguments.substr(start, comma - start);
    start = comma + 1;
    std::smatch p;
    if (!std::regex_match(item, p, parameter)) throw DomainError("malformed parameter '" + item + "' in '" + text + "'");
    const char key = p.str(1)[0];
    if (kind->second.second.find(key) == std::string::npos || seen.find(key) != std::string::npos)
      throw DomainError(std::string("unexpected parameter '") + key + "' for " + name);
    seen += key;
    const int value = std::stoi(p.str(2));
    switch (key) {
      case 'n': d.n = value; break;
      case 'r': d.r = value; break;
      case 'k': d.k = value; break;
      case 'q': d.q = value; break;
    }
  }
  if (seen.size() != kind->second.second.size())
    throw DomainError(name + " needs parameters " + kind->second.second);
  return d;
}

StructuredFamily make_family(const Descriptor& d, unsigned threads) {
  switch (d.kind) {
    case ConstructionKind::majority: return majority_family(d.n);
    case ConstructionKind::threshold: return threshold_family(d.n, d.r);
    case ConstructionKind::block: return block_family(d.k);
    case ConstructionKind::tree: return tree_family(d.k, d.r);
    case ConstructionKind::projective: return projective_family(d.q, d.r, threads);
  }
  throw DomainError("unknown construction kind");
}

StructuredFamily::StructuredFamily(std::shared_ptr<const detail::StructuredImpl> impl) : impl_(std::move(impl)) {}

const Descriptor& StructuredFamily::descriptor() const { return impl_->descriptor(); }
int StructuredFamily::n() const { return impl_->n(); }
int StructuredFamily::intersection_order() const { return impl_->order(); }

bool StructuredFamily::contains(Mask set) const {
  if (n() > kMaxSubsetUniverse) throw CapabilityError("membership oracle needs n <= 64");
  if ((set & ~universe_mask(n())) != 0) throw DomainError("set has elements beyond n=" + std::to_string(n()));
  return impl_->contains(set);
}

bool StructuredFamily::contains(const Subset& set) const {
  if (set.n() != n()) throw UniverseMismatch(n(), set.n());
  return contains(set.bits());
}

const BigInt& StructuredFamily::exact_count() const { return impl_->count(); }

double StructuredFamily::measure(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("bias p must lie in [0, 1]");
  return impl_->measure(p);
}

Rational StructuredFamily::exact_measure(const Rational& p) const {
  if (p < 0 || p > 1) throw DomainError("bias p must lie in [0, 1]");
  return impl_->exact_measure(p);
}

const PermGroup& StructuredFamily::witness() const { return impl_->witness(); }
const std::vector<SetSystem>& StructuredFamily::invariant_set_systems() const { return impl_->systems(); }

SetFamily StructuredFamily::to_explicit() const {
  if (n() > kMaxExplicitUniverse)
    throw CapabilityError("explicit families support n <= 24, construction has n=" + std::to_string(n()));
  return SetFamily::from_predicate(n(), [this](Mask m) { return impl_->contains(m); });
}

StructuredFamily majority_family(int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("majority family needs an odd positive n, got " + std::to_string(n));
  if (n > kMaxStructuredUniverse) throw CapabilityError("construction universe exceeds 4096");
  Descriptor d{ConstructionKind::majority, n, 2, 0, 0};
  return StructuredFamily(std::make_shared<ThresholdImpl>(d, n, 2));
}

StructuredFamily threshold_family(int n, int r) {
  if (r < 2) throw DomainError("threshold family needs r >= 2, got " + std::to_string(r));
  if (n < 1) throw DomainError("threshold family needs n >= 1, got " + std::to_string(n));
  if (n > kMaxStructuredUniverse) throw CapabilityError("construction universe exceeds 4096");
  Descriptor d{ConstructionKind::threshold, n, r, 0, 0};
  return StructuredFamily(std::make_shared<ThresholdImpl>(d, n, r));
}

BigInt block_count(int k) {
  require_odd_positive(k, "block construction");
  const BigInt majority = pow2(static_cast<unsigned>(k - 1));
  return ipow(majority, static_cast<std::uint64_t>(k)) - ipow(BigInt(majority - 1), static_cast<std::uint64_t>(k));
}

BigInt tree_count(int k, int r) {
  require_odd_positive(k, "tree construction");
  if (r < 3) throw DomainError("tree construction needs r >= 3, got " + std::to_string(r));
  BigInt count = pow2(static_cast<unsigned>(k - 1));
  for (int level = r - 3; level >= 0; --level)
    count = ipow(count, static_cast<std::uint64_t>(k)) - ipow(BigInt(count - 1), static_cast<std::uint64_t>(k));
  return count;
}

StructuredFamily block_family(int k) {
  require_odd_positive(k, "block construction");
  Descriptor d{ConstructionKind::block, 0, 3, k, 0};
  return StructuredFamily(std::make_shared<TreeImpl>(d, k, 3));
}

StructuredFamily tree_family(int k, int r) {
  require_odd_positive(k, "tree construction");
  if (r < 3) throw DomainError("tree construction needs r >= 3, got " + std::to_string(r));
  Descriptor d{ConstructionKind::tree, 0, r, k, 0};
  return StructuredFamily(std::make_shared<TreeImpl>(d, k, r));
}

ProjectiveGeometry projective_geometry(int q, int r) {
  if (r < 2) throw DomainError("projective geometry needs r >= 2, got " + std::to_string(r));
  if (!GaloisField::supports(q)) throw DomainError("unsupported field order q=" + std::to_string(q));
  const int d = r + 1;
  long long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= q;
    if (total > 1'000'000) throw CapabilityError("projective space too large");
  }
  if ((total - 1) / (q - 1) > kMaxSubsetUniverse)
    throw CapabilityError("projective space P^" + std::to_string(r) + "(F_" + std::to_string(q) + ") has more than 64 points");

  const GaloisField field(q);
  ProjectiveGeometry geometry;
  geometry.q = q;
  geometry.r = r;
  for (int code = 0; code < total; ++code) {
    auto v = decode(code, q, d);
    if (is_normalized(v)) geometry.points.push_back(std::move(v));
  }
  const int n = geometry.n();
  for (const auto& functional : geometry.points) {
    Mask kernel = 0;
    for (int i = 0; i < n; ++i) {
      int dot = 0;
      for (int c = 0; c < d; ++c)
        dot = field.add(dot, field.mul(functional[static_cast<std::size_t>(c)], geometry.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]));
      if (dot == 0) kernel |= Mask{1} << i;
    }
    geometry.hyperplanes.emplace_back(n, kernel);
  }
  return geometry;
}

Permutation singer_cycle(const ProjectiveGeometry& geometry) {
  const int q = geometry.q;
  const int d = geometry.r + 1;
  const GaloisField field(q);
  long long field_size = 1;
  for (int i = 0; i < d; ++i) field_size *= q;
  const long long units = field_size - 1;

  // Multiplication by x in GF(q)[x]/(f), f = x^d + Σ f_i x^i, acting on
  // coefficient vectors (c_0, ..., c_{d-1}).
  auto times_x = [&](const std::vector<int>& c, const std::vector<int>& f) {
    std::vector<int> out(static_cast<std::size_t>(d));
    const int top = c[static_cast<std::size_t>(d - 1)];
    for (int i = 0; i < d; ++i) {
      const int shifted = i == 0 ? 0 : c[static_cast<std::size_t>(i - 1)];
      out[static_cast<std::size_t>(i)] = field.sub(shifted, field.mul(f[static_cast<std::size_t>(i)], top));
    }
    return out;
  };

  // A modulus is primitive iff x has multiplicative order q^d - 1.
  std::vector<int> modulus;
  for (long long code = 0; code < field_size && modulus.empty(); ++code) {
    auto f = decode(static_cast<int>(code), q, d);
    std::reverse(f.begin(), f.end());
    if (f[0] == 0) continue;
    std::vector<int> one(static_cast<std::size_t>(d), 0);
    one[0] = 1;
    auto power = times_x(one, f);
    long long order = 1;
    while (power != one && order <= units) {
      power = times_x(power, f);
      ++order;
    }
    if (order == units) modulus = f;
  }
  if (modulus.empty()) throw Error("no primitive polynomial found");

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < geometry.n(); ++i) index[geometry.points[static_cast<std::size_t>(i)]] = i;
  std::vector<int> images(static_cast<std::size_t>(geometry.n()));
  for (int i = 0; i < geometry.n(); ++i) {
    const auto image = normalize(times_x(geometry.points[static_cast<std::size_t>(i)], modulus), field);
    images[static_cast<std::size_t>(i)] = index.at(image) + 1;
  }
  return Permutation(std::move(images));
}

StructuredFamily projective_family(int q, int r, unsigned threads) {
  const auto geometry = projective_geometry(q, r);
  if (geometry.n() > kMaxInclusionExclusionHyperplanes)
    throw CapabilityError("projective family needs n <= 20 for exact inclusion-exclusion, P^" + std::to_string(r) +
                          "(F_" + std::to_string(q) + ") has n=" + std::to_string(geometry.n()));
  Descriptor d{ConstructionKind::projective, 0, r, 0, q};
  return StructuredFamily(std::make_shared<ProjectiveImpl>(d, geometry, threads));
}

SizeReport size_report(const StructuredFamily& family) {
  SizeReport report;
  const auto& d = family.descriptor();
  report.descriptor = d.to_string();
  report.n = family.n();
  report.exact_count = family.exact_count();
  report.log2_count = log2_big(report.exact_count);
  report.deficiency = report.n - report.log2_count;
  const double n = report.n;
  switch (d.kind) {
    case ConstructionKind::block: report.predicted_deficiency = 2.0 * std::sqrt(n); break;
    case ConstructionKind::tree:
      report.predicted_deficiency = (d.r - 1) * std::pow(n, static_cast<double>(d.r - 2) / (d.r - 1));
      break;
    case ConstructionKind::projective:
      report.predicted_deficiency = std::pow(n, static_cast<double>(d.r - 1) / d.r);
      break;
    case ConstructionKind::majority:
    case ConstructionKind::threshold: break;
  }
  return report;
}

namespace {

bool preserves_set_systems(const Permutation& sigma, const std::vector<SetSystem>& systems) {
  for (const auto& system : systems) {
    std::set<std::vector<int>> members(system.begin(), system.end());
    for (const auto& set : system) {
      std::vector<int> image;
      image.reserve(set.size());
      for (int e : set) image.push_back(sigma(e));
      std::sort(image.begin(), image.end());
      if (!members.count(image)) return false;
    }
  }
  return true;
}

bool preserves_exhaustively(const Permutation& sigma, const StructuredFamily& family) {
  const BitRelocator relocate(sigma);
  const Mask end = Mask{1} << family.n();
  for (Mask m = 0; m < end; ++m)
    if (family.contains(m) && !family.contains(relocate(m))) return false;
  return true;
}

}  // namespace

bool symmetry_witness(const StructuredFamily& family, const PermGroup& group) {
  if (group.n() != family.n()) throw UniverseMismatch(family.n(), group.n());
  for (const auto& g : group.generators()) {
    const bool ok = family.n() <= kMaxExhaustiveWitnessUniverse ? preserves_exhaustively(g, family)
                                                                 : preserves_set_systems(g, family.invariant_set_systems());
    if (!ok) return false;
  }
  return is_transitive(group);
}

bool sampled_r_wise_check(const StructuredFamily& family, int r, std::uint64_t samples, std::uint64_t seed) {
  if (r < 2) throw DomainError("r-wise intersection needs r >= 2");
  const int n = family.n();
  if (n > kMaxSubsetUniverse) throw CapabilityError("sampling needs n <= 64");
  // An increasing family without [n] is empty.
  if (!family.contains(universe_mask(n))) return true;
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Mask> pool;
  constexpr int kPoolSize = 256;
  for (int i = 0; i < kPoolSize; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    Mask current = universe_mask(n);
    for (int e : order) {
      const Mask smaller = current & ~(Mask{1} << e);
      if (family.contains(smaller)) current = smaller;
    }
    pool.push_back(current);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Mask meet = universe_mask(n);
    for (int t = 0; t < r; ++t) meet &= pool[pick(rng)];
    if (meet == 0) return false;
  }
  return true;
}

}  // namespace symfam
