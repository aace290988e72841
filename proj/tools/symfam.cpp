// Command-line front end: construct, verify, measure, threshold, search,
// lemmas. Exit codes: 0 ok, 1 a checked property failed, 2 usage or input
// error, 3 capability or budget exceeded.

#include "symfam/constructions.hpp"
#include "symfam/errors.hpp"
#include "symfam/io.hpp"
#include "symfam/json.hpp"
#include "symfam/measures.hpp"
#include "symfam/search.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

namespace {

using namespace symfam;

enum Exit : int { kOk = 0, kViolated = 1, kUsage = 2, kCapability = 3 };

struct Common {
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string emit_family;
  std::vector<std::string> groups;
};

struct Source {
  std::string family_path;
  std::string construction;
};

class Output {
 public:
  explicit Output(const Common& common) : common_(common) {}

  void write(const std::string& text) const {
    if (common_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(common_.out, std::ios::binary);
    if (!file) throw DomainError("cannot write '" + common_.out + "'");
    file << text;
  }

  void write(const Json& payload) const { write(payload.dump(2) + "\n"); }

 private:
  const Common& common_;
};

void require_json(const Common& common) {
  if (common.format != "json") throw DomainError("this subcommand only supports --format json");
}

void add_common(CLI::App* app, Common& common) {
  app->add_option("--out", common.out, "Write the report to this file instead of stdout");
  app->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--seed", common.seed, "Seed for randomized checks");
  app->add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

void add_source(CLI::App* app, Source& source) {
  auto* family = app->add_option("--family", source.family_path, "Family file");
  auto* construct = app->add_option("--construct", source.construction,
                                    "Construction, e.g. block(k=3) or tree(k=3,r=4)");
  family->excludes(construct);
  construct->excludes(family);
}

using AnyFamily = std::variant<SetFamily, StructuredFamily>;

AnyFamily load_source(const Source& source, unsigned threads) {
  if (!source.family_path.empty()) return load_family(source.family_path);
  if (!source.construction.empty()) return make_family(parse_descriptor(source.construction), threads);
  throw DomainError("one of --family or --construct is required");
}

std::optional<PermGroup> first_group(const std::vector<std::string>& files) {
  for (const auto& file : files) {
    auto groups = load_groups(file);
    if (!groups.empty()) return std::move(groups.front());
  }
  return std::nullopt;
}

MeasureFunction measure_of(const AnyFamily& family) {
  if (const auto* f = std::get_if<SetFamily>(&family)) {
    const SizeProfile profile = size_profile(*f);
    return [profile](double p) { return biased_measure_value(profile, p); };
  }
  const auto structured = std::get<StructuredFamily>(family);
  return [structured](double p) { return structured.measure(p); };
}

int run_construct(const Common& common, const Descriptor& descriptor) {
  require_json(common);
  const auto family = make_family(descriptor, common.threads);
  Output(common).write(to_json(size_report(family)));
  if (!common.emit_family.empty()) {
    if (family.n() > kMaxExhaustiveWitnessUniverse)
      throw CapabilityError("--emit-family supports n <= 20, got n=" + std::to_string(family.n()));
    save_family(common.emit_family, family.to_explicit());
  }
  return kOk;
}

int verdict_exit(const CertificationReport& report) {
  return report.r_wise == Verdict::no || report.symmetric == Verdict::no ? kViolated : kOk;
}

int run_verify(const Common& common, const Source& source, int r) {
  require_json(common);
  const auto family = load_source(source, common.threads);
  const auto witness = first_group(common.groups);
  CertificationReport report;
  if (const auto* f = std::get_if<SetFamily>(&family))
    report = certify_family(*f, r, witness, common.threads);
  else
    report = certify_family(std::get<StructuredFamily>(family), r, witness, common.seed, common.threads);
  Json payload = to_json(report);
  if (!payload.contains("seed")) payload["seed"] = common.seed;
  Output(common).write(payload);
  return verdict_exit(report);
}

int run_measure(const Common& common, const Source& source, std::optional<double> p, int points) {
  const auto family = load_source(source, common.threads);
  if (p) {
    require_json(common);
    if (!(*p >= 0.0 && *p <= 1.0)) throw DomainError("p must lie in [0, 1]");
    Json payload;
    payload["p"] = *p;
    if (const auto* f = std::get_if<SetFamily>(&family)) {
      const auto value = biased_measure(*f, *p);
      payload["mu"] = value.value;
      payload["exact"] = value.exact ? Json(exact_string(*value.exact)) : Json(nullptr);
    } else {
      payload["mu"] = std::get<StructuredFamily>(family).measure(*p);
    }
    Output(common).write(payload);
    return kOk;
  }
  const auto curve = measure_curve(measure_of(family), points, common.threads);
  if (common.format == "csv") {
    Output(common).write(curve_to_csv(curve));
    return kOk;
  }
  Json payload = Json::array();
  for (const auto& point : curve) payload.push_back(Json{{"p", point.p}, {"mu", point.mu}});
  Output(common).write(payload);
  return kOk;
}

int run_threshold(const Common& common, const Source& source, double epsilon) {
  require_json(common);
  const auto family = load_source(source, common.threads);
  Output(common).write(to_json(threshold_window(measure_of(family), epsilon)));
  return kOk;
}

int run_search(const Common& common, int n, int r, bool complete) {
  require_json(common);
  const auto start = std::chrono::steady_clock::now();
  GroupCatalog catalog;
  for (const auto& file : common.groups)
    for (auto& group : load_groups(file)) catalog.add(std::move(group));
  const auto result = f_r_search(n, r, catalog, complete, common.threads);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  Json payload = to_json(result.best, result.exact);
  payload["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  Output(common).write(payload);
  if (!common.emit_family.empty()) {
    if (!result.best.certificate) throw CapabilityError("no explicit certificate available for n=" + std::to_string(n));
    save_family(common.emit_family, *result.best.certificate);
  }
  return kOk;
}

int run_lemma_cross(const Common& common, const std::string& a, const std::string& b, double p) {
  require_json(common);
  const auto report = verify_cross_lemma(load_family(a), load_family(b), p);
  Output(common).write(to_json(report));
  if (!report.applicable) throw NotApplicable("the two families are not cross-intersecting");
  return report.holds ? kOk : kViolated;
}

int run_lemma_int(const Common& common, const std::string& path) {
  require_json(common);
  const auto report = verify_intersection_lemma(load_family(path));
  Output(common).write(to_json(report));
  return report.holds && report.identity_ok && report.pair_count_ok ? kOk : kViolated;
}

int run_lemma_chain(const Common& common, const std::string& path) {
  require_json(common);
  const auto report = verify_proof_chain(load_family(path));
  Output(common).write(to_json(report));
  return report.cross_ok && report.bound_ok ? kOk : kViolated;
}

int run(int argc, char** argv) {
  CLI::App app{"Toolkit for symmetric r-wise intersecting set families"};
  app.require_subcommand(1);
  Common common;

  // construct
  auto* construct = app.add_subcommand("construct", "Build a construction and report its exact size");
  construct->require_subcommand(1);
  Descriptor descriptor;
  auto* majority = construct->add_subcommand("majority", "Sets of size > n/2");
  majority->add_option("--n", descriptor.n)->required();
  auto* threshold = construct->add_subcommand("threshold", "Sets of size > (r-1)n/r");
  threshold->add_option("--n", descriptor.n)->required();
  threshold->add_option("--r", descriptor.r)->required();
  auto* block = construct->add_subcommand("block", "Block construction on k^2 points");
  block->add_option("--k", descriptor.k)->required();
  auto* tree = construct->add_subcommand("tree", "Tree construction");
  tree->add_option("--k", descriptor.k)->required();
  tree->add_option("--r", descriptor.r)->required();
  auto* projective = construct->add_subcommand("projective", "Projective construction over GF(q)");
  projective->add_option("--q", descriptor.q)->required();
  projective->add_option("--r", descriptor.r)->required();
  const std::pair<CLI::App*, ConstructionKind> kinds[] = {{majority, ConstructionKind::majority},
                                                           {threshold, ConstructionKind::threshold},
                                                           {block, ConstructionKind::block},
                                                           {tree, ConstructionKind::tree},
                                                           {projective, ConstructionKind::projective}};
  for (auto [sub, kind] : kinds) {
    add_common(sub, common);
    sub->add_option("--emit-family", common.emit_family, "Write the explicit family (n <= 20)");
  }

  // verify
  Source source;
  int r = 3;
  auto* verify = app.add_subcommand("verify", "Certify r-wise intersection and symmetry");
  add_source(verify, source);
  verify->add_option("--r", r, "Intersection order")->check(CLI::Range(2, 64));
  verify->add_option("--groups", common.groups, "Permutation file with a witness group");
  add_common(verify, common);

  // measure
  std::optional<double> p;
  int points = 101;
  auto* measure = app.add_subcommand("measure", "p-biased measure at a point or on a grid");
  add_source(measure, source);
  measure->add_option("--p", p, "Evaluate at a single p");
  measure->add_option("--points", points, "Grid size for the curve")->check(CLI::Range(2, 1000000));
  add_common(measure, common);

  // threshold
  double epsilon = 0.1;
  auto* window = app.add_subcommand("threshold", "Threshold window [p_eps, p_{1-eps}]");
  add_source(window, source);
  window->add_option("--eps", epsilon, "Window level in (0, 1/2)");
  add_common(window, common);

  // search
  int search_n = 0;
  int search_r = 3;
  bool complete = false;
  auto* search = app.add_subcommand("search", "Maximum symmetric r-wise intersecting orbit unions");
  search->add_option("--n", search_n)->required();
  search->add_option("--r", search_r)->required();
  search->add_option("--groups", common.groups, "Extra transitive groups (permutation files)");
  search->add_flag("--complete", complete, "Assert the catalog covers every minimal transitive group");
  search->add_option("--emit-family", common.emit_family, "Write the optimal family");
  add_common(search, common);

  // lemmas
  auto* lemmas = app.add_subcommand("lemmas", "Check the measure lemmas on explicit families");
  lemmas->require_subcommand(1);
  std::string path_a, path_b;
  double lemma_p = 0.5;
  auto* cross = lemmas->add_subcommand("cross", "mu_p(A) + mu_{1-p}(B) <= 1 for cross-intersecting A, B");
  cross->add_option("--a", path_a)->required();
  cross->add_option("--b", path_b)->required();
  cross->add_option("--p", lemma_p)->check(CLI::Range(0.0, 1.0));
  auto* inter = lemmas->add_subcommand("int", "mu_{1/4}(I(A)) >= mu_{1/2}(A)^2");
  inter->add_option("--family", path_a)->required();
  auto* chain = lemmas->add_subcommand("chain", "Proof chain for 3-wise intersecting families");
  chain->add_option("--family", path_a)->required();
  for (auto* sub : {cross, inter, chain}) add_common(sub, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (construct->parsed())
    for (auto [sub, kind] : kinds)
      if (sub->parsed()) {
        descriptor.kind = kind;
        return run_construct(common, descriptor);
      }
  if (verify->parsed()) return run_verify(common, source, r);
  if (measure->parsed()) return run_measure(common, source, p, points);
  if (window->parsed()) return run_threshold(common, source, epsilon);
  if (search->parsed()) return run_search(common, search_n, search_r, complete);
  if (cross->parsed()) return run_lemma_cross(common, path_a, path_b, lemma_p);
  if (inter->parsed()) return run_lemma_int(common, path_a);
  if (chain->parsed()) return run_lemma_chain(common, path_a);
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const symfam::CapabilityError& e) {
    std::cerr << "symfam: " << e.what() << '\n';
    return kCapability;
  } catch (const symfam::DomainError& e) {
    std::cerr << "symfam: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "symfam: internal error: " << e.what() << '\n';
    return kCapability;
  }
}
