// Python module over the core library. Reports cross the boundary as JSON
// text and are decoded by the package wrapper.

#include "symfam/constructions.hpp"
#include "symfam/errors.hpp"
#include "symfam/family.hpp"
#include "symfam/io.hpp"
#include "symfam/json.hpp"
#include "symfam/measures.hpp"
#include "symfam/properties.hpp"
#include "symfam/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace symfam;

namespace {

using Sets = std::vector<std::vector<int>>;

SetFamily family_of(int n, const Sets& sets) {
  std::vector<Subset> subsets;
  subsets.reserve(sets.size());
  for (const auto& s : sets) subsets.push_back(Subset::of(n, s));
  return SetFamily::from_subsets(n, subsets);
}

Sets sets_of(const SetFamily& family) {
  Sets out;
  out.reserve(family.size());
  for (Mask m : family) out.push_back(Subset(family.n(), m).elements());
  return out;
}

std::string measure_json(const SetFamily& family, double p) { return to_json(biased_measure(family, p)).dump(); }

std::optional<PermGroup> group_of(const std::optional<std::vector<std::vector<int>>>& generators, int n) {
  if (!generators) return std::nullopt;
  std::vector<Permutation> perms;
  for (const auto& images : *generators) {
    if (static_cast<int>(images.size()) != n) throw DomainError("generator length differs from n");
    perms.emplace_back(images);
  }
  return PermGroup(std::move(perms), "user");
}

}  // namespace

PYBIND11_MODULE(_symfam, m) {
  m.doc() = "Symmetric r-wise intersecting set families";

  auto base = py::register_exception<Error>(m, "Error");
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", domain.ptr());
  py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());

  py::class_<SetFamily>(m, "Family")
      .def(py::init(&family_of), py::arg("n"), py::arg("sets"))
      .def_property_readonly("n", &SetFamily::n)
      .def("sets", &sets_of)
      .def("__len__", &SetFamily::size)
      .def("__contains__", [](const SetFamily& f, const std::vector<int>& s) { return f.contains(Subset::of(f.n(), s)); })
      .def("__eq__", [](const SetFamily& a, const SetFamily& b) { return a == b; })
      .def("upset", &upset_closure)
      .def("minimal", &minimal_elements)
      .def("intersections", &intersection_family)
      .def("complements", &complement_family)
      .def("size_profile", [](const SetFamily& f) {
        std::vector<std::string> counts;
        for (const auto& c : size_profile(f).counts) counts.push_back(c.str());
        return counts;
      })
      .def("is_r_wise", &r_wise_intersecting, py::arg("r"))
      .def("is_symmetric", [](const SetFamily& f, unsigned threads) { return automorphism_transitive(f, threads); },
           py::arg("threads") = 1)
      .def("_measure", &measure_json, py::arg("p"));

  m.def("load_family", [](const std::string& path) { return load_family(path); }, py::arg("path"));
  m.def("save_family", [](const std::string& path, const SetFamily& f) { save_family(path, f); }, py::arg("path"),
        py::arg("family"));
  m.def("cross_intersecting", &cross_intersecting, py::arg("a"), py::arg("b"));

  m.def(
      "_construct",
      [](const std::string& descriptor, unsigned threads) {
        return to_json(size_report(make_family(parse_descriptor(descriptor), threads))).dump();
      },
      py::arg("descriptor"), py::arg("threads") = 1);
  m.def(
      "construct_family",
      [](const std::string& descriptor) { return make_family(parse_descriptor(descriptor)).to_explicit(); },
      py::arg("descriptor"));
  m.def(
      "structured_measure",
      [](const std::string& descriptor, double p) { return make_family(parse_descriptor(descriptor)).measure(p); },
      py::arg("descriptor"), py::arg("p"));
  m.def(
      "_threshold_window",
      [](const std::string& descriptor, double epsilon) {
        const auto family = make_family(parse_descriptor(descriptor));
        return to_json(threshold_window([&](double p) { return family.measure(p); }, epsilon)).dump();
      },
      py::arg("descriptor"), py::arg("epsilon"));

  m.def(
      "_certify",
      [](const SetFamily& f, int r, const std::optional<std::vector<std::vector<int>>>& generators, unsigned threads) {
        return to_json(certify_family(f, r, group_of(generators, f.n()), threads)).dump();
      },
      py::arg("family"), py::arg("r"), py::arg("generators") = std::nullopt, py::arg("threads") = 1);
  m.def(
      "_certify_construction",
      [](const std::string& descriptor, int r, std::uint64_t seed, unsigned threads) {
        return to_json(certify_family(make_family(parse_descriptor(descriptor), threads), r, std::nullopt, seed,
                                      threads))
            .dump();
      },
      py::arg("descriptor"), py::arg("r"), py::arg("seed") = 0, py::arg("threads") = 1);

  m.def(
      "_search",
      [](int n, int r, bool complete, unsigned threads) {
        py::gil_scoped_release release;
        return to_json(f_r_search(n, r, GroupCatalog{}, complete, threads)).dump();
      },
      py::arg("n"), py::arg("r"), py::arg("complete") = false, py::arg("threads") = 1);
  m.def(
      "search_family",
      [](int n, int r, unsigned threads) {
        auto result = f_r_search(n, r, GroupCatalog{}, false, threads);
        if (!result.best.certificate) throw CapabilityError("no explicit certificate for n=" + std::to_string(n));
        return *result.best.certificate;
      },
      py::arg("n"), py::arg("r"), py::arg("threads") = 1);

  m.def(
      "_cross_lemma", [](const SetFamily& a, const SetFamily& b, double p) { return to_json(verify_cross_lemma(a, b, p)).dump(); },
      py::arg("a"), py::arg("b"), py::arg("p"));
  m.def(
      "_intersection_lemma", [](const SetFamily& f) { return to_json(verify_intersection_lemma(f)).dump(); },
      py::arg("family"));
  m.def(
      "_proof_chain", [](const SetFamily& f) { return to_json(verify_proof_chain(f)).dump(); }, py::arg("family"));
}
